// Copyright 2026 The comcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "comcat/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comcat {

/// A convex operational model: a state cone and an effect cone in the same
/// coordinates, paired by the dot product, together with the unit effect.
/// Exact models use polyhedral cones over the rationals; quantum models use
/// psd cones over doubles.
template <class T>
struct Com {
  std::string label;
  Cone<T> states;
  Cone<T> effects;
  Vec<T> unit;

  Index dim() const { return states.dim(); }
};

using QCom = Com<Rational>;
using DCom = Com<double>;

/// All violations of the model axioms, not just the first. Empty means valid.
template <class T>
std::vector<std::string> com_violations(const Com<T>& a);

/// Returns the model when valid; otherwise throws InvalidStructure whose
/// message lists every violation.
template <class T>
Com<T> validate_com(Com<T> candidate);

template <class T>
bool is_saturated(const Com<T>& a);

/// 0 <= e <= u in the effect cone.
template <class T>
bool is_effect(const Com<T>& a, const Vec<T>& e);

/// In the state cone with unit value 1.
template <class T>
bool is_normalized_state(const Com<T>& a, const Vec<T>& x);

template <class T>
struct PositivityViolation {
  enum class Side { State, Effect } side;
  std::size_t index;  // generator (or probe ray) index on that side
  Vec<T> generator;
  Vec<T> image;
};

/// Outcome of a morphism check. `approximate` is set when positivity against
/// a psd cone was probed on sampled pure states rather than decided exactly.
template <class T>
struct MorphismCheck {
  bool ok = true;
  bool approximate = false;
  std::vector<PositivityViolation<T>> violations;

  explicit operator bool() const { return ok; }
};

/// phi is a dim(B) x dim(A) matrix acting on state coordinates; its adjoint
/// on effects is the transpose. Checks phi(A+) in B+ and phi^T(B#+) in A#+.
template <class T>
MorphismCheck<T> is_morphism(const Mat<T>& phi, const Com<T>& a, const Com<T>& b);

/// u_A - phi^T u_B in A#+. Throws NotAMorphism when phi is not a morphism.
template <class T>
bool is_process(const Mat<T>& phi, const Com<T>& a, const Com<T>& b);

template <class T>
struct NormalizedMorphism {
  Mat<T> process;
  T scale;
};

/// Splits a morphism as scale * process with the process attaining unit
/// probability on some normalized state. Throws ZeroMap or NotAMorphism.
template <class T>
NormalizedMorphism<T> normalize_morphism(const Mat<T>& phi, const Com<T>& a, const Com<T>& b);

template <class T>
Mat<T> linear_adjoint(const Mat<T>& phi) {
  return phi.transpose();
}

}  // namespace comcat
