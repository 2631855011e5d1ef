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

// Bipartite carriers are R^{n_A} (x) R^{n_B} = R^{n_A n_B} with the row-major
// index (i, j) -> i * n_B + j, so kron(x, y) is the product vector. A vector
// w in this space is read as the bilinear form (a, b) -> a^T W b where
// W = reshape(w, n_A, n_B). Every module uses this convention.

#include "comcat/com.hpp"

#include <string>
#include <vector>

namespace comcat {

enum class CompositeKind { Min, Max, Spatial, Custom };

std::string_view composite_kind_name(CompositeKind kind);
CompositeKind parse_composite_kind(std::string_view name);

template <class T>
struct CompositeCom {
  Com<T> com;
  Com<T> first;
  Com<T> second;
  CompositeKind kind = CompositeKind::Custom;
};

/// States generated by products of state generators; effects are the full
/// dual (the separable-state cone's dual), so the composite is saturated.
/// Polyhedral only; psd input throws MixedKindUnsupported.
template <class T>
CompositeCom<T> min_tensor(const Com<T>& a, const Com<T>& b);

/// Effects generated by products of effect generators; states are every form
/// that is nonnegative on product effects. Polyhedral only.
template <class T>
CompositeCom<T> max_tensor(const Com<T>& a, const Com<T>& b);

/// psd on the tensor product Hilbert space with the trace unit. Polyhedral
/// input throws KindMismatch.
template <class T>
CompositeCom<T> spatial_quantum_composite(const Com<T>& a, const Com<T>& b);

/// A user-designated composite; checked with is_composite and rejected with
/// InvalidStructure if it fails.
template <class T>
CompositeCom<T> custom_composite(const Com<T>& a, const Com<T>& b, Cone<T> states, Cone<T> effects);

template <class T>
CompositeCom<T> make_composite(CompositeKind kind, const Com<T>& a, const Com<T>& b);

template <class T>
struct CompositeCheck {
  bool ok = true;
  bool approximate = false;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
};

/// The composite axioms: model validity, u_AB = u_A (x) u_B, product states
/// and product effects are admitted, and every admitted state is nonnegative
/// on product effects. Violations name the offending generator pairs.
template <class T>
CompositeCheck<T> is_composite(const Com<T>& ab, const Com<T>& a, const Com<T>& b);

struct SeparabilityResult {
  bool separable = false;
  // Weights on the product generator pairs (i of A, j of B) when separable.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> decomposition;
  // When entangled: a functional nonnegative on every product state and
  // negative on the tested state.
  QVec witness;
};

/// Exact LP membership of w in the cone generated by products of state
/// generators of a and b.
SeparabilityResult separability_check(const QVec& w, const QCom& a, const QCom& b);

}  // namespace comcat
