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

// Duality structures (gamma, f) on a model A: gamma is a bipartite state on
// A (x) A whose conditioning map gamma-hat : A# -> A is an order isomorphism,
// and f is a bipartite functional with f-hat = gamma-hat^{-1}. With
// G = reshape(gamma) and F = reshape(f) this reads gamma-hat = G^T, f-hat = F^T
// and F = G^{-1}.

#include "comcat/conditioning.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comcat {

template <class T>
class DualityStructure {
 public:
  DualityStructure(Vec<T> gamma, Vec<T> f, Index dim);

  /// Builds gamma = flatten(gamma_hat^T) and f from the inverse. Throws
  /// InvalidStructure when gamma_hat is singular.
  static DualityStructure from_gamma_hat(const Mat<T>& gamma_hat);

  Index dim() const { return dim_; }
  const Vec<T>& gamma() const { return gamma_; }
  const Vec<T>& f() const { return f_; }
  const Mat<T>& gamma_matrix() const { return g_; }
  const Mat<T>& f_matrix() const { return fm_; }
  Mat<T> gamma_hat() const { return g_.transpose(); }
  Mat<T> f_hat() const { return fm_.transpose(); }

  /// gamma-hat o f-hat* = G^T F.
  const Mat<T>& tau() const { return tau_; }

  /// max-abs of f-hat o gamma-hat - id and gamma-hat o f-hat - id.
  T inverse_residual() const { return inverse_residual_; }
  T gamma_symmetry_residual() const { return max_abs<T>(Mat<T>(g_ - g_.transpose())); }
  T f_symmetry_residual() const { return max_abs<T>(Mat<T>(fm_ - fm_.transpose())); }

 private:
  Vec<T> gamma_;
  Vec<T> f_;
  Index dim_;
  Mat<T> g_;
  Mat<T> fm_;
  Mat<T> tau_;
  T inverse_residual_;
};

using QStructure = DualityStructure<Rational>;
using DStructure = DualityStructure<double>;

/// Structure on A (x) B with gamma-hat = gamma-hat_A (x) gamma-hat_B.
template <class T>
DualityStructure<T> tensor_structure(const DualityStructure<T>& a, const DualityStructure<T>& b);

/// The structure on the trivial system: gamma = f = (1).
template <class T>
DualityStructure<T> trivial_structure();

struct Report {
  bool ok = true;
  bool approximate = false;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// gamma-hat invertible, gamma-hat(A#+) in A+ and gamma-hat^{-1}(A+) in A#+.
template <class T>
Report verify_isomorphism_state(const Vec<T>& gamma, const Com<T>& a);

/// Isomorphism state, f-hat = gamma-hat^{-1}, and tau an order automorphism.
template <class T>
Report verify_structure(const DualityStructure<T>& d, const Com<T>& a);

/// Searches effect rays -> state rays bijections for an order isomorphism
/// A# -> A. Polyhedral only; psd throws UnsupportedKind.
template <class T>
std::optional<DualityStructure<T>> check_weak_self_duality(const Com<T>& a);

/// As above with gamma-hat restricted to symmetric matrices.
template <class T>
std::optional<DualityStructure<T>> check_symmetric_self_duality(const Com<T>& a);

template <class T>
struct AdjointResult {
  Mat<T> value;
  T residual;  // between the two evaluation orders
};

/// phi : A -> B (dim B x dim A). phi' = gamma-hat_A* o phi* o f-hat_B*, checked
/// against (f-hat_B o phi o gamma-hat_A)*. Throws InvalidStructure on
/// disagreement.
template <class T>
AdjointResult<T> canonical_adjoint(const Mat<T>& phi, const DualityStructure<T>& da,
                                   const DualityStructure<T>& db);

template <class T>
struct TauReport {
  Mat<T> tau;
  bool identity = false;
  bool automorphism = false;
  bool approximate = false;
};

template <class T>
TauReport<T> tau(const DualityStructure<T>& d, const Com<T>& a);

template <class T>
struct DoubleDualReport {
  Mat<T> double_dual;  // phi'' via two canonical adjoints
  Mat<T> predicted;    // tau_B^{-1} o phi o tau_A
  T residual;          // between the two
  bool involutive = false;  // phi'' == phi
};

template <class T>
DoubleDualReport<T> double_dual_check(const Mat<T>& phi, const DualityStructure<T>& da,
                                      const DualityStructure<T>& db);

template <class T>
struct InvolutionReport {
  bool involutive = false;     // phi'' = phi on a basis of maps A -> A
  bool tau_identity = false;   // tau_A = id
  bool symmetric = false;      // gamma and f symmetric
  bool consistent = false;     // all three agree
  std::optional<Mat<T>> witness;  // a basis map with phi'' != phi
};

template <class T>
InvolutionReport<T> involution_report(const DualityStructure<T>& d);

template <class T>
struct CounitReport {
  Vec<T> adjoint;   // f' : I -> A (x) A
  Vec<T> swapped;   // swap(gamma)
  T residual;
  bool ok = false;
};

/// The adjoint of f, computed with the product structure on A (x) A and the
/// trivial structure on I, compared with the swapped isomorphism state.
template <class T>
CounitReport<T> counit_dual_check(const DualityStructure<T>& d);

template <class T>
struct DaggerObjectReport {
  std::string label;
  InvolutionReport<T> involution;
  T dagger_axiom_residual;  // eta = swap o eps^dagger
};

template <class T>
struct DaggerVerdict {
  bool dagger_compact = false;
  std::vector<DaggerObjectReport<T>> objects;
};

template <class T>
DaggerVerdict<T> dagger_compactness_verdict(const std::vector<std::pair<Com<T>, DualityStructure<T>>>& theory);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of the symmetric part of G (eigenvalues in double precision).
template <class T>
Inertia form_inertia(const DualityStructure<T>& d);

/// G symmetric and positive definite. Decided exactly by leading principal
/// minors for rationals.
template <class T>
bool is_positive_definite_form(const DualityStructure<T>& d);

struct StrongSelfDuality {
  bool strongly_self_dual = false;
  bool approximate = false;
  std::string detail;
};

/// Whether some inner product makes the state cone self-dual: a symmetric
/// positive definite order isomorphism A# -> A. Polyhedral models search the
/// symmetric ray matchings; psd models use the trace inner product.
template <class T>
StrongSelfDuality is_strongly_self_dual(const Com<T>& a);

}  // namespace comcat
