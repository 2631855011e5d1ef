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

#include "comcat/selfdual.hpp"

#include "comcat/ray_matching.hpp"

namespace comcat {

template <class T>
DualityStructure<T>::DualityStructure(Vec<T> gamma, Vec<T> f, Index dim)
    : gamma_(std::move(gamma)), f_(std::move(f)), dim_(dim) {
  if (gamma_.size() != dim * dim || f_.size() != dim * dim)
    throw Error(ErrorCode::DimensionMismatch, "structure vectors must have length dim^2");
  g_ = reshape<T>(gamma_, dim, dim);
  fm_ = reshape<T>(f_, dim, dim);
  tau_ = g_.transpose() * fm_;
  const Mat<T> id = Mat<T>::Identity(dim, dim);
  const T r1 = max_abs<T>(Mat<T>(fm_.transpose() * g_.transpose() - id));
  const T r2 = max_abs<T>(Mat<T>(g_.transpose() * fm_.transpose() - id));
  inverse_residual_ = r1 > r2 ? r1 : r2;
}

template <class T>
DualityStructure<T> DualityStructure<T>::from_gamma_hat(const Mat<T>& gamma_hat) {
  if (gamma_hat.rows() != gamma_hat.cols()) throw Error(ErrorCode::DimensionMismatch, "gamma-hat must be square");
  const Mat<T> g = gamma_hat.transpose();
  auto inv = inverse<T>(g);
  if (!inv) throw Error(ErrorCode::InvalidStructure, "gamma-hat is singular");
  return DualityStructure(flatten<T>(g), flatten<T>(*inv), g.rows());
}

template <class T>
DualityStructure<T> tensor_structure(const DualityStructure<T>& a, const DualityStructure<T>& b) {
  const Mat<T> g = kron<T>(a.gamma_matrix(), b.gamma_matrix());
  const Mat<T> f = kron<T>(a.f_matrix(), b.f_matrix());
  return DualityStructure<T>(flatten<T>(g), flatten<T>(f), a.dim() * b.dim());
}

template <class T>
DualityStructure<T> trivial_structure() {
  Vec<T> one = Vec<T>::Constant(1, T(1));
  return DualityStructure<T>(one, one, 1);
}

namespace {

template <class T>
bool cone_maps_into(const Mat<T>& m, const Cone<T>& from, const Cone<T>& to, const char* what, Report& r) {
  const auto rays = probe_rays(from);
  bool ok = true;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!to.contains(Vec<T>(m * rays[i]))) {
      r.fail(std::string(what) + " sends ray " + std::to_string(i) + " outside the target cone");
      ok = false;
    }
  return ok;
}

}  // namespace

template <class T>
Report verify_isomorphism_state(const Vec<T>& gamma, const Com<T>& a) {
  Report r;
  r.approximate = !is_exact_v<T>;
  const Index n = a.dim();
  if (gamma.size() != n * n) {
    r.fail("state has length " + std::to_string(gamma.size()) + ", expected " + std::to_string(n * n));
    return r;
  }
  const Mat<T> hat = reshape<T>(gamma, n, n).transpose();
  auto inv = inverse<T>(hat);
  if (!inv) {
    r.fail("conditioning map is singular (rank " + std::to_string(rank<T>(hat)) + " of " + std::to_string(n) + ")");
    return r;
  }
  cone_maps_into<T>(hat, a.effects, a.states, "conditioning map", r);
  cone_maps_into<T>(*inv, a.states, a.effects, "inverse conditioning map", r);
  return r;
}

template <class T>
Report verify_structure(const DualityStructure<T>& d, const Com<T>& a) {
  Report r = verify_isomorphism_state(d.gamma(), a);
  if (!is_zero(d.inverse_residual()))
    r.fail("f-hat is not the inverse of gamma-hat (residual " + std::to_string(to_double(d.inverse_residual())) + ")");
  auto t = tau(d, a);
  if (!t.automorphism) r.fail("tau is not an order automorphism");
  return r;
}

namespace {

template <class T>
std::optional<DualityStructure<T>> search_self_duality(const Com<T>& a, bool symmetric) {
  if constexpr (!is_exact_v<T>) {
    throw Error(ErrorCode::UnsupportedKind, "ray matching needs a polyhedral model; verify a candidate instead");
  } else {
    RayMatchOptions opt;
    opt.symmetric = symmetric;
    opt.accept = [&a](const QMat& m) { return verify_isomorphism_state<Rational>(flatten<Rational>(QMat(m.transpose())), a).ok; };
    auto found = match_rays(a.effects.generators(), a.states.generators(), opt);
    if (found.empty()) return std::nullopt;
    return DualityStructure<T>::from_gamma_hat(found.front().map);
  }
}

}  // namespace

template <class T>
std::optional<DualityStructure<T>> check_weak_self_duality(const Com<T>& a) {
  return search_self_duality(a, false);
}

template <class T>
std::optional<DualityStructure<T>> check_symmetric_self_duality(const Com<T>& a) {
  return search_self_duality(a, true);
}

template <class T>
AdjointResult<T> canonical_adjoint(const Mat<T>& phi, const DualityStructure<T>& da,
                                   const DualityStructure<T>& db) {
  if (phi.rows() != db.dim() || phi.cols() != da.dim())
    throw Error(ErrorCode::DimensionMismatch, "map shape does not match the structures");
  // gamma-hat_A* = G_A, f-hat_B* = F_B.
  AdjointResult<T> r;
  r.value = da.gamma_matrix() * (phi.transpose() * db.f_matrix());
  const Mat<T> inner = db.f_hat() * phi * da.gamma_hat();
  r.residual = max_abs<T>(Mat<T>(r.value - inner.transpose()));
  if (!is_zero(r.residual)) throw Error(ErrorCode::InvalidStructure, "canonical adjoint orders disagree");
  return r;
}

template <class T>
TauReport<T> tau(const DualityStructure<T>& d, const Com<T>& a) {
  TauReport<T> r;
  r.tau = d.tau();
  r.approximate = !is_exact_v<T>;
  const Index n = d.dim();
  r.identity = is_zero(max_abs<T>(Mat<T>(r.tau - Mat<T>::Identity(n, n))));
  auto inv = inverse<T>(r.tau);
  if (!inv || a.dim() != n) return r;
  Report scratch;
  r.automorphism = cone_maps_into<T>(r.tau, a.states, a.states, "tau", scratch) &&
                   cone_maps_into<T>(*inv, a.states, a.states, "tau inverse", scratch);
  return r;
}

template <class T>
DoubleDualReport<T> double_dual_check(const Mat<T>& phi, const DualityStructure<T>& da,
                                      const DualityStructure<T>& db) {
  DoubleDualReport<T> r;
  const Mat<T> once = canonical_adjoint(phi, da, db).value;
  r.double_dual = canonical_adjoint(once, db, da).value;
  auto tau_b_inv = inverse<T>(db.tau());
  if (!tau_b_inv) throw Error(ErrorCode::InvalidStructure, "tau is singular");
  r.predicted = *tau_b_inv * phi * da.tau();
  r.residual = max_abs<T>(Mat<T>(r.double_dual - r.predicted));
  r.involutive = is_zero(max_abs<T>(Mat<T>(r.double_dual - phi)));
  return r;
}

template <class T>
InvolutionReport<T> involution_report(const DualityStructure<T>& d) {
  InvolutionReport<T> r;
  const Index n = d.dim();
  r.involutive = true;
  for (Index i = 0; i < n && r.involutive; ++i)
    for (Index j = 0; j < n; ++j) {
      Mat<T> e = Mat<T>::Zero(n, n);
      e(i, j) = T(1);
      if (!double_dual_check(e, d, d).involutive) {
        r.involutive = false;
        r.witness = e;
        break;
      }
    }
  r.tau_identity = is_zero(max_abs<T>(Mat<T>(d.tau() - Mat<T>::Identity(n, n))));
  r.symmetric = is_zero(d.gamma_symmetry_residual()) && is_zero(d.f_symmetry_residual());
  r.consistent = r.involutive == r.tau_identity && r.tau_identity == r.symmetric;
  return r;
}

template <class T>
CounitReport<T> counit_dual_check(const DualityStructure<T>& d) {
  CounitReport<T> r;
  const Index n = d.dim();
  const Mat<T> counit = d.f().transpose();  // A (x) A -> I
  const Mat<T> adj = canonical_adjoint<T>(counit, tensor_structure(d, d), trivial_structure<T>()).value;
  r.adjoint = adj.col(0);
  r.swapped = swap_bipartite<T>(d.gamma(), n, n);
  r.residual = max_abs<T>(Vec<T>(r.adjoint - r.swapped));
  r.ok = is_zero(r.residual);
  return r;
}

template <class T>
DaggerVerdict<T> dagger_compactness_verdict(const std::vector<std::pair<Com<T>, DualityStructure<T>>>& theory) {
  DaggerVerdict<T> v;
  v.dagger_compact = !theory.empty();
  for (const auto& [a, d] : theory) {
    DaggerObjectReport<T> o{a.label, involution_report(d), T(0)};
    // eta = gamma and eps = f; the dagger axiom is eta = swap(eps^dagger).
    const Mat<T> counit = d.f().transpose();
    const Vec<T> dag = canonical_adjoint<T>(counit, tensor_structure(d, d), trivial_structure<T>()).value.col(0);
    o.dagger_axiom_residual = max_abs<T>(Vec<T>(d.gamma() - swap_bipartite<T>(dag, d.dim(), d.dim())));
    if (!o.involution.consistent || !o.involution.symmetric || !is_zero(o.dagger_axiom_residual))
      v.dagger_compact = false;
    v.objects.push_back(std::move(o));
  }
  return v;
}

template <class T>
Inertia form_inertia(const DualityStructure<T>& d) {
  const DMat g = to_double(d.gamma_matrix());
  const DMat sym = (g + g.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<DMat> es(sym, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  Inertia in;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev > numeric_tolerance() * scale)
      ++in.positive;
    else if (ev < -numeric_tolerance() * scale)
      ++in.negative;
    else
      ++in.zero;
  }
  return in;
}

namespace {

bool positive_definite(const QMat& g) {
  if (g != g.transpose()) return false;
  for (Index k = 1; k <= g.rows(); ++k)
    if (determinant<Rational>(QMat(g.topLeftCorner(k, k))) <= 0) return false;
  return true;
}

}  // namespace

template <class T>
bool is_positive_definite_form(const DualityStructure<T>& d) {
  if constexpr (is_exact_v<T>) {
    return positive_definite(d.gamma_matrix());
  } else {
    if (!is_zero(d.gamma_symmetry_residual())) return false;
    Inertia in = form_inertia(d);
    return in.negative == 0 && in.zero == 0;
  }
}

template <class T>
StrongSelfDuality is_strongly_self_dual(const Com<T>& a) {
  StrongSelfDuality s;
  if constexpr (is_exact_v<T>) {
    RayMatchOptions opt;
    opt.symmetric = true;
    opt.accept = [&a](const QMat& m) {
      return positive_definite(m) && verify_isomorphism_state<Rational>(flatten<Rational>(QMat(m.transpose())), a).ok;
    };
    auto found = match_rays(a.effects.generators(), a.states.generators(), opt);
    s.strongly_self_dual = !found.empty();
    s.detail = s.strongly_self_dual ? "positive definite symmetric order isomorphism found"
                                    : "no symmetric order isomorphism is positive definite";
  } else {
    s.approximate = true;
    s.strongly_self_dual = is_saturated(a);
    s.detail = s.strongly_self_dual ? "trace inner product makes the psd cone self-dual"
                                    : "effect cone is not the full psd cone";
  }
  return s;
}

#define COMCAT_INSTANTIATE(T)                                                                                 \
  template class DualityStructure<T>;                                                                         \
  template DualityStructure<T> tensor_structure(const DualityStructure<T>&, const DualityStructure<T>&);      \
  template DualityStructure<T> trivial_structure<T>();                                                        \
  template Report verify_isomorphism_state(const Vec<T>&, const Com<T>&);                                     \
  template Report verify_structure(const DualityStructure<T>&, const Com<T>&);                                \
  template std::optional<DualityStructure<T>> check_weak_self_duality(const Com<T>&);                         \
  template std::optional<DualityStructure<T>> check_symmetric_self_duality(const Com<T>&);                    \
  template AdjointResult<T> canonical_adjoint(const Mat<T>&, const DualityStructure<T>&,                      \
                                             const DualityStructure<T>&);                                     \
  template TauReport<T> tau(const DualityStructure<T>&, const Com<T>&);                                       \
  template DoubleDualReport<T> double_dual_check(const Mat<T>&, const DualityStructure<T>&,                   \
                                                 const DualityStructure<T>&);                                 \
  template InvolutionReport<T> involution_report(const DualityStructure<T>&);                                   \
  template CounitReport<T> counit_dual_check(const DualityStructure<T>&);                                     \
  template DaggerVerdict<T> dagger_compactness_verdict(                                                       \
      const std::vector<std::pair<Com<T>, DualityStructure<T>>>&);                                            \
  template Inertia form_inertia(const DualityStructure<T>&);                                                  \
  template bool is_positive_definite_form(const DualityStructure<T>&);                                        \
  template StrongSelfDuality is_strongly_self_dual(const Com<T>&);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat
