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

#include "comcat/protocols.hpp"

#include "comcat/lp.hpp"
#include "comcat/ray_matching.hpp"

namespace comcat {

template <class T>
TeleportationCertificate<T> make_teleportation_certificate(const Vec<T>& omega, const Mat<T>& r_hat, T scale) {
  const Index n_b = r_hat.rows();
  const Index n_a = r_hat.cols();
  if (omega.size() != n_a * n_b) throw Error(ErrorCode::DimensionMismatch, "omega does not match r-hat");
  TeleportationCertificate<T> c{omega, r_hat, scale, Vec<T>(), T(0)};
  c.effect = scale * flatten<T>(Mat<T>(r_hat.transpose()));
  const Mat<T> w = reshape<T>(omega, n_b, n_a);
  c.residual = max_abs<T>(Mat<T>(w.transpose() * r_hat - Mat<T>::Identity(n_a, n_a)));
  return c;
}

namespace {

// Max c such that omega-hat o R' = c id with R' positive and
// 0 <= flatten(R'^T) <= u_AB in the designated effect cone.
std::optional<TeleportationCertificate<Rational>> best_scale(const QVec& omega, const QCom& a, const QCom& b,
                                                             const QCom& ab) {
  const Index na = a.dim();
  const Index nb = b.dim();
  const QMat w = reshape<Rational>(omega, nb, na);
  const std::size_t nr = static_cast<std::size_t>(na * nb);
  const std::size_t cvar = nr;
  const Index nv = static_cast<Index>(nr + 1);
  auto rv = [na](Index i, Index j) { return static_cast<Index>(i * na + j); };  // R'(i in B, j in A)

  LinearProgram lp(nr + 1);
  lp.set_nonnegative(cvar);
  for (Index p = 0; p < na; ++p)
    for (Index q = 0; q < na; ++q) {
      QVec row = QVec::Zero(nv);
      for (Index i = 0; i < nb; ++i) row(rv(i, q)) = w(i, p);
      if (p == q) row(static_cast<Index>(cvar)) = -1;
      lp.add(row, Relation::Equal, 0);
    }
  for (const auto& g : a.states.generators())
    for (const auto& h : b.effects.facets()) {
      QVec row = QVec::Zero(nv);
      for (Index i = 0; i < nb; ++i)
        for (Index j = 0; j < na; ++j) row(rv(i, j)) = h(i) * g(j);
      lp.add(row, Relation::GreaterEq, 0);
    }
  for (const auto& h : ab.effects.facets()) {
    QVec row = QVec::Zero(nv);
    for (Index x = 0; x < na; ++x)
      for (Index y = 0; y < nb; ++y) row(rv(y, x)) = h(x * nb + y);
    lp.add(row, Relation::GreaterEq, 0);
    lp.add(row, Relation::LessEq, h.dot(ab.unit));
  }
  QVec obj = QVec::Zero(nv);
  obj(static_cast<Index>(cvar)) = 1;
  auto res = lp_maximize(lp, obj);
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  const Rational c = res.value;
  QMat r(nb, na);
  for (Index i = 0; i < nb; ++i)
    for (Index j = 0; j < na; ++j) r(i, j) = res.point(rv(i, j)) / c;
  return make_teleportation_certificate<Rational>(omega, r, c);
}

std::vector<QVec> teleportation_candidates(const QCom& a, const QCom& b, const QCom& ba) {
  const Index na = a.dim();
  const Index nb = b.dim();
  std::vector<QVec> out;
  auto push = [&](QVec w) {
    const Rational mass = ba.unit.dot(w);
    if (mass <= 0) return;
    w /= mass;
    for (const auto& seen : out)
      if (same_ray(seen, w)) return;
    if (rank<Rational>(reshape<Rational>(w, nb, na)) < na) return;
    out.push_back(std::move(w));
  };
  for (const auto& g : ba.states.generators()) push(g);
  if (na == nb) {
    RayMatchOptions opt;
    opt.limit = 0;
    for (const auto& m : match_rays(b.effects.generators(), a.states.generators(), opt)) {
      // m : B# -> A is omega-hat = W^T.
      QVec w = flatten<Rational>(QMat(m.map.transpose()));
      if (ba.states.contains(w)) push(w);
    }
  }
  return out;
}

}  // namespace

template <class T>
TeleportationSearch<T> find_teleportation(const CompositeCom<T>& ab, const CompositeCom<T>& ba) {
  if constexpr (!is_exact_v<T>) {
    throw Error(ErrorCode::UnsupportedKind, "teleportation search needs polyhedral models; verify a candidate instead");
  } else {
    const QCom& a = ab.first;
    const QCom& b = ab.second;
    if (ba.first.dim() != b.dim() || ba.second.dim() != a.dim())
      throw Error(ErrorCode::DimensionMismatch, "composites do not pair the same two systems");
    TeleportationSearch<T> s;
    if (b.dim() < a.dim()) {
      s.note = "dim " + std::to_string(b.dim()) + " < dim " + std::to_string(a.dim()) +
               ": omega-hat o r-hat cannot have full rank";
      return s;
    }
    const auto candidates = teleportation_candidates(a, b, ba.com);
    for (const auto& w : candidates) {
      ++s.candidates_tried;
      if (auto c = best_scale(w, a, b, ab.com)) {
        s.certificate = std::move(c);
        s.note = "certificate from candidate " + std::to_string(s.candidates_tried);
        return s;
      }
    }
    s.note = "no admissible effect for any of " + std::to_string(candidates.size()) + " candidate states";
    return s;
  }
}

template <class T>
TeleportationReport<T> verify_teleportation(const TeleportationCertificate<T>& cert, const CompositeCom<T>& ab,
                                            const CompositeCom<T>& ba) {
  TeleportationReport<T> r;
  r.approximate = !is_exact_v<T>;
  auto fail = [&r](std::string m) {
    r.ok = false;
    r.violations.push_back(std::move(m));
  };
  const Com<T>& a = ab.first;
  const Com<T>& b = ab.second;
  const Index na = a.dim();
  const Index nb = b.dim();
  if (cert.r_hat.rows() != nb || cert.r_hat.cols() != na || cert.omega.size() != na * nb ||
      cert.effect.size() != na * nb) {
    fail("certificate shapes do not match dim A = " + std::to_string(na) + ", dim B = " + std::to_string(nb));
    r.residual = T(-1);
    r.max_scale = T(0);
    return r;
  }
  const Mat<T> w = reshape<T>(cert.omega, nb, na);
  r.residual = max_abs<T>(Mat<T>(w.transpose() * cert.r_hat - Mat<T>::Identity(na, na)));
  if (!is_zero(r.residual)) fail("omega-hat o r-hat differs from the identity");
  if (!ba.com.states.contains(cert.omega)) fail("omega is not a state of the BA composite");

  const auto rays = probe_rays(a.states);
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!b.effects.contains(Vec<T>(cert.r_hat * rays[i])))
      fail("r-hat sends state ray " + std::to_string(i) + " outside the effect cone of B");

  const Vec<T> unit_effect = flatten<T>(Mat<T>(cert.r_hat.transpose()));
  if (!is_zero(max_abs<T>(Vec<T>(cert.effect - cert.scale * unit_effect))))
    fail("effect is not scale * r-hat form");
  if (!is_positive(cert.scale)) fail("scale is not positive");
  if (!ab.com.effects.contains(cert.effect)) fail("effect is not in the AB effect cone");
  if (!ab.com.effects.contains(Vec<T>(ab.com.unit - cert.effect))) fail("effect exceeds the unit u_AB");

  if constexpr (is_exact_v<T>) {
    std::optional<Rational> best;
    for (const auto& h : ab.com.effects.facets()) {
      const Rational num = h.dot(unit_effect);
      if (num <= 0) continue;
      const Rational bound = h.dot(ab.com.unit) / num;
      if (!best || bound < *best) best = bound;
    }
    r.max_scale = best.value_or(Rational(0));
  } else {
    const auto& cone = ab.com.effects;
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> es(cone.to_matrix(unit_effect), cone.to_matrix(ab.com.unit),
                                                      Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().maxCoeff();
    r.max_scale = top > 0 ? 1.0 / top : 0.0;
  }
  return r;
}

template <class T>
CompactReport<T> verify_compact_structure(Index n_a, Index n_d, const Vec<T>& eta, const Vec<T>& eps) {
  if (eta.size() != n_a * n_d || eps.size() != n_a * n_d)
    throw Error(ErrorCode::DimensionMismatch, "unit and co-unit must live on A' (x) A and A (x) A'");
  CompactReport<T> r;
  const Mat<T> eps_row = eps.transpose();
  const Mat<T> eta_col = eta;
  r.left = kron<T>(eps_row, Mat<T>::Identity(n_a, n_a)) * kron<T>(Mat<T>::Identity(n_a, n_a), eta_col);
  r.right = kron<T>(Mat<T>::Identity(n_d, n_d), eps_row) * kron<T>(eta_col, Mat<T>::Identity(n_d, n_d));
  r.left_residual = max_abs<T>(Mat<T>(r.left - Mat<T>::Identity(n_a, n_a)));
  r.right_residual = max_abs<T>(Mat<T>(r.right - Mat<T>::Identity(n_d, n_d)));

  const Mat<T> w = reshape<T>(eta, n_d, n_a);
  const Mat<T> f = reshape<T>(eps, n_a, n_d);
  const T c1 = max_abs<T>(Mat<T>(w.transpose() * f.transpose() - r.left));
  const T c2 = max_abs<T>(Mat<T>(w * f - r.right));
  r.conditioning_residual = c1 > c2 ? c1 : c2;
  if (!is_zero(r.conditioning_residual))
    throw Error(ErrorCode::RemoteEvalMismatch, "snake equations disagree with the conditioning maps");
  r.ok = is_zero(r.left_residual) && is_zero(r.right_residual);
  return r;
}

template <class T>
Factorization<T> factor_morphism(const Mat<T>& phi, Index n_d, const Vec<T>& eta, const Vec<T>& eps) {
  const Index n_a = phi.cols();
  const Index n_b = phi.rows();
  auto check = verify_compact_structure<T>(n_a, n_d, eta, eps);
  if (!check.ok) throw Error(ErrorCode::InvalidStructure, "unit and co-unit fail the snake equations");
  Factorization<T> out;
  out.omega = kron<T>(Mat<T>::Identity(n_d, n_d), phi) * eta;
  out.effect = eps;
  const Mat<T> w = reshape<T>(out.omega, n_d, n_b);
  const Mat<T> eps_hat = reshape<T>(eps, n_a, n_d).transpose();
  out.residual = max_abs<T>(Mat<T>(w.transpose() * eps_hat - phi));
  return out;
}

CompactClosureVerdict check_theory_compact_closed(const std::vector<QCom>& objects, CompositeKind kind) {
  CompactClosureVerdict v;
  v.compact_closed = !objects.empty();
  for (const auto& a : objects) {
    CompactClosureObject o;
    o.label = a.label;
    for (const auto& b : objects) {
      auto ab = make_composite(kind, a, b);
      auto ba = make_composite(kind, b, a);
      auto there = find_teleportation(ab, ba);
      auto back = find_teleportation(ba, ab);
      o.attempts.push_back(b.label + ": " + a.label + " through " + b.label + " " +
                           (there.certificate ? "found" : "none (" + there.note + ")") + "; back " +
                           (back.certificate ? "found" : "none (" + back.note + ")"));
      if (there.certificate && back.certificate) {
        o.certified = true;
        o.partner = b.label;
        o.through_partner = there.certificate;
        o.partner_through = back.certificate;
        break;
      }
    }
    v.compact_closed = v.compact_closed && o.certified;
    v.objects.push_back(std::move(o));
  }
  return v;
}

#define COMCAT_INSTANTIATE(T)                                                                                   \
  template TeleportationCertificate<T> make_teleportation_certificate(const Vec<T>&, const Mat<T>&, T);          \
  template TeleportationSearch<T> find_teleportation(const CompositeCom<T>&, const CompositeCom<T>&);           \
  template TeleportationReport<T> verify_teleportation(const TeleportationCertificate<T>&,                      \
                                                       const CompositeCom<T>&, const CompositeCom<T>&);         \
  template CompactReport<T> verify_compact_structure(Index, Index, const Vec<T>&, const Vec<T>&);               \
  template Factorization<T> factor_morphism(const Mat<T>&, Index, const Vec<T>&, const Vec<T>&);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat
