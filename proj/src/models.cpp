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

#include "comcat/models.hpp"

#include "comcat/ray_matching.hpp"

#include <cmath>

namespace comcat {

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

QCom saturated(std::string label, const std::vector<QVec>& rays, QVec unit) {
  auto states = PolyhedralCone::from_generators(rays);
  auto effects = states.dual();
  return validate_com(QCom{std::move(label), std::move(states), std::move(effects), std::move(unit)});
}

}  // namespace

QCom classical(Index n) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "classical system needs at least one outcome");
  std::vector<QVec> rays;
  for (Index i = 0; i < n; ++i) rays.push_back(QVec::Unit(n, i));
  return saturated(n == 1 ? "trivial" : "classical" + std::to_string(n), rays, QVec::Ones(n));
}

QCom trivial() { return classical(1); }

DCom quantum(Index d) {
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "quantum system needs d >= 2");
  auto cone = PsdCone::hermitian(d);
  DVec unit = cone.interior_point();
  return validate_com(DCom{d == 2 ? "qubit" : "quantum" + std::to_string(d), cone, cone, unit});
}

QCom gbit() {
  return saturated("gbit", {qv({1, 1, 1}), qv({1, -1, 1}), qv({-1, 1, 1}), qv({-1, -1, 1})}, qv({0, 0, 1}));
}

QCom pentagon() {
  return saturated("pentagon",
                   {qv({0, 3, 2}), qv({2, 1, 2}), qv({1, -2, 2}), qv({-1, -2, 2}), qv({-2, 1, 2})},
                   qv({0, 0, 1}));
}

QStructure classical_structure(Index n) {
  return QStructure::from_gamma_hat(QMat::Identity(n, n));
}

QStructure gbit_rotation_structure() {
  QMat m(3, 3);
  m << 1, -1, 0, 1, 1, 0, 0, 0, 1;
  return QStructure::from_gamma_hat(m);
}

QStructure gbit_reflection_structure() {
  QMat m(3, 3);
  m << 1, 1, 0, 1, -1, 0, 0, 0, 1;
  return QStructure::from_gamma_hat(m);
}

DVec maximally_entangled_state(Index d) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
  for (Index i = 0; i < d; ++i) psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  PsdCone pair({d, d});
  return pair.to_coords(psi * psi.adjoint());
}

DStructure maximally_entangled_structure(Index d) {
  DVec gamma = maximally_entangled_state(d);
  DVec f = static_cast<double>(d * d) * gamma;
  DStructure s(gamma, f, d * d);
  if (s.inverse_residual() > 1e-10)
    throw Error(ErrorCode::InvalidStructure, "maximally entangled structure failed to invert");
  return s;
}

QCom from_mackey(const MackeyTriple& t, const std::string& label) {
  const Index nx = t.table.rows();
  const Index ns = t.table.cols();
  if (nx == 0 || ns == 0) throw Error(ErrorCode::DegenerateTriple, "empty outcome or state list");
  if (static_cast<std::size_t>(nx) != t.outcomes.size() || static_cast<std::size_t>(ns) != t.states.size())
    throw Error(ErrorCode::DegenerateTriple, "table shape does not match the outcome and state lists");
  for (Index i = 0; i < nx; ++i)
    for (Index j = 0; j < ns; ++j)
      if (t.table(i, j) < 0 || t.table(i, j) > 1)
        throw Error(ErrorCode::DegenerateTriple, "probability outside [0, 1] at (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
  std::vector<QVec> columns;
  for (Index j = 0; j < ns; ++j) {
    QVec c = t.table.col(j);
    bool dup = false;
    for (const auto& seen : columns) dup = dup || seen == c;
    if (!dup) columns.push_back(c);
  }

  std::vector<QVec> basis;
  for (const auto& c : columns) {
    QMat m(nx, static_cast<Index>(basis.size()) + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) m.col(static_cast<Index>(k)) = basis[k];
    m.col(m.cols() - 1) = c;
    if (rank<Rational>(m) == m.cols()) basis.push_back(c);
  }
  const Index k = static_cast<Index>(basis.size());
  if (k == 0) throw Error(ErrorCode::DegenerateTriple, "every state has all-zero statistics");
  QMat pb(nx, k);
  for (Index j = 0; j < k; ++j) pb.col(j) = basis[static_cast<std::size_t>(j)];

  std::vector<QVec> coords;
  for (const auto& c : columns) {
    auto x = solve<Rational>(pb, c);
    if (!x) throw Error(ErrorCode::DegenerateTriple, "column outside the span of the basis");
    coords.push_back(*x);
  }

  QMat sys(static_cast<Index>(coords.size()), k);
  for (std::size_t i = 0; i < coords.size(); ++i) sys.row(static_cast<Index>(i)) = coords[i].transpose();
  auto unit = solve<Rational>(sys, QVec::Ones(sys.rows()));
  if (!unit) throw Error(ErrorCode::DegenerateTriple, "no unit functional takes the value 1 on every state");

  std::vector<QVec> effects{*unit};
  for (Index i = 0; i < nx; ++i) {
    QVec row = pb.row(i).transpose();
    if (!row.isZero()) effects.push_back(row);
  }
  auto states = PolyhedralCone::from_generators(coords);
  auto eff = PolyhedralCone::from_generators(effects);
  return validate_com(QCom{label, std::move(states), std::move(eff), *unit});
}

MackeyTriple to_mackey(const QCom& a) {
  MackeyTriple t;
  std::vector<QVec> states;
  for (const auto& g : a.states.generators()) states.push_back(g / a.unit.dot(g));
  std::vector<QVec> outcomes;
  for (const auto& e : a.effects.generators()) {
    Rational top = 0;
    for (const auto& s : states) top = std::max(top, Rational(e.dot(s)));
    outcomes.push_back(e / top);
  }
  t.table = QMat(static_cast<Index>(outcomes.size()), static_cast<Index>(states.size()));
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j)
      t.table(static_cast<Index>(i), static_cast<Index>(j)) = outcomes[i].dot(states[j]);
  for (std::size_t i = 0; i < outcomes.size(); ++i) t.outcomes.push_back("e" + std::to_string(i));
  for (std::size_t j = 0; j < states.size(); ++j) t.states.push_back("s" + std::to_string(j));
  return t;
}

MackeyTriple pauli_fragment() {
  MackeyTriple t;
  t.outcomes = {"z+", "z-", "x+", "x-"};
  t.states = {"|0>", "|1>", "|+>", "|->", "|+i>", "|-i>"};
  const Rational h(1, 2);
  t.table = QMat(4, 6);
  t.table << 1, 0, h, h, h, h,  //
      0, 1, h, h, h, h,         //
      h, h, 1, 0, h, h,         //
      h, h, 0, 1, h, h;
  return t;
}

std::optional<QMat> order_isomorphism(const QCom& a, const QCom& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const Index n = a.dim();
  std::vector<QVec> src, tgt;
  for (const auto& g : a.states.generators()) src.push_back(g / a.unit.dot(g));
  for (const auto& g : b.states.generators()) tgt.push_back(g / b.unit.dot(g));

  RayMatchOptions opt;
  opt.extra = [&](LinearProgram& lp, const std::function<std::size_t(Index, Index)>& var) {
    for (Index j = 0; j < n; ++j) {
      QVec row = QVec::Zero(static_cast<Index>(lp.num_vars()));
      for (Index i = 0; i < n; ++i) row(static_cast<Index>(var(i, j))) = b.unit(i);
      lp.add(row, Relation::Equal, a.unit(j));
    }
  };
  opt.accept = [&](const QMat& m) {
    auto inv = inverse<Rational>(m);
    if (!inv) return false;
    const QMat mt = m.transpose();
    const QMat mit = inv->transpose();
    for (const auto& e : b.effects.generators())
      if (!a.effects.contains(QVec(mt * e))) return false;
    for (const auto& e : a.effects.generators())
      if (!b.effects.contains(QVec(mit * e))) return false;
    return true;
  };
  auto found = match_rays(src, tgt, opt);
  if (found.empty()) return std::nullopt;
  return found.front().map;
}

}  // namespace comcat
