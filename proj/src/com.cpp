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

#include "comcat/com.hpp"

#include <sstream>

namespace comcat {

namespace {

std::string describe(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v(i));
  os << ")";
  return os.str();
}

std::string describe(const DVec& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

void polyhedral_violations(const QCom& a, std::vector<std::string>& out) {
  if (!a.effects.contains(a.unit)) out.push_back("unit is not in the effect cone");
  const auto& sg = a.states.generators();
  for (std::size_t i = 0; i < sg.size(); ++i)
    if (a.unit.dot(sg[i]) <= 0)
      out.push_back("unit is not strictly positive on state generator " + std::to_string(i) + " " +
                    describe(sg[i]));
  const auto& eg = a.effects.generators();
  for (std::size_t j = 0; j < eg.size(); ++j)
    for (std::size_t i = 0; i < sg.size(); ++i)
      if (eg[j].dot(sg[i]) < 0)
        out.push_back("effect generator " + std::to_string(j) + " " + describe(eg[j]) +
                      " is negative on state generator " + std::to_string(i) + " " + describe(sg[i]));
}

void psd_violations(const DCom& a, std::vector<std::string>& out) {
  if (!a.effects.same_cone(a.states))
    out.push_back("psd effect cone must live on the same Hilbert space factors as the state cone");
  else if (a.states.min_eigenvalue(a.unit) <= numeric_tolerance())
    out.push_back("unit is not strictly positive (not positive definite) " + describe(a.unit));
}

}  // namespace

template <class T>
std::vector<std::string> com_violations(const Com<T>& a) {
  std::vector<std::string> out;
  if (a.effects.dim() != a.states.dim())
    out.push_back("effect cone dimension " + std::to_string(a.effects.dim()) +
                  " differs from state cone dimension " + std::to_string(a.states.dim()));
  if (a.unit.size() != a.states.dim())
    out.push_back("unit has length " + std::to_string(a.unit.size()) + ", expected " +
                  std::to_string(a.states.dim()));
  if (!out.empty()) return out;
  if constexpr (is_exact_v<T>)
    polyhedral_violations(a, out);
  else
    psd_violations(a, out);
  return out;
}

template <class T>
Com<T> validate_com(Com<T> candidate) {
  auto v = com_violations(candidate);
  if (!v.empty()) {
    std::string msg = "model '" + candidate.label + "' is invalid:";
    for (const auto& s : v) msg += "\n  " + s;
    throw Error(ErrorCode::InvalidStructure, msg);
  }
  return candidate;
}

template <class T>
bool is_saturated(const Com<T>& a) {
  return a.effects.same_cone(a.states.dual());
}

template <class T>
bool is_effect(const Com<T>& a, const Vec<T>& e) {
  return a.effects.contains(e) && a.effects.contains(Vec<T>(a.unit - e));
}

template <class T>
bool is_normalized_state(const Com<T>& a, const Vec<T>& x) {
  return a.states.contains(x) && is_zero(T(a.unit.dot(x) - T(1)));
}

template <class T>
MorphismCheck<T> is_morphism(const Mat<T>& phi, const Com<T>& a, const Com<T>& b) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix must be dim(B) x dim(A)");
  MorphismCheck<T> check;
  check.approximate = !is_exact_v<T>;
  const auto state_rays = probe_rays(a.states);
  for (std::size_t i = 0; i < state_rays.size(); ++i) {
    Vec<T> img = phi * state_rays[i];
    if (!b.states.contains(img))
      check.violations.push_back({PositivityViolation<T>::Side::State, i, state_rays[i], img});
  }
  const auto effect_rays = probe_rays(b.effects);
  const Mat<T> adj = phi.transpose();
  for (std::size_t j = 0; j < effect_rays.size(); ++j) {
    Vec<T> img = adj * effect_rays[j];
    if (!a.effects.contains(img))
      check.violations.push_back({PositivityViolation<T>::Side::Effect, j, effect_rays[j], img});
  }
  check.ok = check.violations.empty();
  return check;
}

template <class T>
bool is_process(const Mat<T>& phi, const Com<T>& a, const Com<T>& b) {
  if (!is_morphism(phi, a, b)) throw Error(ErrorCode::NotAMorphism, "map is not positive");
  Vec<T> slack = a.unit - phi.transpose() * b.unit;
  return a.effects.contains(slack);
}

template <class T>
NormalizedMorphism<T> normalize_morphism(const Mat<T>& phi, const Com<T>& a, const Com<T>& b) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix must be dim(B) x dim(A)");
  if (all_zero<T>(phi)) throw Error(ErrorCode::ZeroMap, "cannot normalize the zero map");
  if (!is_morphism(phi, a, b)) throw Error(ErrorCode::NotAMorphism, "map is not positive");
  const Vec<T> pulled = phi.transpose() * b.unit;
  T scale(0);
  if constexpr (is_exact_v<T>) {
    for (const auto& g : a.states.generators()) {
      T v = pulled.dot(g) / a.unit.dot(g);
      if (v > scale) scale = v;
    }
  } else {
    // max Tr(X rho) subject to Tr(U rho) = 1, rho >= 0: the top generalized
    // eigenvalue of the pencil (X, U).
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> es(a.states.to_matrix(pulled),
                                                      a.states.to_matrix(a.unit),
                                                      Eigen::EigenvaluesOnly);
    scale = es.eigenvalues().maxCoeff();
  }
  if (!is_positive(scale)) throw Error(ErrorCode::ZeroMap, "map annihilates every state");
  return {Mat<T>(phi / scale), scale};
}

#define COMCAT_INSTANTIATE(T)                                                                 \
  template std::vector<std::string> com_violations(const Com<T>&);                            \
  template Com<T> validate_com(Com<T>);                                                       \
  template bool is_saturated(const Com<T>&);                                                  \
  template bool is_effect(const Com<T>&, const Vec<T>&);                                      \
  template bool is_normalized_state(const Com<T>&, const Vec<T>&);                            \
  template MorphismCheck<T> is_morphism(const Mat<T>&, const Com<T>&, const Com<T>&);         \
  template bool is_process(const Mat<T>&, const Com<T>&, const Com<T>&);                      \
  template NormalizedMorphism<T> normalize_morphism(const Mat<T>&, const Com<T>&, const Com<T>&);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat
