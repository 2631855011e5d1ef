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

#include "comcat/composites.hpp"

#include "comcat/lp.hpp"

namespace comcat {

std::string_view composite_kind_name(CompositeKind kind) {
  switch (kind) {
    case CompositeKind::Min:
      return "min";
    case CompositeKind::Max:
      return "max";
    case CompositeKind::Spatial:
      return "spatial";
    case CompositeKind::Custom:
      return "custom";
  }
  return "custom";
}

CompositeKind parse_composite_kind(std::string_view name) {
  if (name == "min") return CompositeKind::Min;
  if (name == "max") return CompositeKind::Max;
  if (name == "spatial") return CompositeKind::Spatial;
  if (name == "custom") return CompositeKind::Custom;
  throw Error(ErrorCode::ParseError, "unknown composite kind '" + std::string(name) + "'");
}

namespace {

std::vector<QVec> products(const std::vector<QVec>& xs, const std::vector<QVec>& ys) {
  std::vector<QVec> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(kron<Rational>(x, y));
  return out;
}

std::string pair_label(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

template <class T>
CompositeCom<T> min_tensor(const Com<T>& a, const Com<T>& b) {
  if constexpr (!is_exact_v<T>) {
    throw Error(ErrorCode::MixedKindUnsupported,
                "min tensor of psd models is not represented exactly; use the spatial composite");
  } else {
    auto states = PolyhedralCone::from_generators(products(a.states.generators(), b.states.generators()));
    auto effects = states.dual();
    Com<T> ab{a.label + "(x)min " + b.label, std::move(states), std::move(effects),
              kron<Rational>(a.unit, b.unit)};
    return {std::move(ab), a, b, CompositeKind::Min};
  }
}

template <class T>
CompositeCom<T> max_tensor(const Com<T>& a, const Com<T>& b) {
  if constexpr (!is_exact_v<T>) {
    throw Error(ErrorCode::MixedKindUnsupported,
                "max tensor of psd models is not represented exactly; use the spatial composite");
  } else {
    auto effects = PolyhedralCone::from_generators(products(a.effects.generators(), b.effects.generators()));
    auto states = effects.dual();
    Com<T> ab{a.label + "(x)max " + b.label, std::move(states), std::move(effects),
              kron<Rational>(a.unit, b.unit)};
    return {std::move(ab), a, b, CompositeKind::Max};
  }
}

template <class T>
CompositeCom<T> spatial_quantum_composite(const Com<T>& a, const Com<T>& b) {
  if constexpr (is_exact_v<T>) {
    throw Error(ErrorCode::KindMismatch, "spatial composite needs two quantum (psd) models");
  } else {
    std::vector<Index> factors = a.states.factors();
    factors.insert(factors.end(), b.states.factors().begin(), b.states.factors().end());
    PsdCone cone(factors);
    Com<T> ab{a.label + "(x)" + b.label, cone, cone, kron<double>(a.unit, b.unit)};
    return {std::move(ab), a, b, CompositeKind::Spatial};
  }
}

template <class T>
CompositeCom<T> custom_composite(const Com<T>& a, const Com<T>& b, Cone<T> states, Cone<T> effects) {
  Com<T> ab{a.label + "(x)custom " + b.label, std::move(states), std::move(effects), kron<T>(a.unit, b.unit)};
  auto check = is_composite(ab, a, b);
  if (!check) {
    std::string msg = "custom composite rejected:";
    for (const auto& v : check.violations) msg += "\n  " + v;
    throw Error(ErrorCode::InvalidStructure, msg);
  }
  return {std::move(ab), a, b, CompositeKind::Custom};
}

template <class T>
CompositeCom<T> make_composite(CompositeKind kind, const Com<T>& a, const Com<T>& b) {
  switch (kind) {
    case CompositeKind::Min:
      return min_tensor(a, b);
    case CompositeKind::Max:
      return max_tensor(a, b);
    case CompositeKind::Spatial:
      return spatial_quantum_composite(a, b);
    case CompositeKind::Custom:
      break;
  }
  throw Error(ErrorCode::InvalidStructure, "custom composites need explicit cones");
}

template <class T>
CompositeCheck<T> is_composite(const Com<T>& ab, const Com<T>& a, const Com<T>& b) {
  CompositeCheck<T> check;
  check.approximate = !is_exact_v<T>;
  auto& out = check.violations;
  if (ab.dim() != a.dim() * b.dim()) {
    out.push_back("composite dimension " + std::to_string(ab.dim()) + " is not " +
                  std::to_string(a.dim()) + " * " + std::to_string(b.dim()));
    check.ok = false;
    return check;
  }
  for (auto& v : com_violations(ab)) out.push_back("composite model: " + v);
  if (!out.empty()) {
    check.ok = false;
    return check;
  }
  if (!is_zero(max_abs<T>(Vec<T>(ab.unit - kron<T>(a.unit, b.unit)))))
    out.push_back("composite unit is not u_A (x) u_B");

  const auto sa = probe_rays(a.states);
  const auto sb = probe_rays(b.states);
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = 0; j < sb.size(); ++j)
      if (!ab.states.contains(kron<T>(sa[i], sb[j])))
        out.push_back(pair_label("product state of generators", i, j) + " is not a composite state");

  const auto ea = probe_rays(a.effects);
  const auto eb = probe_rays(b.effects);
  std::vector<Vec<T>> product_effects;
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j) {
      product_effects.push_back(kron<T>(ea[i], eb[j]));
      if (!ab.effects.contains(product_effects.back()))
        out.push_back(pair_label("product effect of generators", i, j) + " is not a composite effect");
    }

  const auto sab = probe_rays(ab.states);
  for (std::size_t k = 0; k < sab.size(); ++k)
    for (std::size_t p = 0; p < product_effects.size(); ++p)
      if (!is_nonneg(T(product_effects[p].dot(sab[k])))) {
        out.push_back("composite state generator " + std::to_string(k) + " is negative on " +
                      pair_label("product effect", p / eb.size(), p % eb.size()));
      }
  check.ok = out.empty();
  return check;
}

SeparabilityResult separability_check(const QVec& w, const QCom& a, const QCom& b) {
  if (w.size() != a.dim() * b.dim()) throw Error(ErrorCode::DimensionMismatch, "bipartite vector length");
  const auto& ga = a.states.generators();
  const auto& gb = b.states.generators();
  const auto prods = products(ga, gb);
  const Index n = w.size();

  LinearProgram lp(prods.size());
  for (std::size_t k = 0; k < prods.size(); ++k) lp.set_nonnegative(k);
  for (Index r = 0; r < n; ++r) {
    QVec row(static_cast<Index>(prods.size()));
    for (std::size_t k = 0; k < prods.size(); ++k) row(static_cast<Index>(k)) = prods[k](r);
    lp.add(row, Relation::Equal, w(r));
  }
  SeparabilityResult res;
  if (auto x = lp_feasible(lp)) {
    res.separable = true;
    for (std::size_t k = 0; k < prods.size(); ++k)
      if ((*x)(static_cast<Index>(k)) != 0)
        res.decomposition.push_back({{k / gb.size(), k % gb.size()}, (*x)(static_cast<Index>(k))});
    return res;
  }
  LinearProgram farkas(static_cast<std::size_t>(n));
  for (const auto& p : prods) farkas.add(p, Relation::GreaterEq, 0);
  farkas.add(w, Relation::LessEq, -1);
  auto h = lp_feasible(farkas);
  if (!h) throw Error(ErrorCode::InvalidStructure, "separability LP and its Farkas dual both infeasible");
  res.witness = *h;
  return res;
}

#define COMCAT_INSTANTIATE(T)                                                                            \
  template CompositeCom<T> min_tensor(const Com<T>&, const Com<T>&);                                     \
  template CompositeCom<T> max_tensor(const Com<T>&, const Com<T>&);                                     \
  template CompositeCom<T> spatial_quantum_composite(const Com<T>&, const Com<T>&);                      \
  template CompositeCom<T> custom_composite(const Com<T>&, const Com<T>&, Cone<T>, Cone<T>);             \
  template CompositeCom<T> make_composite(CompositeKind, const Com<T>&, const Com<T>&);                  \
  template CompositeCheck<T> is_composite(const Com<T>&, const Com<T>&, const Com<T>&);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat
