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

#include "comcat/io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace comcat::io {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool is_exact_cone(const Json& cone) {
  const std::string kind = field(cone, "kind").get<std::string>();
  if (kind == "polyhedral") return true;
  if (kind == "psd") return false;
  throw parse_error("unknown cone kind \"" + kind + "\"");
}

PolyhedralCone polyhedral_from_json(const Json& j) {
  if (j.contains("generators")) {
    std::vector<QVec> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vec_from_json<Rational>(g));
    if (j.contains("dim") && !gens.empty() && gens.front().size() != j.at("dim").get<Index>())
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from \"dim\"");
    return PolyhedralCone::from_generators(gens);
  }
  std::vector<QVec> facets;
  for (const auto& h : field(j, "facets")) facets.push_back(vec_from_json<Rational>(h));
  return PolyhedralCone::from_facets(facets);
}

PsdCone psd_from_json(const Json& j) {
  if (j.contains("factors")) return PsdCone(j.at("factors").get<std::vector<Index>>());
  return PsdCone::hermitian(field(j, "hilbert_dim").get<Index>());
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(double x) { return x; }

template <>
Rational scalar_from_json<Rational>(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw parse_error("expected a rational, got " + j.dump());
}

template <>
double scalar_from_json<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw parse_error("expected a number, got " + j.dump());
}

template <class T>
Json vec_to_json(const Vec<T>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

template <class T>
Vec<T> vec_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected an array, got " + j.dump());
  Vec<T> v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json<T>(j[i]);
  return v;
}

template <class T>
Json mat_to_json(const Mat<T>& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vec_to_json<T>(Vec<T>(m.row(i).transpose())));
  return out;
}

template <class T>
Mat<T> mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("expected a nonempty array of rows");
  const std::size_t cols = j[0].size();
  Mat<T> m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != cols) throw parse_error("ragged matrix");
    m.row(static_cast<Index>(i)) = vec_from_json<T>(j[i]).transpose();
  }
  return m;
}

Json cone_to_json(const PolyhedralCone& c) {
  Json gens = Json::array(), facets = Json::array();
  for (const auto& g : c.generators()) gens.push_back(vec_to_json<Rational>(g));
  for (const auto& h : c.facets()) facets.push_back(vec_to_json<Rational>(h));
  return Json{{"kind", "polyhedral"}, {"dim", c.dim()}, {"generators", gens}, {"facets", facets}};
}

Json cone_to_json(const PsdCone& c) {
  Json j{{"kind", "psd"}, {"hilbert_dim", c.hilbert_dim()}};
  if (c.factors().size() > 1) j["factors"] = c.factors();
  return j;
}

template <class T>
Json com_to_json(const Com<T>& a) {
  return Json{{"label", a.label},
              {"dim", a.dim()},
              {"state_cone", cone_to_json(a.states)},
              {"effect_cone", cone_to_json(a.effects)},
              {"unit", vec_to_json<T>(a.unit)}};
}

Json com_to_json(const AnyCom& a) {
  return std::visit([](const auto& c) { return com_to_json(c); }, a);
}

AnyCom com_from_json(const Json& j) {
  const std::string label = j.contains("label") ? j.at("label").get<std::string>() : "model";
  const Json& sc = field(j, "state_cone");
  const Json& ec = field(j, "effect_cone");
  const bool exact = is_exact_cone(sc);
  if (exact != is_exact_cone(ec)) throw Error(ErrorCode::KindMismatch, "state and effect cones differ in kind");
  auto out = [&]() -> AnyCom {
    if (exact)
      return QCom{label, polyhedral_from_json(sc), polyhedral_from_json(ec), vec_from_json<Rational>(field(j, "unit"))};
    return DCom{label, psd_from_json(sc), psd_from_json(ec), vec_from_json<double>(field(j, "unit"))};
  }();
  if (j.contains("dim")) {
    const Index dim = std::visit([](const auto& c) { return c.dim(); }, out);
    if (j.at("dim").get<Index>() != dim) throw Error(ErrorCode::DimensionMismatch, "\"dim\" differs from the cones");
  }
  return out;
}

template <class T>
Json structure_to_json(const DualityStructure<T>& d, const Com<T>& a) {
  const auto verified = verify_structure(d, a);
  const auto t = tau(d, a);
  const auto th = involution_report(d);
  const auto cu = counit_dual_check(d);
  Json violations = verified.violations;
  return Json{{"kind", "duality_structure"},
              {"object", a.label},
              {"dim", d.dim()},
              {"gamma", vec_to_json<T>(d.gamma())},
              {"f", vec_to_json<T>(d.f())},
              {"gamma_hat", mat_to_json<T>(d.gamma_hat())},
              {"tau", mat_to_json<T>(d.tau())},
              {"residuals",
               {{"inverse", to_json(d.inverse_residual())},
                {"gamma_symmetry", to_json(d.gamma_symmetry_residual())},
                {"f_symmetry", to_json(d.f_symmetry_residual())},
                {"counit", to_json(cu.residual)}}},
              {"verdicts",
               {{"verified", verified.ok},
                {"involutive_adjoint", th.involutive},
                {"tau_identity", t.identity},
                {"tau_automorphism", t.automorphism},
                {"symmetric", th.symmetric},
                {"involution_consistent", th.consistent},
                {"counit_swap_identity", cu.ok},
                {"positive_definite_form", is_positive_definite_form(d)}}},
              {"violations", violations}};
}

template <class T>
DualityStructure<T> structure_from_json(const Json& j) {
  if (j.contains("gamma_hat")) return DualityStructure<T>::from_gamma_hat(mat_from_json<T>(j.at("gamma_hat")));
  const Vec<T> gamma = vec_from_json<T>(field(j, "gamma"));
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(gamma.size()))));
  if (n * n != gamma.size()) throw Error(ErrorCode::DimensionMismatch, "gamma length is not a square");
  if (!j.contains("f")) return DualityStructure<T>::from_gamma_hat(Mat<T>(reshape<T>(gamma, n, n).transpose()));
  return DualityStructure<T>(gamma, vec_from_json<T>(j.at("f")), n);
}

template <class T>
Json certificate_to_json(const TeleportationCertificate<T>& c) {
  return Json{{"kind", "teleportation_certificate"},
              {"omega", vec_to_json<T>(c.omega)},
              {"r_hat", mat_to_json<T>(c.r_hat)},
              {"scale", to_json(c.scale)},
              {"effect", vec_to_json<T>(c.effect)},
              {"residual", to_json(c.residual)}};
}

template <class T>
TeleportationCertificate<T> certificate_from_json(const Json& j) {
  return make_teleportation_certificate<T>(vec_from_json<T>(field(j, "omega")), mat_from_json<T>(field(j, "r_hat")),
                                           scalar_from_json<T>(field(j, "scale")));
}

Json mackey_to_json(const MackeyTriple& t) {
  return Json{{"outcomes", t.outcomes}, {"states", t.states}, {"table", mat_to_json<Rational>(t.table)}};
}

MackeyTriple mackey_from_json(const Json& j) {
  MackeyTriple t;
  t.outcomes = field(j, "outcomes").get<std::vector<std::string>>();
  t.states = field(j, "states").get<std::vector<std::string>>();
  t.table = mat_from_json<Rational>(field(j, "table"));
  return t;
}

bool is_builtin(const std::string& uri) { return uri.rfind("builtin:", 0) == 0; }

AnyCom builtin(const std::string& uri) {
  const std::string name = is_builtin(uri) ? uri.substr(8) : uri;
  static const std::regex classical_n("classical([0-9]+)"), quantum_d("quantum([0-9]+)");
  std::smatch m;
  if (name == "trivial") return trivial();
  if (name == "gbit") return gbit();
  if (name == "pentagon") return pentagon();
  if (name == "qubit") return quantum(2);
  if (std::regex_match(name, m, classical_n)) return classical(std::stol(m[1]));
  if (std::regex_match(name, m, quantum_d)) return quantum(std::stol(m[1]));
  throw parse_error("unknown builtin model \"" + name + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << text;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(source + ": " + e.what());
  }
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::string& label_of(const AnyCom& a) {
  return std::visit([](const auto& c) -> const std::string& { return c.label; }, a);
}

#define COMCAT_INSTANTIATE(T)                                                        \
  template Json vec_to_json(const Vec<T>&);                                          \
  template Vec<T> vec_from_json(const Json&);                                        \
  template Json mat_to_json(const Mat<T>&);                                          \
  template Mat<T> mat_from_json(const Json&);                                        \
  template Json com_to_json(const Com<T>&);                                          \
  template Json structure_to_json(const DualityStructure<T>&, const Com<T>&);        \
  template DualityStructure<T> structure_from_json(const Json&);                     \
  template Json certificate_to_json(const TeleportationCertificate<T>&);             \
  template TeleportationCertificate<T> certificate_from_json(const Json&);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat::io
