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

#include "comcat/cli.hpp"

#include "comcat/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>

namespace comcat::cli {

namespace {

using io::AnyCom;
using io::Json;

constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Context {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tolerance;
  std::string output;
  Json inputs = Json::array();

  void record(const std::string& source, const std::string& bytes) {
    inputs.push_back(Json{{"source", source}, {"fnv1a64", io::fnv1a64(bytes)}});
  }

  Json load_json(const std::string& path) {
    const std::string text = io::read_file(path);
    record(path, text);
    return io::parse(text, path);
  }

  AnyCom load_com(const std::string& source) {
    if (io::is_builtin(source)) {
      AnyCom a = io::builtin(source);
      record(source, io::com_to_json(a).dump());
      return a;
    }
    return io::com_from_json(load_json(source));
  }
};

struct Outcome {
  int code = kExitVerified;
  Json body = Json::object();
};

bool is_exact(const AnyCom& a) { return std::holds_alternative<QCom>(a); }

Json strings(const std::vector<std::string>& v) { return Json(v); }

// ---------------------------------------------------------------- validate

Outcome cmd_validate(Context& ctx, const std::string& file) {
  Outcome o;
  std::optional<AnyCom> a;
  try {
    a = ctx.load_com(file);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    o.code = kExitRefuted;
    o.body["verdict"] = "invalid";
    o.body["violations"] = Json::array({e.what()});
    return o;
  }
  std::visit(
      [&](const auto& c) {
        auto v = com_violations(c);
        o.body["label"] = c.label;
        o.body["kind"] = is_exact(*a) ? "polyhedral" : "psd";
        o.body["dim"] = c.dim();
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, QCom>) {
          o.body["state_generators"] = c.states.generators().size();
          o.body["effect_generators"] = c.effects.generators().size();
        }
        o.body["saturated"] = v.empty() && is_saturated(c);
        o.body["verdict"] = v.empty() ? "valid" : "invalid";
        o.body["violations"] = strings(v);
        o.code = v.empty() ? kExitVerified : kExitRefuted;
      },
      *a);
  return o;
}

// ------------------------------------------------------------------ tensor

template <class T>
Json composite_body(const CompositeCom<T>& ab, const Com<T>& a, const Com<T>& b) {
  auto check = is_composite(ab.com, a, b);
  return Json{{"kind", composite_kind_name(ab.kind)},
              {"is_composite", check.ok},
              {"approximate", check.approximate},
              {"violations", strings(check.violations)}};
}

Outcome cmd_tensor(Context& ctx, const std::string& kind_name, const std::string& fa, const std::string& fb) {
  const CompositeKind kind = parse_composite_kind(kind_name);
  AnyCom a = ctx.load_com(fa), b = ctx.load_com(fb);
  if (a.index() != b.index()) throw Error(ErrorCode::MixedKindUnsupported, "factors differ in cone kind");
  Outcome o;
  Json object;
  std::visit(
      [&](const auto& x) {
        using C = std::decay_t<decltype(x)>;
        const auto& y = std::get<C>(b);
        auto ab = make_composite(kind, x, y);
        o.body = composite_body(ab, x, y);
        object = io::com_to_json(ab.com);
        o.code = o.body["is_composite"].template get<bool>() ? kExitVerified : kExitRefuted;
      },
      a);
  o.body["verdict"] = o.code == kExitVerified ? "composite" : "not a composite";
  if (ctx.output.empty()) {
    o.body["object"] = object;
  } else {
    io::write_file(ctx.output, object.dump(2) + "\n");
    o.body["written"] = ctx.output;
    ctx.output.clear();
  }
  return o;
}

// ------------------------------------------------------------- remote-eval

struct TensorVector {
  std::vector<Index> dims;
  Json values;
  bool exact = true;
};

TensorVector load_vector(Context& ctx, const std::string& path) {
  Json j = ctx.load_json(path);
  TensorVector v;
  v.values = j.at("values");
  v.dims = j.contains("dims") ? j.at("dims").get<std::vector<Index>>() : std::vector<Index>{Index(v.values.size())};
  for (const auto& x : v.values) v.exact = v.exact && (x.is_string() || x.is_number_integer());
  if (j.contains("exact")) v.exact = v.exact && j.at("exact").get<bool>();
  Index n = 1;
  for (auto d : v.dims) n *= d;
  if (n != static_cast<Index>(v.values.size())) throw Error(ErrorCode::DimensionMismatch, path + ": dims disagree with values");
  return v;
}

template <class T>
Outcome remote_eval_as(const TensorVector& f, const TensorVector& w, const TensorVector& x) {
  Outcome o;
  auto r = remote_evaluate<T>(io::vec_from_json<T>(f.values), io::vec_from_json<T>(w.values),
                              io::vec_from_json<T>(x.values), w.dims.front());
  o.body = Json{{"exact", is_exact_v<T>},
                {"value", io::vec_to_json<T>(r.value)},
                {"direct", io::vec_to_json<T>(r.direct)},
                {"residual", io::to_json(r.residual)},
                {"verdict", "agree"}};
  return o;
}

Outcome cmd_remote_eval(Context& ctx, const std::string& ff, const std::string& fw, const std::string& fx) {
  auto f = load_vector(ctx, ff), w = load_vector(ctx, fw), x = load_vector(ctx, fx);
  if (f.dims.size() != 2 || w.dims.size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "f and omega need two dims");
  if (f.dims[0] != static_cast<Index>(x.values.size()) || f.dims[1] != w.dims[0])
    throw Error(ErrorCode::DimensionMismatch, "f on A (x) B, omega on B (x) C and alpha in A must chain");
  try {
    if (f.exact && w.exact && x.exact) return remote_eval_as<Rational>(f, w, x);
    return remote_eval_as<double>(f, w, x);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RemoteEvalMismatch) throw;
    Outcome o;
    o.code = kExitRefuted;
    o.body = Json{{"verdict", "mismatch"}, {"violations", Json::array({e.what()})}};
    return o;
  }
}

// ---------------------------------------------------------------- teleport

template <class T>
Json report_json(const TeleportationReport<T>& r) {
  return Json{{"ok", r.ok},
              {"approximate", r.approximate},
              {"residual", io::to_json(r.residual)},
              {"max_scale", io::to_json(r.max_scale)},
              {"violations", strings(r.violations)}};
}

Outcome cmd_teleport(Context& ctx, const std::string& fa, const std::string& fb, const std::string& kind_name,
                     const std::string& cert_file) {
  AnyCom a = ctx.load_com(fa), b = ctx.load_com(fb);
  if (a.index() != b.index()) throw Error(ErrorCode::MixedKindUnsupported, "systems differ in cone kind");
  std::optional<Json> supplied;
  if (!cert_file.empty()) supplied = ctx.load_json(cert_file);
  Outcome o;
  if (is_exact(a)) {
    const auto& x = std::get<QCom>(a);
    const auto& y = std::get<QCom>(b);
    const CompositeKind kind = parse_composite_kind(kind_name.empty() ? "min" : kind_name);
    auto ab = make_composite(kind, x, y);
    auto ba = make_composite(kind, y, x);
    o.body["composite"] = composite_kind_name(kind);
    std::optional<TeleportationCertificate<Rational>> cert;
    if (supplied) {
      cert = io::certificate_from_json<Rational>(*supplied);
      o.body["mode"] = "verify";
    } else {
      auto search = find_teleportation(ab, ba);
      o.body["mode"] = "search";
      o.body["candidates_tried"] = search.candidates_tried;
      if (!search.note.empty()) o.body["note"] = search.note;
      cert = search.certificate;
    }
    if (!cert) {
      o.code = kExitRefuted;
      o.body["verdict"] = "no certificate";
      return o;
    }
    auto rep = verify_teleportation(*cert, ab, ba);
    o.body["certificate"] = io::certificate_to_json(*cert);
    o.body["verification"] = report_json(rep);
    o.code = rep.ok ? kExitVerified : kExitRefuted;
  } else {
    const auto& x = std::get<DCom>(a);
    const auto& y = std::get<DCom>(b);
    if (!kind_name.empty() && kind_name != "spatial")
      throw Error(ErrorCode::KindMismatch, "quantum systems compose spatially");
    auto ab = spatial_quantum_composite(x, y);
    auto ba = spatial_quantum_composite(y, x);
    o.body["composite"] = "spatial";
    TeleportationCertificate<double> cert;
    if (supplied) {
      cert = io::certificate_from_json<double>(*supplied);
      o.body["mode"] = "verify";
    } else {
      // The standard candidate: the maximally entangled state, r-hat its
      // inverse conditioning map and c = 1/d^2.
      const auto& px = x.states.factors();
      if (px.size() != 1 || y.states.factors() != px)
        throw Error(ErrorCode::UnsupportedKind, "no built-in candidate for these systems; pass --certificate");
      const Index d = px.front();
      const DVec omega = maximally_entangled_state(d);
      const DMat w = reshape<double>(omega, d * d, d * d);
      cert = make_teleportation_certificate<double>(omega, *inverse<double>(DMat(w.transpose())),
                                                    1.0 / static_cast<double>(d * d));
      o.body["mode"] = "standard candidate";
    }
    auto rep = verify_teleportation(cert, ab, ba);
    o.body["certificate"] = io::certificate_to_json(cert);
    o.body["verification"] = report_json(rep);
    o.code = rep.ok ? kExitVerified : kExitRefuted;
  }
  o.body["verdict"] = o.code == kExitVerified ? "teleports" : "certificate rejected";
  return o;
}

// ----------------------------------------------------------------- theories

struct Theory {
  std::vector<AnyCom> objects;
  std::string composite = "min";
  std::map<std::string, Json> structures;
};

Theory load_theory(Context& ctx, const std::string& source) {
  Theory t;
  if (io::is_builtin(source)) {
    t.objects.push_back(ctx.load_com(source));
    return t;
  }
  Json j = ctx.load_json(source);
  if (j.contains("state_cone")) {
    t.objects.push_back(io::com_from_json(j));
    return t;
  }
  const auto base = std::filesystem::path(source).parent_path();
  for (const auto& entry : j.at("objects")) {
    if (entry.is_string()) {
      const std::string s = entry.get<std::string>();
      t.objects.push_back(ctx.load_com(io::is_builtin(s) ? s : (base / s).string()));
    } else {
      t.objects.push_back(io::com_from_json(entry));
    }
  }
  if (j.contains("composite")) t.composite = j.at("composite").get<std::string>();
  if (j.contains("structures"))
    for (const auto& [label, s] : j.at("structures").items()) t.structures[label] = s;
  return t;
}

QStructure named_structure(const std::string& name, const QCom& a) {
  if (name == "builtin:classical") return classical_structure(a.dim());
  if (name == "builtin:gbit-rotation") return gbit_rotation_structure();
  if (name == "builtin:gbit-reflection") return gbit_reflection_structure();
  throw Error(ErrorCode::ParseError, "unknown structure \"" + name + "\"");
}

DStructure quantum_structure(const DCom& a) {
  if (a.states.factors().size() != 1) throw Error(ErrorCode::UnsupportedKind, "no built-in structure for " + a.label);
  return maximally_entangled_structure(a.states.hilbert_dim());
}

// ----------------------------------------------------------------- compact

Outcome cmd_compact_check(Context& ctx, const std::string& source, const std::string& kind_override) {
  Theory t = load_theory(ctx, source);
  const std::string kind_name = kind_override.empty() ? t.composite : kind_override;
  Outcome o;
  std::vector<QCom> exact;
  Json quantum = Json::array();
  bool closed = true;
  for (const auto& a : t.objects) {
    if (is_exact(a)) {
      exact.push_back(std::get<QCom>(a));
      continue;
    }
    const auto& q = std::get<DCom>(a);
    auto ab = spatial_quantum_composite(q, q);
    const Index d = q.states.hilbert_dim();
    const DVec omega = maximally_entangled_state(d);
    const DMat w = reshape<double>(omega, q.dim(), q.dim());
    auto cert = make_teleportation_certificate<double>(omega, *inverse<double>(DMat(w.transpose())),
                                                       1.0 / static_cast<double>(d * d));
    auto rep = verify_teleportation(cert, ab, ab);
    closed = closed && rep.ok;
    quantum.push_back(Json{{"label", q.label}, {"partner", q.label}, {"certified", rep.ok}, {"verification", report_json(rep)}});
  }
  Json objects = Json::array();
  if (!exact.empty()) {
    auto v = check_theory_compact_closed(exact, parse_composite_kind(kind_name));
    closed = closed && v.compact_closed;
    for (const auto& ob : v.objects) {
      Json e{{"label", ob.label}, {"certified", ob.certified}, {"attempts", strings(ob.attempts)}};
      if (ob.certified) {
        e["partner"] = ob.partner;
        e["through_partner"] = io::certificate_to_json(*ob.through_partner);
        e["partner_through"] = io::certificate_to_json(*ob.partner_through);
      }
      objects.push_back(e);
    }
  }
  for (auto& q : quantum) objects.push_back(q);
  o.body = Json{{"composite", kind_name}, {"objects", objects}, {"compact_closed", closed},
                {"verdict", closed ? "compact closed" : "not certified"}};
  o.code = closed ? kExitVerified : kExitRefuted;
  return o;
}

// --------------------------------------------------------------------- wsd

Outcome cmd_wsd(Context& ctx, const std::string& file, bool symmetric) {
  AnyCom a = ctx.load_com(file);
  Outcome o;
  o.body["symmetric_requested"] = symmetric;
  if (is_exact(a)) {
    const auto& c = std::get<QCom>(a);
    auto d = symmetric ? check_symmetric_self_duality(c) : check_weak_self_duality(c);
    auto strong = is_strongly_self_dual(c);
    o.body["strongly_self_dual"] = strong.strongly_self_dual;
    o.body["strong_detail"] = strong.detail;
    if (!d) {
      o.code = kExitRefuted;
      o.body["verdict"] = symmetric ? "not symmetrically self-dual" : "not weakly self-dual";
      return o;
    }
    auto in = form_inertia(*d);
    o.body["structure"] = io::structure_to_json(*d, c);
    o.body["inertia"] = Json{{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
  } else {
    const auto& c = std::get<DCom>(a);
    auto d = quantum_structure(c);
    auto strong = is_strongly_self_dual(c);
    o.body["strongly_self_dual"] = strong.strongly_self_dual;
    o.body["strong_detail"] = strong.detail;
    o.body["structure"] = io::structure_to_json(d, c);
    if (!verify_structure(d, c)) {
      o.code = kExitRefuted;
      o.body["verdict"] = "built-in structure failed verification";
      return o;
    }
  }
  o.body["verdict"] = symmetric ? "symmetrically self-dual" : "weakly self-dual";
  return o;
}

// ------------------------------------------------------------------ dagger

template <class T>
Json dagger_json(const DaggerVerdict<T>& v) {
  Json objects = Json::array();
  for (const auto& ob : v.objects) {
    Json e{{"label", ob.label},
           {"involutive", ob.involution.involutive},
           {"tau_identity", ob.involution.tau_identity},
           {"symmetric", ob.involution.symmetric},
           {"consistent", ob.involution.consistent},
           {"dagger_axiom_residual", io::to_json(ob.dagger_axiom_residual)}};
    if (ob.involution.witness) e["witness"] = io::mat_to_json<T>(*ob.involution.witness);
    objects.push_back(e);
  }
  return objects;
}

Outcome cmd_dagger(Context& ctx, const std::string& source) {
  Theory t = load_theory(ctx, source);
  std::vector<std::pair<QCom, QStructure>> exact;
  std::vector<std::pair<DCom, DStructure>> quantum;
  Json missing = Json::array();
  Json strong = Json::array();
  for (const auto& a : t.objects) {
    const std::string& label = io::label_of(a);
    auto given = t.structures.find(label);
    if (is_exact(a)) {
      const auto& c = std::get<QCom>(a);
      std::optional<QStructure> d;
      if (given != t.structures.end()) {
        d = given->second.is_string() ? named_structure(given->second.get<std::string>(), c)
                                      : io::structure_from_json<Rational>(given->second);
      } else {
        d = check_symmetric_self_duality(c);
        if (!d) d = check_weak_self_duality(c);
      }
      if (!d) {
        missing.push_back(label);
        continue;
      }
      if (auto rep = verify_structure(*d, c); !rep)
        throw Error(ErrorCode::InvalidStructure, label + ": " + (rep.violations.empty() ? "" : rep.violations[0]));
      strong.push_back(Json{{"label", label}, {"strongly_self_dual", is_strongly_self_dual(c).strongly_self_dual}});
      exact.emplace_back(c, *d);
    } else {
      const auto& c = std::get<DCom>(a);
      DStructure d = given != t.structures.end() && !given->second.is_string()
                         ? io::structure_from_json<double>(given->second)
                         : quantum_structure(c);
      strong.push_back(Json{{"label", label}, {"strongly_self_dual", is_strongly_self_dual(c).strongly_self_dual}});
      quantum.emplace_back(c, d);
    }
  }
  Outcome o;
  bool compact = missing.empty();
  Json objects = Json::array();
  if (!exact.empty()) {
    auto v = dagger_compactness_verdict(exact);
    compact = compact && v.dagger_compact;
    for (auto& e : dagger_json(v)) objects.push_back(e);
  }
  if (!quantum.empty()) {
    auto v = dagger_compactness_verdict(quantum);
    compact = compact && v.dagger_compact;
    for (auto& e : dagger_json(v)) objects.push_back(e);
  }
  o.body = Json{{"objects", objects},
                {"without_structure", missing},
                {"strong_self_duality", strong},
                {"dagger_compact", compact},
                {"verdict", compact ? "dagger compact" : "not dagger compact"}};
  o.code = compact ? kExitVerified : kExitRefuted;
  return o;
}

// ------------------------------------------------------------------- model

Outcome cmd_model(Context& ctx, const std::string& name, Index n, Index d, const std::string& file) {
  auto a = [&]() -> AnyCom {
    if (name == "classical") return classical(n);
    if (name == "quantum") return quantum(d);
    if (name == "gbit" || name == "pentagon" || name == "trivial" || name == "qubit") return io::builtin(name);
    if (name == "pauli") return from_mackey(pauli_fragment(), "pauli");
    if (name == "mackey") {
      if (file.empty()) throw Error(ErrorCode::ParseError, "model mackey needs a triple file");
      return from_mackey(io::mackey_from_json(ctx.load_json(file)), std::filesystem::path(file).stem().string());
    }
    throw Error(ErrorCode::ParseError, "unknown model \"" + name + "\"");
  }();
  Outcome o;
  const Json object = io::com_to_json(a);
  o.body = Json{{"model", name}, {"label", io::label_of(a)}, {"verdict", "produced"}};
  if (ctx.output.empty()) {
    o.body["object"] = object;
  } else {
    io::write_file(ctx.output, object.dump(2) + "\n");
    o.body["written"] = ctx.output;
    ctx.output.clear();
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Verification toolkit for convex operational models", "comcat"};
  app.fallthrough();
  app.require_subcommand(1);
  Context ctx;
  double tolerance = 0;
  app.add_option("--seed", ctx.seed, "Seed for randomized probes")->capture_default_str();
  app.add_option("--tolerance", tolerance, "Floating-point tolerance (psd models)");
  app.add_option("-o,--output", ctx.output, "Write the report (or produced object) to a file");

  std::string file, file_b, kind, cert, f_file, omega_file, alpha_file, model_name;
  bool symmetric = false;
  Index n = 2, d = 2;

  auto* validate = app.add_subcommand("validate", "Check the model axioms");
  validate->add_option("model", file, "Model file or builtin:NAME")->required();

  auto* tensor = app.add_subcommand("tensor", "Build and check a composite");
  tensor->add_option("--kind", kind, "min | max | spatial")->required();
  tensor->add_option("A", file)->required();
  tensor->add_option("B", file_b)->required();

  auto* remote = app.add_subcommand("remote-eval", "Compare remote evaluation with the composite functional");
  remote->add_option("--f", f_file, "Bipartite functional on A (x) B")->required();
  remote->add_option("--omega", omega_file, "Bipartite state on B (x) C")->required();
  remote->add_option("--alpha", alpha_file, "State of A")->required();

  auto* teleport = app.add_subcommand("teleport", "Search for or verify a teleportation certificate");
  teleport->add_option("A", file)->required();
  teleport->add_option("B", file_b)->required();
  teleport->add_option("--composite", kind, "min | max | spatial");
  teleport->add_option("--certificate", cert, "Verify this certificate instead of searching");

  auto* compact = app.add_subcommand("compact-check", "Certify compact closure of a theory");
  compact->add_option("theory", file, "Theory file or builtin:NAME")->required();
  compact->add_option("--composite", kind, "Override the theory's composite kind");

  auto* wsd = app.add_subcommand("wsd", "Search for a self-duality structure");
  wsd->add_option("model", file)->required();
  wsd->add_flag("--symmetric", symmetric, "Require a symmetric structure");

  auto* dagger = app.add_subcommand("dagger", "Dagger compactness verdict for a theory");
  dagger->add_option("theory", file)->required();

  auto* model = app.add_subcommand("model", "Emit a builtin model");
  model->add_option("name", model_name, "classical | quantum | gbit | pentagon | trivial | pauli | mackey")->required();
  model->add_option("triple", file, "Mackey triple file");
  model->add_option("--n", n, "Outcomes for classical")->capture_default_str();
  model->add_option("--d", d, "Hilbert dimension for quantum")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "comcat: " << e.what() << "\n";
    return kExitUsage;
  }

  const double saved_tolerance = numeric_tolerance();
  const std::uint64_t saved_seed = sampling_seed();
  if (app.count("--tolerance")) {
    if (!(tolerance > 0)) {
      err << "comcat: --tolerance must be positive\n";
      return kExitUsage;
    }
    set_numeric_tolerance(tolerance);
  }
  set_sampling_seed(ctx.seed);
  struct Restore {
    double tol;
    std::uint64_t seed;
    ~Restore() {
      set_numeric_tolerance(tol);
      set_sampling_seed(seed);
    }
  } restore{saved_tolerance, saved_seed};

  std::string command;
  Outcome outcome;
  try {
    if (*validate) {
      command = "validate";
      outcome = cmd_validate(ctx, file);
    } else if (*tensor) {
      command = "tensor";
      outcome = cmd_tensor(ctx, kind, file, file_b);
    } else if (*remote) {
      command = "remote-eval";
      outcome = cmd_remote_eval(ctx, f_file, omega_file, alpha_file);
    } else if (*teleport) {
      command = "teleport";
      outcome = cmd_teleport(ctx, file, file_b, kind, cert);
    } else if (*compact) {
      command = "compact-check";
      outcome = cmd_compact_check(ctx, file, kind);
    } else if (*wsd) {
      command = "wsd";
      outcome = cmd_wsd(ctx, file, symmetric);
    } else if (*dagger) {
      command = "dagger";
      outcome = cmd_dagger(ctx, file);
    } else {
      command = "model";
      outcome = cmd_model(ctx, model_name, n, d, file);
    }
  } catch (const Error& e) {
    err << "comcat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "comcat: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }

  Json body{{"command", command},
            {"inputs", ctx.inputs},
            {"seed", ctx.seed},
            {"tolerance", numeric_tolerance()},
            {"exit_code", outcome.code}};
  for (auto& [k, v] : outcome.body.items()) body[k] = v;
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json report{{"schema_version", io::kSchemaVersion}, {"body", body}, {"meta", {{"runtime_ms", ms}}}};
  const std::string text = report.dump(2) + "\n";
  try {
    if (ctx.output.empty()) {
      out << text;
    } else {
      io::write_file(ctx.output, text);
    }
  } catch (const Error& e) {
    err << "comcat: " << e.what() << "\n";
    return kExitUsage;
  }
  return outcome.code;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace comcat::cli
