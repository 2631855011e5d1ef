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
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace comcat {
namespace {

using io::Json;

struct CliResult {
  int code;
  Json report;
  std::string err;
};

CliResult comcat_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  Json report = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, report, err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "comcat_" + name; }

TEST(Io, RationalEncoding) {
  EXPECT_EQ(io::to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(io::to_json(Rational(5)), "5");
  EXPECT_EQ(io::scalar_from_json<Rational>(Json("-3/4")), Rational(-3, 4));
  EXPECT_EQ(io::scalar_from_json<Rational>(Json(7)), Rational(7));
  EXPECT_EQ(io::scalar_from_json<Rational>(Json(0.25)), Rational(1, 4));
  EXPECT_THROW(io::scalar_from_json<Rational>(Json::array()), Error);
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("3/06"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-0.05"), Rational(-1, 20));
  EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
  EXPECT_EQ(parse_rational("2e-3"), Rational(1, 500));
  for (const char* bad : {"", "abc", "1/0", "0x10", "1/-", "--1"}) EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Io, DoublesRoundTripExactly) {
  std::mt19937_64 rng(5);
  const DVec v = testing::random_dvec(rng, 50);
  const Json j = io::vec_to_json<double>(v);
  const DVec back = io::vec_from_json<double>(Json::parse(j.dump()));
  for (Index i = 0; i < v.size(); ++i) EXPECT_EQ(back(i), v(i));
}

TEST(Io, ModelsRoundTrip) {
  for (const std::string name : {"classical2", "classical3", "trivial", "gbit", "pentagon", "qubit", "quantum3"}) {
    const io::AnyCom a = io::builtin("builtin:" + name);
    const Json j = io::com_to_json(a);
    const io::AnyCom b = io::com_from_json(Json::parse(j.dump()));
    EXPECT_EQ(io::com_to_json(b).dump(), j.dump()) << name;
  }
  EXPECT_THROW(io::builtin("builtin:nonesuch"), Error);
}

TEST(Io, ConeFromFacets) {
  Json j = Json::parse(R"({"label":"sq","state_cone":{"kind":"polyhedral","facets":[[1,0,1],[-1,0,1],[0,1,1],[0,-1,1]]},
    "effect_cone":{"kind":"polyhedral","generators":[[1,0,1],[-1,0,1],[0,1,1],[0,-1,1]]},"unit":[0,0,1]})");
  auto a = std::get<QCom>(io::com_from_json(j));
  EXPECT_TRUE(a.states.same_cone(gbit().states));
}

TEST(Io, StructureAndCertificateRoundTrip) {
  auto g = gbit();
  auto d = gbit_rotation_structure();
  const Json sj = io::structure_to_json(d, g);
  EXPECT_FALSE(sj["verdicts"]["symmetric"].get<bool>());
  EXPECT_TRUE(sj["verdicts"]["verified"].get<bool>());
  auto back = io::structure_from_json<Rational>(sj);
  EXPECT_EQ(back.gamma(), d.gamma());
  EXPECT_EQ(back.f(), d.f());
  Json only_gamma{{"gamma", sj["gamma"]}};
  EXPECT_EQ(io::structure_from_json<Rational>(only_gamma).f(), d.f());

  auto c = classical(2);
  auto ab = min_tensor(c, c);
  auto cert = *find_teleportation(ab, ab).certificate;
  auto cb = io::certificate_from_json<Rational>(Json::parse(io::certificate_to_json(cert).dump()));
  EXPECT_EQ(cb.omega, cert.omega);
  EXPECT_EQ(cb.r_hat, cert.r_hat);
  EXPECT_EQ(cb.scale, cert.scale);
  EXPECT_EQ(cb.effect, cert.effect);
}

TEST(Io, MackeyRoundTrip) {
  auto t = pauli_fragment();
  auto back = io::mackey_from_json(io::mackey_to_json(t));
  EXPECT_EQ(back.table, t.table);
  EXPECT_EQ(back.states, t.states);
}

TEST(Io, Fnv1a) {
  EXPECT_EQ(io::fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(comcat_run({"dagger", "builtin:classical2"}).code, 0);
  auto wsd = comcat_run({"wsd", "builtin:gbit", "--symmetric"});
  EXPECT_EQ(wsd.code, 0);
  EXPECT_EQ(wsd.report["body"]["structure"]["gamma_hat"],
            io::mat_to_json<Rational>(gbit_reflection_structure().gamma_hat()));
  EXPECT_EQ(wsd.report["body"]["inertia"]["negative"], 1);

  const std::string broken = temp_path("broken.json");
  io::write_file(broken, R"({"label":"broken","state_cone":{"kind":"polyhedral","generators":[[1,0],[0,1]]},
    "effect_cone":{"kind":"polyhedral","generators":[[1,-1],[0,1]]},"unit":[1,1]})");
  auto v = comcat_run({"validate", broken});
  EXPECT_EQ(v.code, 1);
  EXPECT_FALSE(v.report["body"]["violations"].empty());

  const std::string lined = temp_path("lined.json");
  io::write_file(lined, R"({"state_cone":{"kind":"polyhedral","generators":[[1,0],[-1,0],[0,1]]},
    "effect_cone":{"kind":"polyhedral","generators":[[0,1]]},"unit":[0,1]})");
  EXPECT_EQ(comcat_run({"validate", lined}).code, 1);

  EXPECT_EQ(comcat_run({"validate", temp_path("missing.json")}).code, 2);
  const std::string garbage = temp_path("garbage.json");
  io::write_file(garbage, "{ not json");
  EXPECT_EQ(comcat_run({"validate", garbage}).code, 2);
  EXPECT_EQ(comcat_run({"frobnicate"}).code, 2);
  EXPECT_EQ(comcat_run({}).code, 2);
  EXPECT_EQ(comcat_run({"--tolerance", "-1", "validate", "builtin:qubit"}).code, 2);
  EXPECT_EQ(comcat_run({"tensor", "--kind", "spatial", "builtin:gbit", "builtin:gbit"}).code, 2);
}

TEST(Cli, TeleportAndTheories) {
  auto c = comcat_run({"teleport", "builtin:classical2", "builtin:classical2", "--composite", "min"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report["body"]["certificate"]["scale"], "1/2");
  auto q = comcat_run({"teleport", "builtin:qubit", "builtin:qubit"});
  EXPECT_EQ(q.code, 0);
  EXPECT_NEAR(q.report["body"]["verification"]["max_scale"].get<double>(), 0.25, 1e-9);
  EXPECT_EQ(comcat_run({"teleport", "builtin:classical2", "builtin:trivial"}).code, 1);

  const std::string cert = temp_path("half.json");
  Json j = c.report["body"]["certificate"];
  j["scale"] = "3/4";
  io::write_file(cert, j.dump());
  EXPECT_EQ(comcat_run({"teleport", "builtin:classical2", "builtin:classical2", "--certificate", cert}).code, 1);

  const std::string theory = temp_path("theory.json");
  io::write_file(theory, R"({"objects":["builtin:gbit"],"composite":"max",
    "structures":{"gbit":"builtin:gbit-rotation"}})");
  auto rot = comcat_run({"dagger", theory});
  EXPECT_EQ(rot.code, 1);
  EXPECT_FALSE(rot.report["body"]["objects"][0]["involutive"].get<bool>());
  io::write_file(theory, R"({"objects":["builtin:gbit"],"structures":{"gbit":"builtin:gbit-reflection"}})");
  EXPECT_EQ(comcat_run({"dagger", theory}).code, 0);
  io::write_file(theory, R"({"objects":["builtin:classical2","builtin:classical3"],"composite":"min"})");
  EXPECT_EQ(comcat_run({"compact-check", theory}).code, 0);
  EXPECT_EQ(comcat_run({"dagger", theory}).code, 0);
  EXPECT_EQ(comcat_run({"compact-check", "builtin:gbit", "--composite", "min"}).code, 1);
  EXPECT_EQ(comcat_run({"dagger", "builtin:qubit"}).code, 0);
}

TEST(Cli, ModelsAndTensor) {
  const std::string trit = temp_path("trit.json");
  EXPECT_EQ(comcat_run({"model", "classical", "--n", "3", "-o", trit}).code, 0);
  auto a = std::get<QCom>(io::com_from_json(io::parse(io::read_file(trit), trit)));
  EXPECT_TRUE(a.states.same_cone(classical(3).states));
  auto v = comcat_run({"validate", trit});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(v.report["body"]["saturated"].get<bool>());

  const std::string triple = temp_path("pauli_triple.json");
  io::write_file(triple, io::mackey_to_json(pauli_fragment()).dump());
  auto m = comcat_run({"model", "mackey", triple});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.report["body"]["object"]["dim"], 3);

  auto t = comcat_run({"tensor", "--kind", "max", "builtin:gbit", "builtin:gbit"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.report["body"]["object"]["state_cone"]["generators"].size(), 24u);
  EXPECT_EQ(comcat_run({"model", "quantum", "--d", "2"}).report["body"]["object"]["dim"], 4);
}

TEST(Cli, RemoteEval) {
  const std::string f = temp_path("f.json"), w = temp_path("w.json"), x = temp_path("x.json");
  io::write_file(f, R"({"dims":[2,2],"values":[1,0,0,1]})");
  io::write_file(w, R"({"dims":[2,2],"values":["1/2",0,0,"1/2"]})");
  io::write_file(x, R"({"values":["1/3","2/3"]})");
  auto r = comcat_run({"remote-eval", "--f", f, "--omega", w, "--alpha", x});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["body"]["value"], Json::parse(R"(["1/6","1/3"])"));
  EXPECT_EQ(r.report["body"]["residual"], "0");
  io::write_file(x, R"({"values":["1/3","2/3","0"]})");
  EXPECT_EQ(comcat_run({"remote-eval", "--f", f, "--omega", w, "--alpha", x}).code, 2);
}

TEST(Cli, Determinism) {
  const std::vector<std::vector<std::string>> suite{
      {"dagger", "builtin:qubit"}, {"wsd", "builtin:pentagon"}, {"validate", "builtin:qubit"},
      {"teleport", "builtin:qubit", "builtin:qubit"}, {"compact-check", "builtin:classical2"}};
  for (const auto& args : suite) {
    auto a = comcat_run(args), b = comcat_run(args);
    EXPECT_EQ(a.report["body"].dump(), b.report["body"].dump());
    EXPECT_EQ(a.report["body"]["seed"], 0x5eed);
    std::vector<std::string> seeded{"--seed", "99"};
    seeded.insert(seeded.end(), args.begin(), args.end());
    auto c = comcat_run(seeded);
    EXPECT_EQ(c.report["body"]["seed"], 99);
    EXPECT_EQ(c.report["body"]["verdict"], a.report["body"]["verdict"]);
    EXPECT_EQ(c.code, a.code);
  }
}

}  // namespace
}  // namespace comcat
