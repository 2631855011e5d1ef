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
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace comcat {
namespace {

using testing::qm;
using testing::qv;

TEST(Models, Classical) {
  auto one = classical(1);
  EXPECT_EQ(one.dim(), 1);
  EXPECT_EQ(one.label, "trivial");
  EXPECT_EQ(trivial().unit, qv({1}));
  for (Index n : {2, 3, 4}) {
    auto c = classical(n);
    EXPECT_TRUE(com_violations(c).empty());
    EXPECT_TRUE(is_saturated(c));
    EXPECT_EQ(c.states.generators().size(), static_cast<std::size_t>(n));
    EXPECT_EQ(c.unit, QVec(QVec::Ones(n)));
    auto d = classical_structure(n);
    EXPECT_TRUE(verify_structure(d, c));
    EXPECT_EQ(d.gamma_hat(), QMat(QMat::Identity(n, n)));
  }
  EXPECT_THROW(classical(0), Error);
}

TEST(Models, QubitBlochBall) {
  auto q = quantum(2);
  EXPECT_TRUE(com_violations(q).empty());
  EXPECT_EQ(q.dim(), 4);
  EXPECT_NEAR(q.unit.dot(q.states.to_coords(CMat::Identity(2, 2) / 2.0)), 1.0, 1e-15);
  CMat zero = CMat::Zero(2, 2);
  zero(0, 0) = 1;
  const DVec z = q.states.to_coords(zero);
  EXPECT_TRUE(is_normalized_state(q, z));
  EXPECT_NEAR(q.states.min_eigenvalue(z), 0.0, 1e-15);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const CMat rho = q.states.to_matrix(testing::random_density(rng, q.states));
    const double bx = 2 * rho(0, 1).real(), by = -2 * rho(0, 1).imag(), bz = (rho(0, 0) - rho(1, 1)).real();
    EXPECT_LE(std::sqrt(bx * bx + by * by + bz * bz), 1.0 + 1e-12);
  }
  // Rank-one projectors sit on the boundary sphere.
  for (const auto& r : q.states.sample_rays(8)) {
    const CMat rho = q.states.to_matrix(r / q.unit.dot(r));
    EXPECT_NEAR((rho * rho - rho).norm(), 0.0, 1e-12);
  }
  EXPECT_THROW(quantum(1), Error);
}

TEST(Models, Gbit) {
  auto g = gbit();
  EXPECT_EQ(g.states.generators().size(), 4u);
  EXPECT_TRUE(is_saturated(g));
  std::vector<QVec> expected{qv({1, 0, 1}), qv({-1, 0, 1}), qv({0, 1, 1}), qv({0, -1, 1})};
  for (const auto& e : expected) {
    bool hit = false;
    for (const auto& f : g.effects.generators()) hit = hit || same_ray(e, f);
    EXPECT_TRUE(hit);
  }
  EXPECT_EQ(g.unit, qv({0, 0, 1}));
  for (const auto& s : g.states.generators()) EXPECT_EQ(g.unit.dot(s), 1);
}

TEST(Models, Pentagon) {
  auto p = pentagon();
  EXPECT_TRUE(com_violations(p).empty());
  EXPECT_EQ(p.states.generators().size(), 5u);
  EXPECT_EQ(p.effects.generators().size(), 5u);
  EXPECT_TRUE(check_weak_self_duality(p));
}

TEST(Mackey, IdentityTableIsClassicalBit) {
  MackeyTriple t{{"0", "1"}, {"s0", "s1"}, qm(2, 2, {1, 0, 0, 1})};
  auto a = from_mackey(t);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(com_violations(a).empty());
  EXPECT_TRUE(order_isomorphism(a, classical(2)));
}

TEST(Mackey, SingleStateIsTrivial) {
  MackeyTriple t{{"yes", "no"}, {"s"}, QMat(2, 1)};
  t.table << Rational(1, 3), Rational(2, 3);
  auto a = from_mackey(t);
  EXPECT_EQ(a.dim(), 1);
  EXPECT_TRUE(order_isomorphism(a, trivial()));
}

TEST(Mackey, DuplicateColumnsMerge) {
  MackeyTriple t{{"0", "1"}, {"a", "b", "a2"}, qm(2, 3, {1, 0, 1, 0, 1, 0})};
  auto a = from_mackey(t);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(a.states.generators().size(), 2u);
}

TEST(Mackey, Rejections) {
  MackeyTriple bad{{"0"}, {"s"}, QMat(1, 1)};
  bad.table(0, 0) = Rational(3, 2);
  EXPECT_THROW(from_mackey(bad), Error);
  MackeyTriple shape{{"0", "1"}, {"s"}, QMat(1, 1)};
  EXPECT_THROW(from_mackey(shape), Error);
  MackeyTriple zero{{"0"}, {"s"}, QMat::Zero(1, 1)};
  EXPECT_THROW(from_mackey(zero), Error);
}

TEST(Mackey, PauliFragment) {
  auto t = pauli_fragment();
  EXPECT_EQ(t.table.rows(), 4);
  EXPECT_EQ(t.table.cols(), 6);
  // Born rule: each outcome pair sums to one on every state.
  for (Index s = 0; s < 6; ++s) {
    EXPECT_EQ(t.table(0, s) + t.table(1, s), 1);
    EXPECT_EQ(t.table(2, s) + t.table(3, s), 1);
  }
  const Index oracle = rank<Rational>(t.table);
  EXPECT_EQ(oracle, 3);
  auto a = from_mackey(t, "pauli");
  EXPECT_EQ(a.dim(), oracle);
  EXPECT_TRUE(com_violations(a).empty());
  // The y eigenstates land on the centre; only the z and x ones are extreme.
  EXPECT_EQ(a.states.generators().size(), 4u);
  // The state cone is a square, but the z and x outcomes each vanish on a
  // single vertex: the effect cone is strictly inside the dual.
  EXPECT_FALSE(is_saturated(a));
  EXPECT_FALSE(order_isomorphism(a, gbit()));
  EXPECT_FALSE(match_rays(a.states.generators(), gbit().states.generators()).empty());
  for (const auto& e : a.effects.generators()) {
    int zeros = 0;
    for (const auto& x : a.states.generators()) zeros += e.dot(x) == 0;
    EXPECT_LE(zeros, 1);
  }
}

TEST(Mackey, RoundTrips) {
  for (const auto& a : {classical(2), classical(3), gbit(), pentagon()}) {
    auto back = from_mackey(to_mackey(a));
    EXPECT_EQ(back.dim(), a.dim());
    auto m = order_isomorphism(a, back);
    ASSERT_TRUE(m) << a.label;
    EXPECT_EQ(QVec(m->transpose() * back.unit), a.unit);
  }
}

TEST(OrderIsomorphism, Basics) {
  EXPECT_FALSE(order_isomorphism(classical(2), gbit()));
  EXPECT_FALSE(order_isomorphism(classical(3), gbit()));
  EXPECT_FALSE(order_isomorphism(gbit(), pentagon()));
  // A sheared copy of the square.
  auto g = gbit();
  QMat shear = qm(3, 3, {2, 1, 0, 0, 1, 0, 0, 0, 1});
  std::vector<QVec> gens;
  for (const auto& s : g.states.generators()) gens.push_back(shear * s);
  auto states = PolyhedralCone::from_generators(gens);
  QCom sheared{"sheared", states, states.dual(), g.unit};
  auto m = order_isomorphism(g, sheared);
  ASSERT_TRUE(m);
  for (const auto& s : g.states.generators()) EXPECT_TRUE(sheared.states.contains(QVec(*m * s)));
  EXPECT_EQ(QVec(m->transpose() * sheared.unit), g.unit);
}

TEST(RayMatching, SquareSymmetries) {
  const auto sq = gbit().states.generators();
  RayMatchOptions all;
  all.limit = 0;
  auto maps = match_rays(sq, sq, all);
  EXPECT_EQ(maps.size(), 8u);
  for (const auto& m : maps)
    for (std::size_t i = 0; i < sq.size(); ++i) EXPECT_TRUE(same_ray(QVec(m.map * sq[i]), sq[m.permutation[i]]));
  EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end(),
                             [](const RayMatch& a, const RayMatch& b) { return a.permutation < b.permutation; }));
}

TEST(RayMatching, SimplexSymmetriesAndOptions) {
  const auto tri = classical(3).states.generators();
  RayMatchOptions all;
  all.limit = 0;
  EXPECT_EQ(match_rays(tri, tri, all).size(), 6u);
  all.symmetric = true;
  for (const auto& m : match_rays(tri, tri, all)) EXPECT_EQ(m.map, QMat(m.map.transpose()));
  RayMatchOptions first;
  auto one = match_rays(tri, tri, first);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].map, QMat(QMat::Identity(3, 3)));
  RayMatchOptions never;
  never.accept = [](const QMat&) { return false; };
  never.limit = 0;
  EXPECT_TRUE(match_rays(tri, tri, never).empty());
}

TEST(RayMatching, MismatchedCounts) {
  EXPECT_TRUE(match_rays(gbit().states.generators(), pentagon().states.generators()).empty());
  // Four rays in R^3 that are not in convex position against the square.
  std::vector<QVec> kite{qv({1, 0, 1}), qv({0, 1, 1}), qv({-1, 0, 1}), qv({0, -2, 1})};
  RayMatchOptions all;
  all.limit = 0;
  EXPECT_EQ(match_rays(gbit().states.generators(), kite, all).size(), 8u);
}

}  // namespace
}  // namespace comcat
