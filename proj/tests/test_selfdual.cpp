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
#include "test_util.hpp"

#include <gtest/gtest.h>

namespace comcat {
namespace {

using testing::qm;
using testing::qv;

QMat quarter_turn() { return qm(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 1}); }

bool maps_rays_onto(const QMat& m, const std::vector<QVec>& from, const std::vector<QVec>& to) {
  for (const auto& s : from) {
    bool hit = false;
    for (const auto& t : to) hit = hit || same_ray(QVec(m * s), t);
    if (!hit) return false;
  }
  return from.size() == to.size();
}

TEST(IsomorphismState, Classical) {
  auto c = classical(2);
  QVec w = qv({1, 0, 0, 1}) / 2;
  EXPECT_TRUE(verify_isomorphism_state<Rational>(w, c));
  EXPECT_EQ(reshape<Rational>(w, 2, 2).transpose(), QMat(QMat::Identity(2, 2) / 2));
  auto prod = verify_isomorphism_state<Rational>(qv({1, 1, 1, 1}) / 4, c);
  EXPECT_FALSE(prod);
  ASSERT_FALSE(prod.violations.empty());
  EXPECT_NE(prod.violations[0].find("rank 1"), std::string::npos);
}

TEST(IsomorphismState, QubitBell) {
  auto r = verify_isomorphism_state<double>(maximally_entangled_state(2), quantum(2));
  EXPECT_TRUE(r);
  EXPECT_TRUE(r.approximate);
}

TEST(SelfDuality, WeakSearch) {
  auto c = classical(3);
  auto dc = check_weak_self_duality(c);
  ASSERT_TRUE(dc);
  EXPECT_TRUE(verify_structure(*dc, c));
  QMat hat = dc->gamma_hat();
  for (Index i = 0; i < 3; ++i) {
    int nonzero = 0;
    for (Index j = 0; j < 3; ++j) {
      EXPECT_GE(hat(i, j), 0);
      nonzero += hat(i, j) != 0;
    }
    EXPECT_EQ(nonzero, 1);
  }

  auto g = gbit();
  auto dg = check_weak_self_duality(g);
  ASSERT_TRUE(dg);
  EXPECT_TRUE(maps_rays_onto(dg->gamma_hat(), g.effects.generators(), g.states.generators()));
  EXPECT_TRUE(verify_structure(*dg, g));

  auto p = pentagon();
  auto dp = check_weak_self_duality(p);
  ASSERT_TRUE(dp);
  EXPECT_TRUE(maps_rays_onto(dp->gamma_hat(), p.effects.generators(), p.states.generators()));
  EXPECT_TRUE(verify_structure(*dp, p));
}

TEST(SelfDuality, TriangularPrismIsNotWeaklySelfDual) {
  // Triangle x segment: 6 vertices, 5 facets. Ray counts differ, so no
  // order isomorphism exists.
  std::vector<QVec> rays;
  for (auto t : {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})})
    for (long s : {0, 1}) {
      QVec v(4);
      v << t(0), t(1), t(2), s;
      rays.push_back(v);
    }
  for (auto& r : rays) r(2) += 0;
  auto states = PolyhedralCone::from_generators(rays);
  QCom prism{"prism", states, states.dual(), states.dual().interior_point()};
  EXPECT_TRUE(com_violations(prism).empty());
  EXPECT_FALSE(check_weak_self_duality(prism));
}

TEST(SelfDuality, SymmetricSearch) {
  auto c = classical(2);
  auto dc = check_symmetric_self_duality(c);
  ASSERT_TRUE(dc);
  EXPECT_EQ(dc->gamma_symmetry_residual(), 0);
  auto g = gbit();
  auto dg = check_symmetric_self_duality(g);
  ASSERT_TRUE(dg);
  QMat hat = dg->gamma_hat();
  EXPECT_EQ(hat, QMat(hat.transpose()));
  EXPECT_TRUE(maps_rays_onto(hat, g.effects.generators(), g.states.generators()));
  EXPECT_EQ(form_inertia(*dg).negative, 1);
  EXPECT_THROW(check_weak_self_duality(quantum(2)), Error);
}

TEST(SelfDuality, QubitBellFormIsSymmetric) {
  auto d = maximally_entangled_structure(2);
  PsdCone pair({2, 2});
  const CMat p = pair.to_matrix(d.gamma());
  std::mt19937_64 rng(1);
  auto q = quantum(2);
  for (int t = 0; t < 10; ++t) {
    DVec a = testing::random_dvec(rng, 4), b = testing::random_dvec(rng, 4);
    EXPECT_NEAR((p * pair.to_matrix(kron<double>(a, b))).trace().real(),
                (p * pair.to_matrix(kron<double>(b, a))).trace().real(), 1e-12);
  }
  EXPECT_LE(d.gamma_symmetry_residual(), 1e-12);
}

TEST(CanonicalAdjoint, IdentityAndNot) {
  auto d = classical_structure(2);
  EXPECT_EQ(canonical_adjoint<Rational>(QMat::Identity(2, 2), d, d).value, QMat::Identity(2, 2));
  QMat flip = qm(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(canonical_adjoint<Rational>(flip, d, d).value, flip);
  auto r = gbit_rotation_structure();
  EXPECT_EQ(canonical_adjoint<Rational>(QMat::Identity(3, 3), r, r).value, QMat::Identity(3, 3));
}

TEST(CanonicalAdjoint, QubitChannelMatchesKrausOracle) {
  auto d = maximally_entangled_structure(2);
  auto q = quantum(2);
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  std::vector<CMat> kraus(2, CMat(2, 2));
  for (auto& k : kraus)
    for (Index i = 0; i < 4; ++i) k.data()[i] = {g(rng), g(rng)};
  auto apply = [&](const std::function<CMat(const CMat&)>& map) {
    DMat m(4, 4);
    for (Index c = 0; c < 4; ++c) m.col(c) = q.states.to_coords(map(q.states.to_matrix(DVec::Unit(4, c))));
    return m;
  };
  const DMat phi = apply([&](const CMat& x) {
    CMat y = CMat::Zero(2, 2);
    for (const auto& k : kraus) y += k * x * k.adjoint();
    return y;
  });
  const DMat oracle = apply([&](const CMat& x) {
    CMat y = CMat::Zero(2, 2);
    for (const auto& k : kraus) y += k.transpose() * x * k.conjugate();
    return y;
  });
  auto adj = canonical_adjoint<double>(phi, d, d);
  EXPECT_LT((adj.value - oracle).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE(adj.residual, 1e-12);
}

TEST(Tau, Examples) {
  auto c = classical(2);
  auto tc = tau(classical_structure(2), c);
  EXPECT_TRUE(tc.identity);
  EXPECT_TRUE(tc.automorphism);

  auto g = gbit();
  auto tr = tau(gbit_rotation_structure(), g);
  EXPECT_FALSE(tr.identity);
  EXPECT_TRUE(tr.automorphism);
  QMat t = tr.tau;
  EXPECT_TRUE(t == quarter_turn() || t == QMat(quarter_turn().transpose()));
  EXPECT_EQ(QMat(t * t * t * t), QMat::Identity(3, 3));

  auto tf = tau(gbit_reflection_structure(), g);
  EXPECT_TRUE(tf.identity);
}

TEST(DoubleDual, Examples) {
  auto d = classical_structure(3);
  std::mt19937_64 rng(3);
  QMat phi = testing::random_qmat(rng, 3, 3);
  EXPECT_TRUE(double_dual_check(phi, d, d).involutive);

  auto r = gbit_rotation_structure();
  EXPECT_TRUE(double_dual_check<Rational>(QMat::Identity(3, 3), r, r).involutive);

  QMat proj = qm(3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 1});
  auto rep = double_dual_check(proj, r, r);
  EXPECT_FALSE(rep.involutive);
  EXPECT_EQ(rep.residual, 0);
  const QMat t = r.tau();
  EXPECT_EQ(rep.double_dual, QMat(t.inverse() * proj * t));
  EXPECT_EQ(rep.double_dual, qm(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST(InvolutionReport, BuiltinStructures) {
  auto check = [](const auto& rep, bool expected) {
    EXPECT_EQ(rep.involutive, expected);
    EXPECT_EQ(rep.tau_identity, expected);
    EXPECT_EQ(rep.symmetric, expected);
    EXPECT_TRUE(rep.consistent);
  };
  check(involution_report(classical_structure(2)), true);
  check(involution_report(gbit_reflection_structure()), true);
  auto rot = involution_report(gbit_rotation_structure());
  check(rot, false);
  ASSERT_TRUE(rot.witness);
  auto r = gbit_rotation_structure();
  EXPECT_NE(double_dual_check(*rot.witness, r, r).double_dual, *rot.witness);
  check(involution_report(maximally_entangled_structure(2)), true);
}

TEST(Counit, AllBuiltinStructures) {
  for (const auto& d : {classical_structure(2), classical_structure(3), gbit_rotation_structure(),
                        gbit_reflection_structure()}) {
    auto rep = counit_dual_check(d);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.residual, 0);
  }
  auto q = counit_dual_check(maximally_entangled_structure(2));
  EXPECT_LE(q.residual, 1e-10);
}

TEST(Dagger, Verdicts) {
  std::vector<std::pair<QCom, QStructure>> classical_theory{{classical(2), classical_structure(2)},
                                                             {classical(3), classical_structure(3)}};
  EXPECT_TRUE(dagger_compactness_verdict(classical_theory).dagger_compact);
  EXPECT_FALSE(dagger_compactness_verdict<Rational>({{gbit(), gbit_rotation_structure()}}).dagger_compact);
  EXPECT_TRUE(dagger_compactness_verdict<Rational>({{gbit(), gbit_reflection_structure()}}).dagger_compact);
  auto qv = dagger_compactness_verdict<double>({{quantum(2), maximally_entangled_structure(2)}});
  EXPECT_TRUE(qv.dagger_compact);
  EXPECT_LE(qv.objects[0].dagger_axiom_residual, 1e-10);
}

TEST(StrongSelfDuality, Predicates) {
  EXPECT_TRUE(is_strongly_self_dual(classical(2)).strongly_self_dual);
  EXPECT_TRUE(is_strongly_self_dual(classical(3)).strongly_self_dual);
  EXPECT_TRUE(is_strongly_self_dual(quantum(2)).strongly_self_dual);
  EXPECT_FALSE(is_strongly_self_dual(gbit()).strongly_self_dual);

  EXPECT_TRUE(is_positive_definite_form(classical_structure(3)));
  EXPECT_FALSE(is_positive_definite_form(gbit_reflection_structure()));
  EXPECT_FALSE(is_positive_definite_form(gbit_rotation_structure()));
  Inertia in = form_inertia(gbit_reflection_structure());
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.positive, 2);
  // The Choi form carries the transpose and is therefore indefinite even
  // though the trace form makes the qubit strongly self-dual.
  EXPECT_EQ(form_inertia(maximally_entangled_structure(2)).negative, 1);
}

TEST(MaximallyEntangled, Normalization) {
  auto q = quantum(2);
  auto d = maximally_entangled_structure(2);
  EXPECT_NEAR(d.gamma().dot(kron<double>(q.unit, q.unit)), 1.0, 1e-12);
  DVec marginal = d.gamma_hat() * q.unit;
  EXPECT_LT((q.states.to_matrix(marginal) - CMat::Identity(2, 2) / 2.0).norm(), 1e-12);
  EXPECT_LE(d.inverse_residual(), 1e-10);
  EXPECT_TRUE(tau(d, q).identity);
  auto d3 = maximally_entangled_structure(3);
  EXPECT_LE(d3.inverse_residual(), 1e-10);
  EXPECT_TRUE(involution_report(d3).consistent);
}

// The inverse Choi map rho -> T_rho with <x|T_rho(s) y> = d Tr(rho (|y><x| (x) s^T))
// recovers a channel T from R_T = (T (x) 1) P. The factor d is what makes f = d^2 gamma.
TEST(MaximallyEntangled, InverseChoiScaling) {
  const Index d = 2;
  std::mt19937_64 rng(44);
  std::normal_distribution<double> g;
  CMat k(d, d);
  for (Index i = 0; i < d * d; ++i) k.data()[i] = {g(rng), g(rng)};
  auto channel = [&](const CMat& x) { return CMat(k * x * k.adjoint()); };
  PsdCone pair({d, d});
  const CMat p = pair.to_matrix(maximally_entangled_state(d));
  CMat r = CMat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      CMat eij = CMat::Zero(d, d);
      eij(i, j) = 1;
      CMat t = channel(eij);
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b)
          for (Index c = 0; c < d; ++c)
            for (Index e = 0; e < d; ++e) {
              // (T (x) 1) applied to |i c><j e| terms of P.
              r(a * d + c, b * d + e) += t(a, b) * p(i * d + c, j * d + e);
            }
    }
  CMat s(d, d);
  for (Index i = 0; i < d * d; ++i) s.data()[i] = {g(rng), g(rng)};
  const CMat expected = channel(s);
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      CMat yx = CMat::Zero(d, d);
      yx(y, x) = 1;
      CMat op(d * d, d * d);
      const CMat st = s.transpose();
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) op.block(i * d, j * d, d, d) = yx(i, j) * st;
      const std::complex<double> val = static_cast<double>(d) * (r * op).trace();
      EXPECT_LT(std::abs(val - expected(x, y)), 1e-10);
    }
}

TEST(SelfDualityProperty, FoundStructuresSatisfyTheInvariants) {
  std::vector<std::pair<QCom, QStructure>> all{{classical(2), classical_structure(2)},
                                               {classical(3), classical_structure(3)},
                                               {gbit(), gbit_rotation_structure()},
                                               {gbit(), gbit_reflection_structure()}};
  for (const auto& a : {classical(3), gbit(), pentagon()}) {
    if (auto d = check_weak_self_duality(a)) all.emplace_back(a, *d);
    if (auto d = check_symmetric_self_duality(a)) all.emplace_back(a, *d);
  }
  for (const auto& [a, d] : all) {
    EXPECT_TRUE(verify_structure(d, a)) << a.label;
    EXPECT_EQ(d.inverse_residual(), 0);
    EXPECT_TRUE(tau(d, a).automorphism);
    EXPECT_TRUE(counit_dual_check(d).ok);
    EXPECT_TRUE(involution_report(d).consistent) << a.label;
    // Swapping then conditioning equals transposing the conditioning matrix.
    const Index n = d.dim();
    EXPECT_EQ(reshape<Rational>(swap_bipartite<Rational>(d.gamma(), n, n), n, n).transpose(),
              QMat(d.gamma_hat().transpose()));
  }
}

}  // namespace
}  // namespace comcat
