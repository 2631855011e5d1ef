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

#include "comcat/cone.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace comcat {
namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

std::vector<QVec> square_rays() {
  return {qv({1, 1, 1}), qv({1, -1, 1}), qv({-1, 1, 1}), qv({-1, -1, 1})};
}

std::vector<QVec> unit_vectors(Index n) {
  std::vector<QVec> out;
  for (Index i = 0; i < n; ++i) {
    QVec e = QVec::Zero(n);
    e(i) = 1;
    out.push_back(e);
  }
  return out;
}

TEST(PolyhedralCone, OrthantFromIdentity) {
  auto c = PolyhedralCone::from_generators(unit_vectors(2));
  ASSERT_EQ(c.facets().size(), 2u);
  EXPECT_TRUE(c.contains(qv({1, 2})));
  EXPECT_FALSE(c.contains(qv({1, -1})));
  EXPECT_EQ(c.violated_facet(qv({1, -1})), std::optional<std::size_t>(0));
  EXPECT_TRUE(c.dual().same_cone(c));
  EXPECT_EQ(c.interior_point(), qv({1, 1}));
}

TEST(PolyhedralCone, LineIsNotPointed) {
  try {
    PolyhedralCone::from_generators({qv({1, 1}), qv({-1, 1}), qv({1, -1}), qv({-1, -1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPointed);
  }
}

TEST(PolyhedralCone, FlatSetIsNotGenerating) {
  try {
    PolyhedralCone::from_generators({qv({1, 0, 0}), qv({0, 1, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGenerating);
  }
}

TEST(PolyhedralCone, RaggedInputIsRejected) {
  try {
    PolyhedralCone::from_generators({qv({1, 0}), qv({0, 1, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(PolyhedralCone, RedundantAndDuplicateRaysDropped) {
  auto gens = square_rays();
  gens.push_back(qv({0, 0, 1}));
  gens.push_back(qv({2, 2, 2}));
  gens.push_back(qv({0, 0, 0}));
  auto c = PolyhedralCone::from_generators(gens);
  EXPECT_EQ(c.generators().size(), 4u);
}

// Oracle: for the square cone the facet through two rays is their cross
// product, oriented towards the remaining rays. Only adjacent pairs qualify.
TEST(PolyhedralCone, SquareFacetsMatchCrossProductOracle) {
  auto rays = square_rays();
  auto c = PolyhedralCone::from_generators(rays);
  std::set<std::vector<Rational>> expected;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      const QVec& a = rays[i];
      const QVec& b = rays[j];
      QVec h(3);
      h << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
      bool pos = false, neg = false;
      for (const auto& r : rays) {
        Rational v = h.dot(r);
        pos |= v > 0;
        neg |= v < 0;
      }
      if (pos && neg) continue;
      if (neg) h = -h;
      QVec p = primitive(h);
      expected.insert({p(0), p(1), p(2)});
    }
  ASSERT_EQ(expected.size(), 4u);
  std::set<std::vector<Rational>> got;
  for (const auto& h : c.facets()) got.insert({h(0), h(1), h(2)});
  EXPECT_EQ(got, expected);
  for (const auto& h : c.facets()) {
    int tight = 0;
    for (const auto& g : c.generators()) tight += h.dot(g) == 0;
    EXPECT_EQ(tight, 2);
  }
  EXPECT_EQ(c.interior_point(), qv({0, 0, 4}));
}

std::vector<QVec> random_rational_cone(std::mt19937_64& rng, Index n, int rays) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<QVec> gens;
  for (int k = 0; k < rays; ++k) {
    QVec g(n);
    for (Index i = 0; i + 1 < n; ++i) g(i) = Rational(num(rng), den(rng));
    g(n - 1) = Rational(4 + std::abs(num(rng)), den(rng));
    gens.push_back(g);
  }
  return gens;
}

void check_cone_invariants(const PolyhedralCone& c) {
  const Index n = c.dim();
  for (const auto& g : c.generators()) EXPECT_TRUE(c.contains(g));
  auto d = c.dual();
  for (const auto& h : c.facets()) EXPECT_TRUE(d.contains(h));
  QVec x = c.interior_point();
  for (const auto& h : c.facets()) EXPECT_GT(h.dot(x), 0);
  for (const auto& h : c.facets()) {
    QMat tight(0, n);
    for (const auto& g : c.generators())
      if (h.dot(g) == 0) {
        tight.conservativeResize(tight.rows() + 1, n);
        tight.row(tight.rows() - 1) = g.transpose();
      }
    EXPECT_EQ(rank<Rational>(tight), n - 1);
  }
  EXPECT_TRUE(d.dual().same_cone(c));
  auto rebuilt = PolyhedralCone::from_generators(c.facets());
  EXPECT_TRUE(rebuilt.dual().same_cone(c));
}

TEST(PolyhedralConeProperty, RandomConesAreConsistent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 3 + trial % 2;
    auto gens = random_rational_cone(rng, n, 4 + trial % 5);
    std::optional<PolyhedralCone> c;
    try {
      c = PolyhedralCone::from_generators(gens);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotGenerating);
      continue;
    }
    check_cone_invariants(*c);
    for (const auto& g : gens) EXPECT_TRUE(c->contains(g));
  }
}

TEST(PolyhedralConeProperty, OrthantsAreSelfDual) {
  for (Index n = 1; n <= 5; ++n) {
    auto c = PolyhedralCone::from_generators(unit_vectors(n));
    EXPECT_EQ(c.facets().size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(c.dual().same_cone(c));
    check_cone_invariants(c);
  }
}

TEST(PsdCone, MembershipByEigenvalues) {
  auto c = PsdCone::hermitian(2);
  CMat m(2, 2);
  m << 1, 2, 2, 1;
  DVec x = c.to_coords(m);
  EXPECT_FALSE(c.contains(x));
  EXPECT_NEAR(c.min_eigenvalue(x), -1.0, 1e-12);
  EXPECT_NEAR(c.max_eigenvalue(x), 3.0, 1e-12);
  EXPECT_TRUE(c.contains(c.interior_point()));
  EXPECT_TRUE(c.dual().same_cone(c));
}

TEST(PsdCone, CoordinatesMakeTracePairingEuclidean) {
  auto c = PsdCone::hermitian(3);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    DVec x(9), y(9);
    for (Index i = 0; i < 9; ++i) {
      x(i) = g(rng);
      y(i) = g(rng);
    }
    CMat a = c.to_matrix(x), b = c.to_matrix(y);
    EXPECT_LT((a - a.adjoint()).norm(), 1e-12);
    EXPECT_NEAR((a * b).trace().real(), x.dot(y), 1e-10);
    EXPECT_LT((c.to_coords(a) - x).norm(), 1e-12);
  }
}

TEST(PsdCone, QubitBasisIsPauliScaled) {
  auto c = PsdCone::hermitian(2);
  DVec e = DVec::Zero(4);
  e(3) = std::sqrt(2.0);
  CMat y = c.to_matrix(e);
  EXPECT_NEAR(y(0, 1).imag(), -1.0, 1e-15);
  EXPECT_NEAR(y(1, 0).imag(), 1.0, 1e-15);
  DMat t = transpose_in_coords(2);
  CMat yt = c.to_matrix(t * e);
  EXPECT_LT((yt - y.transpose()).norm(), 1e-15);
}

TEST(PsdCone, SampleRaysArePureAndDeterministic) {
  PsdCone c({2, 2});
  auto a = c.sample_rays(10, 3);
  auto b = c.sample_rays(10, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_NEAR(c.max_eigenvalue(a[i]), 1.0, 1e-12);
    EXPECT_NEAR(c.min_eigenvalue(a[i]), 0.0, 1e-12);
  }
}

TEST(PsdCone, ProductCoordinatesAreKroneckerOfFactors) {
  auto q = PsdCone::hermitian(2);
  PsdCone qq({2, 2});
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  DVec x(4), y(4);
  for (Index i = 0; i < 4; ++i) {
    x(i) = g(rng);
    y(i) = g(rng);
  }
  CMat a = q.to_matrix(x), b = q.to_matrix(y);
  CMat ab(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) ab.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  EXPECT_LT((qq.to_matrix(kron<double>(x, y)) - ab).norm(), 1e-12);
}

}  // namespace
}  // namespace comcat
