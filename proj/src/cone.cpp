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

#include "comcat/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace comcat {

namespace {

struct LexLess {
  bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

std::vector<QVec> sorted_primitives(const std::vector<QVec>& vs) {
  std::vector<QVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(primitive(v));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// Double description: the facets of cone(processed gens) are the extreme rays
// of its dual, refined one generator at a time. Each facet keeps the set of
// processed generators it vanishes on for the combinatorial adjacency test.
struct DdFacet {
  QVec h;
  std::vector<std::size_t> tight;
};

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<QVec> enumerate_facets(const std::vector<QVec>& gens, Index dim) {
  if (dim == 1) {
    bool pos = std::any_of(gens.begin(), gens.end(), [](const QVec& g) { return g(0) > 0; });
    QVec h(1);
    h(0) = pos ? 1 : -1;
    return {h};
  }
  // Seed with a basis among the generators; the simplicial cone's facets are
  // the rows of the inverse.
  std::vector<std::size_t> basis;
  {
    QMat acc(0, dim);
    for (std::size_t i = 0; i < gens.size() && static_cast<Index>(basis.size()) < dim; ++i) {
      QMat next(acc.rows() + 1, dim);
      next << acc, gens[i].transpose();
      if (rank<Rational>(next) > acc.rows()) {
        acc = next;
        basis.push_back(i);
      }
    }
    if (static_cast<Index>(basis.size()) < dim)
      throw Error(ErrorCode::NotGenerating, "generators span a proper subspace");
  }
  QMat b(dim, dim);
  for (Index k = 0; k < dim; ++k) b.col(k) = gens[basis[static_cast<std::size_t>(k)]];
  const QMat inv = *inverse<Rational>(b);
  std::vector<DdFacet> facets;
  for (Index k = 0; k < dim; ++k) {
    DdFacet f{primitive(QVec(inv.row(k).transpose())), {}};
    for (Index j = 0; j < dim; ++j)
      if (j != k) f.tight.push_back(basis[static_cast<std::size_t>(j)]);
    std::sort(f.tight.begin(), f.tight.end());
    facets.push_back(std::move(f));
  }
  std::vector<bool> processed(gens.size(), false);
  for (auto i : basis) processed[i] = true;

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    if (processed[gi]) continue;
    processed[gi] = true;
    const QVec& g = gens[gi];
    std::vector<Rational> val(facets.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      val[k] = facets[k].h.dot(g);
      if (val[k] > 0) pos.push_back(k);
      else if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < facets.size(); ++k)
        if (val[k] == 0) facets[k].tight.push_back(gi);
      continue;
    }
    std::vector<DdFacet> next;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if (val[k] < 0) continue;
      DdFacet f = facets[k];
      if (val[k] == 0) f.tight.push_back(gi);
      next.push_back(std::move(f));
    }
    for (auto p : pos)
      for (auto q : neg) {
        auto common = intersect(facets[p].tight, facets[q].tight);
        if (static_cast<Index>(common.size()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < facets.size() && adjacent; ++k)
          if (k != p && k != q && subset_of(common, facets[k].tight)) adjacent = false;
        if (!adjacent) continue;
        QVec h = val[p] * facets[q].h - val[q] * facets[p].h;
        common.push_back(gi);
        next.push_back(DdFacet{primitive(h), std::move(common)});
      }
    for (auto& f : next) std::sort(f.tight.begin(), f.tight.end());
    facets = std::move(next);
  }
  std::set<QVec, LexLess> found;
  for (const auto& f : facets) found.insert(f.h);
  return {found.begin(), found.end()};
}

PolyhedralCone PolyhedralCone::from_generators(const std::vector<QVec>& input) {
  if (input.empty()) throw Error(ErrorCode::DimensionMismatch, "cone needs at least one generator");
  const Index n = input.front().size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "zero-dimensional generator");
  for (const auto& g : input)
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generators differ in length");

  std::vector<QVec> gens;
  std::set<QVec, LexLess> seen;
  for (const auto& g : input) {
    if (g.isZero()) continue;
    if (seen.insert(primitive(g)).second) gens.push_back(g);
  }
  if (gens.empty()) throw Error(ErrorCode::NotGenerating, "all generators are zero");

  QMat stacked(static_cast<Index>(gens.size()), n);
  for (std::size_t i = 0; i < gens.size(); ++i) stacked.row(static_cast<Index>(i)) = gens[i].transpose();
  if (rank<Rational>(stacked) < n)
    throw Error(ErrorCode::NotGenerating, "generators span a proper subspace");

  // Pointed iff some functional is strictly positive on every generator.
  LinearProgram sep(static_cast<std::size_t>(n));
  for (const auto& g : gens) sep.add(g, Relation::GreaterEq, 1);
  if (!lp_feasible(sep)) throw Error(ErrorCode::NotPointed, "cone contains a line");

  // A generator is extreme iff the facets through it cut out a line.
  auto facets = enumerate_facets(gens, n);
  std::vector<QVec> extreme;
  for (const auto& g : gens) {
    std::vector<const QVec*> tight;
    for (const auto& h : facets)
      if (h.dot(g) == 0) tight.push_back(&h);
    if (static_cast<Index>(tight.size()) < n - 1) continue;
    QMat m(static_cast<Index>(tight.size()), n);
    for (std::size_t k = 0; k < tight.size(); ++k) m.row(static_cast<Index>(k)) = tight[k]->transpose();
    if (rank<Rational>(m) == n - 1) extreme.push_back(g);
  }
  std::stable_sort(extreme.begin(), extreme.end(),
                   [](const QVec& a, const QVec& b) { return lex_less(primitive(a), primitive(b)); });
  return PolyhedralCone(n, std::move(extreme), std::move(facets));
}

PolyhedralCone PolyhedralCone::from_facets(const std::vector<QVec>& facets) {
  return from_generators(facets).dual();
}

bool PolyhedralCone::contains(const QVec& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "membership query length");
  for (const auto& h : facets_)
    if (h.dot(x) < 0) return false;
  return true;
}

std::optional<std::size_t> PolyhedralCone::violated_facet(const QVec& x) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "membership query length");
  std::optional<std::size_t> worst;
  Rational worst_val = 0;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    Rational v = facets_[i].dot(x);
    if (v < worst_val) {
      worst_val = v;
      worst = i;
    }
  }
  return worst;
}

PolyhedralCone PolyhedralCone::dual() const { return PolyhedralCone(dim_, facets_, gens_); }

QVec PolyhedralCone::interior_point() const {
  QVec s = QVec::Zero(dim_);
  for (const auto& g : gens_) s += g;
  return s;
}

bool PolyhedralCone::same_cone(const PolyhedralCone& other) const {
  return dim_ == other.dim_ && sorted_primitives(gens_) == sorted_primitives(other.gens_);
}

PolyhedralCone PolyhedralCone::canonical() const {
  return PolyhedralCone(dim_, sorted_primitives(gens_), sorted_primitives(facets_));
}

// ---------------------------------------------------------------------------
// Hermitian coordinates

namespace {

std::pair<Index, Index> pair_of(Index d, Index m) {
  Index count = 0;
  for (Index j = 0; j < d; ++j)
    for (Index l = j + 1; l < d; ++l) {
      if (count == m) return {j, l};
      ++count;
    }
  throw Error(ErrorCode::DimensionMismatch, "hermitian basis index out of range");
}

}  // namespace

CMat hermitian_basis_element(Index d, Index k) {
  CMat b = CMat::Zero(d, d);
  const Index pairs = d * (d - 1) / 2;
  const double s = 1.0 / std::sqrt(2.0);
  if (k < d) {
    b(k, k) = 1.0;
  } else if (k < d + pairs) {
    auto [j, l] = pair_of(d, k - d);
    b(j, l) = s;
    b(l, j) = s;
  } else if (k < d + 2 * pairs) {
    auto [j, l] = pair_of(d, k - d - pairs);
    b(j, l) = std::complex<double>(0.0, -s);
    b(l, j) = std::complex<double>(0.0, s);
  } else {
    throw Error(ErrorCode::DimensionMismatch, "hermitian basis index out of range");
  }
  return b;
}

DMat transpose_in_coords(Index d) {
  DMat t = DMat::Identity(d * d, d * d);
  const Index pairs = d * (d - 1) / 2;
  for (Index k = d + pairs; k < d * d; ++k) t(k, k) = -1.0;
  return t;
}

PsdCone::PsdCone(std::vector<Index> factor_dims) : factors_(std::move(factor_dims)) {
  if (factors_.empty()) throw Error(ErrorCode::DimensionMismatch, "psd cone needs a factor");
  for (Index d : factors_) {
    if (d < 1) throw Error(ErrorCode::DimensionMismatch, "hilbert dimension must be positive");
    hilbert_dim_ *= d;
  }
}

CMat PsdCone::to_matrix(const DVec& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "psd coordinate length");
  // Accumulate factor by factor: M = sum_k x_k B_{k_1} (x) ... (x) B_{k_m}.
  CMat m = CMat::Zero(hilbert_dim_, hilbert_dim_);
  std::vector<std::vector<CMat>> bases;
  for (Index d : factors_) {
    std::vector<CMat> b;
    for (Index k = 0; k < d * d; ++k) b.push_back(hermitian_basis_element(d, k));
    bases.push_back(std::move(b));
  }
  for (Index idx = 0; idx < x.size(); ++idx) {
    if (x(idx) == 0.0) continue;
    Index rem = idx;
    std::vector<Index> digits(factors_.size());
    for (std::size_t f = factors_.size(); f-- > 0;) {
      Index n = factors_[f] * factors_[f];
      digits[f] = rem % n;
      rem /= n;
    }
    CMat term = bases[0][static_cast<std::size_t>(digits[0])];
    for (std::size_t f = 1; f < factors_.size(); ++f) {
      const CMat& b = bases[f][static_cast<std::size_t>(digits[f])];
      CMat next(term.rows() * b.rows(), term.cols() * b.cols());
      for (Index i = 0; i < term.rows(); ++i)
        for (Index j = 0; j < term.cols(); ++j)
          next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = term(i, j) * b;
      term = std::move(next);
    }
    m += x(idx) * term;
  }
  return m;
}

DVec PsdCone::to_coords(const CMat& m) const {
  if (m.rows() != hilbert_dim_ || m.cols() != hilbert_dim_)
    throw Error(ErrorCode::DimensionMismatch, "operator size does not match psd cone");
  DVec x(dim());
  for (Index idx = 0; idx < dim(); ++idx) {
    DVec e = DVec::Zero(dim());
    e(idx) = 1.0;
    x(idx) = (to_matrix(e) * m).trace().real();
  }
  return x;
}

double PsdCone::min_eigenvalue(const DVec& x) const {
  Eigen::SelfAdjointEigenSolver<CMat> es(to_matrix(x), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double PsdCone::max_eigenvalue(const DVec& x) const {
  Eigen::SelfAdjointEigenSolver<CMat> es(to_matrix(x), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

bool PsdCone::contains(const DVec& x) const { return min_eigenvalue(x) >= -numeric_tolerance(); }

DVec PsdCone::interior_point() const {
  return to_coords(CMat::Identity(hilbert_dim_, hilbert_dim_));
}

namespace {
std::uint64_t g_sampling_seed = 0x5eed;
}  // namespace

std::uint64_t sampling_seed() { return g_sampling_seed; }
void set_sampling_seed(std::uint64_t seed) { g_sampling_seed = seed; }

std::vector<DVec> PsdCone::sample_rays(std::size_t random_count, std::uint64_t seed) const {
  const Index d = hilbert_dim_;
  std::vector<Eigen::VectorXcd> kets;
  for (Index i = 0; i < d; ++i) kets.push_back(Eigen::VectorXcd::Unit(d, i));
  const std::complex<double> phases[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      for (auto ph : phases) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(d, i) + ph * Eigen::VectorXcd::Unit(d, j);
        kets.push_back(v / std::sqrt(2.0));
      }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t r = 0; r < random_count; ++r) {
    Eigen::VectorXcd v(d);
    for (Index i = 0; i < d; ++i) v(i) = {normal(rng), normal(rng)};
    kets.push_back(v / v.norm());
  }
  std::vector<DVec> rays;
  rays.reserve(kets.size());
  for (const auto& k : kets) rays.push_back(to_coords(k * k.adjoint()));
  return rays;
}

}  // namespace comcat
