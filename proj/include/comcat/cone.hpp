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

#pragma once

#include "comcat/linalg.hpp"

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace comcat {

using CMat = Eigen::MatrixXcd;

/// A closed, pointed, generating polyhedral cone in R^n held in both
/// representations: extreme rays (generators) and facet normals h with
/// h . x >= 0. Generators keep their given scaling but are ordered like
/// their primitives, matching the facet order of the dual; all
/// comparisons are up to positive scaling.
class PolyhedralCone {
 public:
  static constexpr std::string_view kind_name = "polyhedral";

  /// Removes zero, duplicate and redundant generators and computes facets.
  /// Throws DimensionMismatch, NotGenerating or NotPointed.
  static PolyhedralCone from_generators(const std::vector<QVec>& gens);

  /// The cone {x : h . x >= 0 for all h in facets}; equivalent to
  /// from_generators(facets).dual().
  static PolyhedralCone from_facets(const std::vector<QVec>& facets);

  Index dim() const { return dim_; }
  const std::vector<QVec>& generators() const { return gens_; }
  const std::vector<QVec>& facets() const { return facets_; }

  bool contains(const QVec& x) const;

  /// The facet with the most negative value at x, if x is outside.
  std::optional<std::size_t> violated_facet(const QVec& x) const;

  /// Representation swap: generators of the dual are the facets of this cone.
  PolyhedralCone dual() const;

  /// Sum of the generators; strictly inside every facet.
  QVec interior_point() const;

  /// Equality as cones (generator sets equal up to scaling and order).
  bool same_cone(const PolyhedralCone& other) const;

  /// Generators and facets rescaled to primitive integer vectors, both sorted.
  PolyhedralCone canonical() const;

 private:
  PolyhedralCone(Index dim, std::vector<QVec> gens, std::vector<QVec> facets)
      : dim_(dim), gens_(std::move(gens)), facets_(std::move(facets)) {}

  Index dim_ = 0;
  std::vector<QVec> gens_;
  std::vector<QVec> facets_;
};

/// Facet normals of cone(gens) by exact double description. Redundant
/// generators are allowed. Normals are primitive and sorted
/// lexicographically. Requires a generating set.
std::vector<QVec> enumerate_facets(const std::vector<QVec>& gens, Index dim);

/// The cone of positive semidefinite Hermitian matrices on C^{d_1} (x) ... (x)
/// C^{d_k}, coordinatized by the tensor product of each factor's orthonormal
/// Hermitian basis. For one factor of dimension d the basis is: the diagonal
/// units E_kk, then (E_jl + E_lj)/sqrt2 for j < l, then (-i E_jl + i E_lj)/sqrt2
/// for j < l. The trace pairing becomes the Euclidean dot product, so the cone
/// is self-dual in these coordinates.
class PsdCone {
 public:
  static constexpr std::string_view kind_name = "psd";

  static PsdCone hermitian(Index d) { return PsdCone({d}); }
  explicit PsdCone(std::vector<Index> factor_dims);

  Index hilbert_dim() const { return hilbert_dim_; }
  Index dim() const { return hilbert_dim_ * hilbert_dim_; }
  const std::vector<Index>& factors() const { return factors_; }

  bool contains(const DVec& x) const;
  double min_eigenvalue(const DVec& x) const;
  double max_eigenvalue(const DVec& x) const;

  PsdCone dual() const { return *this; }
  DVec interior_point() const;

  CMat to_matrix(const DVec& coords) const;
  DVec to_coords(const CMat& m) const;

  /// Rank-one projectors used wherever positivity must be probed on the
  /// continuum of extreme rays: the computational basis, the real and
  /// imaginary two-level superpositions, and `random_count` random pure
  /// states from a fixed seed.
  std::vector<DVec> sample_rays(std::size_t random_count = 48, std::uint64_t seed = 0x5eed) const;

  bool same_cone(const PsdCone& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Index> factors_;
  Index hilbert_dim_ = 1;
};

/// The d*d Hermitian basis element with the given index for a single factor.
CMat hermitian_basis_element(Index d, Index k);

/// Coordinates of the transpose map M -> M^T on a single factor of dimension d.
DMat transpose_in_coords(Index d);

template <class T>
struct ConeFor;
template <>
struct ConeFor<Rational> {
  using type = PolyhedralCone;
};
template <>
struct ConeFor<double> {
  using type = PsdCone;
};
template <class T>
using Cone = typename ConeFor<T>::type;

/// Seed for the random part of probe_rays on psd cones. Defaults to 0x5eed.
std::uint64_t sampling_seed();
void set_sampling_seed(std::uint64_t seed);

/// Finite ray set used for positivity checks: exact generators for polyhedral
/// cones, sampled rank-one projectors for psd cones.
inline const std::vector<QVec>& probe_rays(const PolyhedralCone& c) { return c.generators(); }
inline std::vector<DVec> probe_rays(const PsdCone& c) { return c.sample_rays(48, sampling_seed()); }

}  // namespace comcat
