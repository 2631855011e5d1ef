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

// Conclusive teleportation, compact structures and the factorization of
// morphisms through a unit and co-unit.

#include "comcat/conditioning.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comcat {

/// omega on B (x) A with omega-hat o r-hat = id_A, r-hat : A -> B# positive,
/// and effect = scale * flatten(r-hat^T) on A (x) B with 0 <= effect <= u_AB.
template <class T>
struct TeleportationCertificate {
  Vec<T> omega;
  Mat<T> r_hat;  // dim B x dim A
  T scale;
  Vec<T> effect;
  T residual;
};

template <class T>
struct TeleportationSearch {
  std::optional<TeleportationCertificate<T>> certificate;
  std::size_t candidates_tried = 0;
  std::string note;
};

/// Teleports A = ab.first through B = ab.second. Candidate states are the
/// extreme rays of (BA)+ followed by the order isomorphisms B# -> A found by
/// ray matching; for each, an LP over r-hat maximizes the scale c. Returns the
/// first candidate (in that order) with c > 0. psd throws UnsupportedKind.
template <class T>
TeleportationSearch<T> find_teleportation(const CompositeCom<T>& ab, const CompositeCom<T>& ba);

template <class T>
struct TeleportationReport {
  bool ok = true;
  bool approximate = false;
  std::vector<std::string> violations;
  T residual;
  T max_scale;  // largest c with c * flatten(r-hat^T) <= u_AB

  explicit operator bool() const { return ok; }
};

template <class T>
TeleportationReport<T> verify_teleportation(const TeleportationCertificate<T>& cert, const CompositeCom<T>& ab,
                                            const CompositeCom<T>& ba);

/// Certificate from a supplied omega and r-hat with effect scale c.
template <class T>
TeleportationCertificate<T> make_teleportation_certificate(const Vec<T>& omega, const Mat<T>& r_hat, T scale);

template <class T>
struct CompactReport {
  Mat<T> left;   // (eps (x) id_A) o (id_A (x) eta)
  Mat<T> right;  // (id_A' (x) eps) o (eta (x) id_A')
  T left_residual;
  T right_residual;
  T conditioning_residual;  // both snakes recomputed as eta-hat o eps-hat
  bool ok = false;
};

/// eta on A' (x) A, eps on A (x) A'.
template <class T>
CompactReport<T> verify_compact_structure(Index n_a, Index n_a_dual, const Vec<T>& eta, const Vec<T>& eps);

template <class T>
struct Factorization {
  Vec<T> omega;   // (id_A' (x) phi) eta, on A' (x) B
  Vec<T> effect;  // the co-unit
  T residual;     // max-abs of omega-hat o eps-hat - phi
};

/// Throws InvalidStructure when (eta, eps) fails the snake equations.
template <class T>
Factorization<T> factor_morphism(const Mat<T>& phi, Index n_a_dual, const Vec<T>& eta, const Vec<T>& eps);

struct CompactClosureObject {
  std::string label;
  bool certified = false;
  std::string partner;
  std::optional<TeleportationCertificate<Rational>> through_partner;
  std::optional<TeleportationCertificate<Rational>> partner_through;
  std::vector<std::string> attempts;
};

struct CompactClosureVerdict {
  bool compact_closed = false;
  std::vector<CompactClosureObject> objects;
};

/// For each object, looks for a partner in the list that it can be teleported
/// through and that can be teleported back through it, with composites of the
/// given kind.
CompactClosureVerdict check_theory_compact_closed(const std::vector<QCom>& objects, CompositeKind kind);

}  // namespace comcat
