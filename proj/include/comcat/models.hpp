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

// Builtin models and the linearization of Mackey triples.

#include "comcat/selfdual.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comcat {

/// Probability simplex on n outcomes: orthant cones, all-ones unit. n = 1 is
/// the trivial system.
QCom classical(Index n);
QCom trivial();

/// Density operators on C^d in the orthonormal Hermitian coordinates of
/// PsdCone; the unit is the trace.
DCom quantum(Index d);

/// The square state space: rays (+-1, +-1, 1), saturated, unit (0, 0, 1).
QCom gbit();

/// A rational pentagon whose cone is linearly isomorphic to its dual, with
/// the full dual as effect cone and unit (0, 0, 1).
QCom pentagon();

/// gamma = f = sum_i e_i (x) e_i: gamma-hat is the identity.
QStructure classical_structure(Index n);

/// gamma-hat is the 45 degree rotation-and-scaling taking the effect square
/// onto the state square. Not symmetric; tau is a quarter turn.
QStructure gbit_rotation_structure();

/// gamma-hat is the symmetric reflection taking effect rays onto state rays.
/// Symmetric but indefinite.
QStructure gbit_reflection_structure();

/// gamma = coordinates of the projector onto (1/sqrt d) sum_i x_i (x) x_i, so
/// gamma-hat(a)(b) = Tr(P (a (x) b)); f = d^2 gamma.
DStructure maximally_entangled_structure(Index d);

/// Coordinates of the projector onto the maximally entangled vector.
DVec maximally_entangled_state(Index d);

struct MackeyTriple {
  std::vector<std::string> outcomes;
  std::vector<std::string> states;
  QMat table;  // |outcomes| x |states|, entries in [0, 1]
};

/// Identifies statistically indistinguishable states, embeds the rest in the
/// span of their fingerprint columns and returns the resulting model. Throws
/// DegenerateTriple for malformed tables or when no unit functional exists.
QCom from_mackey(const MackeyTriple& triple, const std::string& label = "mackey");

/// Outcomes are the effect generators rescaled to their largest multiple
/// below the unit on states; states are the unit-normalized state generators.
MackeyTriple to_mackey(const QCom& a);

/// Two outcomes per axis for z and x, and the six Pauli eigenstates.
MackeyTriple pauli_fragment();

/// A linear bijection M : A -> B with M(A+) = B+, M^T(B#+) = A#+ and
/// M^T u_B = u_A, if one exists.
std::optional<QMat> order_isomorphism(const QCom& a, const QCom& b);

}  // namespace comcat
