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

// Search for linear maps M that carry one finite ray set bijectively onto
// another up to positive scaling: M s_i = t_i * r_{pi(i)} with t_i >= 1. For
// spanning ray sets such an M is invertible and maps cone(s) onto cone(r).
// Bijections are enumerated in lexicographic order; a prefix is abandoned as
// soon as the linear dependencies among the chosen sources differ from those
// among their targets.

#include "comcat/linalg.hpp"
#include "comcat/lp.hpp"

#include <functional>
#include <vector>

namespace comcat {

struct RayMatchOptions {
  /// Require M = M^T.
  bool symmetric = false;
  /// Extra linear conditions on the entries of M. The callback receives the
  /// program and the variable index of entry (i, j).
  std::function<void(LinearProgram&, const std::function<std::size_t(Index, Index)>&)> extra;
  /// Post-filter on a candidate; rejected candidates do not stop the search.
  std::function<bool(const QMat&)> accept;
  /// Stop after this many accepted maps (0 = exhaust).
  std::size_t limit = 1;
};

struct RayMatch {
  QMat map;
  std::vector<std::size_t> permutation;  // source i -> target permutation[i]
};

std::vector<RayMatch> match_rays(const std::vector<QVec>& source, const std::vector<QVec>& target,
                                 const RayMatchOptions& options = {});

}  // namespace comcat
