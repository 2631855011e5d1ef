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

// Exact rational linear programming: a dense two-phase tableau simplex with
// Bland's anti-cycling rule. Sizes in this project stay in the low hundreds
// of rows and columns, where a dense tableau is adequate.

#include "comcat/scalar.hpp"

#include <optional>
#include <vector>

namespace comcat {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  QVec coeffs;
  Relation relation = Relation::Equal;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVec point;      // meaningful unless infeasible
  Rational value;  // objective value when optimal
};

/// Constraint system over `num_vars` variables. Variables are unrestricted in
/// sign unless flagged in `nonnegative`; flagged variables avoid the free
/// variable split and keep the tableau small.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), nonneg_(num_vars, false) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<bool>& nonnegative() const { return nonneg_; }

  void set_nonnegative(std::size_t var, bool flag = true) { nonneg_.at(var) = flag; }
  void add(QVec coeffs, Relation relation, Rational rhs);
  void add(const LinearConstraint& c) { add(c.coeffs, c.relation, c.rhs); }

  /// True iff `x` satisfies every constraint and sign flag exactly.
  bool satisfied_by(const QVec& x) const;

 private:
  std::size_t num_vars_;
  std::vector<bool> nonneg_;
  std::vector<LinearConstraint> constraints_;
};

LpResult lp_maximize(const LinearProgram& lp, const QVec& objective);

/// A feasible point, or nullopt when the system is infeasible.
std::optional<QVec> lp_feasible(const LinearProgram& lp);

/// Convenience form with all variables free.
std::optional<QVec> lp_feasible(std::size_t num_vars, const std::vector<LinearConstraint>& constraints);

}  // namespace comcat
