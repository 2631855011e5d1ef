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

#include "comcat/lp.hpp"

#include "comcat/error.hpp"

#include <algorithm>

namespace comcat {

void LinearProgram::add(QVec coeffs, Relation relation, Rational rhs) {
  if (static_cast<std::size_t>(coeffs.size()) != num_vars_)
    throw Error(ErrorCode::DimensionMismatch, "constraint length does not match variable count");
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

bool LinearProgram::satisfied_by(const QVec& x) const {
  if (static_cast<std::size_t>(x.size()) != num_vars_) return false;
  for (std::size_t j = 0; j < num_vars_; ++j)
    if (nonneg_[j] && x(static_cast<Eigen::Index>(j)) < 0) return false;
  for (const auto& c : constraints_) {
    Rational lhs = c.coeffs.dot(x);
    switch (c.relation) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

using Row = std::vector<Rational>;

// Standard-form tableau: maximize obj^T y subject to rows y = rhs, y >= 0.
class Tableau {
 public:
  Tableau(std::vector<Row> rows, std::vector<std::size_t> basis, std::size_t cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  // Runs Bland's-rule simplex for `obj` restricted to columns < `active`.
  // Returns false when unbounded.
  bool optimize(const Row& obj, std::size_t active) {
    for (;;) {
      Row reduced = reduced_costs(obj);
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < active; ++j)
        if (reduced[j] > 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / rows_[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (rows_[r][j] == 0) continue;
      rows_[r][j] *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j : nz) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  Row reduced_costs(const Row& obj) const {
    Row red(obj.begin(), obj.begin() + static_cast<std::ptrdiff_t>(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = obj[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[i][j] != 0) red[j] -= cb * rows_[i][j];
    }
    return red;
  }

  Row solution() const {
    Row y(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][cols_];
    return y;
  }

  // Pivots artificial columns (>= first_artificial) out of the basis after a
  // successful phase one; rows that cannot be cleared are redundant and dropped.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = cols_;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col == cols_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

 private:
  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpResult lp_maximize(const LinearProgram& lp, const QVec& objective) {
  const std::size_t n = lp.num_vars();
  if (static_cast<std::size_t>(objective.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "objective length does not match variable count");

  // Column layout: one column per nonnegative variable, two (plus/minus) per
  // free variable, then one slack per inequality, then one artificial per row.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = cols++;
    if (!lp.nonnegative()[j]) minus[j] = cols++;
  }
  const auto& cons = lp.constraints();
  std::vector<std::size_t> slack(cons.size(), SIZE_MAX);
  for (std::size_t i = 0; i < cons.size(); ++i)
    if (cons[i].relation != Relation::Equal) slack[i] = cols++;
  const std::size_t first_artificial = cols;
  const std::size_t total = cols + cons.size();

  std::vector<Row> rows;
  std::vector<std::size_t> basis;
  rows.reserve(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    Row row(total + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = cons[i].coeffs(static_cast<Eigen::Index>(j));
      if (a == 0) continue;
      row[plus[j]] = a;
      if (minus[j] != SIZE_MAX) row[minus[j]] = -a;
    }
    if (slack[i] != SIZE_MAX) row[slack[i]] = cons[i].relation == Relation::LessEq ? 1 : -1;
    row[total] = cons[i].rhs;
    if (row[total] < 0)
      for (auto& x : row) x = -x;
    row[first_artificial + i] = 1;
    rows.push_back(std::move(row));
    basis.push_back(first_artificial + i);
  }

  Tableau tab(std::move(rows), std::move(basis), total);
  Row phase1(total, Rational(0));
  for (std::size_t j = first_artificial; j < total; ++j) phase1[j] = -1;
  tab.optimize(phase1, total);
  Row y = tab.solution();
  for (std::size_t j = first_artificial; j < total; ++j)
    if (y[j] != 0) return {LpStatus::Infeasible, QVec(), Rational(0)};
  tab.expel_artificials(first_artificial);

  Row phase2(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[plus[j]] = objective(static_cast<Eigen::Index>(j));
    if (minus[j] != SIZE_MAX) phase2[minus[j]] = -objective(static_cast<Eigen::Index>(j));
  }
  bool bounded = tab.optimize(phase2, first_artificial);
  y = tab.solution();
  QVec x(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    x(static_cast<Eigen::Index>(j)) = y[plus[j]];
    if (minus[j] != SIZE_MAX) x(static_cast<Eigen::Index>(j)) -= y[minus[j]];
  }
  if (!bounded) return {LpStatus::Unbounded, x, Rational(0)};
  return {LpStatus::Optimal, x, objective.dot(x)};
}

std::optional<QVec> lp_feasible(const LinearProgram& lp) {
  LpResult r = lp_maximize(lp, QVec::Zero(static_cast<Eigen::Index>(lp.num_vars())));
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return r.point;
}

std::optional<QVec> lp_feasible(std::size_t num_vars, const std::vector<LinearConstraint>& constraints) {
  LinearProgram lp(num_vars);
  for (const auto& c : constraints) lp.add(c);
  return lp_feasible(lp);
}

}  // namespace comcat
