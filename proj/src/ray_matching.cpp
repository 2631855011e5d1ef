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

#include "comcat/ray_matching.hpp"

#include "comcat/linalg.hpp"

namespace comcat {

namespace {

class Matcher {
 public:
  Matcher(const std::vector<QVec>& s, const std::vector<QVec>& t, const RayMatchOptions& o)
      : src_(s), tgt_(t), opt_(o), n_(s.front().size()), used_(t.size(), false) {}

  std::vector<RayMatch> run() {
    dfs();
    return std::move(found_);
  }

 private:
  bool done() const { return opt_.limit != 0 && found_.size() >= opt_.limit; }

  static Index rank_of(const std::vector<const QVec*>& vs, Index n) {
    if (vs.empty()) return 0;
    QMat m(static_cast<Index>(vs.size()), n);
    for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Index>(i)) = vs[i]->transpose();
    return rank<Rational>(m);
  }

  // A linear isomorphism preserves the rank of every subset. Only the full
  // prefix and the prefix minus one ray are compared; cheaper than all
  // subsets and enough to cut most dead branches early.
  bool compatible() const {
    const std::size_t k = perm_.size();
    std::vector<const QVec*> s, t;
    for (std::size_t i = 0; i < k; ++i) {
      s.push_back(&src_[i]);
      t.push_back(&tgt_[perm_[i]]);
    }
    if (rank_of(s, n_) != rank_of(t, n_)) return false;
    for (std::size_t drop = 0; drop + 1 < k; ++drop) {
      std::vector<const QVec*> s2, t2;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) {
          s2.push_back(s[i]);
          t2.push_back(t[i]);
        }
      if (rank_of(s2, n_) != rank_of(t2, n_)) return false;
    }
    return true;
  }

  void dfs() {
    if (done()) return;
    if (perm_.size() == src_.size()) {
      try_solve();
      return;
    }
    for (std::size_t j = 0; j < tgt_.size() && !done(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      perm_.push_back(j);
      if (compatible()) dfs();
      perm_.pop_back();
      used_[j] = false;
    }
  }

  void try_solve() {
    const Index n = n_;
    const std::size_t k = src_.size();
    const std::size_t nm = static_cast<std::size_t>(n * n);
    auto var = [n](Index i, Index j) { return static_cast<std::size_t>(i * n + j); };
    LinearProgram lp(nm + k);
    for (std::size_t r = 0; r < k; ++r) {
      lp.set_nonnegative(nm + r);
      QVec lb = QVec::Zero(static_cast<Index>(nm + k));
      lb(static_cast<Index>(nm + r)) = 1;
      lp.add(lb, Relation::GreaterEq, 1);
      const QVec& s = src_[r];
      const QVec& t = tgt_[perm_[r]];
      for (Index i = 0; i < n; ++i) {
        QVec row = QVec::Zero(static_cast<Index>(nm + k));
        for (Index j = 0; j < n; ++j) row(static_cast<Index>(var(i, j))) = s(j);
        row(static_cast<Index>(nm + r)) = -t(i);
        lp.add(row, Relation::Equal, 0);
      }
    }
    if (opt_.symmetric)
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
          QVec row = QVec::Zero(static_cast<Index>(nm + k));
          row(static_cast<Index>(var(i, j))) = 1;
          row(static_cast<Index>(var(j, i))) = -1;
          lp.add(row, Relation::Equal, 0);
        }
    if (opt_.extra) opt_.extra(lp, var);
    auto x = lp_feasible(lp);
    if (!x) return;
    QMat m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = (*x)(static_cast<Index>(var(i, j)));
    if (opt_.accept && !opt_.accept(m)) return;
    found_.push_back({std::move(m), perm_});
  }

  const std::vector<QVec>& src_;
  const std::vector<QVec>& tgt_;
  const RayMatchOptions& opt_;
  Index n_;
  std::vector<bool> used_;
  std::vector<std::size_t> perm_;
  std::vector<RayMatch> found_;
};

}  // namespace

std::vector<RayMatch> match_rays(const std::vector<QVec>& source, const std::vector<QVec>& target,
                                 const RayMatchOptions& options) {
  if (source.size() != target.size() || source.empty()) return {};
  const Index n = source.front().size();
  for (const auto& v : source)
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "source rays differ in length");
  for (const auto& v : target)
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "target rays differ in length");
  return Matcher(source, target, options).run();
}

}  // namespace comcat
