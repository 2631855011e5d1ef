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

#include "comcat/conditioning.hpp"

namespace comcat {

namespace {

void check_length(Index got, Index want, const char* what) {
  if (got != want)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
}

template <class T>
void finish(RemoteEvaluation<T>& r, const char* what) {
  r.residual = max_abs<T>(Vec<T>(r.value - r.direct));
  if (!is_zero(r.residual))
    throw Error(ErrorCode::RemoteEvalMismatch,
                std::string(what) + " sides differ by " + std::to_string(to_double(r.residual)));
}

}  // namespace

template <class T>
Mat<T> conditioning_map(const Vec<T>& w, const Com<T>& a, const Com<T>& b) {
  check_length(w.size(), a.dim() * b.dim(), "bipartite state");
  const Mat<T> wm = reshape<T>(w, a.dim(), b.dim());
  const auto ea = probe_rays(a.effects);
  const auto eb = probe_rays(b.effects);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const Vec<T> row = wm.transpose() * ea[i];
    for (std::size_t j = 0; j < eb.size(); ++j)
      if (!is_nonneg(T(row.dot(eb[j]))))
        throw Error(ErrorCode::NotNonsignalingState,
                    "state is negative on effect pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return wm.transpose();
}

template <class T>
Mat<T> co_conditioning_map(const Vec<T>& f, Index n_a, Index n_b) {
  check_length(f.size(), n_a * n_b, "bipartite functional");
  return reshape<T>(f, n_a, n_b).transpose();
}

template <class T>
Marginals<T> marginals(const Vec<T>& w, const Com<T>& a, const Com<T>& b) {
  const Mat<T> hat = conditioning_map(w, a, b);
  return {Vec<T>(hat.transpose() * b.unit), Vec<T>(hat * a.unit)};
}

template <class T>
Vec<T> conditional_state(const Vec<T>& w, const Vec<T>& e, const Com<T>& a, const Com<T>& b) {
  check_length(e.size(), b.dim(), "conditioning effect");
  const Mat<T> hat = conditioning_map(w, a, b);
  const Vec<T> unnormalized = hat.transpose() * e;
  const T prob = a.unit.dot(unnormalized);
  if (!is_positive(prob))
    throw Error(ErrorCode::ZeroProbabilityCondition, "conditioning effect has probability zero");
  return unnormalized / prob;
}

template <class T>
RemoteEvaluation<T> remote_evaluate(const Vec<T>& f, const Vec<T>& w, const Vec<T>& x, Index n_b) {
  const Index n_a = x.size();
  if (n_b <= 0 || w.size() % n_b != 0) throw Error(ErrorCode::DimensionMismatch, "state length vs n_B");
  const Index n_c = w.size() / n_b;
  check_length(f.size(), n_a * n_b, "bipartite effect");

  RemoteEvaluation<T> r;
  const Mat<T> w_hat = reshape<T>(w, n_b, n_c).transpose();
  const Mat<T> f_hat = reshape<T>(f, n_a, n_b).transpose();
  r.value = w_hat * (f_hat * x);

  const Mat<T> f_row = f.transpose();
  const Mat<T> lift = kron<T>(f_row, Mat<T>::Identity(n_c, n_c));
  r.direct = lift * kron<T>(x, w);
  finish(r, "remote evaluation");
  return r;
}

template <class T>
RemoteEvaluation<T> remote_evaluate_dual(const Vec<T>& f, const Vec<T>& w, const Vec<T>& y, Index n_b) {
  const Index n_c = y.size();
  if (n_b <= 0 || w.size() % n_b != 0) throw Error(ErrorCode::DimensionMismatch, "state length vs n_B");
  const Index n_a = w.size() / n_b;
  check_length(f.size(), n_b * n_c, "bipartite effect");

  RemoteEvaluation<T> r;
  const Mat<T> w_hat_adj = reshape<T>(w, n_a, n_b);
  const Mat<T> f_hat_adj = reshape<T>(f, n_b, n_c);
  r.value = w_hat_adj * (f_hat_adj * y);

  const Mat<T> f_row = f.transpose();
  const Mat<T> lift = kron<T>(Mat<T>::Identity(n_a, n_a), f_row);
  r.direct = lift * kron<T>(w, y);
  finish(r, "dual remote evaluation");
  return r;
}

#define COMCAT_INSTANTIATE(T)                                                                      \
  template Mat<T> conditioning_map(const Vec<T>&, const Com<T>&, const Com<T>&);                   \
  template Mat<T> co_conditioning_map(const Vec<T>&, Index, Index);                                \
  template Marginals<T> marginals(const Vec<T>&, const Com<T>&, const Com<T>&);                    \
  template Vec<T> conditional_state(const Vec<T>&, const Vec<T>&, const Com<T>&, const Com<T>&);   \
  template RemoteEvaluation<T> remote_evaluate(const Vec<T>&, const Vec<T>&, const Vec<T>&, Index); \
  template RemoteEvaluation<T> remote_evaluate_dual(const Vec<T>&, const Vec<T>&, const Vec<T>&, Index);

COMCAT_INSTANTIATE(Rational)
COMCAT_INSTANTIATE(double)

#undef COMCAT_INSTANTIATE

}  // namespace comcat
