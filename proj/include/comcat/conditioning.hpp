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

// Conditioning maps of bipartite states and effects. With the row-major
// convention of composites.hpp a state w on A (x) B has matrix W (n_A x n_B)
// and w(a, b) = a^T W b, so
//   w-hat  : A# -> B,  a -> W^T a      and  w-hat* : B# -> A,  b -> W b,
// and a bipartite effect f with matrix F has f-hat : A -> B#, x -> F^T x.

#include "comcat/composites.hpp"

namespace comcat {

/// Matrix of w-hat (n_B x n_A). Throws NotNonsignalingState when w is
/// negative on some pair of effect generators (or sampled effects for psd).
template <class T>
Mat<T> conditioning_map(const Vec<T>& w, const Com<T>& a, const Com<T>& b);

/// Matrix of f-hat (n_B x n_A) for a bipartite functional f on A (x) B.
template <class T>
Mat<T> co_conditioning_map(const Vec<T>& f, Index n_a, Index n_b);

template <class T>
struct Marginals {
  Vec<T> first;   // w-hat*(u_B)
  Vec<T> second;  // w-hat(u_A)
};

template <class T>
Marginals<T> marginals(const Vec<T>& w, const Com<T>& a, const Com<T>& b);

/// w-hat*(e) / w_B(e): the state of A conditioned on effect e of B. Throws
/// ZeroProbabilityCondition when w_B(e) is zero (or within tolerance for psd).
template <class T>
Vec<T> conditional_state(const Vec<T>& w, const Vec<T>& e, const Com<T>& a, const Com<T>& b);

template <class T>
struct RemoteEvaluation {
  Vec<T> value;     // via the conditioning maps
  Vec<T> direct;    // via the composite functional applied to the product
  T residual;       // max-abs difference
};

/// f on A (x) B, w on B (x) C, x in A:
///   (f (x) id_C)(x (x) w)  and  w-hat(f-hat(x))  must agree.
/// Both sides are computed; RemoteEvalMismatch if they differ beyond exact
/// equality (rationals) or the numeric tolerance (doubles).
template <class T>
RemoteEvaluation<T> remote_evaluate(const Vec<T>& f, const Vec<T>& w, const Vec<T>& x, Index n_b);

/// f on B (x) C, w on A (x) B, y in C:
///   (id_A (x) f)(w (x) y)  and  w-hat*(f-hat*(y)).
template <class T>
RemoteEvaluation<T> remote_evaluate_dual(const Vec<T>& f, const Vec<T>& w, const Vec<T>& y, Index n_b);

}  // namespace comcat
