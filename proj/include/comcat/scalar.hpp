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

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

namespace comcat {

/// Exact rational scalar used by polyhedral cones. Expression templates are
/// disabled so that `auto` and Eigen expressions never capture temporaries.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using QVec = Vec<Rational>;
using QMat = Mat<Rational>;
using DVec = Vec<double>;
using DMat = Mat<double>;

/// Process-wide tolerance for floating-point (psd) comparisons. Defaults to
/// 1e-9; the COMCAT_TOLERANCE environment variable overrides it at startup.
double numeric_tolerance();
void set_numeric_tolerance(double eps);

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(double x) { return std::abs(x) <= numeric_tolerance(); }
inline bool is_nonneg(const Rational& x) { return x >= 0; }
inline bool is_nonneg(double x) { return x >= -numeric_tolerance(); }
inline bool is_positive(const Rational& x) { return x > 0; }
inline bool is_positive(double x) { return x > numeric_tolerance(); }

inline double to_double(const Rational& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

/// Parses "p/q", "p", or a decimal literal such as "0.25" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

template <class T>
T max_abs(const Mat<T>& m) {
  T best(0);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    T a = m.data()[i] < 0 ? T(-m.data()[i]) : m.data()[i];
    if (a > best) best = a;
  }
  return best;
}

template <class T>
T max_abs(const Vec<T>& v) {
  return max_abs<T>(Mat<T>(v));
}

template <class T>
bool all_zero(const Mat<T>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!is_zero(m.data()[i])) return false;
  return true;
}

DMat to_double(const QMat& m);
DVec to_double(const QVec& v);
inline const DMat& to_double(const DMat& m) { return m; }
inline const DVec& to_double(const DVec& v) { return v; }

/// Scales a nonzero rational vector to the unique primitive integer vector on
/// the same open ray. Two vectors span the same ray iff their primitives match.
QVec primitive(const QVec& v);

/// Lexicographic order on rational vectors (shorter first).
bool lex_less(const QVec& a, const QVec& b);

bool same_ray(const QVec& a, const QVec& b);
bool same_ray(const DVec& a, const DVec& b);

}  // namespace comcat
