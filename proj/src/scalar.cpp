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

#include "comcat/scalar.hpp"

#include "comcat/error.hpp"

#include <atomic>
#include <cstdlib>

namespace comcat {

namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("COMCAT_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> slot{initial_tolerance()};
  return slot;
}

}  // namespace

double numeric_tolerance() { return tolerance_slot().load(std::memory_order_relaxed); }

void set_numeric_tolerance(double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::ParseError, "tolerance must be positive");
  tolerance_slot().store(eps, std::memory_order_relaxed);
}

namespace {

// GMP reads a leading 0 as an octal prefix; strip it so input is always decimal.
Integer decimal_integer(const std::string& text) {
  std::size_t start = text.empty() || (text[0] != '-' && text[0] != '+') ? 0 : 1;
  if (start == text.size()) throw std::invalid_argument("no digits");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not a digit");
  std::size_t first = start;
  while (first + 1 < text.size() && text[first] == '0') ++first;
  Integer v(text.substr(first));
  return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();
  try {
    auto dot = text.find('.');
    auto exp = text.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
      auto slash = text.find('/');
      if (slash == std::string::npos) return Rational(decimal_integer(text));
      Integer num = decimal_integer(text.substr(0, slash));
      Integer den = decimal_integer(text.substr(slash + 1));
      if (den == 0) throw fail();
      return Rational(num, den);
    }
    // Decimal literal: mantissa digits over a power of ten.
    std::string mantissa = exp == std::string::npos ? text : text.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(text.substr(exp + 1));
    if (dot != std::string::npos && dot < mantissa.size()) {
      e10 -= static_cast<long>(mantissa.size() - dot - 1);
      mantissa.erase(dot, 1);
    }
    Integer digits = decimal_integer(mantissa);
    Integer scale(1);
    for (long i = 0; i < std::labs(e10); ++i) scale *= 10;
    return e10 >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
}

std::string to_string(const Rational& x) {
  Integer den = denominator(x);
  if (den == 1) return numerator(x).str();
  return numerator(x).str() + "/" + den.str();
}

DMat to_double(const QMat& m) {
  DMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) out.data()[i] = static_cast<double>(m.data()[i]);
  return out;
}

DVec to_double(const QVec& v) {
  DVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = static_cast<double>(v(i));
  return out;
}

QVec primitive(const QVec& v) {
  Integer lcm_den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) lcm_den = lcm(lcm_den, denominator(v(i)));
  Integer g(0);
  std::vector<Integer> ints(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer n = numerator(v(i)) * (lcm_den / denominator(v(i)));
    ints[static_cast<std::size_t>(i)] = n;
    g = gcd(g, n);
  }
  if (g == 0) return v;
  if (g < 0) g = -g;
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(ints[static_cast<std::size_t>(i)] / g);
  return out;
}

bool lex_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool same_ray(const QVec& a, const QVec& b) {
  return a.size() == b.size() && primitive(a) == primitive(b);
}

bool same_ray(const DVec& a, const DVec& b) {
  if (a.size() != b.size()) return false;
  double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return na == nb;
  return (a / na - b / nb).cwiseAbs().maxCoeff() <= numeric_tolerance();
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::MixedKindUnsupported: return "MixedKindUnsupported";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::ZeroMap: return "ZeroMap";
    case ErrorCode::NotNonsignalingState: return "NotNonsignalingState";
    case ErrorCode::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
    case ErrorCode::RemoteEvalMismatch: return "RemoteEvalMismatch";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace comcat
