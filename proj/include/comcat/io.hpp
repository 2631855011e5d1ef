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

// JSON encoding of cones, models, structures and certificates. Rationals are
// "p/q" strings; doubles are JSON numbers printed to round-trip.

#include "comcat/models.hpp"
#include "comcat/protocols.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace comcat::io {

using Json = nlohmann::ordered_json;

using AnyCom = std::variant<QCom, DCom>;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& x);
Json to_json(double x);

template <class T>
T scalar_from_json(const Json& j);

template <class T>
Json vec_to_json(const Vec<T>& v);
template <class T>
Vec<T> vec_from_json(const Json& j);

template <class T>
Json mat_to_json(const Mat<T>& m);
template <class T>
Mat<T> mat_from_json(const Json& j);

Json cone_to_json(const PolyhedralCone& c);
Json cone_to_json(const PsdCone& c);

template <class T>
Json com_to_json(const Com<T>& a);
Json com_to_json(const AnyCom& a);

/// Reads a COM without validating it. Cone construction errors (a cone that
/// contains a line, say) still throw.
AnyCom com_from_json(const Json& j);

template <class T>
Json structure_to_json(const DualityStructure<T>& d, const Com<T>& a);
template <class T>
DualityStructure<T> structure_from_json(const Json& j);

template <class T>
Json certificate_to_json(const TeleportationCertificate<T>& c);
template <class T>
TeleportationCertificate<T> certificate_from_json(const Json& j);

Json mackey_to_json(const MackeyTriple& t);
MackeyTriple mackey_from_json(const Json& j);

/// builtin:classical2, builtin:classical3, builtin:trivial, builtin:gbit,
/// builtin:pentagon, builtin:qubit, builtin:classical<n>, builtin:quantum<d>.
bool is_builtin(const std::string& uri);
AnyCom builtin(const std::string& uri);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Json parse(const std::string& text, const std::string& source);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a64(const std::string& bytes);

const std::string& label_of(const AnyCom& a);

}  // namespace comcat::io
