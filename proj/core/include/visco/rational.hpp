// Copyright 2026 The Authors.
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

#include <string>
#include <vector>

namespace visco {

/// Exact rational scalar, always kept in lowest terms with positive
/// denominator (GMP canonical form). All arithmetic in this library is
/// exact; there is no floating point anywhere.
using Rat = boost::multiprecision::mpq_rational;

/// Arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;

using QVec = std::vector<Rat>;
using IVec = std::vector<long long>;

/// Parses "p/q" or "p" (arbitrary precision, optional sign).
/// Throws std::runtime_error on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rat& value);

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

/// Scales a rational vector to a primitive integer vector (coprime entries)
/// with the first nonzero entry positive. The zero vector is returned as-is.
QVec primitive(const QVec& v);

}  // namespace visco
