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

#include "visco/rational.hpp"

#include <cctype>

#include "visco/errors.hpp"

namespace visco {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ParseError("not a rational: '" + text + "'");
  }
  Int d(den);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  return Rat(Int(num), d);
}

std::string format_rational(const Rat& value) { return value.str(); }

QVec primitive(const QVec& v) {
  Int den_lcm = 1;
  for (const Rat& x : v) den_lcm = lcm(den_lcm, denominator(x));
  Int num_gcd = 0;
  for (const Rat& x : v) num_gcd = gcd(num_gcd, numerator(x) * (den_lcm / denominator(x)));
  if (num_gcd == 0) return v;  // zero vector
  QVec out(v.size());
  Rat scale(den_lcm, num_gcd);
  int lead_sign = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * scale;
    if (lead_sign == 0 && out[i] != 0) lead_sign = out[i] > 0 ? 1 : -1;
  }
  if (lead_sign < 0) {
    for (Rat& x : out) x = -x;
  }
  return out;
}

}  // namespace visco
