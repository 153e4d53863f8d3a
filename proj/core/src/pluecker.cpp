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

#include "visco/pluecker.hpp"

#include <algorithm>

#include "visco/errors.hpp"

namespace visco {

bool PlueckerVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rat& x) { return x == 0; });
}

PlueckerVector PlueckerVector::normalized() const {
  PlueckerVector out = *this;
  for (const Rat& x : coords) {
    if (x != 0) {
      const Rat inv = Rat(1) / x;
      for (Rat& y : out.coords) y *= inv;
      break;
    }
  }
  return out;
}

bool PlueckerVector::projectively_equal(const PlueckerVector& other) const {
  if (r != other.r || n != other.n) return false;
  return normalized().coords == other.normalized().coords;
}

PlueckerVector maximal_minors(const RationalMatrix& m) {
  const int r = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  if (rank(m) != static_cast<std::size_t>(r)) {
    throw RankDeficient("matrix rank below row count");
  }
  PlueckerVector p;
  p.r = r;
  p.n = n;
  Subset all_rows(r);
  for (int i = 0; i < r; ++i) all_rows[i] = i;
  const auto cols = k_subsets(n, r);
  p.coords.reserve(cols.size());
  for (const Subset& s : cols) {
    p.coords.push_back(minor_det(m, all_rows, s));
  }
  return p;
}

bool pluecker_relations_ok(const PlueckerVector& p) {
  const int r = p.r;
  const int n = p.n;
  if (r <= 1 || r >= n - 1) {
    // G(1,n), G(n-1,n) and degenerate cases carry no relations.
    return true;
  }
  const auto shorts = k_subsets(n, r - 1);
  const auto longs = k_subsets(n, r + 1);
  for (const Subset& s : shorts) {
    for (const Subset& t : longs) {
      Rat sum = 0;
      for (std::size_t pos = 0; pos < t.size(); ++pos) {
        const int j = t[pos];
        if (std::binary_search(s.begin(), s.end(), j)) continue;
        Subset s_plus = s;
        s_plus.push_back(j);
        std::sort(s_plus.begin(), s_plus.end());
        Subset t_minus = t;
        t_minus.erase(t_minus.begin() + static_cast<long>(pos));
        const int sj = insertion_sign(s, j);
        const int st = (pos % 2 == 0) ? 1 : -1;
        sum += Rat(sj * st) * p.at(s_plus) * p.at(t_minus);
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

PlueckerVector torus_act(const QVec& t, const PlueckerVector& p) {
  if (static_cast<int>(t.size()) != p.n) throw IndexError("torus size mismatch");
  for (const Rat& x : t) {
    if (x == 0) throw ZeroScale("torus element with zero entry");
  }
  PlueckerVector out = p;
  const auto subs = k_subsets(p.n, p.r);
  for (std::size_t idx = 0; idx < subs.size(); ++idx) {
    Rat scale = 1;
    for (int i : subs[idx]) scale *= t[i];
    out.coords[idx] *= scale;
  }
  return out;
}

}  // namespace visco
