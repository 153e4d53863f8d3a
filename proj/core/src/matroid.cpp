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

#include "visco/matroid.hpp"

#include <algorithm>
#include <set>

#include "visco/errors.hpp"

namespace visco {

bool is_basis_family(int n, int r, const std::vector<Subset>& family) {
  if (family.empty()) return false;
  std::set<Subset> lookup;
  for (const Subset& b : family) {
    if (static_cast<int>(b.size()) != r) return false;
    if (!std::is_sorted(b.begin(), b.end())) return false;
    if (!b.empty() && (b.front() < 0 || b.back() >= n)) return false;
    lookup.insert(b);
  }
  for (const Subset& b1 : family) {
    for (const Subset& b2 : family) {
      Subset only1;
      std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                          std::back_inserter(only1));
      Subset only2;
      std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                          std::back_inserter(only2));
      for (int x : only1) {
        bool exchanged = false;
        for (int y : only2) {
          Subset candidate;
          for (int v : b1) {
            if (v != x) candidate.push_back(v);
          }
          candidate.push_back(y);
          std::sort(candidate.begin(), candidate.end());
          if (lookup.count(candidate)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

Matroid matroid_from_matrix(const RationalMatrix& m) {
  const int r = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  if (rank(m) != static_cast<std::size_t>(r)) {
    throw RankDeficient("matrix rank below row count");
  }
  Subset all_rows(r);
  for (int i = 0; i < r; ++i) all_rows[i] = i;
  Matroid out;
  out.n = n;
  out.r = r;
  for (const Subset& s : k_subsets(n, r)) {
    if (minor_det(m, all_rows, s) != 0) out.bases.push_back(s);
  }
  return out;
}

int subset_rank_in(const Matroid& m, const Subset& e) {
  int best = 0;
  for (const Subset& b : m.bases) {
    Subset common;
    std::set_intersection(b.begin(), b.end(), e.begin(), e.end(),
                          std::back_inserter(common));
    best = std::max(best, static_cast<int>(common.size()));
  }
  return best;
}

bool is_connected(const Matroid& m) {
  // Fix element 0 on the first side; scan all bipartitions.
  for (unsigned long mask = 0; mask < (1ul << (m.n - 1)); ++mask) {
    Subset e1{0}, e2;
    for (int i = 1; i < m.n; ++i) {
      if (mask & (1ul << (i - 1))) {
        e1.push_back(i);
      } else {
        e2.push_back(i);
      }
    }
    if (e2.empty()) continue;
    if (subset_rank_in(m, e1) + subset_rank_in(m, e2) == m.r) return false;
  }
  return true;
}

LatticePolytope polytope_of(const Matroid& m) {
  LatticePolytope p;
  p.ambient = m.n;
  for (const Subset& b : m.bases) {
    IVec v(m.n, 0);
    for (int i : b) v[i] = 1;
    p.vertices.push_back(std::move(v));
  }
  return p;
}

namespace {

bool is_exchange_direction(const QVec& d) {
  int plus = 0, minus = 0, other = 0;
  for (const Rat& x : d) {
    if (x == 0) continue;
    if (x == 1) {
      ++plus;
    } else if (x == -1) {
      ++minus;
    } else {
      ++other;
    }
  }
  return other == 0 && plus == 1 && minus == 1;
}

}  // namespace

bool matroid_edge_oracle(int r, int n,
                         const std::vector<Subset>& vertex_subset) {
  if (vertex_subset.empty()) return false;
  std::vector<Subset> dedup = vertex_subset;
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  std::vector<QVec> coords;
  for (const Subset& s : dedup) {
    if (static_cast<int>(s.size()) != r || s.back() >= n) {
      throw BadIndex("not an r-subset of the ground set");
    }
    QVec v(n, Rat(0));
    for (int i : s) v[i] = 1;
    coords.push_back(std::move(v));
  }
  if (coords.size() == 1) return true;
  Subset all(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) all[i] = static_cast<int>(i);
  const FacePoset poset = complex_poset(coords, {all});
  for (int e : poset.faces_of_dim(1)) {
    const Subset& vs = poset.faces[e].vertex_indices;
    if (vs.size() != 2) return false;  // an edge with interior lattice points
    QVec d(n);
    for (int j = 0; j < n; ++j) d[j] = coords[vs[1]][j] - coords[vs[0]][j];
    if (!is_exchange_direction(d)) return false;
  }
  return true;
}

bool is_matroid_subpolytope(int r, int n,
                            const std::vector<Subset>& vertex_subset) {
  const bool by_exchange = is_basis_family(n, r, vertex_subset);
  const bool by_edges = matroid_edge_oracle(r, n, vertex_subset);
  if (by_exchange != by_edges) {
    throw Error("exchange and edge tests disagree");
  }
  return by_exchange;
}

}  // namespace visco
