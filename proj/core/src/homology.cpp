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

#include "visco/homology.hpp"

#include <algorithm>
#include <map>

#include "visco/errors.hpp"

namespace visco {

bool ChainComplex::boundary_squares_to_zero() const {
  for (std::size_t k = 2; k < boundaries.size(); ++k) {
    const RationalMatrix& d1 = boundaries[k - 1];
    const RationalMatrix& d2 = boundaries[k];
    for (std::size_t i = 0; i < d1.rows(); ++i) {
      for (std::size_t j = 0; j < d2.cols(); ++j) {
        Rat s = 0;
        for (std::size_t t = 0; t < d2.rows(); ++t) {
          s += d1.at(i, t) * d2.at(t, j);
        }
        if (s != 0) return false;
      }
    }
  }
  return true;
}

std::vector<int> homology_dims(const ChainComplex& c) {
  const std::size_t degrees = c.dims.size();
  std::vector<std::size_t> ranks(degrees + 1, 0);
  for (std::size_t k = 1; k < degrees; ++k) ranks[k] = rank(c.boundaries[k]);
  std::vector<int> h(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    h[k] = c.dims[k] - static_cast<int>(ranks[k]) -
           static_cast<int>(ranks[k + 1]);
  }
  return h;
}

ChainComplex relative_complex(const FacePoset& poset,
                              const std::vector<bool>& in_k,
                              const std::vector<bool>& in_l) {
  const std::size_t count = poset.faces.size();
  if (in_k.size() != count || in_l.size() != count) {
    throw BadParams("predicate length mismatch");
  }
  for (std::size_t f = 0; f < count; ++f) {
    if (in_l[f] && !in_k[f]) throw NotSubcomplex("L must lie inside K");
    for (int g : poset.facets_of[f]) {
      if (in_k[f] && !in_k[static_cast<std::size_t>(g)]) {
        throw NotSubcomplex("K is not closed under subfaces");
      }
      if (in_l[f] && !in_l[static_cast<std::size_t>(g)]) {
        throw NotSubcomplex("L is not closed under subfaces");
      }
    }
  }

  ChainComplex out;
  out.dims.assign(poset.top_dim + 1, 0);
  std::vector<int> slot(count, -1);
  for (std::size_t f = 0; f < count; ++f) {
    if (in_k[f] && !in_l[f]) {
      slot[f] = out.dims[poset.faces[f].dim]++;
    }
  }
  out.boundaries.resize(poset.top_dim + 1);
  out.boundaries[0] = RationalMatrix(0, out.dims[0]);
  for (int k = 1; k <= poset.top_dim; ++k) {
    out.boundaries[k] = RationalMatrix(out.dims[k - 1], out.dims[k]);
  }
  for (std::size_t f = 0; f < count; ++f) {
    if (slot[f] < 0) continue;
    const int k = poset.faces[f].dim;
    for (int g : poset.facets_of[f]) {
      if (slot[g] < 0) continue;
      out.boundaries[k].at(slot[g], slot[f]) =
          incidence(poset, static_cast<int>(f), g);
    }
  }
  return out;
}

ChainComplex relative_complex(const FacePoset& poset,
                              const std::vector<bool>& in_l) {
  return relative_complex(poset, std::vector<bool>(poset.faces.size(), true),
                          in_l);
}

namespace {

void require_matroidal(const Subdivision& s) {
  if (!is_matroid_decomposition(s)) {
    throw NotMatroidal("fibre combinatorics need a matroid decomposition");
  }
}

std::vector<bool> boundary_faces(const Subdivision& s) {
  std::vector<bool> out(s.poset.faces.size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    out[f] = s.face_on_base_boundary(static_cast<int>(f));
  }
  return out;
}

std::vector<bool> zero_locus_faces(const Subdivision& s) {
  std::vector<bool> out(s.poset.faces.size());
  for (std::size_t f = 0; f < out.size(); ++f) {
    out[f] = s.face_in_zero_locus(static_cast<int>(f));
  }
  return out;
}

}  // namespace

std::vector<int> cohomology_OS(const Subdivision& s) {
  require_matroidal(s);
  const auto h = homology_dims(relative_complex(s.poset, boundary_faces(s)));
  const int n = s.n();
  const int r = s.level();
  std::vector<int> out(r, 0);
  for (int i = 0; i < r; ++i) {
    const int k = n - 1 - i;
    if (k >= 0 && k < static_cast<int>(h.size())) out[i] = h[k];
  }
  return out;
}

std::vector<int> cohomology_OB(const Subdivision& s) {
  require_matroidal(s);
  const auto complex =
      relative_complex(s.poset, boundary_faces(s), zero_locus_faces(s));
  const auto h = homology_dims(complex);
  const int n = s.n();
  const int r = s.level();
  if (r < 2) throw BadParams("boundary cohomology needs rank at least 2");
  std::vector<int> out(r - 1, 0);
  for (int i = 0; i < r - 1; ++i) {
    const int k = n - 2 - i;
    if (k >= 0 && k < static_cast<int>(h.size())) out[i] = h[k];
  }
  return out;
}

std::vector<int> cohomology_omega(const Subdivision& s) {
  const std::vector<int> h_os = cohomology_OS(s);
  const std::vector<int> h_ob = cohomology_OB(s);
  const int r = s.level();

  // h^i(O(-B)) through the restriction sequence, using h^0(O_S) = 1 and
  // the boundary being nonempty.
  std::vector<int> h_minus(r, 0);
  if (r >= 2) h_minus[1] = h_ob[0] - 1;
  for (int i = 2; i < r; ++i) h_minus[i] = h_ob[i - 1];

  std::vector<int> out(r, 0);
  for (int i = 0; i < r; ++i) out[i] = h_minus[r - 1 - i];
  return out;
}

CohomologyReport cohomology_report(const Subdivision& s) {
  return CohomologyReport{cohomology_OS(s), cohomology_OB(s),
                          cohomology_omega(s)};
}

namespace {

// Simplicial chain complex spanned by the subsets of [n] of dimension
// lo..n-2, standard alternating boundary. Independent of the polytope
// machinery on purpose.
ChainComplex skeleton_pair_complex(int n, int lo) {
  const int hi = n - 2;
  ChainComplex out;
  out.dims.assign(hi + 1, 0);
  out.boundaries.resize(hi + 1);
  std::map<int, std::vector<Subset>> by_dim;
  std::map<int, std::map<Subset, int>> index;
  for (int k = lo; k <= hi; ++k) {
    by_dim[k] = k_subsets(n, k + 1);
    out.dims[k] = static_cast<int>(by_dim[k].size());
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
      index[k][by_dim[k][i]] = static_cast<int>(i);
    }
  }
  out.boundaries[0] = RationalMatrix(0, out.dims[0]);
  for (int k = 1; k <= hi; ++k) {
    out.boundaries[k] = RationalMatrix(out.dims[k - 1], out.dims[k]);
    if (k - 1 < lo) continue;
    for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
      const Subset& simplex = by_dim[k][j];
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        Subset facet = simplex;
        facet.erase(facet.begin() + static_cast<long>(drop));
        const int sign = (drop % 2 == 0) ? 1 : -1;
        out.boundaries[k].at(index[k - 1].at(facet), j) = sign;
      }
    }
  }
  return out;
}

int wedge_with_ones_cokernel(int r, int n) {
  const auto rows = k_subsets(n, r - 1);
  const auto cols = k_subsets(n, r - 2);
  RationalMatrix m(rows.size(), cols.size());
  std::map<Subset, int> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Subset& t = cols[j];
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(t.begin(), t.end(), i)) continue;
      Subset s = t;
      s.push_back(i);
      std::sort(s.begin(), s.end());
      int below = 0;
      for (int x : t) {
        if (x < i) ++below;
      }
      m.at(row_index.at(s), j) = (below % 2 == 0) ? 1 : -1;
    }
  }
  return static_cast<int>(rows.size() - rank(m));
}

}  // namespace

SkeletonPairReport skeleton_pair_oracle(int r, int n) {
  if (r < 2 || r > n - 1) throw BadParams("need 2 <= r <= n-1");
  SkeletonPairReport report;
  report.dims_low = homology_dims(skeleton_pair_complex(n, n - r));
  report.dims_literal =
      n - r + 1 <= n - 2
          ? homology_dims(skeleton_pair_complex(n, n - r + 1))
          : std::vector<int>(n - 1, 0);
  report.wedge_cokernel_dim = wedge_with_ones_cokernel(r, n);

  // Which skeleton convention reproduces the fibre boundary complex of the
  // one-cell subdivision?
  const LatticePolytope base = hypersimplex(r, n);
  const Subdivision trivial =
      regular_subdivision(base, constant_heights(base));
  const std::vector<int> h_ob = cohomology_OB(trivial);
  auto matches = [&](const std::vector<int>& dims) {
    for (int i = 0; i < r - 1; ++i) {
      const int k = n - 2 - i;
      const int value = k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
      if (value != h_ob[i]) return false;
    }
    return true;
  };
  if (matches(report.dims_low)) {
    report.matching = 0;
  } else if (matches(report.dims_literal)) {
    report.matching = 1;
  } else {
    report.matching = -1;
  }
  return report;
}

bool graded_exactness_check(const Subdivision& s, const GluingData& t,
                            const WeightPoint& a) {
  if (a.is_zero()) throw BadParams("weight must be nonzero");
  const int r = s.level();
  const long long level = a.level(r);
  if (level < 0) throw BadParams("weight is not over the base");
  {
    QVec q(a.a.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = Rat(Int(a.a[i]), Int(level));
    }
    if (!hrep_contains(s.base_hrep, q)) {
      throw BadParams("weight is not over the base");
    }
  }
  std::string why;
  if (!cocycle_ok(s, t, static_cast<int>(level), &why)) throw BadGluing(why);

  // Interior faces whose cone contains the weight, graded by codimension.
  const int top = s.dim();
  std::vector<int> keep;
  std::map<int, int> slot;
  std::vector<int> degree_size(top + 1, 0);
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    if (s.face_on_base_boundary(static_cast<int>(f))) continue;
    const HRep h = face_hrep(s.poset, static_cast<int>(f));
    QVec q(a.a.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = Rat(Int(a.a[i]), Int(level));
    }
    if (!hrep_contains(h, q)) continue;
    keep.push_back(static_cast<int>(f));
    slot[static_cast<int>(f)] = degree_size[top - s.poset.faces[f].dim]++;
  }
  if (keep.empty()) return false;

  // Cochain maps D^c -> D^{c+1} with incidence signs scaled by gluing
  // characters.
  std::vector<RationalMatrix> d(top + 1);
  for (int c = 0; c + 1 <= top; ++c) {
    d[c] = RationalMatrix(degree_size[c + 1], degree_size[c]);
  }
  for (int f : keep) {
    const int c = top - s.poset.faces[f].dim;
    for (int g : s.poset.facets_of[f]) {
      const auto it = slot.find(g);
      if (it == slot.end()) continue;
      d[c].at(it->second, slot.at(f)) =
          Rat(incidence(s.poset, f, g)) * character_value(t.at(f, g), a.a);
    }
  }

  std::vector<std::size_t> ranks(top + 2, 0);
  for (int c = 0; c < top; ++c) ranks[c + 1] = rank(d[c]);
  for (int c = 0; c <= top; ++c) {
    const int h = degree_size[c] - static_cast<int>(ranks[c]) -
                  static_cast<int>(ranks[c + 1]);
    if (c == 0 && h != 1) return false;
    if (c > 0 && h != 0) return false;
  }
  return true;
}

}  // namespace visco
