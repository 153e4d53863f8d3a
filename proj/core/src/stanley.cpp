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

#include "visco/stanley.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "visco/errors.hpp"

namespace visco {

long long WeightPoint::coordinate_sum() const {
  long long s = 0;
  for (long long x : a) s += x;
  return s;
}

long long WeightPoint::level(int r) const {
  const long long s = coordinate_sum();
  if (r <= 0 || s % r != 0) return -1;
  return s / r;
}

bool WeightPoint::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

Rat character_value(const QVec& t, const IVec& a) {
  Rat out = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (long long k = 0; k < a[i]; ++k) out *= t[i];
  }
  return out;
}

GluingData GluingData::identity(const Subdivision& s) {
  GluingData g;
  const QVec ones(s.n(), Rat(1));
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    for (int facet : s.poset.facets_of[f]) {
      g.set(static_cast<int>(f), facet, ones);
    }
  }
  return g;
}

GluingData GluingData::random_coboundary(const Subdivision& s,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 7);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> sign(0, 1);
  auto random_vec = [&](int n) {
    QVec v(n);
    for (Rat& x : v) {
      x = Rat(num(rng), den(rng));
      if (sign(rng)) x = -x;
    }
    return v;
  };
  std::vector<QVec> per_face;
  per_face.reserve(s.poset.faces.size());
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    per_face.push_back(random_vec(s.n()));
  }
  GluingData g;
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    for (int facet : s.poset.facets_of[f]) {
      QVec t(s.n());
      for (int i = 0; i < s.n(); ++i) t[i] = per_face[facet][i] / per_face[f][i];
      g.set(static_cast<int>(f), facet, std::move(t));
    }
  }
  return g;
}

const QVec& GluingData::at(int face, int facet) const {
  const auto it = entries_.find({face, facet});
  if (it == entries_.end()) {
    throw BadGluing("no gluing element for facet pair (" +
                    std::to_string(face) + "," + std::to_string(facet) + ")");
  }
  return it->second;
}

void GluingData::set(int face, int facet, QVec t) {
  for (const Rat& x : t) {
    if (x == 0) throw ZeroScale("gluing element with zero entry");
  }
  entries_[{face, facet}] = std::move(t);
}

namespace {

std::vector<IVec> level_points(int n, int r, int level, int cap) {
  std::vector<IVec> out;
  IVec acc(n, 0);
  const long long target = static_cast<long long>(r) * level;
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == n) {
      if (remaining == 0) out.push_back(acc);
      return;
    }
    const long long hi = std::min<long long>(cap, remaining);
    for (long long v = 0; v <= hi; ++v) {
      acc[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    acc[pos] = 0;
  };
  rec(rec, 0, target);
  return out;
}

QVec scaled_point(const IVec& a, long long level) {
  QVec q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    q[i] = level == 0 ? Rat(a[i]) : Rat(Int(a[i]), Int(level));
  }
  return q;
}

bool cone_contains(const HRep& hull, const IVec& a, long long level) {
  if (level < 0) return false;
  if (level == 0) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
  }
  return hrep_contains(hull, scaled_point(a, level));
}

}  // namespace

std::vector<IVec> cone_lattice_points(const HRep& hull, int n, int r,
                                      int level) {
  if (level == 0) return {IVec(n, 0)};
  std::vector<IVec> out;
  for (IVec& a : level_points(n, r, level, level)) {
    if (cone_contains(hull, a, level)) out.push_back(std::move(a));
  }
  return out;
}

bool cocycle_ok(const Subdivision& s, const GluingData& t, int max_level,
                std::string* why) {
  const int r = s.level();
  // Cache the lattice points of each bottom face encountered.
  std::map<int, std::vector<IVec>> points_cache;
  auto points_of = [&](int face) -> const std::vector<IVec>& {
    auto it = points_cache.find(face);
    if (it != points_cache.end()) return it->second;
    std::vector<IVec> pts;
    const HRep h = face_hrep(s.poset, face);
    for (int d = 0; d <= max_level; ++d) {
      for (IVec& a : cone_lattice_points(h, s.n(), r, d)) {
        pts.push_back(std::move(a));
      }
    }
    return points_cache.emplace(face, std::move(pts)).first->second;
  };

  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    const auto& taus = s.poset.facets_of[f];
    for (std::size_t i = 0; i < taus.size(); ++i) {
      for (std::size_t j = i + 1; j < taus.size(); ++j) {
        const auto& u1 = s.poset.facets_of[taus[i]];
        std::vector<int> common;
        for (int u : s.poset.facets_of[taus[j]]) {
          if (std::find(u1.begin(), u1.end(), u) != u1.end()) {
            common.push_back(u);
          }
        }
        for (int upsilon : common) {
          const QVec& t1a = t.at(static_cast<int>(f), taus[i]);
          const QVec& t1b = t.at(taus[i], upsilon);
          const QVec& t2a = t.at(static_cast<int>(f), taus[j]);
          const QVec& t2b = t.at(taus[j], upsilon);
          for (const IVec& a : points_of(upsilon)) {
            const Rat lhs = character_value(t1a, a) * character_value(t1b, a);
            const Rat rhs = character_value(t2a, a) * character_value(t2b, a);
            if (lhs != rhs) {
              if (why != nullptr) {
                *why = "cocycle fails across face " + std::to_string(f);
              }
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

int graded_dim(const Subdivision& s, const GluingData& t, const WeightPoint& a,
               bool check_gluing) {
  if (static_cast<int>(a.a.size()) != s.n()) {
    throw BadParams("weight dimension mismatch");
  }
  for (long long x : a.a) {
    if (x < 0) throw BadParams("weights are nonnegative");
  }
  const int r = s.level();
  const long long level = a.level(r);
  if (check_gluing) {
    std::string why;
    if (!cocycle_ok(s, t, std::max<int>(1, static_cast<int>(std::max<long long>(level, 0))),
                    &why)) {
      throw BadGluing(why);
    }
  }
  if (level < 0) return 0;

  std::vector<int> carriers;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    if (cone_contains(s.cell_hreps[c], a.a, level)) {
      carriers.push_back(static_cast<int>(c));
    }
  }
  if (carriers.empty()) return 0;

  std::vector<int> cell_face(s.cells.size());
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    cell_face[c] = s.poset.index_of(s.cells[c]);
  }
  std::map<int, int> col_of;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    col_of[carriers[i]] = static_cast<int>(i);
  }

  RationalMatrix conditions(0, carriers.size());
  for (const auto& [tau, cell_a, cell_b] : s.interior_facets()) {
    const bool a_in = col_of.count(cell_a) != 0;
    const bool b_in = col_of.count(cell_b) != 0;
    if (!a_in || !b_in) continue;  // the facet cone misses the weight
    QVec row(carriers.size(), Rat(0));
    row[col_of.at(cell_a)] = character_value(t.at(cell_face[cell_a], tau), a.a);
    row[col_of.at(cell_b)] = -character_value(t.at(cell_face[cell_b], tau), a.a);
    conditions.push_row(row);
  }
  return static_cast<int>(carriers.size() - rank(conditions));
}

HilbertReport hilbert_report(const Subdivision& s, const GluingData& t,
                             int d_max, int outside_samples,
                             std::uint64_t seed) {
  std::string why;
  if (!cocycle_ok(s, t, d_max, &why)) throw BadGluing(why);

  HilbertReport report;
  report.pass = true;
  const int r = s.level();
  const int n = s.n();

  for (int d = 0; d <= d_max; ++d) {
    for (const IVec& a : cone_lattice_points(s.base_hrep, n, r, d)) {
      const int dim = graded_dim(s, t, WeightPoint{a}, false);
      ++report.points_checked;
      if (dim != 1) {
        report.pass = false;
        report.failures.emplace_back(a, dim);
      }
    }
  }

  // Points at a valid level with one coordinate pushed above it cannot lie
  // over the base, so their graded piece must vanish.
  std::mt19937_64 rng(seed);
  int guard = 0;
  while (report.outside_checked < outside_samples && guard < 100 * outside_samples) {
    ++guard;
    const int d = 1 + static_cast<int>(rng() % std::max(1, d_max));
    IVec a(n, 0);
    a[rng() % n] = d + 1;
    long long remaining = static_cast<long long>(r) * d - (d + 1);
    if (remaining < 0) break;  // rank 1: no level-d point exceeds d
    for (int i = 0; remaining > 0; i = (i + 1) % n) {
      ++a[i];
      --remaining;
    }
    const WeightPoint w{a};
    const long long level = w.level(r);
    bool outside = level >= 0;
    if (outside) {
      bool above = false;
      for (long long x : a) above = above || x > level;
      outside = above;
    }
    if (!outside) continue;
    const int dim = graded_dim(s, t, w, false);
    ++report.outside_checked;
    if (dim != 0) {
      report.pass = false;
      report.failures.emplace_back(a, dim);
    }
  }
  return report;
}

bool hilbert_check(const Subdivision& s, const GluingData& t, int d_max) {
  return hilbert_report(s, t, d_max).pass;
}

std::optional<WeightPoint> stanley_product(const WeightPoint& a,
                                           const WeightPoint& b,
                                           const Subdivision& s) {
  const int r = s.level();
  const long long la = a.level(r);
  const long long lb = b.level(r);
  if (la < 0 || lb < 0) return std::nullopt;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    if (cone_contains(s.cell_hreps[c], a.a, la) &&
        cone_contains(s.cell_hreps[c], b.a, lb)) {
      IVec sum(a.a.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.a[i] + b.a[i];
      return WeightPoint{std::move(sum)};
    }
  }
  return std::nullopt;
}

bool white_check(const Matroid& m, int d) {
  if (d < 1) throw BadParams("level must be positive");
  const LatticePolytope p = polytope_of(m);
  VRep v;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    v.points.push_back(p.vertex_q(static_cast<int>(i)));
  }
  const HRep hull = v_to_h(v);

  // Sums of exactly d basis vectors, with repetition.
  std::set<IVec> sums;
  IVec acc(m.n, 0);
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      sums.insert(acc);
      return;
    }
    for (std::size_t b = from; b < m.bases.size(); ++b) {
      for (int i : m.bases[b]) ++acc[i];
      self(self, b, left - 1);
      for (int i : m.bases[b]) --acc[i];
    }
  };
  rec(rec, 0, d);

  for (const IVec& a : cone_lattice_points(hull, m.n, m.r, d)) {
    if (sums.count(a) == 0) return false;
  }
  return true;
}

}  // namespace visco
