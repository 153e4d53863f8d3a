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

#include "visco/dd.hpp"

#include <algorithm>
#include <set>

#include "visco/errors.hpp"

namespace visco {

namespace {

// Constraints tight at v among gens[0..count).
RationalMatrix tight_constraints(const QVec& v, const std::vector<QVec>& gens,
                                 int count, int dim) {
  RationalMatrix m(0, dim);
  for (int i = 0; i < count; ++i) {
    if (dot(gens[i], v) == 0) m.push_row(gens[i]);
  }
  return m;
}

// v is an extreme ray of {x : <gens[i],x> >= 0, i < count} iff the
// constraints tight at v cut out a face of dimension lineality + 1.
bool is_extreme(const QVec& v, const std::vector<QVec>& gens, int count,
                int dim, std::size_t lineality_dim) {
  return rank(tight_constraints(v, gens, count, dim)) ==
         static_cast<std::size_t>(dim) - lineality_dim - 1;
}

// Scale-only canonical representative: coprime integer entries, direction
// preserved (primitive() would flip the sign of the leading entry).
QVec canonical_ray(const QVec& v) {
  QVec p = primitive(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if ((v[i] > 0) != (p[i] > 0)) {
        for (Rat& x : p) x = -x;
      }
      break;
    }
  }
  return p;
}

// Deduplicates (as canonical rays) and drops non-extreme rays.
void prune(std::vector<QVec>& rays, const std::vector<QVec>& gens, int count,
           int dim, std::size_t lineality_dim) {
  std::set<QVec> keep;
  for (const QVec& r : rays) {
    QVec p = canonical_ray(r);
    if (keep.count(p)) continue;
    if (is_extreme(p, gens, count, dim, lineality_dim)) keep.insert(std::move(p));
  }
  rays.assign(keep.begin(), keep.end());
}

}  // namespace

ConeRays cone_from_inequalities(const std::vector<QVec>& gens, int dim) {
  std::vector<QVec> lineality;
  for (int i = 0; i < dim; ++i) {
    QVec e(dim, Rat(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<QVec> rays;

  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    const QVec& g = gens[gi];
    std::size_t hit = lineality.size();
    for (std::size_t k = 0; k < lineality.size(); ++k) {
      if (dot(lineality[k], g) != 0) {
        hit = k;
        break;
      }
    }
    if (hit < lineality.size()) {
      // The constraint slices the lineality space: one direction becomes a
      // ray, the rest of the lineality is projected into the hyperplane,
      // and existing rays are shifted back into the feasible side.
      QVec l0 = lineality[hit];
      Rat l0g = dot(l0, g);
      if (l0g < 0) {
        for (Rat& x : l0) x = -x;
        l0g = -l0g;
      }
      lineality.erase(lineality.begin() + static_cast<long>(hit));
      for (QVec& l : lineality) {
        const Rat f = dot(l, g) / l0g;
        for (int j = 0; j < dim; ++j) l[j] -= f * l0[j];
      }
      for (QVec& r : rays) {
        const Rat f = dot(r, g) / l0g;
        for (int j = 0; j < dim; ++j) r[j] -= f * l0[j];
      }
      rays.push_back(std::move(l0));
    } else {
      std::vector<QVec> plus, zero, minus;
      for (QVec& r : rays) {
        const Rat val = dot(r, g);
        if (val > 0) {
          plus.push_back(std::move(r));
        } else if (val == 0) {
          zero.push_back(std::move(r));
        } else {
          minus.push_back(std::move(r));
        }
      }
      std::vector<QVec> next = std::move(zero);
      for (const QVec& p : plus) {
        const Rat pg = dot(p, g);
        for (const QVec& mr : minus) {
          const Rat mg = dot(mr, g);
          QVec w(dim);
          bool zero_vec = true;
          for (int j = 0; j < dim; ++j) {
            w[j] = pg * mr[j] - mg * p[j];
            zero_vec = zero_vec && w[j] == 0;
          }
          if (!zero_vec) next.push_back(std::move(w));
        }
      }
      for (QVec& p : plus) next.push_back(std::move(p));
      rays = std::move(next);
    }
    prune(rays, gens, gi + 1, dim, lineality.size());
  }

  ConeRays out;
  out.rays = std::move(rays);
  out.lineality = std::move(lineality);
  return out;
}

namespace {

// Left inverse of a full-column-rank matrix b (m x k): l with l b = I_k.
RationalMatrix left_inverse(const RationalMatrix& b) {
  const std::size_t k = b.cols();
  RationalMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat s = 0;
      for (std::size_t t = 0; t < b.rows(); ++t) s += b.at(t, i) * b.at(t, j);
      gram.at(i, j) = s;
    }
  }
  RationalMatrix l(k, b.rows());
  for (std::size_t c = 0; c < b.rows(); ++c) {
    QVec rhs(k), x;
    for (std::size_t i = 0; i < k; ++i) rhs[i] = b.at(c, i);
    if (!solve(gram, rhs, x)) throw Error("left inverse of rank-deficient matrix");
    for (std::size_t i = 0; i < k; ++i) l.at(i, c) = x[i];
  }
  return l;
}

// Canonical primitive scaling of (a, b) preserving the inequality direction.
AffineForm primitive_form(const QVec& a, const Rat& b) {
  QVec joint = a;
  joint.push_back(b);
  joint = primitive(joint);
  int lead = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  const bool flip = lead >= 0 ? (a[lead] > 0) != (joint[lead] > 0)
                              : (b != 0 && (b > 0) != (joint.back() > 0));
  if (flip) {
    for (Rat& x : joint) x = -x;
  }
  const Rat b_out = joint.back();
  joint.pop_back();
  return {joint, b_out};
}

}  // namespace

HRep v_to_h(const VRep& v) {
  if (v.points.empty()) throw BadParams("polyhedron without points");
  const int m = static_cast<int>(v.points.front().size());
  const QVec& p0 = v.points.front();

  std::vector<QVec> dirs;
  for (const QVec& p : v.points) {
    QVec d(m);
    for (int j = 0; j < m; ++j) d[j] = p[j] - p0[j];
    dirs.push_back(std::move(d));
  }
  for (const QVec& ray : v.rays) dirs.push_back(ray);

  const std::vector<QVec> basis =
      row_space_basis(RationalMatrix::from_rows(dirs));
  const int k = static_cast<int>(basis.size());

  HRep out;
  for (const QVec& c : kernel_basis(RationalMatrix::from_rows(dirs))) {
    out.eqs.push_back(primitive_form(c, dot(c, p0)));
  }
  if (k == 0) return out;  // a single point

  const RationalMatrix bt = RationalMatrix::from_rows(basis).transposed();
  const RationalMatrix linv = left_inverse(bt);  // k x m
  auto coords = [&](const QVec& x, bool shift) {
    QVec y(k);
    for (int i = 0; i < k; ++i) {
      Rat s = 0;
      for (int j = 0; j < m; ++j) {
        s += linv.at(i, j) * (shift ? x[j] - p0[j] : x[j]);
      }
      y[i] = s;
    }
    return y;
  };

  std::vector<QVec> gens;
  for (const QVec& p : v.points) {
    QVec g = coords(p, true);
    g.insert(g.begin(), Rat(1));
    gens.push_back(std::move(g));
  }
  for (const QVec& ray : v.rays) {
    QVec g = coords(ray, false);
    g.insert(g.begin(), Rat(0));
    gens.push_back(std::move(g));
  }

  const ConeRays dual = cone_from_inequalities(gens, k + 1);
  for (const QVec& f : dual.rays) {
    // f = (c, a): validity reads c + a.y >= 0 in hull coordinates.
    QVec a_hull(f.begin() + 1, f.end());
    bool vacuous = true;
    for (const Rat& x : a_hull) vacuous = vacuous && x == 0;
    if (vacuous) continue;  // the far face, not a facet
    QVec a_amb(m, Rat(0));
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < k; ++i) a_amb[j] += linv.at(i, j) * a_hull[i];
    }
    const Rat b = dot(a_amb, p0) - f[0];
    out.ineqs.push_back(primitive_form(a_amb, b));
  }
  std::sort(out.ineqs.begin(), out.ineqs.end());
  return out;
}

VRep h_to_v(const HRep& h) {
  int m = -1;
  for (const auto& [a, b] : h.ineqs) m = static_cast<int>(a.size());
  for (const auto& [a, b] : h.eqs) m = static_cast<int>(a.size());
  if (m < 0) throw BadParams("empty H-representation");

  std::vector<QVec> gens;
  auto push = [&gens, m](const QVec& a, const Rat& b, bool both) {
    QVec g(m + 1);
    g[0] = -b;
    for (int j = 0; j < m; ++j) g[j + 1] = a[j];
    gens.push_back(g);
    if (both) {
      for (Rat& x : g) x = -x;
      gens.push_back(std::move(g));
    }
  };
  for (const auto& [a, b] : h.ineqs) push(a, b, false);
  for (const auto& [a, b] : h.eqs) push(a, b, true);
  {
    QVec t(m + 1, Rat(0));
    t[0] = 1;
    gens.push_back(std::move(t));
  }

  const ConeRays cone = cone_from_inequalities(gens, m + 1);
  if (!cone.lineality.empty()) throw Error("unbounded lineality in h_to_v");
  VRep out;
  for (const QVec& z : cone.rays) {
    if (z[0] > 0) {
      QVec p(m);
      for (int j = 0; j < m; ++j) p[j] = z[j + 1] / z[0];
      out.points.push_back(std::move(p));
    } else {
      out.rays.emplace_back(z.begin() + 1, z.end());
    }
  }
  return out;
}

bool hrep_contains(const HRep& h, const QVec& x) {
  for (const auto& [a, b] : h.eqs) {
    if (dot(a, x) != b) return false;
  }
  for (const auto& [a, b] : h.ineqs) {
    if (dot(a, x) < b) return false;
  }
  return true;
}

}  // namespace visco
