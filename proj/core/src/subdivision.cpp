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

#include "visco/subdivision.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "visco/errors.hpp"

namespace visco {

int Subdivision::level() const {
  long long s = 0;
  for (long long x : base.vertices.front()) s += x;
  return static_cast<int>(s);
}

std::vector<int> Subdivision::cells_containing_face(int face) const {
  const Subset& vs = poset.faces[face].vertex_indices;
  std::vector<int> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (std::includes(cells[c].begin(), cells[c].end(), vs.begin(), vs.end())) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

std::vector<Subdivision::InteriorFacet> Subdivision::interior_facets() const {
  std::vector<InteriorFacet> out;
  for (int f : poset.faces_of_dim(dim() - 1)) {
    const std::vector<int> carriers = cells_containing_face(f);
    if (carriers.size() < 2) continue;
    if (carriers.size() > 2) {
      throw InvalidSubdivision("facet shared by more than two cells");
    }
    out.push_back(InteriorFacet{f, carriers[0], carriers[1]});
  }
  return out;
}

bool Subdivision::face_on_base_boundary(int face) const {
  const Subset& vs = poset.faces[face].vertex_indices;
  for (const auto& [a, b] : base_hrep.ineqs) {
    bool tight = true;
    for (int vi : vs) {
      tight = tight && dot(a, poset.vertex_coords[vi]) == b;
      if (!tight) break;
    }
    if (tight) return true;
  }
  return false;
}

bool Subdivision::face_in_zero_locus(int face) const {
  const Subset& vs = poset.faces[face].vertex_indices;
  for (int i = 0; i < base.ambient; ++i) {
    bool all_zero = true;
    for (int vi : vs) {
      all_zero = all_zero && poset.vertex_coords[vi][i] == 0;
      if (!all_zero) break;
    }
    if (all_zero) return true;
  }
  return false;
}

Subdivision make_subdivision(const LatticePolytope& base,
                             std::vector<Subset> cells) {
  if (cells.empty()) throw BadParams("subdivision without cells");
  for (Subset& c : cells) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty() && (c.front() < 0 ||
                       c.back() >= static_cast<int>(base.vertices.size()))) {
      throw BadIndex("cell vertex index out of range");
    }
  }
  std::sort(cells.begin(), cells.end());

  Subdivision s;
  s.base = base;
  s.cells = std::move(cells);
  std::vector<QVec> coords;
  coords.reserve(base.vertices.size());
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    coords.push_back(base.vertex_q(static_cast<int>(i)));
  }
  s.poset = complex_poset(coords, s.cells);
  VRep base_v;
  base_v.points = coords;
  s.base_hrep = v_to_h(base_v);
  for (const Subset& c : s.cells) {
    VRep v;
    for (int vi : c) v.points.push_back(coords[vi]);
    s.cell_hreps.push_back(v_to_h(v));
  }
  return s;
}

Subdivision regular_subdivision(const LatticePolytope& p,
                                const HeightFunction& w) {
  if (w.values.size() != p.vertices.size()) {
    throw BadParams("height function must cover every vertex");
  }
  const int n = p.ambient;
  VRep lifted;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    QVec x = p.vertex_q(static_cast<int>(i));
    x.push_back(w.values[i]);
    lifted.points.push_back(std::move(x));
  }
  QVec up(n + 1, Rat(0));
  up[n] = 1;
  lifted.rays.push_back(up);

  const HRep hull = v_to_h(lifted);
  std::vector<Subset> cells;
  for (const auto& [a, b] : hull.ineqs) {
    if (a[n] <= 0) continue;  // vertical facet, not part of the lower hull
    Subset cell;
    for (std::size_t i = 0; i < lifted.points.size(); ++i) {
      if (dot(a, lifted.points[i]) == b) cell.push_back(static_cast<int>(i));
    }
    cells.push_back(std::move(cell));
  }
  return make_subdivision(p, std::move(cells));
}

HeightFunction constant_heights(const LatticePolytope& p) {
  return HeightFunction{QVec(p.vertices.size(), Rat(0))};
}

HeightFunction split_heights(const LatticePolytope& p) {
  if (p.ambient < 2) throw BadParams("need at least two coordinates");
  HeightFunction w;
  w.values.reserve(p.vertices.size());
  for (const IVec& v : p.vertices) {
    const long long s = v[0] + v[1];
    w.values.push_back(s >= 1 ? Rat(s - 1) : Rat(1 - s));
  }
  return w;
}

HeightFunction random_heights(const LatticePolytope& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 60);
  HeightFunction w;
  w.values.reserve(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    w.values.push_back(Rat(dist(rng)));
  }
  return w;
}

namespace {

// Pulling triangulation at the smallest vertex, memoized by vertex set.
class Triangulator {
 public:
  explicit Triangulator(const std::vector<QVec>& coords) : coords_(coords) {}

  const std::vector<Subset>& simplices(const Subset& vs) {
    auto it = memo_.find(vs);
    if (it != memo_.end()) return it->second;

    std::vector<Subset> out;
    const int d = dim_of(vs);
    if (static_cast<int>(vs.size()) == d + 1) {
      out.push_back(vs);
    } else {
      VRep v;
      for (int vi : vs) v.points.push_back(coords_[vi]);
      const HRep h = v_to_h(v);
      const int v0 = vs.front();
      for (const auto& [a, b] : h.ineqs) {
        if (dot(a, coords_[v0]) == b) continue;  // facet through the apex
        Subset tight;
        for (int vi : vs) {
          if (dot(a, coords_[vi]) == b) tight.push_back(vi);
        }
        for (const Subset& simplex : simplices(tight)) {
          Subset cone = simplex;
          cone.insert(cone.begin(), v0);
          out.push_back(std::move(cone));
        }
      }
    }
    return memo_.emplace(vs, std::move(out)).first->second;
  }

  int dim_of(const Subset& vs) const {
    RationalMatrix m(0, coords_.front().size());
    for (std::size_t i = 1; i < vs.size(); ++i) {
      QVec d(coords_.front().size());
      for (std::size_t j = 0; j < d.size(); ++j) {
        d[j] = coords_[vs[i]][j] - coords_[vs[0]][j];
      }
      m.push_row(d);
    }
    return static_cast<int>(rank(m));
  }

 private:
  const std::vector<QVec>& coords_;
  std::map<Subset, std::vector<Subset>> memo_;
};

}  // namespace

Rat relative_volume(const Subdivision& s, const Subset& vertex_set) {
  const std::vector<QVec>& coords = s.poset.vertex_coords;
  const int d = s.dim();

  // Base-hull coordinates shared by all cells.
  std::vector<QVec> dirs;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    QVec diff(coords.front().size());
    for (std::size_t j = 0; j < diff.size(); ++j) {
      diff[j] = coords[i][j] - coords[0][j];
    }
    dirs.push_back(std::move(diff));
  }
  const RationalMatrix basis_t =
      RationalMatrix::from_rows(row_space_basis(RationalMatrix::from_rows(dirs)))
          .transposed();
  auto hull_coords = [&](int vi) {
    QVec diff(coords.front().size());
    for (std::size_t j = 0; j < diff.size(); ++j) {
      diff[j] = coords[vi][j] - coords[0][j];
    }
    QVec y;
    if (!solve(basis_t, diff, y)) throw Error("vertex outside base hull");
    return y;
  };

  Triangulator tri(coords);
  Rat total = 0;
  for (const Subset& simplex : tri.simplices(vertex_set)) {
    RationalMatrix m(d, d);
    const QVec y0 = hull_coords(simplex.front());
    for (int i = 1; i <= d; ++i) {
      const QVec yi = hull_coords(simplex[i]);
      for (int j = 0; j < d; ++j) m.at(i - 1, j) = yi[j] - y0[j];
    }
    Rat v = determinant(m);
    total += v < 0 ? -v : v;
  }
  return total;
}

ValidationReport validate(const Subdivision& s) {
  ValidationReport report;
  const int d = s.dim();

  report.spans_ok = true;
  Triangulator tri(s.poset.vertex_coords);
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    if (tri.dim_of(s.cells[c]) != d) {
      report.spans_ok = false;
      report.failures.push_back("cell " + std::to_string(c + 1) +
                                " does not span the base dimension");
    }
  }

  if (report.spans_ok) {
    Subset all(s.base.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Rat base_volume = relative_volume(s, all);
    Rat covered = 0;
    for (const Subset& c : s.cells) covered += relative_volume(s, c);
    report.volume_ok = covered == base_volume;
    if (!report.volume_ok) {
      report.failures.push_back("cell volumes sum to " + covered.str() +
                                ", base volume is " + base_volume.str());
    }
  } else {
    report.volume_ok = false;
    report.failures.push_back("volume check skipped: a cell is degenerate");
  }

  report.common_face_ok = true;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      HRep both = s.cell_hreps[i];
      for (const auto& f : s.cell_hreps[j].ineqs) both.ineqs.push_back(f);
      for (const auto& f : s.cell_hreps[j].eqs) both.eqs.push_back(f);
      VRep meet;
      try {
        meet = h_to_v(both);
      } catch (const Error&) {
        meet = VRep{};
      }
      if (meet.points.empty()) continue;

      auto is_common_face = [&](std::size_t cell_idx) {
        const HRep& h = s.cell_hreps[cell_idx];
        std::vector<AffineForm> tight;
        for (const auto& [a, b] : h.ineqs) {
          bool on_all = true;
          for (const QVec& x : meet.points) on_all = on_all && dot(a, x) == b;
          if (on_all) tight.emplace_back(a, b);
        }
        std::set<QVec> face_points;
        for (int vi : s.cells[cell_idx]) {
          const QVec& x = s.poset.vertex_coords[vi];
          bool on_all = true;
          for (const auto& [a, b] : tight) on_all = on_all && dot(a, x) == b;
          if (on_all) face_points.insert(x);
        }
        const std::set<QVec> meet_points(meet.points.begin(),
                                         meet.points.end());
        return face_points == meet_points;
      };

      if (!is_common_face(i) || !is_common_face(j)) {
        report.common_face_ok = false;
        report.failures.push_back("cells " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) +
                                  " do not meet in a common face");
      }
    }
  }
  return report;
}

namespace {

// The subdivided polytope must be spanned by 0/1 vertices of constant
// coordinate sum to be read as a hypersimplex sub-polytope.
void require_hypersimplex_slice(const Subdivision& s) {
  const int r = s.level();
  for (const IVec& v : s.base.vertices) {
    long long sum = 0;
    for (long long x : v) {
      if (x != 0 && x != 1) throw BadParams("base vertices must be 0/1");
      sum += x;
    }
    if (sum != r) throw BadParams("base vertices must have equal level");
  }
}

Subset vertex_support(const IVec& v) {
  Subset out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

bool is_matroid_decomposition(const Subdivision& s) {
  require_hypersimplex_slice(s);
  const ValidationReport report = validate(s);
  if (!report.ok()) {
    std::string msg = "invalid subdivision";
    for (const std::string& f : report.failures) msg += "; " + f;
    throw InvalidSubdivision(msg);
  }
  for (const Subset& cell : s.cells) {
    std::vector<Subset> supports;
    supports.reserve(cell.size());
    for (int vi : cell) supports.push_back(vertex_support(s.base.vertices[vi]));
    if (!is_matroid_subpolytope(s.level(), s.n(), supports)) return false;
  }
  return true;
}

std::vector<FaceRegion> classify_boundary_faces(const Subdivision& s) {
  std::vector<FaceRegion> out(s.poset.faces.size());
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    const int face = static_cast<int>(f);
    if (s.face_in_zero_locus(face)) {
      out[f] = FaceRegion::ZerosContained;
    } else if (s.face_on_base_boundary(face)) {
      out[f] = FaceRegion::OnesBoundary;
    } else {
      out[f] = FaceRegion::Interior;
    }
  }
  return out;
}

std::vector<int> StrataPoset::count_by_stratum_dim() const {
  int top = -1;
  for (const Stratum& e : elements) top = std::max(top, e.stratum_dim);
  std::vector<int> counts(top + 1, 0);
  for (const Stratum& e : elements) ++counts[e.stratum_dim];
  return counts;
}

StrataPoset strata_poset(const Subdivision& s) {
  if (!is_matroid_decomposition(s)) {
    throw NotMatroidal("strata need a matroid decomposition");
  }
  const int codim_shift = s.n() - s.level();
  StrataPoset out;
  for (std::size_t f = 0; f < s.poset.faces.size(); ++f) {
    if (s.face_in_zero_locus(static_cast<int>(f))) continue;
    const int face_dim = s.poset.faces[f].dim;
    out.elements.push_back(
        Stratum{static_cast<int>(f), face_dim, face_dim - codim_shift});
  }
  return out;
}

Face gamma_face(int r, int n, const Subset& I) {
  if (static_cast<int>(I.size()) != r - 1) {
    throw BadIndex("need an (r-1)-subset");
  }
  if (!std::is_sorted(I.begin(), I.end()) ||
      std::adjacent_find(I.begin(), I.end()) != I.end() ||
      (!I.empty() && (I.front() < 0 || I.back() >= n))) {
    throw BadIndex("subset must be sorted, distinct, in range");
  }
  Face face;
  face.dim = n - r;
  for (int j = 0; j < n; ++j) {
    if (std::binary_search(I.begin(), I.end(), j)) continue;
    Subset vertex = I;
    vertex.push_back(j);
    std::sort(vertex.begin(), vertex.end());
    face.vertex_indices.push_back(
        static_cast<int>(subset_rank(vertex, n)));
  }
  std::sort(face.vertex_indices.begin(), face.vertex_indices.end());
  return face;
}

CellReport cell_containing_gamma(const Subdivision& s, const Subset& I) {
  require_hypersimplex_slice(s);
  const int r = s.level();
  const int n = s.n();
  const Face gamma = gamma_face(r, n, I);

  std::vector<int> carriers;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    if (std::includes(s.cells[c].begin(), s.cells[c].end(),
                      gamma.vertex_indices.begin(),
                      gamma.vertex_indices.end())) {
      carriers.push_back(static_cast<int>(c));
    }
  }
  if (carriers.size() != 1) {
    throw NotUnique("gamma face lies in " + std::to_string(carriers.size()) +
                    " maximal cells");
  }

  CellReport report;
  report.cell = carriers.front();

  // Quotient of the cell's cone at the vertex with support I' = I + {i_r}
  // by the span of the gamma face; in coordinates, project onto the
  // entries indexed by I.
  const int k = r - 1;
  std::set<QVec> gens;
  for (int vi : s.cells[report.cell]) {
    const IVec& v = s.base.vertices[vi];
    QVec g(k);
    bool zero = true;
    for (int t = 0; t < k; ++t) {
      g[t] = Rat(v[I[t]] - 1);
      zero = zero && g[t] == 0;
    }
    if (!zero) gens.insert(std::move(g));
  }

  const std::vector<QVec> gen_list(gens.begin(), gens.end());
  const int cone_dim =
      gen_list.empty()
          ? 0
          : static_cast<int>(rank(RationalMatrix::from_rows(gen_list)));

  const ConeRays dual = cone_from_inequalities(gen_list, k);
  std::vector<QVec> closing = dual.rays;
  for (const QVec& l : dual.lineality) {
    closing.push_back(l);
    QVec neg = l;
    for (Rat& x : neg) x = -x;
    closing.push_back(std::move(neg));
  }
  const ConeRays primal = cone_from_inequalities(closing, k);
  if (!primal.lineality.empty()) {
    throw NotSimplicial("quotient cone contains a line");
  }
  report.cone_generators = primal.rays;
  report.simplicial =
      static_cast<int>(primal.rays.size()) == cone_dim;
  if (!report.simplicial) {
    throw NotSimplicial("quotient cone has " +
                        std::to_string(primal.rays.size()) +
                        " extreme rays in dimension " +
                        std::to_string(cone_dim));
  }

  // The primitive ray generators must span the lattice of the cone's span:
  // the gcd of the maximal minors of the ray matrix is 1.
  if (cone_dim == 0) {
    report.unimodular = true;
    return report;
  }
  const RationalMatrix rays_m = RationalMatrix::from_rows(report.cone_generators);
  Subset row_sel(cone_dim);
  for (int i = 0; i < cone_dim; ++i) row_sel[i] = i;
  Int g = 0;
  for (const Subset& cols : k_subsets(k, cone_dim)) {
    const Rat m = minor_det(rays_m, row_sel, cols);
    g = gcd(g, numerator(m));  // entries are integers
  }
  report.unimodular = g == 1 || g == -1;
  if (!report.unimodular) throw NotUnimodular("cone generators span a sublattice");
  return report;
}

}  // namespace visco
