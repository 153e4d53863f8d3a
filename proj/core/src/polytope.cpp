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

#include "visco/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "visco/errors.hpp"

namespace visco {

int LatticePolytope::dim() const {
  if (vertices.empty()) return -1;
  RationalMatrix m(0, ambient);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    QVec d(ambient);
    for (int j = 0; j < ambient; ++j) d[j] = vertices[i][j] - vertices[0][j];
    m.push_row(d);
  }
  return static_cast<int>(rank(m));
}

LatticePolytope hypersimplex(int r, int n) {
  if (r < 1 || r > n - 1) throw BadParams("hypersimplex needs 1 <= r <= n-1");
  LatticePolytope p;
  p.ambient = n;
  for (const Subset& s : k_subsets(n, r)) {
    IVec v(n, 0);
    for (int i : s) v[i] = 1;
    p.vertices.push_back(std::move(v));
  }
  return p;
}

int FacePoset::index_of(const Subset& vertex_indices) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].vertex_indices == vertex_indices) return static_cast<int>(i);
  }
  return -1;
}

QVec FacePoset::barycenter(int face) const {
  const Subset& vs = faces[face].vertex_indices;
  const std::size_t m = vertex_coords.front().size();
  QVec b(m, Rat(0));
  for (int vi : vs) {
    for (std::size_t j = 0; j < m; ++j) b[j] += vertex_coords[vi][j];
  }
  const Rat inv(1, static_cast<long>(vs.size()));
  for (Rat& x : b) x *= inv;
  return b;
}

std::vector<int> FacePoset::faces_of_dim(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim == d) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

int span_dim(const std::vector<QVec>& coords, const Subset& vs) {
  if (vs.empty()) return -1;
  RationalMatrix m(0, coords.front().size());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    QVec d(coords.front().size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = coords[vs[i]][j] - coords[vs[0]][j];
    }
    m.push_row(d);
  }
  return static_cast<int>(rank(m));
}

std::vector<QVec> greedy_basis(const std::vector<QVec>& coords,
                               const Subset& vs, int dim) {
  std::vector<QVec> basis;
  RationalMatrix acc(0, coords.front().size());
  for (std::size_t i = 1; i < vs.size() && static_cast<int>(basis.size()) < dim;
       ++i) {
    QVec d(coords.front().size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = coords[vs[i]][j] - coords[vs[0]][j];
    }
    RationalMatrix trial = acc;
    trial.push_row(d);
    if (rank(trial) > acc.rows()) {
      acc = std::move(trial);
      basis.push_back(std::move(d));
    }
  }
  return basis;
}

// All faces of one cell, as sorted global vertex-index sets (the cell
// itself included), via facet enumeration and intersection closure.
std::set<Subset> cell_faces(const std::vector<QVec>& coords,
                            const Subset& cell) {
  VRep vrep;
  for (int vi : cell) vrep.points.push_back(coords[vi]);
  const HRep hrep = v_to_h(vrep);

  std::vector<Subset> facet_sets;
  for (const auto& [a, b] : hrep.ineqs) {
    Subset tight;
    for (int vi : cell) {
      if (dot(a, coords[vi]) == b) tight.push_back(vi);
    }
    facet_sets.push_back(std::move(tight));
  }

  std::set<Subset> all;
  all.insert(cell);
  std::vector<Subset> queue{cell};
  while (!queue.empty()) {
    const Subset f = std::move(queue.back());
    queue.pop_back();
    for (const Subset& t : facet_sets) {
      Subset g;
      std::set_intersection(f.begin(), f.end(), t.begin(), t.end(),
                            std::back_inserter(g));
      if (g.empty() || g == f) continue;
      if (all.insert(g).second) queue.push_back(g);
    }
  }
  return all;
}

}  // namespace

FacePoset complex_poset(const std::vector<QVec>& vertex_coords,
                        const std::vector<Subset>& cells) {
  if (cells.empty()) throw BadParams("complex without cells");
  FacePoset poset;
  poset.vertex_coords = vertex_coords;

  std::set<Subset> faces;
  std::set<std::pair<Subset, Subset>> cover_pairs;
  for (const Subset& cell : cells) {
    const std::set<Subset> local = cell_faces(vertex_coords, cell);
    std::map<int, std::vector<const Subset*>> by_dim;
    for (const Subset& f : local) {
      faces.insert(f);
      by_dim[span_dim(vertex_coords, f)].push_back(&f);
    }
    for (const auto& [d, upper] : by_dim) {
      if (by_dim.count(d - 1) == 0) continue;
      for (const Subset* f : upper) {
        for (const Subset* g : by_dim.at(d - 1)) {
          if (std::includes(f->begin(), f->end(), g->begin(), g->end())) {
            cover_pairs.emplace(*f, *g);
          }
        }
      }
    }
  }

  std::vector<std::pair<int, Subset>> graded;
  for (const Subset& f : faces) {
    graded.emplace_back(span_dim(vertex_coords, f), f);
  }
  std::sort(graded.begin(), graded.end());
  poset.top_dim = graded.back().first;

  std::map<Subset, int> index;
  for (const auto& [d, f] : graded) {
    index[f] = static_cast<int>(poset.faces.size());
    poset.faces.push_back(Face{f, d});
    poset.orientations.push_back(greedy_basis(vertex_coords, f, d));
  }
  poset.facets_of.assign(poset.faces.size(), {});
  for (const auto& [f, g] : cover_pairs) {
    poset.facets_of[index.at(f)].push_back(index.at(g));
  }
  align_orientations(poset);
  return poset;
}

FacePoset face_poset(const LatticePolytope& p) {
  std::vector<QVec> coords;
  coords.reserve(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    coords.push_back(p.vertex_q(static_cast<int>(i)));
  }
  Subset all(p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) all[i] = static_cast<int>(i);
  return complex_poset(coords, {all});
}

int incidence(const FacePoset& poset, int face, int facet) {
  const auto& covers = poset.facets_of[face];
  if (std::find(covers.begin(), covers.end(), facet) == covers.end()) {
    throw NotFacet("not a facet of the given face");
  }
  const int k = poset.faces[face].dim;
  const std::vector<QVec>& bf = poset.orientations[face];
  const std::vector<QVec>& bg = poset.orientations[facet];

  const RationalMatrix basis_t = RationalMatrix::from_rows(bf).transposed();
  auto coords_in_f = [&](const QVec& d) {
    QVec c;
    if (!solve(basis_t, d, c)) throw Error("direction outside face span");
    return c;
  };

  QVec w_out = poset.barycenter(facet);
  const QVec bary_f = poset.barycenter(face);
  for (std::size_t j = 0; j < w_out.size(); ++j) w_out[j] -= bary_f[j];

  RationalMatrix c(k, k);
  const QVec w = coords_in_f(w_out);
  for (int i = 0; i < k; ++i) c.at(i, 0) = w[i];
  for (int col = 1; col < k; ++col) {
    const QVec g = coords_in_f(bg[col - 1]);
    for (int i = 0; i < k; ++i) c.at(i, col) = g[i];
  }
  const Rat d = determinant(c);
  if (d == 0) throw Error("degenerate incidence");
  return d > 0 ? 1 : -1;
}

void align_orientations(FacePoset& poset) {
  const std::vector<int> tops = poset.faces_of_dim(poset.top_dim);
  if (tops.empty() || poset.top_dim <= 0) return;

  auto flip = [&poset](int face) {
    auto& basis = poset.orientations[face];
    for (Rat& x : basis.back()) x = -x;
  };

  // Orient every top cell compatibly with the first one.
  const RationalMatrix ref_t =
      RationalMatrix::from_rows(poset.orientations[tops.front()]).transposed();
  for (std::size_t idx = 1; idx < tops.size(); ++idx) {
    const int cell = tops[idx];
    RationalMatrix change(poset.top_dim, poset.top_dim);
    bool same_span = true;
    for (int col = 0; col < poset.top_dim && same_span; ++col) {
      QVec c;
      if (!solve(ref_t, poset.orientations[cell][col], c)) {
        same_span = false;
        break;
      }
      for (int i = 0; i < poset.top_dim; ++i) change.at(i, col) = c[i];
    }
    if (same_span && determinant(change) < 0) flip(cell);
  }

  // Codimension-1 faces on the boundary of the support (exactly one
  // containing cell) receive the orientation induced from that cell.
  if (poset.top_dim < 2) return;
  for (int g : poset.faces_of_dim(poset.top_dim - 1)) {
    std::vector<int> carriers;
    for (int f : tops) {
      const auto& fs = poset.facets_of[f];
      if (std::find(fs.begin(), fs.end(), g) != fs.end()) carriers.push_back(f);
    }
    if (carriers.size() == 1 && incidence(poset, carriers.front(), g) < 0) {
      flip(g);
    }
  }
}

HRep face_hrep(const FacePoset& poset, int face) {
  VRep v;
  for (int vi : poset.faces[face].vertex_indices) {
    v.points.push_back(poset.vertex_coords[vi]);
  }
  return v_to_h(v);
}

}  // namespace visco
