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

#include "visco/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "visco/errors.hpp"

namespace visco {

namespace {

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string("expected integer for ") + what);
  }
  return j.get<int>();
}

Subset subset_from_json(const Json& j, int n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("expected array for ") + what);
  Subset s;
  for (const Json& e : j) {
    const int v = int_from_json(e, what);
    if (v < 1 || v > n) {
      throw ParseError(std::string("index out of range in ") + what);
    }
    s.push_back(v - 1);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ParseError(std::string("repeated index in ") + what);
  }
  return s;
}

Json subset_to_json(const Subset& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

}  // namespace

Json rational_to_json(const Rat& x) { return format_rational(x); }

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as string or integer");
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_json(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix");
  std::vector<QVec> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw ParseError("expected a matrix row");
    QVec r;
    for (const Json& e : row) r.push_back(rational_from_json(e));
    rows.push_back(std::move(r));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("ragged matrix");
    }
  }
  return RationalMatrix::from_rows(rows);
}

Json arrangement_to_json(const Arrangement& a) {
  return Json{{"r", a.r}, {"n", a.n}, {"forms", matrix_to_json(a.forms)}};
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("n") ||
      !j.contains("forms")) {
    throw ParseError("arrangement needs fields r, n, forms");
  }
  Arrangement a;
  a.r = int_from_json(j.at("r"), "r");
  a.n = int_from_json(j.at("n"), "n");
  a.forms = matrix_from_json(j.at("forms"));
  if (a.r < 1 || a.n < a.r) throw ParseError("need n >= r >= 1");
  if (static_cast<int>(a.forms.rows()) != a.n ||
      static_cast<int>(a.forms.cols()) != a.r) {
    throw ParseError("forms must be an n x r matrix");
  }
  return a;
}

Json pluecker_to_json(const PlueckerVector& p) {
  Json coords = Json::array();
  for (const Rat& x : p.coords) coords.push_back(rational_to_json(x));
  Json subsets = Json::array();
  for (const Subset& s : k_subsets(p.n, p.r)) subsets.push_back(subset_to_json(s));
  return Json{{"r", p.r}, {"n", p.n}, {"coords", coords}, {"subsets", subsets}};
}

Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (const Subset& b : m.bases) bases.push_back(subset_to_json(b));
  return Json{{"n", m.n}, {"r", m.r}, {"bases", bases}};
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") ||
      !j.contains("bases")) {
    throw ParseError("matroid needs fields n, r, bases");
  }
  Matroid m;
  m.n = int_from_json(j.at("n"), "n");
  m.r = int_from_json(j.at("r"), "r");
  for (const Json& b : j.at("bases")) {
    m.bases.push_back(subset_from_json(b, m.n, "basis"));
    if (static_cast<int>(m.bases.back().size()) != m.r) {
      throw ParseError("basis size must equal the rank");
    }
  }
  std::sort(m.bases.begin(), m.bases.end());
  if (!is_basis_family(m.n, m.r, m.bases)) {
    throw ParseError("bases violate the exchange axiom");
  }
  return m;
}

Json polytope_to_json(const LatticePolytope& p) {
  Json verts = Json::array();
  for (const IVec& v : p.vertices) {
    Json row = Json::array();
    for (long long x : v) row.push_back(x);
    verts.push_back(std::move(row));
  }
  return Json{{"ambient", p.ambient}, {"vertices", verts}};
}

namespace {

Subset cell_from_json(const Json& cell, int r, int n) {
  if (!cell.is_array() || cell.empty()) {
    throw ParseError("cell must be a nonempty list of subsets");
  }
  Subset out;
  for (const Json& v : cell) {
    const Subset s = subset_from_json(v, n, "cell vertex");
    if (static_cast<int>(s.size()) != r) {
      throw ParseError("cell vertices must be r-subsets");
    }
    out.push_back(static_cast<int>(subset_rank(s, n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json subdivision_to_json(const Subdivision& s) {
  const int r = s.level();
  const int n = s.n();
  const auto subs = k_subsets(n, r);
  Json cells = Json::array();
  for (const Subset& cell : s.cells) {
    Json c = Json::array();
    for (int vi : cell) c.push_back(subset_to_json(subs[vi]));
    cells.push_back(std::move(c));
  }
  return Json{{"r", r}, {"n", n}, {"cells", cells}};
}

Subdivision subdivision_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("n") ||
      !j.contains("cells")) {
    throw ParseError("subdivision needs fields r, n, cells");
  }
  const int r = int_from_json(j.at("r"), "r");
  const int n = int_from_json(j.at("n"), "n");
  if (r < 1 || r > n - 1) throw ParseError("need 1 <= r <= n-1");
  std::vector<Subset> cells;
  for (const Json& c : j.at("cells")) cells.push_back(cell_from_json(c, r, n));
  if (cells.empty()) throw ParseError("subdivision needs at least one cell");
  return make_subdivision(hypersimplex(r, n), std::move(cells));
}

HeightFunction heights_from_json(const Json& j, const LatticePolytope& base) {
  const Json& map = j.is_object() && j.contains("heights") ? j.at("heights") : j;
  if (!map.is_object()) throw ParseError("heights must be an object");
  HeightFunction w;
  w.values.assign(base.vertices.size(), Rat(0));
  std::vector<bool> seen(base.vertices.size(), false);
  for (const auto& [key, value] : map.items()) {
    std::istringstream in(key);
    Subset s;
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        s.push_back(std::stoi(tok) - 1);
      } catch (const std::exception&) {
        throw ParseError("bad height key '" + key + "'");
      }
    }
    std::sort(s.begin(), s.end());
    IVec vertex(base.ambient, 0);
    for (int i : s) {
      if (i < 0 || i >= base.ambient) throw ParseError("bad height key '" + key + "'");
      vertex[i] = 1;
    }
    const auto it =
        std::find(base.vertices.begin(), base.vertices.end(), vertex);
    if (it == base.vertices.end()) {
      throw ParseError("height key '" + key + "' is not a base vertex");
    }
    const std::size_t idx = it - base.vertices.begin();
    w.values[idx] = rational_from_json(value);
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError("height function must cover every vertex");
  }
  return w;
}

Json heights_to_json(const HeightFunction& w, const LatticePolytope& base) {
  Json map = Json::object();
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    std::string key;
    for (int c = 0; c < base.ambient; ++c) {
      if (base.vertices[i][c] == 0) continue;
      if (!key.empty()) key += ',';
      key += std::to_string(c + 1);
    }
    map[key] = rational_to_json(w.values[i]);
  }
  return Json{{"heights", map}};
}

GluingData gluing_from_json(const Json& j, const Subdivision& s) {
  GluingData g = GluingData::identity(s);
  if (j.is_null()) return g;
  const Json& entries = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_array()) throw ParseError("gluing entries must be an array");
  const int r = s.level();
  const int n = s.n();
  for (const Json& e : entries) {
    if (!e.is_object() || !e.contains("cell") || !e.contains("facet") ||
        !e.contains("t")) {
      throw ParseError("gluing entry needs fields cell, facet, t");
    }
    const int cell = int_from_json(e.at("cell"), "cell") - 1;
    if (cell < 0 || cell >= static_cast<int>(s.cells.size())) {
      throw ParseError("gluing cell index out of range");
    }
    const Subset facet_set = cell_from_json(e.at("facet"), r, n);
    const int face = s.poset.index_of(s.cells[cell]);
    const int facet = s.poset.index_of(facet_set);
    if (face < 0 || facet < 0) throw ParseError("gluing facet is not a face");
    const auto& covers = s.poset.facets_of[face];
    if (std::find(covers.begin(), covers.end(), facet) == covers.end()) {
      throw ParseError("gluing facet is not a facet of the cell");
    }
    QVec t;
    for (const Json& x : e.at("t")) t.push_back(rational_from_json(x));
    if (static_cast<int>(t.size()) != n) {
      throw ParseError("gluing vector must have n entries");
    }
    g.set(face, facet, std::move(t));
  }
  return g;
}

bool is_arrangement_preset(const std::string& name) {
  return name == "generic-2-4" || name == "generic-3-6" ||
         name == "nine-lines-3-9";
}

Arrangement preset_arrangement(const std::string& name) {
  if (name == "generic-2-4") return points_on_line(4);
  if (name == "generic-3-6") return random_generic_arrangement(3, 6, 20260810);
  if (name == "nine-lines-3-9") return nine_lines_fixture();
  throw BadParams("unknown arrangement preset '" + name + "'");
}

Subdivision preset_subdivision(const std::string& name) {
  if (name == "split-2-4") {
    const LatticePolytope p = hypersimplex(2, 4);
    return regular_subdivision(p, split_heights(p));
  }
  throw BadParams("unknown subdivision preset '" + name + "'");
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace visco
