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

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "visco/errors.hpp"
#include "visco/homology.hpp"
#include "visco/io.hpp"
#include "visco/residue.hpp"

namespace {

using namespace visco;

struct CommandIO {
  std::string input;   // file path, "-" for stdin, or empty
  std::string output;  // file path or empty for stdout
  std::string preset;
  bool pretty = false;
  std::uint64_t seed = 12345;

  std::string raw_bytes;  // filled by load()
};

void add_common(CLI::App* cmd, CommandIO& io, bool with_input = true) {
  if (with_input) {
    cmd->add_option("-i,--input", io.input, "input JSON file, or - for stdin");
    cmd->add_option("--preset", io.preset,
                    "named input: generic-2-4, generic-3-6, nine-lines-3-9, "
                    "split-2-4");
  }
  cmd->add_option("-o,--output", io.output, "report file (default stdout)");
  cmd->add_flag("--pretty", io.pretty, "human-readable tables");
  cmd->add_option("--seed", io.seed, "seed for randomized checks (recorded)");
}

Json load_json(CommandIO& io) {
  if (io.input.empty()) {
    throw ParseError("no input given (use --input or --preset)");
  }
  std::ostringstream buffer;
  if (io.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(io.input);
    if (!in) throw ParseError("cannot open '" + io.input + "'");
    buffer << in.rdbuf();
  }
  io.raw_bytes = buffer.str();
  try {
    return Json::parse(io.raw_bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Arrangement load_arrangement(CommandIO& io) {
  if (!io.preset.empty()) {
    io.raw_bytes = "preset:" + io.preset;
    return preset_arrangement(io.preset);
  }
  return arrangement_from_json(load_json(io));
}

Subdivision load_subdivision(CommandIO& io) {
  if (!io.preset.empty()) {
    io.raw_bytes = "preset:" + io.preset;
    return preset_subdivision(io.preset);
  }
  return subdivision_from_json(load_json(io));
}

int emit(const CommandIO& io, const std::string& command, Json results,
         bool pass, const std::string& pretty_text,
         std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  Json report{{"command", command},
              {"seed", io.seed},
              {"inputs_digest", content_digest(io.raw_bytes)},
              {"results", std::move(results)},
              {"pass", pass},
              {"timings_ms", Json{{"total", elapsed}}}};
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!io.output.empty()) {
    file.open(io.output);
    if (!file) throw Error("cannot write '" + io.output + "'");
    out = &file;
  }
  if (io.pretty) {
    *out << pretty_text;
    *out << (pass ? "PASS" : "FAIL") << "\n";
  } else {
    *out << report.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

Json dims_to_json(const std::vector<int>& dims) {
  Json out = Json::array();
  for (int d : dims) out.push_back(d);
  return out;
}

std::string dims_to_text(const std::vector<int>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

int run_analyze(CommandIO& io) {
  const auto started = std::chrono::steady_clock::now();
  const Arrangement a = load_arrangement(io);
  const bool general = is_general_position(a);
  const Matroid matroid = matroid_from_matrix(a.forms.transposed());
  const bool connected = is_connected(matroid);
  const LatticePolytope polytope = polytope_of(matroid);

  Json nonbases = Json::array();
  for (const Subset& s : k_subsets(a.n, a.r)) {
    if (!std::binary_search(matroid.bases.begin(), matroid.bases.end(), s)) {
      Json row = Json::array();
      for (int v : s) row.push_back(v + 1);
      nonbases.push_back(std::move(row));
    }
  }

  const bool dim_consistent = connected == (polytope.dim() == a.n - 1);
  Json results{{"r", a.r},
               {"n", a.n},
               {"general_position", general},
               {"gm_point", pluecker_to_json(gm_point(a))},
               {"matroid",
                Json{{"bases", matroid.bases.size()},
                     {"connected", connected},
                     {"polytope_dim", polytope.dim()},
                     {"nonbases", nonbases}}},
               {"connected_iff_full_dimensional", dim_consistent}};

  std::ostringstream text;
  text << "arrangement r=" << a.r << " n=" << a.n << "\n"
       << "  general position: " << (general ? "yes" : "no") << "\n"
       << "  bases: " << matroid.bases.size() << " of " << binomial(a.n, a.r)
       << ", dependent r-subsets: " << nonbases.size() << "\n"
       << "  connected: " << (connected ? "yes" : "no") << ", polytope dim "
       << polytope.dim() << "\n";
  return emit(io, "analyze", results, dim_consistent, text.str(), started);
}

int run_subdivide(CommandIO& io, int r, int n, const std::string& heights_path,
                  const std::string& heights_kind,
                  const std::string& emit_path) {
  const auto started = std::chrono::steady_clock::now();
  Subdivision s = [&]() {
    if (!io.preset.empty()) return load_subdivision(io);
    const LatticePolytope base = hypersimplex(r, n);
    HeightFunction w;
    if (!heights_path.empty()) {
      CommandIO hio = io;
      hio.input = heights_path;
      w = heights_from_json(load_json(hio), base);
      io.raw_bytes = hio.raw_bytes;
    } else if (heights_kind == "constant") {
      w = constant_heights(base);
      io.raw_bytes = "heights:constant";
    } else if (heights_kind == "split") {
      w = split_heights(base);
      io.raw_bytes = "heights:split";
    } else if (heights_kind == "random") {
      w = random_heights(base, io.seed);
      io.raw_bytes = "heights:random:" + std::to_string(io.seed);
    } else {
      throw ParseError("give --heights FILE or --kind constant|split|random");
    }
    return regular_subdivision(base, w);
  }();

  const ValidationReport report = validate(s);
  bool matroidal = false;
  if (report.ok()) matroidal = is_matroid_decomposition(s);

  Json failures = Json::array();
  for (const std::string& f : report.failures) failures.push_back(f);
  Json results{{"subdivision", subdivision_to_json(s)},
               {"validation",
                Json{{"spans", report.spans_ok},
                     {"volume", report.volume_ok},
                     {"common_faces", report.common_face_ok},
                     {"failures", failures}}},
               {"matroid_decomposition", matroidal}};

  if (!emit_path.empty()) {
    std::ofstream raw(emit_path);
    if (!raw) throw Error("cannot write '" + emit_path + "'");
    raw << subdivision_to_json(s).dump(2) << "\n";
  }

  std::ostringstream text;
  text << "subdivision of the (" << s.level() << "," << s.n()
       << ") hypersimplex: " << s.cells.size() << " cells\n"
       << "  validation: " << (report.ok() ? "ok" : "FAILED") << "\n"
       << "  matroid decomposition: " << (matroidal ? "yes" : "no") << "\n";
  return emit(io, "subdivide", results, report.ok(), text.str(), started);
}

int run_validate(CommandIO& io) {
  const auto started = std::chrono::steady_clock::now();
  const Subdivision s = load_subdivision(io);
  const ValidationReport report = validate(s);
  Json failures = Json::array();
  for (const std::string& f : report.failures) failures.push_back(f);
  Json results{{"spans", report.spans_ok},
               {"volume", report.volume_ok},
               {"common_faces", report.common_face_ok},
               {"failures", failures}};
  std::ostringstream text;
  text << "spans: " << report.spans_ok << " volume: " << report.volume_ok
       << " common faces: " << report.common_face_ok << "\n";
  for (const std::string& f : report.failures) text << "  " << f << "\n";
  return emit(io, "validate", results, report.ok(), text.str(), started);
}

int run_cohomology(CommandIO& io) {
  const auto started = std::chrono::steady_clock::now();
  const Subdivision s = load_subdivision(io);
  const CohomologyReport rep = cohomology_report(s);
  const int r = s.level();
  const int n = s.n();

  std::vector<int> expect_os(r, 0);
  expect_os[0] = 1;
  std::vector<int> expect_omega(r, 0);
  expect_omega[0] = static_cast<int>(binomial(n - 1, r - 1));
  std::vector<int> expect_ob(r - 1, 0);
  if (r == 2) {
    expect_ob[0] = n;
  } else {
    expect_ob[0] = 1;
    expect_ob[r - 2] = static_cast<int>(binomial(n - 1, r - 1));
  }
  const bool pass = rep.h_os == expect_os && rep.h_ob == expect_ob &&
                    rep.h_omega == expect_omega;

  Json results{
      {"h_structure", dims_to_json(rep.h_os)},
      {"h_boundary", dims_to_json(rep.h_ob)},
      {"h_log_canonical", dims_to_json(rep.h_omega)},
      {"expected",
       Json{{"h_structure", dims_to_json(expect_os)},
            {"h_boundary", dims_to_json(expect_ob)},
            {"h_log_canonical", dims_to_json(expect_omega)}}},
      {"matches_expected", pass}};

  std::ostringstream text;
  text << "cohomology of the (" << r << "," << n << ") fibre with "
       << s.cells.size() << " cells\n"
       << "  structure sheaf   " << dims_to_text(rep.h_os) << "\n"
       << "  boundary          " << dims_to_text(rep.h_ob) << "\n"
       << "  log canonical     " << dims_to_text(rep.h_omega) << " expected "
       << dims_to_text(expect_omega) << "\n";
  return emit(io, "cohomology", results, pass, text.str(), started);
}

int run_hilbert(CommandIO& io, const std::string& gluing_path, int dmax,
                bool coboundary) {
  const auto started = std::chrono::steady_clock::now();
  const Subdivision s = load_subdivision(io);
  GluingData t = GluingData::identity(s);
  std::string gluing_kind = "identity";
  if (coboundary) {
    t = GluingData::random_coboundary(s, io.seed);
    gluing_kind = "coboundary:" + std::to_string(io.seed);
  } else if (!gluing_path.empty()) {
    CommandIO gio = io;
    gio.input = gluing_path;
    t = gluing_from_json(load_json(gio), s);
    gluing_kind = "file:" + gluing_path;
  }
  const HilbertReport rep = hilbert_report(s, t, dmax, 50, io.seed);

  Json failures = Json::array();
  for (const auto& [a, dim] : rep.failures) {
    Json w = Json::array();
    for (long long x : a) w.push_back(x);
    failures.push_back(Json{{"weight", w}, {"graded_dim", dim}});
  }
  Json results{{"d_max", dmax},
               {"gluing", gluing_kind},
               {"points_checked", rep.points_checked},
               {"outside_checked", rep.outside_checked},
               {"failures", failures}};
  std::ostringstream text;
  text << "graded dimensions up to level " << dmax << ": "
       << rep.points_checked << " cone points, " << rep.outside_checked
       << " outside points, " << rep.failures.size() << " failures\n";
  return emit(io, "hilbert", results, rep.pass, text.str(), started);
}

int run_white(CommandIO& io, int d) {
  const auto started = std::chrono::steady_clock::now();
  const Matroid m = matroid_from_json(load_json(io));
  bool pass = true;
  Json per_level = Json::array();
  for (int level = 1; level <= d; ++level) {
    const bool ok = white_check(m, level);
    per_level.push_back(Json{{"d", level}, {"saturated", ok}});
    pass = pass && ok;
  }
  Json results{{"n", m.n}, {"r", m.r}, {"levels", per_level}};
  std::ostringstream text;
  text << "saturation up to level " << d << ": " << (pass ? "holds" : "FAILS")
       << "\n";
  return emit(io, "white", results, pass, text.str(), started);
}

int run_residues(CommandIO& io) {
  const auto started = std::chrono::steady_clock::now();
  const Arrangement a = load_arrangement(io);
  const RationalMatrix res = residue_matrix(a);
  const RationalMatrix incl = inclusion_matrix(a.r, a.n);
  const bool equal = res == incl;
  const bool full_rank = rank(res) == binomial(a.n - 1, a.r - 1);
  Json results{{"r", a.r},
               {"n", a.n},
               {"residue_matrix", matrix_to_json(res)},
               {"equals_inclusion", equal},
               {"rank", rank(res)},
               {"expected_rank", binomial(a.n - 1, a.r - 1)}};
  std::ostringstream text;
  text << "residue matrix " << res.rows() << " x " << res.cols()
       << ", equals inclusion: " << (equal ? "yes" : "no") << ", rank "
       << rank(res) << "\n";
  return emit(io, "residues", results, equal && full_rank, text.str(),
              started);
}

int run_strata(CommandIO& io, const std::string& dot_path) {
  const auto started = std::chrono::steady_clock::now();
  const Subdivision s = load_subdivision(io);
  const StrataPoset sp = strata_poset(s);
  const auto subs = k_subsets(s.n(), s.level());

  auto face_label = [&](int face) {
    Json verts = Json::array();
    for (int vi : s.poset.faces[face].vertex_indices) {
      Json one = Json::array();
      for (int x : subs[vi]) one.push_back(x + 1);
      verts.push_back(std::move(one));
    }
    return verts;
  };

  bool pass = true;
  Json elements = Json::array();
  for (const Stratum& e : sp.elements) {
    pass = pass && e.stratum_dim >= 0;
    elements.push_back(Json{{"vertices", face_label(e.face)},
                            {"face_dim", e.face_dim},
                            {"stratum_dim", e.stratum_dim}});
  }
  Json counts = Json::array();
  for (int c : sp.count_by_stratum_dim()) counts.push_back(c);
  Json results{{"elements", elements}, {"count_by_stratum_dim", counts}};

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw Error("cannot write '" + dot_path + "'");
    dot << "digraph strata {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < sp.elements.size(); ++i) {
      dot << "  s" << i << " [label=\"dim " << sp.elements[i].stratum_dim
          << "\\n" << face_label(sp.elements[i].face).dump() << "\"];\n";
    }
    for (std::size_t i = 0; i < sp.elements.size(); ++i) {
      for (std::size_t j = 0; j < sp.elements.size(); ++j) {
        if (sp.elements[i].face_dim + 1 != sp.elements[j].face_dim) continue;
        const auto& small = s.poset.faces[sp.elements[i].face].vertex_indices;
        const auto& big = s.poset.faces[sp.elements[j].face].vertex_indices;
        if (std::includes(big.begin(), big.end(), small.begin(),
                          small.end())) {
          dot << "  s" << i << " -> s" << j << ";\n";
        }
      }
    }
    dot << "}\n";
  }

  std::ostringstream text;
  text << "strata: " << sp.elements.size() << " elements, by dimension "
       << dims_to_text(sp.count_by_stratum_dim()) << "\n";
  return emit(io, "strata", results, pass, text.str(), started);
}

int run_demo(CommandIO& io) {
  const auto started = std::chrono::steady_clock::now();
  Json steps = Json::array();
  bool pass = true;
  auto step = [&](const std::string& name, bool ok) {
    steps.push_back(Json{{"name", name}, {"pass", ok}});
    pass = pass && ok;
  };
  io.raw_bytes = "demo";

  {
    const Arrangement a = preset_arrangement("generic-2-4");
    const Matroid m = matroid_from_matrix(a.forms.transposed());
    step("generic-2-4 is a connected uniform matroid",
         is_general_position(a) && is_connected(m) &&
             m.bases.size() == binomial(4, 2));
  }
  {
    const Arrangement nine = preset_arrangement("nine-lines-3-9");
    step("nine-lines-3-9 is degenerate", !is_general_position(nine));
  }
  {
    const Subdivision s = preset_subdivision("split-2-4");
    step("split-2-4 is a matroid decomposition",
         validate(s).ok() && is_matroid_decomposition(s));
    step("split-2-4 log canonical sections",
         cohomology_omega(s) == std::vector<int>{3, 0});
    step("split-2-4 graded dimensions to level 3",
         hilbert_check(s, GluingData::random_coboundary(s, io.seed), 3));
  }
  {
    const Arrangement a = preset_arrangement("generic-3-6");
    step("generic-3-6 residue theorem", verify_residue_theorem(a));
  }

  std::ostringstream text;
  for (const Json& s : steps) {
    text << (s.at("pass").get<bool>() ? "  ok  " : " FAIL ")
         << s.at("name").get<std::string>() << "\n";
  }
  return emit(io, "demo", Json{{"steps", steps}}, pass, text.str(), started);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for hypersimplex decompositions, glued toric "
      "algebras, and visible-contour fibres"};
  app.require_subcommand(1);

  CommandIO io_analyze, io_subdivide, io_validate, io_cohomology, io_hilbert,
      io_white, io_residues, io_strata, io_demo;
  int sub_r = 2, sub_n = 4, hilbert_dmax = 3, white_d = 3;
  std::string heights_path, heights_kind, gluing_path, dot_path, emit_path;
  bool hilbert_coboundary = false;

  add_common(
      app.add_subcommand("analyze", "arrangement: position, matroid, orbit"),
      io_analyze);
  auto* subdivide = app.add_subcommand(
      "subdivide", "regular subdivision from heights, with validation");
  add_common(subdivide, io_subdivide);
  subdivide->add_option("--r", sub_r, "hypersimplex rank");
  subdivide->add_option("--n", sub_n, "ground set size");
  subdivide->add_option("--heights", heights_path, "heights JSON file");
  subdivide->add_option("--kind", heights_kind,
                        "built-in heights: constant, split, random");
  subdivide->add_option("--emit", emit_path,
                        "also write the bare subdivision JSON here");
  add_common(app.add_subcommand("validate", "subdivision validity checks"),
             io_validate);
  add_common(
      app.add_subcommand("cohomology", "fibre cohomology against formulas"),
      io_cohomology);
  auto* hilbert =
      app.add_subcommand("hilbert", "graded dimensions of the glued algebra");
  add_common(hilbert, io_hilbert);
  hilbert->add_option("--gluing", gluing_path, "gluing data JSON file");
  hilbert->add_option("--dmax", hilbert_dmax, "largest level checked");
  hilbert->add_flag("--coboundary", hilbert_coboundary,
                    "use random coboundary gluing data from --seed");
  auto* white = app.add_subcommand("white", "semigroup saturation check");
  add_common(white, io_white);
  white->add_option("--d", white_d, "check levels 1..d");
  add_common(
      app.add_subcommand("residues", "residue matrix against the inclusion"),
      io_residues);
  auto* strata = app.add_subcommand("strata", "visible strata of a fibre");
  add_common(strata, io_strata);
  strata->add_option("--dot", dot_path, "write the poset as a DOT graph");
  add_common(app.add_subcommand("demo", "run a representative sample"),
             io_demo, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) return run_analyze(io_analyze);
    if (app.got_subcommand("subdivide")) {
      return run_subdivide(io_subdivide, sub_r, sub_n, heights_path,
                           heights_kind, emit_path);
    }
    if (app.got_subcommand("validate")) return run_validate(io_validate);
    if (app.got_subcommand("cohomology")) return run_cohomology(io_cohomology);
    if (app.got_subcommand("hilbert")) {
      return run_hilbert(io_hilbert, gluing_path, hilbert_dmax,
                         hilbert_coboundary);
    }
    if (app.got_subcommand("white")) return run_white(io_white, white_d);
    if (app.got_subcommand("residues")) return run_residues(io_residues);
    if (app.got_subcommand("strata")) return run_strata(io_strata, dot_path);
    if (app.got_subcommand("demo")) return run_demo(io_demo);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
