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

#pragma once

#include <json.hpp>
#include <string>

#include "visco/arrangement.hpp"
#include "visco/matroid.hpp"
#include "visco/pluecker.hpp"
#include "visco/stanley.hpp"
#include "visco/subdivision.hpp"

namespace visco {

using Json = nlohmann::json;

// All external formats use 1-based indices and rationals as "p/q" strings
// (plain integers also accepted on input).

Json rational_to_json(const Rat& x);
Rat rational_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

Json pluecker_to_json(const PlueckerVector& p);

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json polytope_to_json(const LatticePolytope& p);

Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

/// Heights keyed by r-subset strings "i1,...,ir" over the base vertices.
HeightFunction heights_from_json(const Json& j, const LatticePolytope& base);
Json heights_to_json(const HeightFunction& w, const LatticePolytope& base);

/// Gluing entries: {"cell": k, "facet": [[...],...], "t": [rationals]} with
/// k a 1-based maximal-cell index and the facet given by its vertex list.
/// Pairs not listed default to the identity.
GluingData gluing_from_json(const Json& j, const Subdivision& s);

/// Named inputs: generic-2-4, generic-3-6, nine-lines-3-9 (arrangements)
/// and split-2-4 (a subdivision).
bool is_arrangement_preset(const std::string& name);
Arrangement preset_arrangement(const std::string& name);
Subdivision preset_subdivision(const std::string& name);

/// FNV-1a 64-bit content digest, hex-encoded; stamps inputs into reports.
std::string content_digest(const std::string& bytes);

}  // namespace visco
