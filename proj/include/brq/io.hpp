#pragma once

// JSON documents: groups, modules, actions and reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brq/brauer.hpp"
#include "brq/cohomology.hpp"
#include "brq/cyclotomic.hpp"
#include "brq/group.hpp"

namespace brq::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; malformed JSON raises ValidationError.
Json load_json(const std::string& path);
Json parse_json(const std::string& text);

FiniteGroup parse_group(const Json& j, const Limits& limits = Limits::defaults());

/// An integer, a string such as "1/2", "z8", "-z4^3", "2 - 3*z3^2", or
/// {"m": conductor, "c": [[num, den], ...]}.
CycloNumber parse_cyclo(const Json& j);
CycloMatrix parse_cyclo_matrix(const Json& j, const std::string& what);
std::vector<Vec> parse_int_matrix(const Json& j, const std::string& what);

/// Matrices keyed by generator position ({"0": M, ...}) or listed in order.
/// Missing generators act trivially when `identity_default` is set.
std::vector<Json> generator_entries(const Json& j, const FiniteGroup& g, bool identity_default, const std::string& what);

GModule parse_module(const Json& j, const FiniteGroup& g);

/// A single input document: a group alone, or {"group": ..., "module": ...,
/// "projective": ..., "correlation": ..., "toric": ..., "pic": ..., "flags": ...}.
struct Document {
  FiniteGroup group;
  std::optional<GModule> module;
  std::optional<SemilinearAction> semilinear;
  std::optional<GModule> toric;
  std::optional<GModule> pic;
  std::optional<bool> fixed_point;
};
Document parse_document(const Json& j, const Limits& limits = Limits::defaults());

Json cyclo_json(const CycloNumber& x);
Json structure_json(const AbelianStructure& s, bool witnesses);
Json cochain_json(const Cochain& c);
Json cohomology_json(const CohomologyGroup& h, bool witnesses);
Json report_json(const BrauerReport& r, bool witnesses);
Json group_info_json(const FiniteGroup& g, bool subgroups);

std::string report_text(const BrauerReport& r, bool witnesses);
std::string cohomology_text(const CohomologyGroup& h, bool witnesses);
std::string structure_text(const AbelianStructure& s);
std::string group_info_text(const FiniteGroup& g, bool subgroups);

std::string factors_text(const std::vector<std::int64_t>& f);

}  // namespace brq::io
