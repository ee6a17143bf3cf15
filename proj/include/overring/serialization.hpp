#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "overring/classification.hpp"
#include "overring/common.hpp"
#include "overring/lattice.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/semigroup.hpp"
#include "overring/tower.hpp"

namespace overring::serialization {

/// Insertion-ordered, so emitted key order is fixed by the writer.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Anything a descriptor file can name.
using Subject = std::variant<numsg::NumericalSemigroup, tower::TowerDescriptor, tower::PullbackSquare>;

/// Parses a descriptor document:
///   {"kind":"numsg","generators":[2,5]}
///   {"kind":"tower","base":{...},"valuation_dims":[1,2]}
///   {"kind":"prufer_y","dim":3}
///   {"kind":"pullback","base_is_field":true,"top":"valuation"}
/// Base kinds: "trivial", "field_ext", "numsg". Throws std::invalid_argument
/// naming the offending field or violated invariant.
Subject parse_descriptor(std::string_view text);
Subject descriptor_from_json(const Json& j);
Json to_json(const Subject& s);

/// Integer, "infinite" or "unsupported".
Json to_json(const Count& c);
Count count_from_json(const Json& j);

/// true, false or "unknown".
Json to_json(Tri t);
Tri tri_from_json(const Json& j);

/// Explicit: {"nodes":[...],"edges":[[lo,hi],...],"flags":{...}} with
/// bottom and top ids. Opaque: {"opaque":true,"node_count":...,...}.
Json to_json(const lattice::OverringLattice& lat);
lattice::OverringLattice lattice_from_json(const Json& j);

/// {"min":m,"small":[...],"from":t}: small ∪ [t, ∞).
Json to_json(const numsg::RelativeIdeal& e);

/// Report document carrying "schema":1.
Json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);

/// Compact single-line rendering.
std::string dump(const Json& j);

}  // namespace overring::serialization
