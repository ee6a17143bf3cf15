#include "overring/serialization.hpp"

#include <stdexcept>
#include <utility>

namespace overring::serialization {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("descriptor: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) fail(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<int> int_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(std::string("field \"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

numsg::NumericalSemigroup semigroup_from(const Json& j) {
  const auto gens = int_list(j, "generators");
  return numsg::NumericalSemigroup::from_generators(gens);
}

tower::Base base_from(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "trivial") return tower::TrivialBase{};
  if (kind == "numsg") return semigroup_from(j);
  if (kind == "field_ext") {
    tower::FieldExtensionSpec f;
    if (j.contains("bottom_name")) f.bottom_name = string_field(j, "bottom_name");
    if (j.contains("top_name")) f.top_name = string_field(j, "top_name");
    f.algebraic = bool_field(j, "algebraic");
    f.trdeg = int_field(j, "trdeg");
    f.minimal = bool_field(j, "minimal");
    f.intermediate_rings = count_from_json(field(j, "intermediate_rings"));
    f.validate();
    return f;
  }
  fail("unknown base kind \"" + kind + "\"");
}

Json base_to_json(const tower::Base& b) {
  Json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, tower::TrivialBase>) {
          j["kind"] = "trivial";
        } else if constexpr (std::is_same_v<T, tower::FieldExtensionSpec>) {
          j["kind"] = "field_ext";
          j["bottom_name"] = v.bottom_name;
          j["top_name"] = v.top_name;
          j["algebraic"] = v.algebraic;
          j["trdeg"] = v.trdeg;
          j["minimal"] = v.minimal;
          j["intermediate_rings"] = to_json(v.intermediate_rings);
        } else if constexpr (std::is_same_v<T, numsg::NumericalSemigroup>) {
          j["kind"] = "numsg";
          j["generators"] = v.generators();
        } else {
          j["kind"] = "prufer_y";
          j["dim"] = v.dim;
        }
      },
      b);
  return j;
}

Json facts_to_json(const SemigroupFacts& f) {
  Json j;
  j["generators"] = f.generators;
  j["gaps"] = f.gaps;
  j["frobenius"] = f.frobenius;
  j["conductor"] = f.conductor;
  j["multiplicity"] = f.multiplicity;
  j["integral_closure"] = f.integral_closure;
  j["conductor_ideal_from"] = f.conductor_ideal_from;
  return j;
}

SemigroupFacts facts_from_json(const Json& j) {
  SemigroupFacts f;
  f.generators = int_list(j, "generators");
  f.gaps = int_list(j, "gaps");
  f.frobenius = int_field(j, "frobenius");
  f.conductor = int_field(j, "conductor");
  f.multiplicity = int_field(j, "multiplicity");
  f.integral_closure = int_list(j, "integral_closure");
  f.conductor_ideal_from = int_field(j, "conductor_ideal_from");
  return f;
}

}  // namespace

Subject parse_descriptor(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON (") + e.what() + ")");
  }
  return descriptor_from_json(j);
}

Subject descriptor_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "numsg") return semigroup_from(j);
  if (kind == "pullback") {
    tower::PullbackSquare p;
    p.base_is_field = bool_field(j, "base_is_field");
    p.top = tower::parse_pullback_top(string_field(j, "top"));
    if (j.contains("name")) p.name = string_field(j, "name");
    return p;
  }
  tower::TowerDescriptor d;
  if (kind == "tower") {
    d.base = base_from(field(j, "base"));
    d.valuation_dims = int_list(j, "valuation_dims");
  } else if (kind == "prufer_y") {
    d.base = tower::PruferY{int_field(j, "dim")};
  } else {
    fail("unknown kind \"" + kind + "\"");
  }
  if (j.contains("name")) d.name = string_field(j, "name");
  d.validate();
  return d;
}

Json to_json(const Subject& s) {
  Json j;
  if (const auto* sg = std::get_if<numsg::NumericalSemigroup>(&s)) {
    j["kind"] = "numsg";
    j["generators"] = sg->generators();
  } else if (const auto* p = std::get_if<tower::PullbackSquare>(&s)) {
    j["kind"] = "pullback";
    j["base_is_field"] = p->base_is_field;
    j["top"] = tower::to_string(p->top);
    j["name"] = p->name;
  } else {
    const auto& d = std::get<tower::TowerDescriptor>(s);
    if (const auto* y = std::get_if<tower::PruferY>(&d.base)) {
      j["kind"] = "prufer_y";
      j["dim"] = y->dim;
    } else {
      j["kind"] = "tower";
      j["base"] = base_to_json(d.base);
      j["valuation_dims"] = d.valuation_dims;
    }
    j["name"] = d.name;
  }
  return j;
}

Json to_json(const Count& c) {
  if (c.is_finite()) return c.value();
  return to_string(c);
}

Count count_from_json(const Json& j) {
  if (j.is_number_integer()) {
    const auto n = j.get<std::int64_t>();
    if (n < 0) fail("counts must be non-negative");
    return Count::finite(n);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "infinite") return Count::infinite();
    if (s == "unsupported") return Count::unsupported();
  }
  fail("count must be an integer, \"infinite\" or \"unsupported\"");
}

Json to_json(Tri t) {
  if (t == Tri::unknown) return "unknown";
  return t == Tri::yes;
}

Tri tri_from_json(const Json& j) {
  if (j.is_boolean()) return to_tri(j.get<bool>());
  if (j.is_string() && j.get<std::string>() == "unknown") return Tri::unknown;
  fail("flag must be true, false or \"unknown\"");
}

Json to_json(const lattice::OverringLattice& lat) {
  Json j;
  if (!lat.is_explicit()) {
    j["opaque"] = true;
    j["node_count"] = to_json(lat.node_count());
    j["chains_finite"] = to_json(lat.chains_finite());
    j["reason"] = lat.opaque_reason();
    return j;
  }
  Json nodes = Json::array();
  Json t_linked = Json::array();
  Json divisorial = Json::array();
  for (std::size_t i = 0; i < lat.nodes().size(); ++i) {
    const auto& n = lat.nodes()[i];
    nodes.push_back(Json{{"id", i}, {"label", n.label}, {"kind", lattice::to_string(n.kind)}});
    t_linked.push_back(n.t_linked);
    divisorial.push_back(to_json(n.divisorial_fraction));
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : lat.hasse_edges()) edges.push_back(Json::array({lo, hi}));
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  j["bottom"] = lat.bottom();
  j["top"] = lat.top();
  j["flags"] = Json{{"t_linked", std::move(t_linked)}, {"divisorial_fraction", std::move(divisorial)}};
  return j;
}

lattice::OverringLattice lattice_from_json(const Json& j) {
  if (j.contains("opaque")) {
    return lattice::OverringLattice::opaque(count_from_json(field(j, "node_count")),
                                            tri_from_json(field(j, "chains_finite")), string_field(j, "reason"));
  }
  const Json& nodes = field(j, "nodes");
  const Json& flags = field(j, "flags");
  const Json& t_linked = field(flags, "t_linked");
  const Json& divisorial = field(flags, "divisorial_fraction");
  if (!nodes.is_array() || !t_linked.is_array() || !divisorial.is_array() || t_linked.size() != nodes.size() ||
      divisorial.size() != nodes.size())
    fail("lattice flags must have one entry per node");
  std::vector<lattice::Node> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (static_cast<std::size_t>(int_field(nodes[i], "id")) != i) fail("lattice node ids must be 0..n-1 in order");
    lattice::Node n;
    n.label = string_field(nodes[i], "label");
    n.kind = lattice::parse_node_kind(string_field(nodes[i], "kind"));
    if (!t_linked[i].is_boolean()) fail("t_linked flags must be booleans");
    n.t_linked = t_linked[i].get<bool>();
    n.divisorial_fraction = tri_from_json(divisorial[i]);
    out.push_back(std::move(n));
  }
  std::vector<std::pair<lattice::NodeId, lattice::NodeId>> rel;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      fail("lattice edges must be [lower, upper] id pairs");
    rel.emplace_back(e[0].get<lattice::NodeId>(), e[1].get<lattice::NodeId>());
  }
  return lattice::OverringLattice::from_relations(std::move(out), rel);
}

Json to_json(const numsg::RelativeIdeal& e) {
  Json j;
  j["min"] = e.min();
  j["small"] = e.small_elements();
  j["from"] = e.tail_start();
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["subject"] = r.subject;
  j["model"] = r.model;
  j["dim"] = r.dim;
  j["dim_v"] = r.dim_v;
  j["overring_count"] = to_json(r.overring_count);
  j["sd_count"] = to_json(r.sd_count);
  j["phi_surjective"] = to_json(r.phi_surjective);
  j["max_chain_length"] = to_json(r.max_chain_length);
  j["is_local"] = to_json(r.is_local);
  j["is_valuation"] = to_json(r.is_valuation);
  j["is_pvd"] = to_json(r.is_pvd);
  j["is_fo"] = to_json(r.is_fo);
  j["is_fc"] = to_json(r.is_fc);
  j["is_t_linkative"] = to_json(r.is_t_linkative);
  j["is_super_t_linkative"] = to_json(r.is_super_t_linkative);
  j["t_linked_under_all_overrings"] = to_json(r.t_linked_under_all_overrings);
  j["conductor_nonzero"] = r.conductor_nonzero;
  if (r.semigroup) j["semigroup"] = facts_to_json(*r.semigroup);
  if (r.lattice) j["lattice"] = to_json(*r.lattice);
  j["notes"] = r.notes;
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  if (int_field(j, "schema") != kReportSchema) fail("unsupported report schema");
  ClassificationReport r;
  r.subject = string_field(j, "subject");
  r.model = string_field(j, "model");
  r.dim = int_field(j, "dim");
  r.dim_v = int_field(j, "dim_v");
  r.overring_count = count_from_json(field(j, "overring_count"));
  r.sd_count = count_from_json(field(j, "sd_count"));
  r.phi_surjective = tri_from_json(field(j, "phi_surjective"));
  r.max_chain_length = count_from_json(field(j, "max_chain_length"));
  r.is_local = tri_from_json(field(j, "is_local"));
  r.is_valuation = tri_from_json(field(j, "is_valuation"));
  r.is_pvd = tri_from_json(field(j, "is_pvd"));
  r.is_fo = tri_from_json(field(j, "is_fo"));
  r.is_fc = tri_from_json(field(j, "is_fc"));
  r.is_t_linkative = tri_from_json(field(j, "is_t_linkative"));
  r.is_super_t_linkative = tri_from_json(field(j, "is_super_t_linkative"));
  r.t_linked_under_all_overrings = tri_from_json(field(j, "t_linked_under_all_overrings"));
  r.conductor_nonzero = bool_field(j, "conductor_nonzero");
  if (j.contains("semigroup")) r.semigroup = facts_from_json(j["semigroup"]);
  if (j.contains("lattice")) r.lattice = lattice_from_json(j["lattice"]);
  const Json& notes = field(j, "notes");
  if (!notes.is_array()) fail("notes must be an array");
  for (const auto& n : notes) {
    if (!n.is_string()) fail("notes must be strings");
    r.notes.push_back(n.get<std::string>());
  }
  return r;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace overring::serialization
