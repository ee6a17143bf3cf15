#include "overring/tower.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "overring/numsg/strong_ideals.hpp"

namespace overring::tower {

using lattice::Node;
using lattice::NodeId;
using lattice::NodeKind;
using lattice::OverringLattice;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int layer_dim(const TowerDescriptor& d) {
  return std::accumulate(d.valuation_dims.begin(), d.valuation_dims.end(), 0);
}

bool has_layers(const TowerDescriptor& d) { return !d.valuation_dims.empty(); }

const FieldExtensionSpec* field_base(const TowerDescriptor& d) { return std::get_if<FieldExtensionSpec>(&d.base); }
const numsg::NumericalSemigroup* semigroup_base(const TowerDescriptor& d) {
  return std::get_if<numsg::NumericalSemigroup>(&d.base);
}
const PruferY* prufer_base(const TowerDescriptor& d) { return std::get_if<PruferY>(&d.base); }

// D + M with D a valuation domain of the residue field is again a valuation
// domain; k[[N]] = k[[X]] is a DVR.
bool is_valuation_model(const TowerDescriptor& d) {
  if (std::holds_alternative<TrivialBase>(d.base)) return true;
  const auto* s = semigroup_base(d);
  return s && s->is_naturals();
}

// Lattice under construction. Nodes not yet final: kinds and the top label
// are fixed up at the end.
struct Draft {
  std::vector<Node> nodes;
  std::vector<std::pair<NodeId, NodeId>> relations;
  NodeId bottom = 0;
  NodeId top = 0;
  std::optional<NodeId> v_node;  // first layer's valuation ring, for PVDs
  std::optional<NodeId> intermediate;  // the field strictly between k and K, if any
};

std::optional<Draft> base_draft(const TowerDescriptor& d) {
  Draft dr;
  auto add = [&](std::string label, Tri div) {
    dr.nodes.push_back(Node{std::move(label), NodeKind::tower_node, true, div});
    return dr.nodes.size() - 1;
  };
  auto chain = [&](NodeId lo, NodeId hi) { dr.relations.emplace_back(lo, hi); };

  if (std::holds_alternative<TrivialBase>(d.base)) {
    dr.bottom = dr.top = add("K", Tri::unknown);
    return dr;
  }
  if (const auto* f = field_base(d)) {
    if (!f->intermediate_rings.is_finite() || f->intermediate_rings.value() > 3) return std::nullopt;
    dr.bottom = add(f->bottom_name, Tri::unknown);
    NodeId below_top = dr.bottom;
    if (f->intermediate_rings.value() == 3) {
      dr.intermediate = add("F", Tri::unknown);
      chain(dr.bottom, *dr.intermediate);
      below_top = *dr.intermediate;
    }
    dr.top = add(f->top_name, Tri::unknown);
    chain(below_top, dr.top);
    return dr;
  }
  if (const auto* s = semigroup_base(d)) {
    const OverringLattice lat = lattice::semigroup_lattice(*s);
    dr.nodes = lat.nodes();
    dr.relations = lat.hasse_edges();
    dr.bottom = lat.bottom();
    dr.top = lat.top();
    return dr;
  }
  const int n = std::get<PruferY>(d.base).dim;
  // R ⊂ R_M, R_N ⊂ R_P(n-1) ⊂ ... ⊂ R_P1 ⊂ L
  dr.bottom = add("R", Tri::yes);
  const NodeId rm = add("R_M", Tri::unknown);
  const NodeId rn = add("R_N", Tri::unknown);
  chain(dr.bottom, rm);
  chain(dr.bottom, rn);
  std::vector<NodeId> above{rm, rn};
  for (int j = n - 1; j >= 1; --j) {
    const NodeId p = add("R_P" + std::to_string(j), Tri::unknown);
    for (NodeId a : above) chain(a, p);
    above = {p};
  }
  dr.top = add("L", Tri::no);
  for (NodeId a : above) chain(a, dr.top);
  return dr;
}

struct Built {
  OverringLattice lattice;
  std::optional<NodeId> v_node;
};

Built build(const TowerDescriptor& d) {
  d.validate();
  std::optional<Draft> dr = base_draft(d);
  if (!dr) {
    const auto* f = field_base(d);
    const Count count = count_overrings(d);
    const Tri fc = count.is_finite() ? Tri::yes : (f->trdeg >= 1 ? Tri::no : Tri::unknown);
    const std::string why = count.is_finite()
                                ? "order among the intermediate fields of " + f->bottom_name + " < " + f->top_name +
                                      " is not determined"
                                : "infinitely many rings between " + f->bottom_name + " and " + f->top_name;
    return Built{OverringLattice::opaque(count, fc, why), std::nullopt};
  }

  const std::size_t base_size = dr->nodes.size();
  for (std::size_t i = 0; i < d.valuation_dims.size(); ++i) {
    const std::string layer = "M" + std::to_string(i + 1);
    const std::string v = "V" + std::to_string(i + 1);
    for (Node& node : dr->nodes) node.label += "+" + layer;
    // qf of the previous stage plus M_i is V_i itself.
    dr->nodes[dr->top].label = v;
    if (i == 0) dr->v_node = dr->top;
    NodeId below = dr->top;
    for (int j = d.valuation_dims[i] - 1; j >= 1; --j) {
      dr->nodes.push_back(Node{v + "_P" + std::to_string(j), NodeKind::tower_node, true, Tri::unknown});
      dr->relations.emplace_back(below, dr->nodes.size() - 1);
      below = dr->nodes.size() - 1;
    }
    dr->nodes.push_back(Node{"L", NodeKind::field_top, true, Tri::no});
    dr->relations.emplace_back(below, dr->nodes.size() - 1);
    dr->top = dr->nodes.size() - 1;
  }

  // Divisorial-fraction flags where a rule decides them.
  const bool valuation = is_valuation_model(d);
  const auto* f = field_base(d);
  const bool bare_semigroup = semigroup_base(d) && !has_layers(d);
  for (NodeId i = 0; i < dr->nodes.size(); ++i) {
    Node& node = dr->nodes[i];
    node.kind = NodeKind::tower_node;
    if (bare_semigroup && i < base_size) node.kind = NodeKind::oversemigroup;
    if (i == dr->top) {
      node.kind = NodeKind::field_top;
      node.divisorial_fraction = Tri::no;
    } else if (i == dr->bottom) {
      // R = (R : R).
      node.divisorial_fraction = Tri::yes;
    } else if (valuation) {
      node.divisorial_fraction = Tri::yes;
    } else if (f) {
      // In a PVD only rings containing V are images of (I : I); a ring
      // strictly between R and V is not.
      node.divisorial_fraction = dr->intermediate == i ? Tri::no : Tri::yes;
    } else if (!bare_semigroup) {
      node.divisorial_fraction = Tri::unknown;
    }
  }
  dr->nodes[dr->bottom].kind = NodeKind::base;
  dr->nodes[dr->top].label = "L";

  return Built{OverringLattice::from_relations(std::move(dr->nodes), dr->relations), dr->v_node};
}

}  // namespace

void FieldExtensionSpec::validate() const {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("field extension " + bottom_name + " < " + top_name + ": " + what);
  };
  if (trdeg < 0) fail("transcendence degree must be nonnegative");
  if (algebraic != (trdeg == 0)) fail("algebraic must hold exactly when trdeg = 0");
  if (intermediate_rings.is_unsupported()) fail("intermediate ring count must be a number or infinite");
  if (intermediate_rings.is_finite() && intermediate_rings.value() < 2) {
    fail("at least two intermediate rings (k and K); use a trivial base for k = K");
  }
  if (trdeg >= 1 && !intermediate_rings.is_infinite()) fail("trdeg >= 1 forces infinitely many intermediate rings");
  const bool two = intermediate_rings == Count::finite(2);
  if (minimal && !two) fail("a minimal extension has exactly 2 intermediate rings");
  if (!minimal && two) fail("exactly 2 intermediate rings means the extension is minimal");
}

FieldExtensionSpec FieldExtensionSpec::quadratic(std::string bottom, std::string top) {
  return FieldExtensionSpec{std::move(bottom), std::move(top), true, 0, true, Count::finite(2)};
}

FieldExtensionSpec FieldExtensionSpec::purely_transcendental(std::string bottom, std::string top, int trdeg) {
  return FieldExtensionSpec{std::move(bottom), std::move(top), false, trdeg, false, Count::infinite()};
}

void TowerDescriptor::validate() const {
  for (int d : valuation_dims) {
    if (d < 1) throw std::invalid_argument("tower: valuation layer dimensions must be positive");
  }
  std::visit(overloaded{
                 [&](const TrivialBase&) {
                   if (valuation_dims.empty()) throw std::invalid_argument("tower: a trivial base needs a layer");
                 },
                 [&](const FieldExtensionSpec& f) {
                   f.validate();
                   if (valuation_dims.empty()) throw std::invalid_argument("tower: a field base needs a layer");
                 },
                 [&](const numsg::NumericalSemigroup&) {},
                 [&](const PruferY& p) {
                   if (p.dim < 1) throw std::invalid_argument("tower: Prüfer Y-graph dimension must be >= 1");
                   if (!valuation_dims.empty()) {
                     throw std::invalid_argument("tower: a Prüfer Y-graph base admits no valuation layers");
                   }
                 },
             },
             base);
}

std::string describe(const TowerDescriptor& d) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const TrivialBase&) { os << "K"; },
                 [&](const FieldExtensionSpec& f) { os << f.bottom_name << " (< " << f.top_name << ")"; },
                 [&](const numsg::NumericalSemigroup& s) { os << "k[[" << s.label() << "]]"; },
                 [&](const PruferY& p) { os << "PruferY(" << p.dim << ")"; },
             },
             d.base);
  for (int k : d.valuation_dims) os << " + M(" << k << ")";
  return os.str();
}

int dim(const TowerDescriptor& d) {
  if (const auto* p = prufer_base(d)) return p->dim;
  const int base = semigroup_base(d) ? 1 : 0;
  return base + layer_dim(d);
}

int dim_v(const TowerDescriptor& d) {
  if (const auto* p = prufer_base(d)) return p->dim;
  int base = 0;
  if (const auto* f = field_base(d)) base = f->trdeg;
  if (semigroup_base(d)) base = 1;
  return base + layer_dim(d);
}

Count count_overrings(const TowerDescriptor& d) {
  d.validate();
  const Count base = std::visit(
      overloaded{
          [](const TrivialBase&) { return Count::finite(1); },
          [](const FieldExtensionSpec& f) { return f.intermediate_rings; },
          [](const numsg::NumericalSemigroup& s) {
            return Count::finite(static_cast<std::int64_t>(numsg::oversemigroups(s).size()) + 1);
          },
          [](const PruferY& p) { return Count::finite(p.dim + 3); },
      },
      d.base);
  return base + layer_dim(d);
}

Count count_sd(const TowerDescriptor& d) {
  d.validate();
  if (is_valuation_model(d)) return Count::finite(dim(d));
  if (const auto* f = field_base(d); f && f->minimal) return Count::finite(dim(d) + 1);
  if (const auto* s = semigroup_base(d); s && !has_layers(d)) {
    return Count::finite(static_cast<std::int64_t>(numsg::sd_enumerate(*s).size()));
  }
  return Count::unsupported();
}

lattice::OverringLattice tower_lattice(const TowerDescriptor& d) { return build(d).lattice; }

std::optional<std::vector<lattice::SDRecord>> tower_sd_records(const TowerDescriptor& d,
                                                               const lattice::OverringLattice& lat) {
  if (const auto* s = semigroup_base(d); s && !has_layers(d)) return lattice::semigroup_sd_records(*s, lat);
  const auto* f = field_base(d);
  if (!is_valuation_model(d) && !(f && f->minimal)) return std::nullopt;
  std::vector<lattice::SDRecord> out;
  const auto& nodes = lat.nodes();
  for (NodeId i = 0; i < nodes.size(); ++i) {
    if (i == lat.top() || nodes[i].divisorial_fraction != Tri::yes) continue;
    out.push_back(lattice::SDRecord{"(R : " + nodes[i].label + ")", i});
  }
  return out;
}

ClassificationReport classify(const TowerDescriptor& d) {
  Built built = build(d);
  const auto* f = field_base(d);
  const auto* s = semigroup_base(d);
  const bool prufer = prufer_base(d) != nullptr;

  ClassificationReport r;
  r.subject = d.name.empty() ? describe(d) : d.name;
  r.model = prufer ? "prufer_y" : "tower";
  r.dim = dim(d);
  r.dim_v = dim_v(d);
  r.overring_count = count_overrings(d);
  r.sd_count = count_sd(d);
  r.max_chain_length = lattice::max_chain_length(built.lattice);

  r.is_local = to_tri(!prufer);
  r.is_valuation = to_tri(is_valuation_model(d));
  r.is_pvd = to_tri(f != nullptr);
  r.is_fo = to_tri(lattice::is_fo(built.lattice));
  r.is_fc = lattice::is_fc(built.lattice);
  // Prüfer domains and local towers whose maximal ideal is a t-ideal.
  r.is_t_linkative = Tri::yes;
  if (r.is_fc == Tri::yes) {
    r.is_super_t_linkative = Tri::yes;
  } else if (r.dim_v > r.dim) {
    r.is_super_t_linkative = Tri::no;
  }

  if (is_valuation_model(d)) {
    r.phi_surjective = Tri::yes;
  } else if (f) {
    r.phi_surjective = to_tri(f->minimal);
  } else if (prufer) {
    r.phi_surjective = Tri::no;
  } else if (s && !has_layers(d)) {
    r.phi_surjective = to_tri(numsg::phi_surjective(*s));
  }
  r.t_linked_under_all_overrings = to_tri(r.dim == 1 && r.is_local == Tri::yes);
  r.conductor_nonzero = true;

  if (s && !has_layers(d)) {
    SemigroupFacts facts;
    facts.generators = s->generators();
    facts.gaps = s->gaps();
    facts.frobenius = s->frobenius();
    facts.conductor = s->conductor();
    facts.multiplicity = s->multiplicity();
    facts.integral_closure = {1};
    facts.conductor_ideal_from = s->conductor();
    r.semigroup = std::move(facts);
  }
  if (s && has_layers(d)) {
    r.notes.push_back("dim_v uses D+M additivity for the semigroup base");
  }
  if (f) r.notes.push_back("residue field data taken as given");
  r.lattice = std::move(built.lattice);
  return r;
}

bool PvdConditions::all_agree() const {
  return phi_surjective == minimal_over_v && minimal_over_v == residue_minimal && residue_minimal == overrings_split;
}

PvdConditions pvd_conditions(const TowerDescriptor& d) {
  const auto* f = field_base(d);
  if (!f) throw std::invalid_argument("pvd_equivalences: " + describe(d) + " is not a PVD descriptor");
  d.validate();
  const int n = dim(d);
  PvdConditions c;

  // SD image: R, and every ring containing V except L (V = M⁻¹, V_P = P⁻¹).
  Built built = build(d);
  if (built.lattice.is_explicit()) {
    const auto& lat = built.lattice;
    std::vector<lattice::SDRecord> image{lattice::SDRecord{"R", lat.bottom()}};
    for (NodeId i = 0; i < lat.nodes().size(); ++i) {
      if (i != lat.top() && lat.leq(*built.v_node, i)) image.push_back(lattice::SDRecord{"(R : " + lat.nodes()[i].label + ")", i});
    }
    c.phi_surjective = lattice::phi_check(lat, image).surjective;
  } else {
    // Finitely many SD ideals (n + 1) against at least four non-top rings.
    c.phi_surjective = false;
  }

  c.minimal_over_v = f->intermediate_rings == Count::finite(2);
  c.residue_minimal = f->minimal;
  c.overrings_split = count_overrings(d) == Count::finite(1 + (n + 1));
  return c;
}

bool pvd_equivalences(const TowerDescriptor& d) { return pvd_conditions(d).all_agree(); }

std::string to_string(PullbackTop t) {
  switch (t) {
    case PullbackTop::valuation:
      return "valuation";
    case PullbackTop::local_dim1:
      return "local_dim1";
    case PullbackTop::power_series:
      break;
  }
  return "power_series";
}

PullbackTop parse_pullback_top(std::string_view s) {
  if (s == "valuation") return PullbackTop::valuation;
  if (s == "local_dim1") return PullbackTop::local_dim1;
  if (s == "power_series") return PullbackTop::power_series;
  throw std::invalid_argument("unknown pullback top kind '" + std::string(s) +
                              "' (expected valuation, local_dim1 or power_series)");
}

bool t_linked_under(bool base_is_field, PullbackTop top) {
  bool m_is_t_ideal = false;
  switch (top) {
    case PullbackTop::valuation:
    case PullbackTop::local_dim1:
      m_is_t_ideal = true;
      break;
    case PullbackTop::power_series:
      m_is_t_ideal = false;
      break;
  }
  return base_is_field && m_is_t_ideal;
}

TowerDescriptor example_gs8(int n) {
  if (n < 1) throw std::invalid_argument("gs8: n must be >= 1");
  const int gens[] = {2, 5};
  return TowerDescriptor{numsg::NumericalSemigroup::from_generators(gens), std::vector<int>(n - 1, 1),
                         "gs8:" + std::to_string(n)};
}

TowerDescriptor example_nls5() {
  return TowerDescriptor{FieldExtensionSpec::purely_transcendental("k", "k(X,Y)", 2), {1}, "nls5"};
}

TowerDescriptor example_tlsd5(int n) {
  if (n < 3) throw std::invalid_argument("tlsd5: n must be >= 3");
  return TowerDescriptor{FieldExtensionSpec::quadratic("Q", "Q(sqrt2)"), std::vector<int>(n - 2, 1),
                         "tlsd5:" + std::to_string(n)};
}

PullbackSquare example_dtuo5() { return PullbackSquare{true, PullbackTop::power_series, "dtuo5"}; }
PullbackSquare pvd_over_valuation() { return PullbackSquare{true, PullbackTop::valuation, "pvd-over-v"}; }
PullbackSquare k_plus_xkx() { return PullbackSquare{true, PullbackTop::local_dim1, "k-plus-xkx"}; }

Descriptor preset(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  std::optional<int> arg;
  if (colon != std::string_view::npos) {
    const std::string_view tail = spec.substr(colon + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
      throw std::invalid_argument("preset '" + std::string(spec) + "': parameter is not an integer");
    }
    arg = v;
  }
  auto need = [&](bool wants) {
    if (wants && !arg) throw std::invalid_argument("preset '" + std::string(head) + "' needs a parameter, e.g. " + std::string(head) + ":3");
    if (!wants && arg) throw std::invalid_argument("preset '" + std::string(head) + "' takes no parameter");
  };
  if (head == "gs8" || head == "tlsd5") {
    need(true);
    if (head == "gs8") return example_gs8(*arg);
    return example_tlsd5(*arg);
  }
  const std::pair<std::string_view, PullbackSquare (*)()> squares[] = {
      {"dtuo5", example_dtuo5}, {"pvd-over-v", pvd_over_valuation}, {"k-plus-xkx", k_plus_xkx}};
  if (head == "nls5") {
    need(false);
    return example_nls5();
  }
  for (const auto& [name, make] : squares) {
    if (head == name) {
      need(false);
      return make();
    }
  }
  throw std::invalid_argument("unknown preset '" + std::string(head) +
                              "' (gs8:N, nls5, tlsd5:N, dtuo5, pvd-over-v, k-plus-xkx)");
}

}  // namespace overring::tower
