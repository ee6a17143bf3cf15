#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "overring/cli.hpp"
#include "overring/lattice.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/report.hpp"
#include "overring/numsg/semigroup.hpp"
#include "overring/numsg/strong_ideals.hpp"
#include "overring/oracle/brute_force.hpp"
#include "overring/tower.hpp"

namespace overring::cli {
namespace {

using numsg::NumericalSemigroup;
using numsg::RelativeIdeal;
using tower::TowerDescriptor;

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::int64_t n) { return std::to_string(n); }
std::string str(int n) { return std::to_string(n); }
std::string str(const Count& c) { return to_string(c); }
std::string str(Tri t) { return to_string(t); }

class Battery {
 public:
  explicit Battery(std::vector<CheckResult>& rows) : rows_(rows) {}

  void criterion(int c) { criterion_ = c; }

  void row(std::string id, std::string description, std::string expected, std::string actual,
           std::string source) {
    rows_.push_back({std::move(id), std::move(description), std::move(expected), std::move(actual),
                     std::move(source), criterion_});
  }

 private:
  std::vector<CheckResult>& rows_;
  int criterion_ = 0;
};

// Counts violations of a quantified property and keeps the first witness.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& witness) {
    ++cases_;
    if (ok) return;
    if (violations_++ == 0) first_ = witness();
  }
  std::string expected() const { return "0 violations in " + std::to_string(cases_) + " cases"; }
  std::string actual() const {
    std::string s = std::to_string(violations_) + " violations in " + std::to_string(cases_) + " cases";
    if (violations_) s += " (first: " + first_ + ")";
    return s;
  }

 private:
  long cases_ = 0;
  long violations_ = 0;
  std::string first_;
};

std::string render(const oracle::IntegerSet& s) {
  std::ostringstream os;
  os << '{';
  for (int v : s.small) os << v << ',';
  os << s.from << "...}";
  return os.str();
}

oracle::IntegerSet explicit_set(const RelativeIdeal& e) { return {e.small_elements(), e.tail_start()}; }

std::string render_all(const std::vector<oracle::IntegerSet>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + render(v[i]);
  return s + "]";
}

std::vector<oracle::IntegerSet> production_sd(const NumericalSemigroup& s) {
  std::vector<oracle::IntegerSet> out;
  for (const auto& e : numsg::sd_enumerate(s)) out.push_back(explicit_set(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::GapSet> gap_sets(const std::vector<NumericalSemigroup>& v) {
  std::vector<oracle::GapSet> out;
  for (const auto& t : v) out.push_back(t.gaps());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::GapSet> production_divisorial(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> div;
  for (const auto& t : numsg::oversemigroups(s)) {
    const auto e = RelativeIdeal::of_semigroup(s, t);
    if (numsg::v_closure(e) == e) div.push_back(t);
  }
  return gap_sets(div);
}

std::string phi_string(const lattice::PhiCheck& p) {
  return "injective=" + str(p.injective) + " surjective=" + str(p.surjective);
}

lattice::PhiCheck semigroup_phi(const NumericalSemigroup& s) {
  const auto lat = lattice::semigroup_lattice(s);
  return lattice::phi_check(lat, lattice::semigroup_sd_records(s, lat));
}

// φ is injective by construction of the oracle's set; it is onto the non-top
// nodes iff every oversemigroup is divisorial.
lattice::PhiCheck oracle_phi(const oracle::GapSet& gaps) {
  return {true, oracle::divisorial_oversemigroups(gaps).size() == oracle::oversemigroups(gaps).size()};
}

std::string label_set(const lattice::OverringLattice& lat) {
  std::set<std::string> labels;
  for (const auto& n : lat.nodes()) labels.insert(n.label);
  std::string s = "{";
  for (const auto& l : labels) s += (s.size() > 1 ? "," : "") + l;
  return s + "}";
}

void semigroup_example(Battery& b, const std::vector<int>& gens, bool with_chain) {
  const auto s = NumericalSemigroup::from_generators(gens);
  const auto o_sd = oracle::strongly_divisorial_ideals(s.gaps());
  const std::string l = s.label();
  b.row(l + " sd-count", "strongly divisorial ideals of " + l, str(static_cast<std::int64_t>(o_sd.size())),
        str(static_cast<std::int64_t>(numsg::sd_enumerate(s).size())), "oracle");
  b.row(l + " sd-set", "strongly divisorial ideals of " + l + " as sets", render_all(o_sd),
        render_all(production_sd(s)), "oracle");
  b.row(l + " phi", "phi onto the non-top nodes of " + l, phi_string(oracle_phi(s.gaps())),
        phi_string(semigroup_phi(s)), "oracle");
  if (with_chain) {
    b.row(l + " max-chain", "longest chain of overrings of " + l,
          str(oracle::longest_overring_chain(s.gaps())),
          str(lattice::max_chain_length(lattice::semigroup_lattice(s))), "oracle");
  }
}

TowerDescriptor valuation(int n) { return {tower::TrivialBase{}, {n}, "valuation:" + std::to_string(n)}; }

// All ordered lists of positive integers summing to `total`.
std::vector<std::vector<int>> compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = 1; d <= left; ++d) {
      cur.push_back(d);
      go(left - d);
      cur.pop_back();
    }
  };
  go(total);
  return out;
}

std::vector<tower::FieldExtensionSpec> field_grid() {
  std::vector<tower::FieldExtensionSpec> out;
  out.push_back(tower::FieldExtensionSpec::quadratic("k", "K"));
  for (const Count c : {Count::finite(3), Count::finite(4), Count::infinite()}) {
    tower::FieldExtensionSpec f;
    f.minimal = false;
    f.intermediate_rings = c;
    out.push_back(f);
  }
  for (int trdeg : {1, 2}) out.push_back(tower::FieldExtensionSpec::purely_transcendental("k", "K", trdeg));
  return out;
}

void criterion_1(Battery& b) {
  b.criterion(1);
  const auto s = NumericalSemigroup::from_generators(std::vector<int>{2, 5});
  const auto lat = lattice::semigroup_lattice(s);
  b.row("<2,5> node-set", "overring lattice nodes of <2,5>", "{<1>,<2,3>,<2,5>,L}", label_set(lat), "closed-form");
  b.row("<2,5> node-count", "overring count of <2,5>", "4", str(lat.node_count()), "closed-form");
}

void criterion_2(Battery& b) {
  b.criterion(2);
  semigroup_example(b, {2, 5}, true);
}

void criterion_3(Battery& b) {
  b.criterion(3);
  semigroup_example(b, {3, 4, 5}, false);
  const auto s = NumericalSemigroup::from_generators(std::vector<int>{3, 4, 5});
  const auto t = NumericalSemigroup::from_generators(std::vector<int>{2, 3});
  const auto t_ideal = RelativeIdeal::of_semigroup(s, t);
  const auto o_div = oracle::divisorial_oversemigroups(s.gaps());
  b.row("<3,4,5> <2,3>-divisorial", "<2,3> is a divisorial fractional ideal of <3,4,5>",
        str(std::find(o_div.begin(), o_div.end(), t.gaps()) != o_div.end()), str(numsg::v_closure(t_ideal) == t_ideal),
        "oracle");
  const auto dm = numsg::dual(RelativeIdeal::maximal_ideal(s));
  b.row("<3,4,5> dual-M", "S - M for S = <3,4,5>", "{0,...}", dm.to_string(), "definition");
  b.row("<3,4,5> dual-M-in-<2,3>", "S - M lies inside <2,3>", "false", str(dm.subset_of(t_ideal)), "definition");
}

void criterion_4(Battery& b, int f_max, const std::vector<NumericalSemigroup>& corpus) {
  b.criterion(4);
  const std::string f = "F<=" + std::to_string(f_max);
  const auto o_corpus = oracle::all_semigroups(f_max);
  b.row("corpus " + f, "semigroups with Frobenius number at most " + std::to_string(f_max),
        str(static_cast<std::int64_t>(o_corpus.size())) + " semigroups, sets equal",
        str(static_cast<std::int64_t>(corpus.size())) + " semigroups, sets " +
            (gap_sets(corpus) == o_corpus ? "equal" : "differ"),
        "oracle");
  Tally over, sd, div;
  for (const auto& s : corpus) {
    over.check(gap_sets(numsg::oversemigroups(s)) == oracle::oversemigroups(s.gaps()), [&] { return s.label(); });
    sd.check(production_sd(s) == oracle::strongly_divisorial_ideals(s.gaps()), [&] { return s.label(); });
    div.check(production_divisorial(s) == oracle::divisorial_oversemigroups(s.gaps()), [&] { return s.label(); });
  }
  b.row("oracle oversemigroups " + f, "oversemigroups match subset enumeration", over.expected(), over.actual(),
        "oracle");
  b.row("oracle sd_enumerate " + f, "SD ideals match exhaustive integral-ideal search", sd.expected(), sd.actual(),
        "oracle");
  b.row("oracle divisorial " + f, "divisorial oversemigroups match bitset closure", div.expected(), div.actual(),
        "oracle");
}

void criterion_5(Battery& b) {
  b.criterion(5);
  for (int n = 1; n <= 10; ++n) {
    const auto d = valuation(n);
    const std::string id = "valuation dim " + std::to_string(n);
    b.row(id + " overrings", "overrings of a valuation domain", str(n + 1), str(tower::count_overrings(d)),
          "closed-form");
    b.row(id + " max-chain", "longest overring chain", str(n + 1),
          str(lattice::max_chain_length(tower::tower_lattice(d))), "closed-form");
    b.row(id + " sd", "strongly divisorial ideals", str(n), str(tower::count_sd(d)), "closed-form");
  }
}

void criterion_6(Battery& b) {
  b.criterion(6);
  for (int n = 1; n <= 10; ++n) {
    const auto d = tower::example_gs8(n);
    b.row(d.name + " overrings", "k[[X^2,X^5]] under unit layers", str(n + 3), str(tower::count_overrings(d)),
          "closed-form");
    b.row(d.name + " dim", "Krull dimension", str(n), str(tower::dim(d)), "closed-form");
  }
}

void criterion_7(Battery& b) {
  b.criterion(7);
  for (int n = 3; n <= 12; ++n) {
    const auto d = tower::example_tlsd5(n);
    b.row(d.name + " overrings", "Q + M over a quadratic residue extension", str(n),
          str(tower::count_overrings(d)), "closed-form");
  }
}

void criterion_8(Battery& b) {
  b.criterion(8);
  Tally agree;
  for (const auto& f : field_grid())
    for (int total = 1; total <= 6; ++total)
      for (const auto& dims : compositions(total)) {
        const TowerDescriptor d{f, dims, ""};
        agree.check(tower::pvd_equivalences(d), [&] { return tower::describe(d); });
      }
  b.row("pvd grid", "four PVD conditions agree on every field-extension descriptor", agree.expected(),
        agree.actual(), "closed-form");
  for (int n = 1; n <= 6; ++n) {
    const TowerDescriptor d{tower::FieldExtensionSpec::quadratic("k", "K"), {n}, ""};
    b.row("pvd minimal dim " + std::to_string(n) + " sd", "strongly divisorial ideals of a PVD", str(n + 1),
          str(tower::count_sd(d)), "closed-form");
  }
  std::string outcome = "accepted";
  try {
    tower::FieldExtensionSpec f;
    f.minimal = true;
    f.intermediate_rings = Count::finite(3);
    f.validate();
  } catch (const std::invalid_argument&) {
    outcome = "rejected";
  }
  b.row("pvd minimal with 3 rings", "minimal extension claiming an intermediate field", "rejected", outcome,
        "definition");
}

void criterion_9(Battery& b) {
  b.criterion(9);
  for (int n = 1; n <= 10; ++n) {
    const TowerDescriptor d{tower::PruferY{n}, {}, "prufer-y:" + std::to_string(n)};
    b.row(d.name + " overrings", "Prufer domain with Y-shaped spectrum", str(n + 3), str(tower::count_overrings(d)),
          "closed-form");
    b.row(d.name + " phi", "phi surjective", "false", str(tower::classify(d).phi_surjective), "closed-form");
  }
}

void criterion_10(Battery& b) {
  b.criterion(10);
  const std::pair<tower::PullbackSquare, bool> cases[] = {
      {tower::example_dtuo5(), false}, {tower::pvd_over_valuation(), true}, {tower::k_plus_xkx(), true}};
  for (const auto& [p, want] : cases)
    b.row(p.name + " t-linked-under", "t-linked under the top ring of the pullback", str(want),
          str(tower::t_linked_under(p)), "closed-form");
}

void criterion_11(Battery& b) {
  b.criterion(11);
  const auto r = tower::classify(tower::example_nls5());
  b.row("nls5 dim", "Krull dimension", "1", str(r.dim), "closed-form");
  b.row("nls5 dim_v", "valuative dimension", "3", str(r.dim_v), "closed-form");
  b.row("nls5 fo", "finitely many overrings", "false", str(r.is_fo), "closed-form");
  b.row("nls5 super-t-linkative", "super-t-linkative", "false", str(r.is_super_t_linkative), "closed-form");
}

// A small deterministic family of relative ideals of s: the principal and
// maximal ideals, a few oversemigroups, random finitely generated ideals,
// and the duals of all of these.
std::vector<RelativeIdeal> ideal_family(const NumericalSemigroup& s, std::mt19937& rng) {
  std::vector<RelativeIdeal> fam{RelativeIdeal::principal(s, 0), RelativeIdeal::maximal_ideal(s)};
  auto over = numsg::oversemigroups(s);
  std::shuffle(over.begin(), over.end(), rng);
  for (std::size_t i = 0; i < over.size() && i < 4; ++i) fam.push_back(RelativeIdeal::of_semigroup(s, over[i]));
  const int c = s.conductor();
  std::uniform_int_distribution<int> value(-c, 2 * c + 1);
  std::uniform_int_distribution<int> size(1, 3);
  for (int k = 0; k < 4; ++k) {
    std::vector<int> gens(static_cast<std::size_t>(size(rng)));
    for (int& g : gens) g = value(rng);
    fam.push_back(RelativeIdeal::generated_by(s, gens));
  }
  const std::size_t base = fam.size();
  for (std::size_t i = 0; i < base; ++i) fam.push_back(numsg::dual(fam[i]));
  return fam;
}

void criterion_12(Battery& b, int f_max, const std::vector<NumericalSemigroup>& corpus) {
  b.criterion(12);
  const std::string f = " F<=" + std::to_string(f_max);
  std::mt19937 rng(20240601u);
  Tally closure, antitone, triple, product, injective, cor_restate, chain_finite, hierarchy, closure_facts,
      ot_equals_o, div_consistency, chain_bound, cross_module;
  for (const auto& s : corpus) {
    const auto l = [&] { return s.label(); };
    const auto fam = ideal_family(s, rng);
    std::vector<RelativeIdeal> v;
    std::vector<RelativeIdeal> d;
    for (const auto& e : fam) {
      v.push_back(numsg::v_closure(e));
      d.push_back(numsg::dual(e));
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
      closure.check(fam[i].subset_of(v[i]) && numsg::v_closure(v[i]) == v[i], l);
      triple.check(numsg::dual(numsg::dual(d[i])) == d[i], l);
      if (fam[i].is_integral())
        product.check(numsg::add(fam[i], d[i]).subset_of(RelativeIdeal::principal(s, 0)), l);
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (!fam[i].subset_of(fam[j])) continue;
        closure.check(v[i].subset_of(v[j]), l);
        antitone.check(d[j].subset_of(d[i]), l);
      }
    }

    const auto pairs = numsg::phi(s);
    std::set<std::vector<int>> images;
    for (const auto& p : pairs) images.insert(p.overring.gaps());
    const auto over = numsg::oversemigroups(s);
    injective.check(images.size() == pairs.size() && pairs.size() <= over.size(), l);

    const auto report = numsg::nsg_report(s);
    // For N the maximal ideal is principal, hence not strong; the statement
    // concerns non-valuation rings.
    if (numsg::phi_surjective(s) && !s.is_naturals()) {
      const auto m = RelativeIdeal::maximal_ideal(s);
      const auto dm = numsg::dual(m);
      bool contains = true;
      for (const auto& t : over)
        if (t != s) contains = contains && dm.subset_of(RelativeIdeal::of_semigroup(s, t));
      cor_restate.check(numsg::is_strongly_divisorial(m) && contains, l);
    }
    if (numsg::phi_surjective(s)) chain_finite.check(report.max_chain_length.is_finite(), l);
    hierarchy.check(report.hierarchy_consistent(), l);
    closure_facts.check(report.semigroup && report.semigroup->integral_closure == std::vector<int>{1} &&
                            report.conductor_nonzero,
                        l);

    const auto& lat = *report.lattice;
    ot_equals_o.check(lattice::check_Ot_equals_O(lat) && lat.node_count() == Count::finite(static_cast<std::int64_t>(over.size()) + 1), l);
    bool all_div = true;
    for (std::size_t i = 0; i < lat.nodes().size(); ++i)
      if (i != lat.top()) all_div = all_div && lat.nodes()[i].divisorial_fraction == Tri::yes;
    div_consistency.check(semigroup_phi(s).surjective == all_div, l);
    const auto chain = lattice::max_chain_length(lat).value();
    const auto nodes = lat.node_count().value();
    chain_bound.check(chain <= nodes && ((chain == nodes) == lattice::is_chain(lat)), l);

    auto via_tower = tower::classify(TowerDescriptor{s, {}, ""});
    via_tower.subject = report.subject;
    via_tower.model = report.model;
    via_tower.notes = report.notes;
    cross_module.check(via_tower == report, l);
  }
  for (const auto& fe : field_grid())
    for (int total = 1; total <= 6; ++total)
      for (const auto& dims : compositions(total)) {
        const TowerDescriptor t{fe, dims, ""};
        hierarchy.check(tower::classify(t).hierarchy_consistent(), [&] { return tower::describe(t); });
      }

  b.row("v-closure closure operator" + f, "extensive, idempotent, monotone", closure.expected(), closure.actual(),
        "definition");
  b.row("dual antitone" + f, "E in F implies S-F in S-E", antitone.expected(), antitone.actual(), "definition");
  b.row("triple dual" + f, "S-(S-(S-E)) = S-E", triple.expected(), triple.actual(), "definition");
  b.row("E+(S-E) in S" + f, "integral E", product.expected(), product.actual(), "definition");
  b.row("phi injective" + f, "distinct SD ideals have distinct duals", injective.expected(), injective.actual(),
        "definition");
  b.row("phi onto => M^-1 in every proper overring" + f, "S != N: M strongly divisorial and S-M in each T > S",
        cor_restate.expected(), cor_restate.actual(), "closed-form");
  b.row("phi onto => finite chains" + f, "max chain length finite", chain_finite.expected(), chain_finite.actual(),
        "closed-form");
  b.row("report hierarchy" + f, "fo => fc => super-t-linkative => t-linkative on every report",
        hierarchy.expected(), hierarchy.actual(), "definition");
  b.row("integral closure and conductor" + f, "integral closure <1>, conductor ideal nonzero",
        closure_facts.expected(), closure_facts.actual(), "closed-form");
  b.row("O_t = O" + f, "every overring t-linked, node set finite", ot_equals_o.expected(), ot_equals_o.actual(),
        "closed-form");
  b.row("phi onto <=> all divisorial" + f, "surjectivity against divisorial flags", div_consistency.expected(),
        div_consistency.actual(), "definition");
  b.row("chain <= nodes" + f, "equality exactly for chains", chain_bound.expected(), chain_bound.actual(),
        "definition");
  b.row("tower agrees with numsg" + f, "semigroup base without layers", cross_module.expected(),
        cross_module.actual(), "definition");
}

}  // namespace

std::vector<CheckResult> check_paper(int f_max) {
  if (f_max < 3 || f_max > kMaxFMax)
    throw std::invalid_argument("f_max must lie in [3, " + std::to_string(kMaxFMax) + "]");
  std::vector<CheckResult> rows;
  Battery b(rows);
  const auto corpus = numsg::semigroups_up_to_frobenius(f_max);
  criterion_1(b);
  criterion_2(b);
  criterion_3(b);
  criterion_4(b, f_max, corpus);
  criterion_5(b);
  criterion_6(b);
  criterion_7(b);
  criterion_8(b);
  criterion_9(b);
  criterion_10(b);
  criterion_11(b);
  criterion_12(b, f_max, corpus);
  return rows;
}

std::vector<CheckResult> oracle_checks(const std::vector<int>& generators) {
  const auto s = NumericalSemigroup::from_generators(generators);
  if (s.frobenius() > oracle::kMaxFrobenius)
    throw std::invalid_argument("oracle supports frobenius <= " + std::to_string(oracle::kMaxFrobenius));
  std::vector<CheckResult> rows;
  Battery b(rows);
  const std::string l = s.label();
  b.row(l + " oversemigroups", "oversemigroups against subset enumeration",
        str(static_cast<std::int64_t>(oracle::oversemigroups(s.gaps()).size())) + " sets, equal",
        str(static_cast<std::int64_t>(numsg::oversemigroups(s).size())) + " sets, " +
            (gap_sets(numsg::oversemigroups(s)) == oracle::oversemigroups(s.gaps()) ? "equal" : "differ"),
        "oracle");
  b.row(l + " sd-set", "strongly divisorial ideals", render_all(oracle::strongly_divisorial_ideals(s.gaps())),
        render_all(production_sd(s)), "oracle");
  b.row(l + " phi", "phi against divisorial oversemigroups", phi_string(oracle_phi(s.gaps())),
        phi_string(semigroup_phi(s)), "oracle");
  b.row(l + " max-chain", "longest chain of overrings", str(oracle::longest_overring_chain(s.gaps())),
        str(lattice::max_chain_length(lattice::semigroup_lattice(s))), "oracle");
  return rows;
}

}  // namespace overring::cli
