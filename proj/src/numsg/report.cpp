#include "overring/numsg/report.hpp"

#include "overring/lattice.hpp"
#include "overring/numsg/relative_ideal.hpp"
#include "overring/numsg/strong_ideals.hpp"

namespace overring::numsg {

ClassificationReport nsg_report(const NumericalSemigroup& s) {
  ClassificationReport r;
  r.subject = s.label();
  r.model = "numsg";
  r.dim = 1;
  r.dim_v = 1;

  const auto over = oversemigroups(s);
  r.overring_count = Count::finite(static_cast<std::int64_t>(over.size()) + 1);
  r.sd_count = Count::finite(static_cast<std::int64_t>(sd_enumerate(s).size()));
  r.max_chain_length = Count::finite(max_overring_chain(s));

  r.is_local = Tri::yes;
  r.is_valuation = to_tri(s.is_naturals());
  r.is_pvd = Tri::no;
  r.is_fo = Tri::yes;
  r.is_fc = Tri::yes;
  // One-dimensional local: the maximal ideal is t-maximal, so every overring
  // is t-linked.
  r.is_t_linkative = Tri::yes;
  r.is_super_t_linkative = Tri::yes;
  r.phi_surjective = to_tri(phi_surjective(s));
  r.t_linked_under_all_overrings = Tri::yes;

  SemigroupFacts facts;
  facts.generators = s.generators();
  facts.gaps = s.gaps();
  facts.frobenius = s.frobenius();
  facts.conductor = s.conductor();
  facts.multiplicity = s.multiplicity();
  facts.integral_closure = over.back().generators();
  const RelativeIdeal conductor_ideal = dual(RelativeIdeal::of_semigroup(s, over.back()));
  facts.conductor_ideal_from = conductor_ideal.min();
  // S − N is the tail [c, ∞), which is a nonzero ideal.
  r.conductor_nonzero = conductor_ideal.min() == s.conductor() && conductor_ideal.small_elements().empty();
  r.semigroup = std::move(facts);

  r.lattice = lattice::semigroup_lattice(s);
  r.notes.push_back("overrings modeled by the monomial subrings k[[T]], T an oversemigroup");
  return r;
}

}  // namespace overring::numsg
