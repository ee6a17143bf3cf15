#include "overring/numsg/strong_ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace overring::numsg {

std::optional<NumericalSemigroup> as_semigroup(const RelativeIdeal& e) {
  if (e.min() != 0) return std::nullopt;
  std::vector<int> gaps;
  for (int z = 1; z < e.tail_start(); ++z) {
    if (!e.contains(z)) gaps.push_back(z);
  }
  try {
    return NumericalSemigroup::from_gaps(gaps);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<RelativeIdeal> sd_enumerate(const NumericalSemigroup& s) {
  std::vector<RelativeIdeal> out;
  for (const NumericalSemigroup& t : oversemigroups(s)) {
    const RelativeIdeal tset = RelativeIdeal::of_semigroup(s, t);
    RelativeIdeal e = dual(tset);
    if (is_strongly_divisorial(e) && dual(e) == tset) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PhiPair> phi(const NumericalSemigroup& s) {
  std::vector<PhiPair> out;
  for (RelativeIdeal& e : sd_enumerate(s)) {
    auto t = as_semigroup(dual(e));
    // S − E contains 0 and is closed under addition for E strong.
    if (!t) throw std::logic_error("phi: dual of a strongly divisorial ideal is not a semigroup");
    out.push_back(PhiPair{std::move(e), std::move(*t)});
  }
  return out;
}

bool phi_surjective(const NumericalSemigroup& s) {
  for (const NumericalSemigroup& t : oversemigroups(s)) {
    const RelativeIdeal tset = RelativeIdeal::of_semigroup(s, t);
    if (!(v_closure(tset) == tset)) return false;
  }
  return true;
}

int max_overring_chain(const NumericalSemigroup& s) {
  // Canonical order is a linear extension of inclusion.
  const std::vector<NumericalSemigroup> over = oversemigroups(s);
  std::vector<int> longest(over.size(), 1);
  for (std::size_t j = 0; j < over.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (over[j].includes(over[i]) && !(over[i] == over[j])) longest[j] = std::max(longest[j], longest[i] + 1);
    }
  }
  // over.back() is N; the quotient field sits above it.
  return longest.back() + 1;
}

}  // namespace overring::numsg
