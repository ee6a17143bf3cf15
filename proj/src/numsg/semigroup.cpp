#include "overring/numsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace overring::numsg {

namespace {

// Windows are allocated densely; this caps memory for hostile input.
constexpr long kMaxConductor = 1L << 16;

std::vector<bool> trimmed_to_conductor(std::vector<bool> member) {
  std::size_t c = member.size();
  while (c > 0 && member[c - 1]) --c;
  member.resize(c);
  return member;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<bool> member_below_conductor)
    : member_(trimmed_to_conductor(std::move(member_below_conductor))) {
  conductor_ = static_cast<int>(member_.size());
  for (int n = 1; n < conductor_; ++n) {
    if (!member_[static_cast<std::size_t>(n)]) gaps_.push_back(n);
  }
  int m = 1;
  while (!contains(m)) ++m;
  // Minimal generators lie in [m, frobenius + m]; for N that is just {1}.
  for (int x = m; x <= std::max(conductor_ - 1 + m, m); ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int a = m; 2 * a <= x && !decomposable; ++a) {
      decomposable = contains(a) && contains(x - a);
    }
    if (!decomposable) generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw std::invalid_argument("numerical semigroup: empty generator list");
  int g = 0;
  int lo = gens.front();
  int hi = gens.front();
  for (int x : gens) {
    if (x <= 0) throw std::invalid_argument("numerical semigroup: generators must be positive");
    g = std::gcd(g, x);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (g != 1) {
    throw std::invalid_argument("numerical semigroup: gcd of generators is " + std::to_string(g) +
                                ", must be 1 (cofinite)");
  }
  // Schur: frobenius <= (lo - 1)(hi - 1) - 1.
  const long bound = static_cast<long>(lo - 1) * (hi - 1) + 1;
  if (bound > kMaxConductor) {
    throw std::invalid_argument("numerical semigroup: conductor bound exceeds supported size");
  }
  std::vector<bool> member(static_cast<std::size_t>(bound), false);
  member[0] = true;
  for (std::size_t n = 1; n < member.size(); ++n) {
    for (int x : gens) {
      if (static_cast<std::size_t>(x) <= n && member[n - static_cast<std::size_t>(x)]) {
        member[n] = true;
        break;
      }
    }
  }
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  std::vector<int> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0) {
    throw std::invalid_argument("numerical semigroup: gaps must be positive");
  }
  const int c = sorted.empty() ? 0 : sorted.back() + 1;
  if (c > kMaxConductor) throw std::invalid_argument("numerical semigroup: conductor exceeds supported size");
  std::vector<bool> member(static_cast<std::size_t>(c), true);
  for (int g : sorted) member[static_cast<std::size_t>(g)] = false;
  for (int a = 1; a < c; ++a) {
    if (!member[static_cast<std::size_t>(a)]) continue;
    for (int b = a; a + b < c; ++b) {
      if (member[static_cast<std::size_t>(b)] && !member[static_cast<std::size_t>(a + b)]) {
        throw std::invalid_argument("numerical semigroup: complement of gap set not closed (" + std::to_string(a) +
                                    " + " + std::to_string(b) + ")");
      }
    }
  }
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup(std::vector<bool>{}); }

bool NumericalSemigroup::includes(const NumericalSemigroup& other) const {
  // other ⊆ this  iff  gaps(this) ⊆ gaps(other).
  return std::includes(other.gaps_.begin(), other.gaps_.end(), gaps_.begin(), gaps_.end());
}

std::string NumericalSemigroup::label() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  os << '>';
  return os.str();
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.gaps_.size() != b.gaps_.size()) return b.gaps_.size() <=> a.gaps_.size();
  return a.gaps_ <=> b.gaps_;
}

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) { return os << s.label(); }

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> stack{NumericalSemigroup::naturals()};
  while (!stack.empty()) {
    NumericalSemigroup t = std::move(stack.back());
    stack.pop_back();
    // Children in the genus tree: remove a minimal generator above the
    // Frobenius number. Keep only those that still contain S.
    for (int g : t.generators()) {
      if (g <= t.frobenius() || s.contains(g)) continue;
      std::vector<int> child_gaps = t.gaps();
      child_gaps.push_back(g);
      stack.push_back(NumericalSemigroup::from_gaps(child_gaps));
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericalSemigroup> semigroups_up_to_frobenius(int f_max) {
  if (f_max < 0) return {NumericalSemigroup::naturals()};
  std::vector<int> gaps(static_cast<std::size_t>(f_max));
  std::iota(gaps.begin(), gaps.end(), 1);
  return oversemigroups(NumericalSemigroup::from_gaps(gaps));
}

}  // namespace overring::numsg
