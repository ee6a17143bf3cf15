#include "overring/numsg/relative_ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace overring::numsg {

namespace {

void require_same_owner(const RelativeIdeal& a, const RelativeIdeal& b, const char* op) {
  if (!(a.owner() == b.owner())) {
    throw std::invalid_argument(std::string(op) + ": relative ideals belong to different semigroups");
  }
}

}  // namespace

RelativeIdeal::RelativeIdeal(const NumericalSemigroup& owner, int lo, const std::vector<bool>& bits)
    : owner_(owner) {
  const int len = static_cast<int>(bits.size());
  int first = 0;
  while (first < len && !bits[static_cast<std::size_t>(first)]) ++first;
  min_ = lo + first;
  window_.assign(static_cast<std::size_t>(window_length()), true);
  for (int i = 0; i < window_length(); ++i) {
    const int k = first + i;
    if (k < len) window_[static_cast<std::size_t>(i)] = bits[static_cast<std::size_t>(k)];
  }
}

RelativeIdeal RelativeIdeal::generated_by(const NumericalSemigroup& owner, std::span<const int> generators) {
  if (generators.empty()) throw std::invalid_argument("relative ideal: empty generator list");
  const int lo = *std::min_element(generators.begin(), generators.end());
  const int len = owner.conductor() + owner.max_generator() + 1;
  std::vector<bool> bits(static_cast<std::size_t>(len), false);
  for (int i = 0; i < len; ++i) {
    for (int g : generators) {
      if (owner.contains(lo + i - g)) {
        bits[static_cast<std::size_t>(i)] = true;
        break;
      }
    }
  }
  return RelativeIdeal(owner, lo, bits);
}

RelativeIdeal RelativeIdeal::principal(const NumericalSemigroup& owner, int shift) {
  const int g[] = {shift};
  return generated_by(owner, g);
}

RelativeIdeal RelativeIdeal::of_semigroup(const NumericalSemigroup& owner, const NumericalSemigroup& t) {
  if (!t.includes(owner)) {
    throw std::invalid_argument("relative ideal: " + t.label() + " does not contain " + owner.label());
  }
  const int len = owner.conductor() + owner.max_generator() + 1;
  std::vector<bool> bits(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) bits[static_cast<std::size_t>(i)] = t.contains(i);
  return RelativeIdeal(owner, 0, bits);
}

RelativeIdeal RelativeIdeal::maximal_ideal(const NumericalSemigroup& owner) {
  const int len = owner.conductor() + owner.max_generator() + 1;
  std::vector<bool> bits(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) bits[static_cast<std::size_t>(i)] = i > 0 && owner.contains(i);
  return RelativeIdeal(owner, 0, bits);
}

RelativeIdeal RelativeIdeal::from_members(const NumericalSemigroup& owner, std::span<const int> elements, int from) {
  int lo = from;
  for (int x : elements) lo = std::min(lo, x);
  std::vector<bool> bits(static_cast<std::size_t>(from - lo), false);
  for (int x : elements) {
    if (x < from) bits[static_cast<std::size_t>(x - lo)] = true;
  }
  auto member = [&](int z) { return z >= from || (z >= lo && bits[static_cast<std::size_t>(z - lo)]); };
  for (int x = lo; x < from; ++x) {
    if (!member(x)) continue;
    for (int s = 1; x + s < from; ++s) {
      if (owner.contains(s) && !member(x + s)) {
        throw std::invalid_argument("relative ideal: set is not closed under adding " + owner.label() + " (" +
                                    std::to_string(x) + " + " + std::to_string(s) + ")");
      }
    }
  }
  return RelativeIdeal(owner, lo, bits);
}

bool RelativeIdeal::contains(int z) const {
  if (z < min_) return false;
  const long i = static_cast<long>(z) - min_;
  if (i >= static_cast<long>(window_.size())) return true;
  return window_[static_cast<std::size_t>(i)];
}

int RelativeIdeal::tail_start() const {
  int t = min_ + static_cast<int>(window_.size());
  while (t > min_ && contains(t - 1)) --t;
  return t;
}

std::vector<int> RelativeIdeal::small_elements() const {
  std::vector<int> out;
  const int t = tail_start();
  for (int z = min_; z < t; ++z) {
    if (contains(z)) out.push_back(z);
  }
  return out;
}

bool RelativeIdeal::is_integral() const {
  if (min_ < 0) return false;
  for (int z = min_; z < owner_.conductor(); ++z) {
    if (contains(z) && !owner_.contains(z)) return false;
  }
  return true;
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const {
  require_same_owner(*this, other, "subset_of");
  if (min_ < other.min_) return false;
  const int end = std::max(tail_start(), other.tail_start());
  for (int z = min_; z < end; ++z) {
    if (contains(z) && !other.contains(z)) return false;
  }
  return true;
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int z : small_elements()) os << z << ',';
  os << tail_start() << ",...}";
  return os.str();
}

std::strong_ordering operator<=>(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (auto c = a.min_ <=> b.min_; c != 0) return c;
  if (auto c = a.window_ <=> b.window_; c != 0) return c;
  return a.owner_ <=> b.owner_;
}

std::ostream& operator<<(std::ostream& os, const RelativeIdeal& e) { return os << e.to_string(); }

RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_owner(e, f, "add");
  const NumericalSemigroup& s = e.owner();
  const int lo = e.min() + f.min();
  const int len = s.conductor() + s.max_generator() + 1;
  std::vector<bool> bits(static_cast<std::size_t>(len), false);
  for (int i = 0; i < len; ++i) {
    const int z = lo + i;
    for (int x = e.min(); x <= z - f.min(); ++x) {
      if (e.contains(x) && f.contains(z - x)) {
        bits[static_cast<std::size_t>(i)] = true;
        break;
      }
    }
  }
  return RelativeIdeal(s, lo, bits);
}

RelativeIdeal dual(const RelativeIdeal& e) {
  const NumericalSemigroup& s = e.owner();
  const int c = s.conductor();
  // z + min(E) must lie in S, so z >= -min(E); z >= c - min(E) always works.
  const int lo = -e.min();
  const int len = c + 1;
  std::vector<bool> bits(static_cast<std::size_t>(len), true);
  for (int i = 0; i < len; ++i) {
    const int z = lo + i;
    for (int x = e.min(); x < c - z; ++x) {
      if (e.contains(x) && !s.contains(z + x)) {
        bits[static_cast<std::size_t>(i)] = false;
        break;
      }
    }
  }
  return RelativeIdeal(s, lo, bits);
}

RelativeIdeal v_closure(const RelativeIdeal& e) { return dual(dual(e)); }

bool is_strong(const RelativeIdeal& e) { return add(e, dual(e)) == e; }

bool is_strongly_divisorial(const RelativeIdeal& e) {
  if (!e.is_integral()) {
    throw std::invalid_argument("is_strongly_divisorial: " + e.to_string() + " is not an integral ideal");
  }
  return is_strong(e) && v_closure(e) == e;
}

}  // namespace overring::numsg
