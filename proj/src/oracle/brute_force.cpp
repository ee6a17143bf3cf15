#include "overring/oracle/brute_force.hpp"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace overring::oracle {
namespace {

using Mask = std::uint64_t;

void check_frobenius(int f) {
  if (f > kMaxFrobenius)
    throw std::invalid_argument("oracle: frobenius " + std::to_string(f) + " exceeds " +
                                std::to_string(kMaxFrobenius));
}

// Bit v set ⇔ v ∈ [1, top] is a gap.
Mask gap_mask(const GapSet& gaps) {
  Mask m = 0;
  for (int g : gaps) m |= Mask{1} << g;
  return m;
}

// The complement of `gaps` in N is closed under addition. Only sums landing
// on a gap can fail, and those need both summands below the largest gap.
bool closed(Mask gaps, int top) {
  for (int a = 1; a < top; ++a) {
    if (gaps >> a & 1) continue;
    // Elements b of [1, top - a] ∖ gaps, shifted by a, must avoid gaps.
    for (int b = a; a + b <= top; ++b)
      if (!(gaps >> b & 1) && (gaps >> (a + b) & 1)) return false;
  }
  return true;
}

GapSet unpack(Mask m, int top) {
  GapSet out;
  for (int v = 1; v <= top; ++v)
    if (m >> v & 1) out.push_back(v);
  return out;
}

// Integer sets living on the window [-c, 3c): bit i stands for v = i - c.
// Every v ≥ 3c is an implicit member; every v < -c is an implicit non-member.
using Win = std::bitset<128>;

struct Frame {
  int c;
  int width;  // 4c
  Win full;   // bits [0, width)
  Win bad;    // v ∈ [-c, c) with v ∉ S

  int idx(int v) const { return v + c; }
};

Win shifted(const Win& w, int by) { return by >= 0 ? w << by : w >> -by; }

int c_tail(const Frame& f, int m) { return std::min(f.c - m, 3 * f.c); }

int min_of(const Frame& f, const Win& w) {
  const std::size_t i = w._Find_first();
  return i < static_cast<std::size_t>(f.width) ? static_cast<int>(i) - f.c : 3 * f.c;
}

// S − X for min(X) ∈ [-c, c]: z needs z + min(X) ≥ 0, and every z ≥ c − min(X)
// qualifies outright. In between, X + z must avoid the non-members of S.
Win dual(const Frame& f, const Win& x) {
  const int m = min_of(f, x);
  Win out;
  for (int z = -m; z < c_tail(f, m); ++z)
    if ((shifted(x, z) & f.full & f.bad).none()) out.set(f.idx(z));
  for (int z = c_tail(f, m); z < 3 * f.c; ++z) out.set(f.idx(z));
  return out;
}

// d + X ⊆ X for every d ∈ D, for X integral with tail [2c, ∞) and D ⊆ [-c, ∞).
bool absorbs(const Frame& f, const Win& x, const Win& d) {
  const Win missing = ~x & f.full;
  for (std::size_t i = d._Find_first(); i < static_cast<std::size_t>(f.width); i = d._Find_next(i)) {
    const int by = static_cast<int>(i) - f.c;
    if ((shifted(x, by) & missing).any()) return false;
    // Shifted implicit tail: [3c + by, 3c) must lie in X.
    for (int v = 3 * f.c + by; v < 3 * f.c; ++v)
      if (!x[f.idx(v)]) return false;
  }
  return true;
}

IntegerSet to_integer_set(const Frame& f, const Win& w) {
  int from = 3 * f.c;
  while (from > -f.c && w[f.idx(from - 1)]) --from;
  IntegerSet out;
  out.from = from;
  for (int v = -f.c; v < from; ++v)
    if (w[f.idx(v)]) out.small.push_back(v);
  return out;
}

Frame frame_for(Mask gaps, int top) {
  Frame f;
  f.c = top + 1;
  f.width = 4 * f.c;
  for (int i = 0; i < f.width; ++i) f.full.set(i);
  for (int v = -f.c; v < f.c; ++v)
    if (v < 0 || (gaps >> v & 1)) f.bad.set(f.idx(v));
  return f;
}

}  // namespace

std::vector<GapSet> all_semigroups(int f_max) {
  if (f_max < 0) throw std::invalid_argument("oracle: f_max must be non-negative");
  check_frobenius(f_max);
  std::vector<GapSet> out;
  const Mask limit = Mask{1} << f_max;
  for (Mask sub = 0; sub < limit; ++sub) {
    const Mask gaps = sub << 1;  // bit 0 of sub is value 1
    if (closed(gaps, f_max)) out.push_back(unpack(gaps, f_max));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GapSet> oversemigroups(const GapSet& gaps) {
  const int top = gaps.empty() ? 0 : gaps.back();
  check_frobenius(top);
  if (!closed(gap_mask(gaps), top)) throw std::invalid_argument("oracle: gap list is not a semigroup complement");
  const auto g = gaps.size();
  std::vector<GapSet> out;
  for (Mask keep = 0; keep < (Mask{1} << g); ++keep) {
    Mask m = 0;
    for (std::size_t i = 0; i < g; ++i)
      if (keep >> i & 1) m |= Mask{1} << gaps[i];
    if (closed(m, top)) out.push_back(unpack(m, top));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntegerSet> strongly_divisorial_ideals(const GapSet& gaps) {
  const int top = gaps.empty() ? 0 : gaps.back();
  check_frobenius(top);
  const Mask gm = gap_mask(gaps);
  if (!closed(gm, top)) throw std::invalid_argument("oracle: gap list is not a semigroup complement");

  const Frame f = frame_for(gm, top);

  // Bit v: v ∈ S, for v ∈ [0, 2c).
  Mask s_bits = 0;
  for (int v = 0; v < 2 * f.c; ++v)
    if (v >= f.c || !(gm >> v & 1)) s_bits |= Mask{1} << v;
  const Mask span = (Mask{1} << (2 * f.c)) - 1;

  std::vector<IntegerSet> out;
  // Decide membership of each v ∈ S ∩ [0, 2c) in turn. `forced` holds e + S for
  // every chosen e; a forced value has no exclusion branch.
  std::function<void(int, Win, Mask)> dfs = [&](int v, Win w, Mask forced) {
    if (forced == 0 && v > f.c) return;  // min would exceed c
    if (v == 2 * f.c) {
      for (int u = 2 * f.c; u < 3 * f.c; ++u) w.set(f.idx(u));
      const Win d = dual(f, w);
      if (!absorbs(f, w, d)) return;
      if (dual(f, d) != w) return;
      out.push_back(to_integer_set(f, w));
      return;
    }
    if (!(forced >> v & 1)) dfs(v + 1, w, forced);
    if (!(s_bits >> v & 1)) return;  // integral: E ⊆ S
    w.set(f.idx(v));
    dfs(v + 1, w, (forced | s_bits << v) & span);
  };
  dfs(0, Win{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GapSet> divisorial_oversemigroups(const GapSet& gaps) {
  const int top = gaps.empty() ? 0 : gaps.back();
  const Frame f = frame_for(gap_mask(gaps), top);
  std::vector<GapSet> out;
  for (const auto& t : oversemigroups(gaps)) {
    const Mask tg = gap_mask(t);
    Win w;
    for (int v = 0; v < 3 * f.c; ++v)
      if (!(tg >> v & 1)) w.set(f.idx(v));
    if (dual(f, dual(f, w)) == w) out.push_back(t);
  }
  return out;
}

int longest_overring_chain(const GapSet& gaps) {
  const auto all = oversemigroups(gaps);
  std::map<GapSet, int> memo;
  // Longest chain from T up to N, counting T.
  std::function<int(const GapSet&)> up = [&](const GapSet& t) -> int {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    int best = 1;
    for (const auto& u : all) {
      if (u.size() >= t.size()) continue;
      if (std::includes(t.begin(), t.end(), u.begin(), u.end())) best = std::max(best, 1 + up(u));
    }
    memo[t] = best;
    return best;
  };
  return up(gaps) + 1;
}

}  // namespace overring::oracle
