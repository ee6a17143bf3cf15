#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace overring {

/// Three-valued flag. `unknown` is emitted whenever no rule decides the
/// question in either direction.
enum class Tri : std::uint8_t { no, yes, unknown };

constexpr Tri to_tri(bool b) { return b ? Tri::yes : Tri::no; }

std::string to_string(Tri t);

/// A cardinality that may be finite, infinite, or outside what the models
/// can decide. "infinite" and "unsupported" are explicit states, never
/// sentinel integers.
class Count {
 public:
  enum class Kind : std::uint8_t { finite, infinite, unsupported };

  static Count finite(std::int64_t n);
  static Count infinite() { return Count(Kind::infinite, 0); }
  static Count unsupported() { return Count(Kind::unsupported, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_unsupported() const { return kind_ == Kind::unsupported; }

  /// Throws std::logic_error unless finite.
  std::int64_t value() const;

  /// finite + finite is finite; infinite dominates; unsupported dominates all.
  Count operator+(std::int64_t d) const;
  Count operator+(const Count& other) const;

  friend bool operator==(const Count&, const Count&) = default;

 private:
  Count(Kind k, std::int64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::int64_t value_;
};

std::string to_string(const Count& c);
std::ostream& operator<<(std::ostream& os, const Count& c);
std::ostream& operator<<(std::ostream& os, Tri t);

}  // namespace overring
