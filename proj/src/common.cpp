#include "overring/common.hpp"

#include <stdexcept>

namespace overring {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no:
      return "false";
    case Tri::yes:
      return "true";
    case Tri::unknown:
      break;
  }
  return "unknown";
}

Count Count::finite(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Count::finite: negative count");
  return Count(Kind::finite, n);
}

std::int64_t Count::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("Count::value: count is " + to_string(*this));
  return value_;
}

Count Count::operator+(std::int64_t d) const {
  if (kind_ != Kind::finite) return *this;
  return Count::finite(value_ + d);
}

Count Count::operator+(const Count& other) const {
  if (kind_ == Kind::unsupported || other.kind_ == Kind::unsupported) return unsupported();
  if (kind_ == Kind::infinite || other.kind_ == Kind::infinite) return infinite();
  return Count::finite(value_ + other.value_);
}

std::string to_string(const Count& c) {
  switch (c.kind()) {
    case Count::Kind::finite:
      return std::to_string(c.value());
    case Count::Kind::infinite:
      return "infinite";
    case Count::Kind::unsupported:
      break;
  }
  return "unsupported";
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, Tri t) { return os << to_string(t); }

}  // namespace overring
