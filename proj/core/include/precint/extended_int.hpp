#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace precint {

/// An integer or +infinity; the codomain of every valuation in the library.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of valuations

  static constexpr ExtInt infinity() {
    ExtInt r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtInt v) { return os << v.to_string(); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

}  // namespace precint
