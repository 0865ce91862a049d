#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>

namespace gorquiv {

// A value in N ∪ {∞}.
class Dim {
 public:
  constexpr Dim() = default;
  constexpr Dim(std::size_t v) : value_(v) {}  // NOLINT: implicit by design

  static constexpr Dim infinity() {
    Dim d;
    d.value_ = kInf;
    return d;
  }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }
  // Only meaningful when finite.
  constexpr std::size_t value() const { return value_; }

  friend constexpr bool operator==(Dim, Dim) = default;
  friend constexpr auto operator<=>(Dim, Dim) = default;

  std::string str() const {
    return is_finite() ? std::to_string(value_) : std::string("infinity");
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Dim d) { return os << d.str(); }

inline Dim max(Dim a, Dim b) { return a < b ? b : a; }
inline Dim min(Dim a, Dim b) { return a < b ? a : b; }

}  // namespace gorquiv
