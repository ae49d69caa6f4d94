#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzysim {

/// Raised when a componentwise operation would leave the 64-bit range.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Ordered fuzzy number stored as four integers (a1, a2, a3, a4).
///
/// Arithmetic is componentwise. No ordering between components is required:
/// subtraction routinely produces improper tuples such as (1,3,3,1), and
/// those are ordinary values here.
class Ofn {
 public:
  using value_type = std::int64_t;

  constexpr Ofn() = default;
  constexpr Ofn(value_type a1, value_type a2, value_type a3, value_type a4) : c_{a1, a2, a3, a4} {}

  static constexpr Ofn crisp(value_type c) { return Ofn{c, c, c, c}; }
  static constexpr Ofn zero() { return Ofn{}; }
  static constexpr Ofn one() { return crisp(1); }

  constexpr value_type operator[](std::size_t i) const { return c_[i]; }
  constexpr value_type& operator[](std::size_t i) { return c_[i]; }
  constexpr const std::array<value_type, 4>& components() const { return c_; }

  value_type min_component() const;
  value_type max_component() const;

  /// All four components equal.
  bool is_crisp() const;
  /// Components non-decreasing.
  bool is_proper() const;

  friend constexpr bool operator==(const Ofn&, const Ofn&) = default;

  Ofn& operator+=(const Ofn& rhs);
  Ofn& operator-=(const Ofn& rhs);

  /// "(a1,a2,a3,a4)"
  std::string to_string() const;

  /// Accepts "a1,a2,a3,a4" with optional surrounding parentheses and spaces.
  static Ofn parse(std::string_view text);

 private:
  std::array<value_type, 4> c_{};
};

Ofn add(const Ofn& a, const Ofn& b);
Ofn sub(const Ofn& a, const Ofn& b);
Ofn min_ofn(const Ofn& a, const Ofn& b);

template <typename... Rest>
Ofn min_ofn(const Ofn& a, const Ofn& b, const Rest&... rest) {
  return min_ofn(min_ofn(a, b), rest...);
}

inline Ofn operator+(Ofn a, const Ofn& b) { return a += b; }
inline Ofn operator-(Ofn a, const Ofn& b) { return a -= b; }

/// Componentwise division by a positive integer, each quotient rounded to
/// the nearest integer with halves rounded away from zero.
Ofn div_int(const Ofn& a, std::int64_t n);

/// Nearest-integer quotient used by div_int; exposed so the rounding policy
/// lives in exactly one place.
std::int64_t round_div(std::int64_t num, std::int64_t den);

/// Integer condition used by s_condition.
struct IntPredicate {
  enum class Kind { EqualsZero, GreaterThanZero, Equals, LessThan, GreaterOrEqual };

  Kind kind = Kind::EqualsZero;
  std::int64_t k = 0;

  static constexpr IntPredicate equals_zero() { return {Kind::EqualsZero, 0}; }
  static constexpr IntPredicate greater_than_zero() { return {Kind::GreaterThanZero, 0}; }
  static constexpr IntPredicate equals(std::int64_t k) { return {Kind::Equals, k}; }
  static constexpr IntPredicate less_than(std::int64_t k) { return {Kind::LessThan, k}; }
  static constexpr IntPredicate greater_or_equal(std::int64_t k) { return {Kind::GreaterOrEqual, k}; }

  bool operator()(std::int64_t v) const;
};

/// Confidence tuple that A satisfies C. With m the number of components
/// (duplicates counted) that satisfy C, component i (1-based) is 1 when
/// m >= 5 - i. The result is always one of the five monotone 0/1 tuples.
Ofn s_condition(const Ofn& a, IntPredicate c);

std::ostream& operator<<(std::ostream& os, const Ofn& a);

}  // namespace fuzzysim
