#include "fuzzysim/ofn.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace fuzzysim {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticError("OFN addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ArithmeticError("OFN subtraction overflow: " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

}  // namespace

Ofn::value_type Ofn::min_component() const { return *std::min_element(c_.begin(), c_.end()); }

Ofn::value_type Ofn::max_component() const { return *std::max_element(c_.begin(), c_.end()); }

bool Ofn::is_crisp() const { return c_[0] == c_[1] && c_[1] == c_[2] && c_[2] == c_[3]; }

bool Ofn::is_proper() const { return std::is_sorted(c_.begin(), c_.end()); }

Ofn& Ofn::operator+=(const Ofn& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = checked_add(c_[i], rhs.c_[i]);
  return *this;
}

Ofn& Ofn::operator-=(const Ofn& rhs) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] = checked_sub(c_[i], rhs.c_[i]);
  return *this;
}

std::string Ofn::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  s += ')';
  return s;
}

Ofn Ofn::parse(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  auto body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parenthesis in OFN '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  Ofn out;
  std::size_t idx = 0;
  while (true) {
    auto comma = body.find(',');
    auto field = trim(body.substr(0, comma));
    if (idx >= 4) throw std::invalid_argument("OFN needs exactly 4 components: '" + std::string(text) + "'");
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad OFN component '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    out.c_[idx++] = v;
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (idx != 4) throw std::invalid_argument("OFN needs exactly 4 components: '" + std::string(text) + "'");
  return out;
}

Ofn add(const Ofn& a, const Ofn& b) { return a + b; }

Ofn sub(const Ofn& a, const Ofn& b) { return a - b; }

Ofn min_ofn(const Ofn& a, const Ofn& b) {
  return Ofn{std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2]), std::min(a[3], b[3])};
}

std::int64_t round_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("division by non-positive integer " + std::to_string(den));
  // |num| / den with half-up, then restore the sign: half away from zero.
  const bool neg = num < 0;
  const auto mag = neg ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
  const auto d = static_cast<unsigned __int128>(den);
  const auto q = (2 * mag + d) / (2 * d);
  return neg ? -static_cast<std::int64_t>(q) : static_cast<std::int64_t>(q);
}

Ofn div_int(const Ofn& a, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("OFN divisor must be positive, got " + std::to_string(n));
  return Ofn{round_div(a[0], n), round_div(a[1], n), round_div(a[2], n), round_div(a[3], n)};
}

bool IntPredicate::operator()(std::int64_t v) const {
  switch (kind) {
    case Kind::EqualsZero: return v == 0;
    case Kind::GreaterThanZero: return v > 0;
    case Kind::Equals: return v == k;
    case Kind::LessThan: return v < k;
    case Kind::GreaterOrEqual: return v >= k;
  }
  return false;
}

Ofn s_condition(const Ofn& a, IntPredicate c) {
  int m = 0;
  for (auto v : a.components()) m += c(v) ? 1 : 0;
  Ofn s;
  for (int i = 1; i <= 4; ++i) s[i - 1] = m >= 5 - i ? 1 : 0;
  return s;
}

std::ostream& operator<<(std::ostream& os, const Ofn& a) { return os << a.to_string(); }

}  // namespace fuzzysim
