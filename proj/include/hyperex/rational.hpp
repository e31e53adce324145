#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperex {

/// Exact non-negative rational kept in lowest terms.
class Ratio {
 public:
  constexpr Ratio() = default;

  Ratio(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Ratio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest representable value; used when a bound overflows 63 bits.
  static Ratio saturated() { return Ratio(std::numeric_limits<std::int64_t>::max()); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Ratio min(const Ratio& a, const Ratio& b) { return b < a ? b : a; }
inline Ratio max(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

/// A multiple of 1/2, stored as a count of halves. Hyperbolicity values live here.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_halves(std::int64_t halves) {
    HalfInteger h;
    h.halves_ = halves;
    return h;
  }
  static constexpr HalfInteger from_int(std::int64_t v) { return from_halves(2 * v); }

  constexpr std::int64_t halves() const { return halves_; }
  double value() const { return static_cast<double>(halves_) / 2.0; }

  // floor(k * value) for k >= 0
  constexpr std::int64_t floor_times(std::int64_t k) const {
    const std::int64_t p = k * halves_;
    return p >= 0 ? p / 2 : -((-p + 1) / 2);
  }
  // ceil(k * value) for k >= 0
  constexpr std::int64_t ceil_times(std::int64_t k) const {
    const std::int64_t p = k * halves_;
    return p >= 0 ? (p + 1) / 2 : -((-p) / 2);
  }

  Ratio to_ratio() const { return Ratio(halves_, 2); }

  std::string str() const {
    if (halves_ % 2 == 0) return std::to_string(halves_ / 2);
    return std::to_string(halves_) + "/2";
  }

  friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

 private:
  std::int64_t halves_ = 0;
};

namespace detail {

inline std::int64_t parse_int64(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

}  // namespace detail

/// Parses "a/b", "a" or a finite decimal such as "0.25".
inline Ratio parse_ratio(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    return Ratio(detail::parse_int64(text.substr(0, slash)),
                 detail::parse_int64(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw std::invalid_argument("bad decimal: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const std::int64_t w = (whole.empty() || whole == "-") ? 0 : detail::parse_int64(whole);
    const std::int64_t f = detail::parse_int64(frac);
    const std::int64_t mag = (w < 0 ? -w : w) * den + f;
    return Ratio(neg ? -mag : mag, den);
  }
  return Ratio(detail::parse_int64(text));
}

inline HalfInteger parse_half_integer(const std::string& text) {
  const Ratio r = parse_ratio(text);
  if (r.den() != 1 && r.den() != 2) {
    throw std::invalid_argument("not a multiple of 1/2: " + text);
  }
  return HalfInteger::from_halves(r.den() == 1 ? 2 * r.num() : r.num());
}

}  // namespace hyperex
