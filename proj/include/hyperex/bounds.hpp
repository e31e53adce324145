#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rational.hpp"

namespace hyperex {

// Closed-form expansion bounds, evaluated in 50-digit binary floating point
// and rounded up to an exact Ratio, so "expansion <= bound" never fails
// because of rounding. Logarithms written log are base 2; ln is natural.

using BoundFloat = boost::multiprecision::cpp_bin_float_50;

namespace detail {

inline BoundFloat to_float(const Ratio& r) { return BoundFloat(r.num()) / BoundFloat(r.den()); }
inline BoundFloat to_float(const HalfInteger& h) { return BoundFloat(h.halves()) / 2; }
inline BoundFloat log2f(const BoundFloat& x) { return log(x) / log(BoundFloat(2)); }

}  // namespace detail

/// Smallest Ratio with denominator 10^k (k <= 12) that is >= x; saturates
/// above 2^62.
inline Ratio ceil_ratio(const BoundFloat& x) {
  if (x <= 0) return Ratio(0);
  const BoundFloat nudged = x * (1 + BoundFloat("1e-40"));
  const BoundFloat limit = BoundFloat(std::numeric_limits<std::int64_t>::max() / 2);
  std::int64_t den = 1000000000000LL;
  while (den > 1 && nudged * den >= limit) den /= 10;
  const BoundFloat scaled = ceil(nudged * den);
  if (scaled >= limit) return Ratio::saturated();
  return Ratio(scaled.convert_to<std::int64_t>(), den);
}

struct BoundValue {
  Ratio value;         // outward-rounded
  double approx = 0;   // for reports
};

inline BoundValue make_bound(const BoundFloat& x) {
  return BoundValue{ceil_ratio(x), x.convert_to<double>()};
}

namespace detail {

inline void check_bound_domain(std::int64_t delta_len, std::int64_t n, std::int64_t d,
                               HalfInteger delta, const Ratio& mu) {
  if (delta_len < 1) throw std::domain_error("bound: distance must be >= 1");
  if (n < 4) throw std::domain_error("bound: n must be >= 4");
  if (d < 2) throw std::domain_error("bound: max degree must be >= 2");
  if (delta.halves() < 1) throw std::domain_error("bound: delta must be >= 1/2");
  if (mu <= Ratio(0) || mu >= Ratio(1)) throw std::domain_error("bound: mu must lie in (0,1)");
}

}  // namespace detail

/// 8 ln(n/2) / Delta.
inline BoundValue nested_ball_term(std::int64_t dist, std::int64_t n) {
  return make_bound(8 * log(BoundFloat(n) / 2) / BoundFloat(dist));
}

/// max{ (1/Delta)^(1-mu), 500 ln n / (Delta 2^(Delta^mu / (28 delta log 2d))) }.
inline BoundValue nested_cylinder_term(std::int64_t dist, std::int64_t n, std::int64_t d,
                                         HalfInteger delta, const Ratio& mu) {
  using detail::to_float;
  const BoundFloat D(dist);
  const BoundFloat m = to_float(mu);
  const BoundFloat power = pow(1 / D, 1 - m);
  const BoundFloat expo = pow(D, m) / (28 * to_float(delta) * detail::log2f(BoundFloat(2 * d)));
  const BoundFloat decay = 500 * log(BoundFloat(n)) / (D * pow(BoundFloat(2), expo));
  return make_bound(power > decay ? power : decay);
}

/// Right-hand side of the nested-witness expansion bound.
inline BoundValue nested_bound(std::int64_t dist, std::int64_t n, std::int64_t d, HalfInteger delta,
                                 const Ratio& mu) {
  detail::check_bound_domain(dist, n, d, delta, mu);
  const BoundValue a = nested_ball_term(dist, n);
  const BoundValue b = nested_cylinder_term(dist, n, d, delta, mu);
  return a.value <= b.value ? a : b;
}

/// Diameter-free form: max{ (log d / log n)^(1-mu),
///   500 log d / 2^(log^mu n / (28 delta log^(1+mu)(2d))) }.
inline BoundValue global_bound(std::int64_t n, std::int64_t d, HalfInteger delta, const Ratio& mu) {
  detail::check_bound_domain(1, n, d, delta, mu);
  using detail::log2f;
  using detail::to_float;
  const BoundFloat m = to_float(mu);
  const BoundFloat ld = log2f(BoundFloat(d));
  const BoundFloat ln2n = log2f(BoundFloat(n));
  const BoundFloat first = pow(ld / ln2n, 1 - m);
  const BoundFloat expo = pow(ln2n, m) / (28 * to_float(delta) * pow(log2f(BoundFloat(2 * d)), 1 + m));
  const BoundFloat second = 500 * ld / pow(BoundFloat(2), expo);
  return make_bound(first > second ? first : second);
}

/// Per-family bound for limited-overlap families with segment length Delta/tau:
/// max{ (tau/Delta)^(1-mu), 360 log n / ((Delta/tau) 2^((Delta/tau)^mu / (7 delta log 2d))) }.
inline BoundValue overlap_bound(std::int64_t dist, std::int64_t tau, std::int64_t n, std::int64_t d,
                                 HalfInteger delta, const Ratio& mu) {
  detail::check_bound_domain(dist, n, d, delta, mu);
  if (tau < 1) throw std::domain_error("bound: tau must be >= 1");
  using detail::to_float;
  const BoundFloat seg = BoundFloat(dist) / BoundFloat(tau);
  const BoundFloat m = to_float(mu);
  const BoundFloat power = pow(1 / seg, 1 - m);
  const BoundFloat expo = pow(seg, m) / (7 * to_float(delta) * detail::log2f(BoundFloat(2 * d)));
  const BoundFloat decay = 360 * detail::log2f(BoundFloat(n)) / (seg * pow(BoundFloat(2), expo));
  return make_bound(power > decay ? power : decay);
}

/// Outcome of checking tau against the limited-overlap constraints.
struct TauCheck {
  bool statement_ok = false;  // tau < Delta / (42 delta log(2d) log(2 Delta))^(1/mu)
  bool growth_ok = false;     // Delta/(60 tau) 2^((Delta/tau)^mu/(28 delta log 2d)) > Delta/tau + 2 Delta
  bool quarter_ok = false;    // tau <= Delta / 4
  bool ok() const { return statement_ok && growth_ok && quarter_ok; }

  std::string failed() const {
    if (!statement_ok) return "tau < Delta/(42*delta*log(2d)*log(2*Delta))^(1/mu)";
    if (!growth_ok) return "Delta/(60*tau)*2^((Delta/tau)^mu/(28*delta*log(2d))) > Delta/tau + 2*Delta";
    if (!quarter_ok) return "tau <= Delta/4";
    return "";
  }
};

inline TauCheck validate_tau(std::int64_t dist, std::int64_t tau, HalfInteger delta, std::int64_t d,
                             const Ratio& mu) {
  if (dist <= 8) throw std::domain_error("validate_tau: requires Delta > 8");
  if (tau < 1) throw std::domain_error("validate_tau: tau must be >= 1");
  if (d < 2) throw std::domain_error("validate_tau: max degree must be >= 2");
  if (mu <= Ratio(0) || mu >= Ratio(1)) throw std::domain_error("validate_tau: mu must lie in (0,1)");
  using detail::log2f;
  using detail::to_float;
  const BoundFloat D(dist), T(tau), m = to_float(mu), dl = to_float(delta);
  TauCheck c;
  const BoundFloat denom = pow(42 * dl * log2f(BoundFloat(2 * d)) * log2f(2 * D), 1 / m);
  c.statement_ok = T < D / denom;
  const BoundFloat seg = D / T;
  const BoundFloat lhs = D / (60 * T) * pow(BoundFloat(2), pow(seg, m) / (28 * dl * log2f(BoundFloat(2 * d))));
  c.growth_ok = lhs > seg + 2 * D;
  c.quarter_ok = 4 * tau < dist;
  return c;
}

}  // namespace hyperex
