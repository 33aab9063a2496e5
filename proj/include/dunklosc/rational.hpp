#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace dunkl {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// software quadruple precision for identity checks with irrational exponents
using Quad = boost::multiprecision::cpp_bin_float_quad;

// Rational supports exact zero tests; every other scalar is checked against a
// tolerance.
template <class S>
inline constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<Rational> = true;

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> try_exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Quad& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

} // namespace dunkl
