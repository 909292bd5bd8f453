#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cgh {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// p-adic valuation of a nonzero integer or rational.
int valuation(const Integer& n, std::uint32_t p);
int valuation(const Rational& q, std::uint32_t p);

Integer ipow(const Integer& base, unsigned long e);
Integer ipow(std::uint32_t base, unsigned long e);

// Ring helpers used by the generic containers. Rationals need no context.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_rational_like(const Rational&, const Rational& q) { return q; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_invertible(const Rational& q) { return sgn(q) != 0; }
// Lower is a better pivot. Any nonzero rational is as good as any other.
inline int pivot_score(const Rational& q) { return sgn(q) == 0 ? 1 << 30 : 0; }

} // namespace cgh
