#pragma once

#include "cgh/padic.hpp"
#include "cgh/rational.hpp"

#include <string>
#include <variant>

namespace cgh {

// A coefficient that is either an exact rational or a p-adic number.
// Exact values are coerced at the ambient precision when they meet p-adics.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& q) : v_(q) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(const PadicNumber& a) : v_(a) {}

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;
    const PadicNumber& padic() const;
    // The p-adic value; exact values are converted at precision prec.
    PadicNumber to_padic(std::uint32_t p, int prec) const;
    bool is_zero() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    std::string to_string() const;

private:
    std::variant<Rational, PadicNumber> v_;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

} // namespace cgh
