#pragma once

#include "cgh/padic.hpp"
#include "cgh/poly.hpp"
#include "cgh/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgh {

// The hyperelliptic curve y^2 = b(x) with b monic, integral and squarefree
// of degree d >= 3. Genus g = floor((d - 1) / 2).
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(Poly<Rational> b);
    // Accepts "x^5 + 5x^4 - ..." or "y^2 = x^5 + ...".
    static HyperellipticCurve parse(const std::string& text);

    const Poly<Rational>& b() const { return b_; }
    int degree() const { return b_.degree(); }
    int genus() const { return (degree() - 1) / 2; }
    bool odd_degree() const { return degree() % 2 == 1; }
    std::string to_string() const { return b_.to_string(); }
    bool operator==(const HyperellipticCurve& o) const { return b_ == o.b_; }

    // beta(z) = z^d b(1/z), the reversed polynomial; beta(0) = 1.
    Poly<Rational> reversed() const;
    // Good reduction at an odd prime: b mod p keeps its degree and stays
    // squarefree.
    bool good_reduction(std::uint32_t p) const;

private:
    Poly<Rational> b_;
};

enum class PointKind { Affine, Infinity, InfinityPlus, InfinityMinus };

// A point of the curve: affine with exact rational or p-adic coordinates,
// or one of the points at infinity (one for odd degree, two for even).
class CurvePoint {
public:
    static CurvePoint affine(const Rational& x, const Rational& y);
    static CurvePoint affine(const PadicNumber& x, const PadicNumber& y);
    static CurvePoint infinity() { return CurvePoint(PointKind::Infinity); }
    static CurvePoint infinity_plus() { return CurvePoint(PointKind::InfinityPlus); }
    static CurvePoint infinity_minus() { return CurvePoint(PointKind::InfinityMinus); }

    PointKind kind() const { return kind_; }
    bool is_affine() const { return kind_ == PointKind::Affine; }
    bool is_infinite() const { return !is_affine(); }
    // True for points at infinity and affine points with rational coordinates.
    bool is_exact() const { return !is_affine() || !padic_; }

    const Rational& x() const;
    const Rational& y() const;
    PadicNumber x_padic(std::uint32_t p, int prec) const;
    PadicNumber y_padic(std::uint32_t p, int prec) const;
    bool y_is_zero() const;

    // The hyperelliptic involution (x, y) -> (x, -y); swaps infinity+-.
    CurvePoint involution() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
    bool operator<(const CurvePoint& o) const { return sort_key() < o.sort_key(); }
    std::string to_string() const;

private:
    explicit CurvePoint(PointKind k) : kind_(k) {}
    std::string sort_key() const;

    PointKind kind_ = PointKind::Affine;
    Rational xq_, yq_;
    std::optional<std::pair<PadicNumber, PadicNumber>> padic_;
};

// Validates that P lies on C (exactly, or to the working precision for
// p-adic coordinates) and that its kind fits the degree parity.
void validate_point(const HyperellipticCurve& C, const CurvePoint& P);
bool is_weierstrass(const HyperellipticCurve& C, const CurvePoint& P);
std::vector<CurvePoint> points_at_infinity(const HyperellipticCurve& C);

// A degree-zero divisor: a finite formal sum of points with integer
// multiplicities, kept merged and sorted.
class Divisor0 {
public:
    Divisor0() = default;
    // Throws DomainError if the multiplicities do not sum to zero.
    explicit Divisor0(std::vector<std::pair<CurvePoint, long>> terms);
    // (P) - (Q)
    static Divisor0 difference(const CurvePoint& P, const CurvePoint& Q);

    const std::vector<std::pair<CurvePoint, long>>& terms() const { return terms_; }
    long multiplicity(const CurvePoint& P) const;
    std::vector<CurvePoint> support() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_affine() const;
    bool disjoint_from(const Divisor0& o) const;
    Divisor0 involution() const;

    Divisor0 operator-() const;
    friend Divisor0 operator+(const Divisor0& a, const Divisor0& b);
    friend Divisor0 operator-(const Divisor0& a, const Divisor0& b) { return a + (-b); }
    friend Divisor0 operator*(long n, const Divisor0& a);
    bool operator==(const Divisor0& o) const;

    std::string to_string() const;

private:
    struct Unchecked {};
    Divisor0(std::vector<std::pair<CurvePoint, long>> terms, Unchecked);
    void normalize();
    std::vector<std::pair<CurvePoint, long>> terms_;
};

// Parses a point "(x,y)", "inf", "inf+" or "inf-" with rational coordinates.
CurvePoint parse_point(const std::string& text);
// Parses divisors such as "(-8,528)-w", "(12,432)-((-12,-720))",
// "2*(0,-144) - (-12,720) - (1,2)" or a JSON list of {x, y, mult}.
// A trailing "-w" after a point subtracts its image under the involution.
Divisor0 parse_divisor(const HyperellipticCurve& C, const std::string& text);

} // namespace cgh
