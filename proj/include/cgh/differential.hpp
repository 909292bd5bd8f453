#pragma once

#include "cgh/curve.hpp"
#include "cgh/laurent.hpp"
#include "cgh/poly.hpp"
#include "cgh/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgh {

// weight * (y + y_P) / (x - x_P) * dx/2y. It has residue `weight` at P,
// none at w(P) unless P is Weierstrass, and its remaining residue sits at
// infinity. A third-kind form nu_{P,Q} is term(P, 1) + term(Q, -1).
struct PolarTerm {
    CurvePoint point;
    Rational weight;
};

enum class DifferentialKind { Holomorphic, Second, Third, Mixed };
std::string to_string(DifferentialKind k);

// A meromorphic differential on y^2 = b(x), stored as
//   sum_k weight_k (y + y_k)/(x - x_k) dx/2y        (polar part)
//   + sum_i c_i x^i dx/2y                           (c_i exact or p-adic)
//   + v(x) dx/2                                     (invariant part)
// The polar structure is kept rather than expanded so that integration
// backends can recognise the building blocks.
class Differential {
public:
    Differential() = default;
    static Differential omega(int i, const Scalar& c = Scalar(1L));
    static Differential polar(const CurvePoint& P, const Rational& weight = 1);
    static Differential invariant(const Poly<Rational>& v);
    // u(x) dx/2y
    static Differential from_poly(const Poly<Rational>& u);

    const std::vector<PolarTerm>& polar_terms() const { return polar_; }
    const std::vector<Scalar>& omega_coeffs() const { return omega_; }
    Scalar omega_coeff(int i) const;
    const Poly<Rational>& invariant_part() const { return inv_; }
    // Highest i with a nonzero c_i, or -1.
    int omega_degree() const;
    bool has_polar() const { return !polar_.empty(); }
    bool is_zero_form() const { return polar_.empty() && omega_.empty() && inv_.is_zero(); }
    // All coefficients and polar points are exact rationals.
    bool is_exact() const;
    // The x^i dx/2y part with exact coefficients (throws if p-adic).
    Poly<Rational> exact_omega_poly() const;

    Differential polar_part() const;
    Differential omega_part() const;
    Differential invariant_part_form() const;

    Differential operator-() const;
    Differential& operator+=(const Differential& o);
    Differential& operator-=(const Differential& o) { return *this += -o; }
    Differential& operator*=(const Scalar& s);
    friend Differential operator+(Differential a, const Differential& b) { return a += b; }
    friend Differential operator-(Differential a, const Differential& b) { return a -= b; }
    friend Differential operator*(const Scalar& s, Differential a) { return a *= s; }

    DifferentialKind kind(const HyperellipticCurve& C) const;

    // Normal form (u(x) + y*v(x))/w(x) * dx/(2y) when every coefficient is
    // exact; p-adic omega coefficients are listed after the exact part.
    std::string to_string(const HyperellipticCurve& C) const;

private:
    void normalize();
    std::vector<PolarTerm> polar_;
    std::vector<Scalar> omega_;
    Poly<Rational> inv_;
};

// Canonical (u, v, w) with (u + y v)/w * dx/2y, gcd(u, v, w) = 1 and w
// monic. Used to match differentials against stored oracle keys.
struct FormKey {
    Poly<Rational> u, v, w;
    bool operator==(const FormKey& o) const { return u == o.u && v == o.v && w == o.w; }
    std::string to_string() const;
};
FormKey canonical_form_key(Poly<Rational> u, Poly<Rational> v, Poly<Rational> w);
// Key of the polar part of an exact differential.
FormKey polar_form_key(const Differential& w);
// Parses "(u + y*v)/(w) * dx/(2y)" or "(u + y*v) * dx/(2y)".
FormKey parse_form_key(const std::string& text);

// Expansion of the coefficient of dt at P, known past exponent `need`.
// Precision is raised automatically until that exponent is determined.
template <class R>
LaurentSeries<R> expand_form(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P, int need, const R& proto);
extern template LaurentSeries<Rational> expand_form(const HyperellipticCurve&, const Differential&, const CurvePoint&, int, const Rational&);
extern template LaurentSeries<PadicNumber> expand_form(const HyperellipticCurve&, const Differential&, const CurvePoint&, int, const PadicNumber&);

// Residue at a point; exact differentials only.
Rational residue(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P);
// The divisor of residues, sum_P Res_P(w) (P). Requires integer residues.
Divisor0 residue_divisor(const HyperellipticCurve& C, const Differential& w);

// The third-kind differential with residue divisor D (Sum of nu_j).
// Odd degree uses nu_{P,inf}; even degree uses infinity- with the omega_g
// corrections, and (inf-) - (inf+) is represented by 2 omega_g.
Differential third_kind_from_divisor(const HyperellipticCurve& C, const Divisor0& D);

} // namespace cgh
