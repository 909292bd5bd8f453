#pragma once

#include "cgh/curve.hpp"
#include "cgh/laurent.hpp"

#include <string>

namespace cgh {

// x(t) and y(t) at a point, both known modulo t^T, with the uniformiser
// chosen by the kind of point:
//   affine, y != 0      t = x - x0
//   affine, y == 0      t = y
//   infinity (odd)      t = x^g / y  (t = -x^2 / y in genus 2)
//   infinity+- (even)   t = 1 / x
// R is Rational for rational points or PadicNumber; for p-adic work the
// prototype fixes p and the working precision.
template <class R>
struct LocalExpansion {
    LaurentSeries<R> x;
    LaurentSeries<R> y;
    std::string parameter;
};

template <class R>
LocalExpansion<R> local_expansion(const HyperellipticCurve& C, const CurvePoint& P, int T, const R& proto);

// Coordinates of an affine point in the coefficient ring of an expansion.
inline Rational point_x(const CurvePoint& P, const Rational&) { return P.x(); }
inline Rational point_y(const CurvePoint& P, const Rational&) { return P.y(); }
inline PadicNumber point_x(const CurvePoint& P, const PadicNumber& proto) { return P.x_padic(proto.prime(), proto.precision()); }
inline PadicNumber point_y(const CurvePoint& P, const PadicNumber& proto) { return P.y_padic(proto.prime(), proto.precision()); }

// Sign s in t = s * x^g / y used at the odd-degree point at infinity.
int infinity_parameter_sign(const HyperellipticCurve& C);

// Value of the uniformiser at P at a nearby point Q (same residue disc).
PadicNumber local_parameter_value(const HyperellipticCurve& C, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int prec);

extern template LocalExpansion<Rational> local_expansion(const HyperellipticCurve&, const CurvePoint&, int, const Rational&);
extern template LocalExpansion<PadicNumber> local_expansion(const HyperellipticCurve&, const CurvePoint&, int, const PadicNumber&);

} // namespace cgh
