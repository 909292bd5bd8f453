#include "cgh/expansion.hpp"

#include "cgh/error.hpp"
#include "cgh/hensel.hpp"

namespace cgh {

namespace {

template <class R>
R coordinate(const CurvePoint& P, bool want_x, const R& proto) {
    return want_x ? point_x(P, proto) : point_y(P, proto);
}

template <class R>
Poly<R> lift_poly(const Poly<Rational>& f, const R& proto) {
    return f.map(proto, [&](const Rational& q) { return from_rational_like(proto, q); });
}

template <class R>
LaurentSeries<R> eval_poly(const Poly<R>& f, const LaurentSeries<R>& s) {
    LaurentSeries<R> acc(f.proto());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * s + f.coeffs()[i];
    return acc;
}

} // namespace

int infinity_parameter_sign(const HyperellipticCurve& C) { return C.genus() == 2 ? -1 : 1; }

template <class R>
LocalExpansion<R> local_expansion(const HyperellipticCurve& C, const CurvePoint& P, int T, const R& proto0) {
    using S = LaurentSeries<R>;
    const R proto = zero_like(proto0);
    const R one = one_like(proto);
    const int d = C.degree(), g = C.genus();
    const Poly<R> b = lift_poly(C.b(), proto);
    const Poly<R> db = b.derivative();
    const int margin = 4 * d + 8;
    LocalExpansion<R> out;
    validate_point(C, P);

    if (P.kind() == PointKind::Affine && !P.y_is_zero()) {
        R x0 = coordinate(P, true, proto), y0 = coordinate(P, false, proto);
        S x = S(proto, 0, {x0, one});
        S B = eval_poly(b, x);
        auto F = [&](const S& y) { return y * y - B; };
        auto dF = [&](const S& y) { return y * from_rational_like(proto, Rational(2)); };
        out.x = x.truncated(T);
        out.y = hensel_root<R>(F, dF, S::monomial(y0, 0), T, margin);
        out.parameter = P.is_exact() ? "t = x - (" + P.x().get_str() + ")" : "t = x - x(P)";
        return out;
    }
    if (P.kind() == PointKind::Affine) {
        R x0 = coordinate(P, true, proto);
        S t2 = S::monomial(one, 2);
        auto F = [&](const S& x) { return eval_poly(b, x) - t2; };
        auto dF = [&](const S& x) { return eval_poly(db, x); };
        R slope = db(x0);
        S seed = S(proto, 0, {x0}) + t2 * (one / slope);
        out.x = hensel_root<R>(F, dF, seed, T, margin);
        out.y = S::t(proto).truncated(T);
        out.parameter = "t = y";
        return out;
    }
    if (P.kind() == PointKind::Infinity) {
        // x^(2g) = t^2 b(x); x = t^-2 (1 + O(t^2)), y = s x^g / t
        S t2 = S::monomial(one, 2);
        auto F = [&](const S& x) { return x.pow(2 * g) - t2 * eval_poly(b, x); };
        auto dF = [&](const S& x) { return x.pow(2 * g - 1) * from_rational_like(proto, Rational(2 * g)) - t2 * eval_poly(db, x); };
        S x = hensel_root<R>(F, dF, S::monomial(one, -2), T + 2 * g + 2, margin);
        int s = infinity_parameter_sign(C);
        S y = x.pow(g).shifted(-1) * from_rational_like(proto, Rational(s));
        out.x = x.truncated(T);
        out.y = y.truncated(T);
        out.parameter = s < 0 ? "t = -x^2/y" : (g == 1 ? "t = x/y" : "t = x^" + std::to_string(g) + "/y");
        return out;
    }
    // even degree: t = 1/x, y = +-t^-(g+1) sqrt(beta(t))
    Poly<R> beta = lift_poly(C.reversed(), proto);
    S B = S::from_poly(beta);
    auto F = [&](const S& u) { return u * u - B; };
    auto dF = [&](const S& u) { return u * from_rational_like(proto, Rational(2)); };
    R sign = from_rational_like(proto, Rational(P.kind() == PointKind::InfinityPlus ? 1 : -1));
    S u = hensel_root<R>(F, dF, S::monomial(sign, 0), T + g + 1, margin);
    out.x = S::monomial(one, -1).truncated(T);
    out.y = u.shifted(-(g + 1)).truncated(T);
    out.parameter = "t = 1/x";
    return out;
}

PadicNumber local_parameter_value(const HyperellipticCurve& C, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int prec) {
    if (P.kind() == PointKind::Affine && !P.y_is_zero()) return Q.x_padic(p, prec) - P.x_padic(p, prec);
    if (P.kind() == PointKind::Affine) return Q.y_padic(p, prec);
    if (!Q.is_affine()) return PadicNumber::zero(p, prec);
    PadicNumber x = Q.x_padic(p, prec), y = Q.y_padic(p, prec);
    if (P.kind() == PointKind::Infinity) return x.pow(C.genus()) / y * Rational(infinity_parameter_sign(C));
    return Rational(1) / x;
}

template LocalExpansion<Rational> local_expansion(const HyperellipticCurve&, const CurvePoint&, int, const Rational&);
template LocalExpansion<PadicNumber> local_expansion(const HyperellipticCurve&, const CurvePoint&, int, const PadicNumber&);

} // namespace cgh
