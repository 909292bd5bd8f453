#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgh/curve.hpp"
#include "cgh/error.hpp"
#include "cgh/expansion.hpp"

using namespace cgh;
using QS = LaurentSeries<Rational>;

namespace {

const char* kQuintic = "x^5 + 5x^4 - 168x^3 + 1584x^2 - 10368x + 20736";
const char* kSextic = "x^6 + 2x^5 - 3x^4 + x + 4";

QS eval(const Poly<Rational>& f, const QS& s) {
    QS acc(Rational(0));
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * s + f.coeffs()[i];
    return acc;
}

void check_on_curve(const HyperellipticCurve& C, const LocalExpansion<Rational>& e, int T) {
    QS lhs = e.y * e.y, rhs = eval(C.b(), e.x);
    QS diff = lhs - rhs;
    int known = diff.precision();
    CHECK(known >= T - 4 * C.degree());
    CHECK(diff.is_zero());
}

} // namespace

TEST_CASE("curve validation") {
    HyperellipticCurve C = HyperellipticCurve::parse(kQuintic);
    CHECK(C.genus() == 2);
    CHECK(C.odd_degree());
    CHECK(HyperellipticCurve::parse(std::string("y^2 = ") + kQuintic) == C);
    CHECK(HyperellipticCurve::parse(kSextic).genus() == 2);
    CHECK_THROWS_AS(HyperellipticCurve::parse("2x^5 + 1"), InputError);
    CHECK_THROWS_AS(HyperellipticCurve::parse("x^2 + 1"), InputError);
    CHECK_THROWS_AS(HyperellipticCurve::parse("x^3 - 2x^2 + x"), InputError);
    CHECK_THROWS_AS(HyperellipticCurve::parse("x^3 + x/2 + 1"), InputError);
    CHECK(C.reversed().coeff(0) == 1);
    CHECK(C.reversed().coeff(1) == 5);
    CHECK_FALSE(C.good_reduction(5));
    CHECK_FALSE(HyperellipticCurve::parse("x^5 - 4x^4 - 48x^3 + 64x^2 + 512x + 256").good_reduction(7));
    CHECK_FALSE(HyperellipticCurve::parse("x^3 - 1351755x + 555015942").good_reduction(43));
    CHECK(HyperellipticCurve::parse("x^3 + x + 1").good_reduction(7));
    CHECK_FALSE(HyperellipticCurve::parse("x^3 + x + 1").good_reduction(31));
}

TEST_CASE("points and divisors") {
    HyperellipticCurve C = HyperellipticCurve::parse(kQuintic);
    auto P = CurvePoint::affine(Rational(-12), Rational(720));
    CHECK_NOTHROW(validate_point(C, P));
    CHECK_THROWS_AS(validate_point(C, CurvePoint::affine(Rational(1), Rational(1))), InputError);
    CHECK_THROWS_AS(validate_point(C, CurvePoint::infinity_plus()), InputError);
    CHECK(P.involution().y() == -720);

    auto D1 = parse_divisor(C, "(-8,528)-w");
    CHECK(D1.terms().size() == 2);
    CHECK(D1.multiplicity(CurvePoint::affine(Rational(-8), Rational(-528))) == -1);
    auto D3 = parse_divisor(C, "(12,432)-((-12,-720))");
    CHECK(D3.multiplicity(P.involution()) == -1);
    CHECK(D1.disjoint_from(D3));
    auto D = parse_divisor(C, "2*(0,-144) - (-12,720) - inf");
    CHECK(D.multiplicity(CurvePoint::infinity()) == -1);
    CHECK_THROWS_AS(parse_divisor(C, "(0,-144)"), DomainError);
    auto J = parse_divisor(C, R"([{"x": -8, "y": 528, "mult": 1}, {"x": "-8", "y": "-528", "mult": -1}])");
    CHECK(J == D1);
    CHECK(D1.involution() == -D1);
}

TEST_CASE("local expansions satisfy the curve equation") {
    const int T = 30;
    for (const char* poly : {kQuintic, kSextic, "x^3 - 1351755x + 555015942", "x^7 - x + 1"}) {
        HyperellipticCurve C = HyperellipticCurve::parse(poly);
        std::vector<CurvePoint> pts = points_at_infinity(C);
        if (C.degree() == 5) {
            pts.push_back(CurvePoint::affine(Rational(-12), Rational(720)));
            pts.push_back(CurvePoint::affine(Rational(0), Rational(-144)));
        }
        if (C.degree() == 3) pts.push_back(CurvePoint::affine(Rational(2523), Rational(114912)));
        if (C.degree() == 6) pts.push_back(CurvePoint::affine(Rational(0), Rational(2)));
        for (const auto& P : pts) {
            auto e = local_expansion(C, P, T, Rational(0));
            INFO(poly << " at " << P.to_string());
            check_on_curve(C, e, T);
        }
    }
}

TEST_CASE("expansion at a Weierstrass point and the parameter conventions") {
    HyperellipticCurve C = HyperellipticCurve::parse("x^5 - x");
    auto W = CurvePoint::affine(Rational(1), Rational(0));
    auto e = local_expansion(C, W, 20, Rational(0));
    CHECK(e.parameter == "t = y");
    CHECK(e.x.coeff(0) == 1);
    CHECK(e.x.coeff(2) == Rational(1, 4)); // t^2 / b'(1)
    check_on_curve(C, e, 20);

    HyperellipticCurve Q = HyperellipticCurve::parse(kQuintic);
    auto inf = local_expansion(Q, CurvePoint::infinity(), 12, Rational(0));
    CHECK(inf.parameter == "t = -x^2/y");
    CHECK(inf.x.coeff(-2) == 1);
    CHECK(inf.x.coeff(0) == -5);
    CHECK(inf.x.coeff(2) == 168);
    CHECK(inf.x.is_even());
    CHECK(inf.y.is_odd());
    // t = -x^2 / y
    QS t = -(inf.x * inf.x).divided_by(inf.y, 8);
    CHECK(t.coeff(1) == 1);
    for (int k = 2; k < t.precision(); ++k) CHECK(t.coeff(k) == 0);
    CHECK(t.precision() >= 4);

    HyperellipticCurve S = HyperellipticCurve::parse(kSextic);
    auto ip = local_expansion(S, CurvePoint::infinity_plus(), 10, Rational(0));
    auto im = local_expansion(S, CurvePoint::infinity_minus(), 10, Rational(0));
    CHECK(ip.y.coeff(-3) == 1);
    CHECK(im.y.coeff(-3) == -1);
}

TEST_CASE("p-adic expansions agree with rational ones") {
    HyperellipticCurve C = HyperellipticCurve::parse(kQuintic);
    auto P = CurvePoint::affine(Rational(-12), Rational(720));
    auto eq = local_expansion(C, P, 10, Rational(0));
    auto proto = PadicNumber::zero(7, 12);
    auto ep = local_expansion(C, P, 10, proto);
    for (int k = 0; k < 10; ++k) CHECK(ep.y.coeff(k) == PadicNumber::from_rational(7, eq.y.coeff(k), 12));
}
