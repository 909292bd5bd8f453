#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgh/error.hpp"
#include "cgh/hensel.hpp"
#include "cgh/laurent.hpp"
#include "cgh/matrix.hpp"
#include "cgh/padic.hpp"
#include "cgh/poly.hpp"
#include "cgh/polyparse.hpp"
#include "cgh/zmod.hpp"

using namespace cgh;
using QS = LaurentSeries<Rational>;

TEST_CASE("polynomial parsing and formatting") {
    auto f = parse_rational_poly("x^5 + 5x^4 - 168*x^3 - 1584x^2 - 10368*x + 5/2");
    CHECK(f.degree() == 5);
    CHECK(f.coeff(4) == 5);
    CHECK(f.coeff(0) == Rational(5, 2));
    CHECK(f.to_string() == "x^5 + 5*x^4 - 168*x^3 - 1584*x^2 - 10368*x + 5/2");
    CHECK(parse_rational_poly(f.to_string()) == f);
    CHECK(parse_rational_poly("(x+1)^2 - x^2") == parse_rational_poly("2x + 1"));
    auto g = parse_bivariate("(y - 144)*(x + 12) - (y + 720)*x");
    CHECK(y_coefficient(g, 1) == parse_rational_poly("12"));
    CHECK(y_coefficient(g, 0) == parse_rational_poly("-864x - 1728"));
    CHECK_THROWS_AS(parse_rational_poly("x^2 + y"), InputError);
    CHECK_THROWS_AS(parse_rational_poly("x^^2"), InputError);
}

TEST_CASE("polynomial division and gcd") {
    auto a = parse_rational_poly("x^4 - 1"), b = parse_rational_poly("x^2 + 1");
    auto [q, r] = a.divmod(b);
    CHECK(q == parse_rational_poly("x^2 - 1"));
    CHECK(r.is_zero());
    CHECK(poly_gcd(a, parse_rational_poly("x^3 - x")) == parse_rational_poly("x^2 - 1"));
    auto [g, s, t] = poly_xgcd(parse_rational_poly("x^3 + 2x + 1"), parse_rational_poly("3x^2 + 2"));
    CHECK(g.degree() == 0);
    CHECK(s * parse_rational_poly("x^3 + 2x + 1") + t * parse_rational_poly("3x^2 + 2") == g);
}

TEST_CASE("geometric series and precision rules") {
    QS one_minus_t(Rational(0), 0, {Rational(1), Rational(-1)});
    QS inv = one_minus_t.inverse(10);
    CHECK(inv.precision() == 10);
    for (int k = 0; k < 10; ++k) CHECK(inv.coeff(k) == 1);
    CHECK_THROWS_AS(inv.coeff(10), PrecisionError);

    // f known mod t^5 with valuation -2, g known mod t^3 with valuation 1
    QS f(Rational(0), -2, {Rational(1), Rational(0), Rational(3)}, 5);
    QS g(Rational(0), 1, {Rational(1), Rational(1)}, 3);
    CHECK((f * g).precision() == 1); // min(5 + 1, 3 - 2)
    CHECK((f + g).precision() == 3);
    CHECK(f.inverse().precision() == 9); // relative precision 7 from exponent 2
    CHECK(f.derivative().precision() == 4);
    CHECK(f.integral().precision() == 6);
    QS h(Rational(0), -1, {Rational(2)}, 4);
    CHECK_THROWS_AS(h.integral(), DomainError);
    Rational logc;
    auto ih = h.integral(&logc);
    CHECK(logc == 2);
    CHECK(ih.is_zero());
}

TEST_CASE("hensel root of Y^2 = 1 + t matches the binomial series") {
    QS rhs(Rational(0), 0, {Rational(1), Rational(1)});
    auto F = [&](const QS& y) { return y * y - rhs; };
    auto dF = [&](const QS& y) { return y * Rational(2); };
    auto y = hensel_root<Rational>(F, dF, QS::monomial(Rational(1), 0), 20);
    CHECK(y.precision() == 20);
    Rational binom = 1;
    for (int k = 0; k < 20; ++k) {
        CHECK(y.coeff(k) == binom);
        binom = binom * (Rational(1, 2) - k) / (k + 1);
    }
}

TEST_CASE("series over Z/p^n and Q_p share the interface") {
    ZModInt one(1, 125);
    LaurentSeries<ZModInt> s(one, 0, {ZModInt(1, 125), ZModInt(5, 125)});
    auto inv = s.inverse(6);
    auto prod = (s * inv).truncated(6);
    CHECK(prod.coeff(0).value() == 1);
    for (int k = 1; k < 6; ++k) CHECK(prod.coeff(k).is_zero());
    CHECK_THROWS_AS(LaurentSeries<ZModInt>(one, 0, {ZModInt(5, 125)}).inverse(3), DomainError);

    auto proto = PadicNumber::zero(5, 6);
    LaurentSeries<PadicNumber> ps(proto, 0, {PadicNumber::from_integer(5, 1, 6), PadicNumber::from_integer(5, 3, 6)});
    auto pinv = ps.inverse(8);
    CHECK(pinv.coeff(7) == PadicNumber::from_integer(5, -2187, 6)); // (-3)^7
}

TEST_CASE("linear algebra") {
    Rational z(0);
    auto m = Matrix<Rational>::from_rows({{Rational(0), Rational(0), Rational(0), Rational(1, 3)},
                                          {Rational(0), Rational(0), Rational(1), Rational(-10, 3)},
                                          {Rational(0), Rational(-1), Rational(0), Rational(-56)},
                                          {Rational(-1, 3), Rational(10, 3), Rational(56), Rational(0)}},
                                         z);
    auto mi = inverse(m);
    CHECK(to_string(m * mi) == to_string(Matrix<Rational>::identity(4, z)));
    CHECK(determinant(m) == Rational(1, 9));

    auto cp = charpoly(Matrix<Rational>::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, z));
    CHECK(cp.size() == 3);
    CHECK(cp[0] == 5);
    CHECK(cp[1] == -5);
    CHECK(cp[2] == 1);
    auto cp4 = charpoly(m);
    CHECK(cp4[0] == determinant(m));
    CHECK(cp4[3] == 0); // trace

    auto ns = nullspace(Matrix<Rational>::from_rows({{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}}, z));
    CHECK(ns.size() == 2);

    // p-adic solve with a non-unit pivot available
    auto P = [](long n) { return PadicNumber::from_integer(5, n, 8); };
    auto pm = Matrix<PadicNumber>::from_rows({{P(5), P(1)}, {P(1), P(5)}}, P(0));
    auto x = solve_linear(pm, std::vector<PadicNumber>{P(6), P(6)});
    CHECK(x[0] == P(1));
    CHECK(x[1] == P(1));
}

TEST_CASE("span comparison modulo p^N") {
    auto P = [](long n) { return PadicNumber::from_integer(5, n, 6); };
    auto a = Matrix<PadicNumber>::from_rows({{P(1), P(0)}}, P(0));
    auto b = Matrix<PadicNumber>::from_rows({{P(1), P(5)}}, P(0));
    CHECK_FALSE(span_equal_mod_pN(a, b, 2));
    CHECK(span_equal_mod_pN(a, b, 1));
    auto c = Matrix<PadicNumber>::from_rows({{P(5), P(0)}}, P(0));
    CHECK(span_equal_mod_pN(a, c, 5)); // rescaling a row by p keeps the span
    auto w1 = Matrix<PadicNumber>::from_rows({{P(3), P(1), P(0), P(2)}, {P(4), P(0), P(1), P(7)}}, P(0));
    auto w2 = Matrix<PadicNumber>::from_rows({{P(7), P(1), P(1), P(9)}, {P(3 + 8), P(1), P(2), P(2 + 14)}}, P(0));
    CHECK(span_equal_mod_pN(w1, w2, 6));
}
