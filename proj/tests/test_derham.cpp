#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgh/cohomology.hpp"
#include "cgh/differential.hpp"
#include "cgh/error.hpp"

using namespace cgh;

namespace {

const char* kQuintic = "x^5 + 5x^4 - 168x^3 + 1584x^2 - 10368x + 20736";
const char* kSextic = "x^6 + 2x^5 - 3x^4 + x + 4";

CurvePoint pt(long x, long y) { return CurvePoint::affine(Rational(x), Rational(y)); }

} // namespace

TEST_CASE("cup matrix of the p = 5 example") {
    auto C = HyperellipticCurve::parse(kQuintic);
    auto N = cup_matrix(C);
    Rational expect[4][4] = {{0, 0, 0, Rational(1, 3)},
                             {0, 0, 1, Rational(-10, 3)},
                             {0, -1, 0, -56},
                             {Rational(-1, 3), Rational(10, 3), 56, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(N(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == expect[i][j]);
}

TEST_CASE("cup matrices are antisymmetric and nondegenerate") {
    for (const char* f : {kQuintic, kSextic, "x^3 + x + 1", "x^7 - x + 1", "x^8 + 3x^3 - 1", "x^4 + 2x + 5"}) {
        auto C = HyperellipticCurve::parse(f);
        auto N = cup_matrix(C);
        INFO(f);
        for (std::size_t i = 0; i < N.rows(); ++i)
            for (std::size_t j = 0; j < N.cols(); ++j) CHECK(N(i, j) == -N(j, i));
        CHECK(determinant(N) != 0);
    }
    // genus 1: omega_0 pairs to 1 with omega_1
    auto E = cup_matrix(HyperellipticCurve::parse("x^3 - 1351755x + 555015942"));
    CHECK(E(0, 1) == 1);
    CHECK(E(1, 0) == -1);
}

TEST_CASE("third-kind forms have the requested residue divisor") {
    auto C = HyperellipticCurve::parse(kQuintic);
    auto D = parse_divisor(C, "(-8,528)-w");
    auto w = third_kind_from_divisor(C, D);
    CHECK(w.kind(C) == DifferentialKind::Third);
    CHECK(residue_divisor(C, w) == D);
    CHECK(w.to_string(C) == "(1056)/(x + 8) * dx/(2y)");
    auto D2 = parse_divisor(C, "(0,-144) - (-12,720)");
    CHECK(residue_divisor(C, third_kind_from_divisor(C, D2)) == D2);
    auto Dinf = parse_divisor(C, "(0,-144) - inf");
    CHECK(residue_divisor(C, third_kind_from_divisor(C, Dinf)) == Dinf);

    auto S = HyperellipticCurve::parse(kSextic);
    for (const char* d : {"(0,2) - (0,-2)", "(0,2) - inf+", "(0,2) - inf-", "inf- - inf+", "2*(0,2) - inf+ - inf-"}) {
        auto E = parse_divisor(S, d);
        INFO(d);
        auto f = third_kind_from_divisor(S, E);
        CHECK(residue_divisor(S, f) == E);
        CHECK(f.kind(S) == DifferentialKind::Third);
    }
}

TEST_CASE("residues of basic forms") {
    auto S = HyperellipticCurve::parse(kSextic);
    CHECK(residue(S, Differential::omega(2), CurvePoint::infinity_plus()) == Rational(-1, 2));
    CHECK(residue(S, Differential::omega(2), CurvePoint::infinity_minus()) == Rational(1, 2));
    auto rho = rho_basis(S);
    for (const auto& r : rho) {
        CHECK(sgn(residue(S, r, CurvePoint::infinity_plus())) == 0);
        CHECK(r.kind(S) != DifferentialKind::Third);
    }
    auto C = HyperellipticCurve::parse("x^5 - x");
    auto W = pt(1, 0);
    CHECK(residue(C, Differential::polar(W), W) == 1);
    CHECK(residue(C, Differential::polar(W), CurvePoint::infinity()) == -1);
}

TEST_CASE("kinds") {
    auto C = HyperellipticCurve::parse(kQuintic);
    CHECK(Differential::omega(1).kind(C) == DifferentialKind::Holomorphic);
    CHECK(Differential::omega(3).kind(C) == DifferentialKind::Second);
    CHECK(Differential::invariant(parse_rational_poly("3x^2")).kind(C) == DifferentialKind::Second);
    CHECK((Differential::polar(pt(-12, 720)) + Differential::omega(3)).kind(C) == DifferentialKind::Mixed);
    CHECK(Differential::polar(pt(-12, 720), Rational(1, 2)).kind(C) == DifferentialKind::Mixed);
}

TEST_CASE("normal-form keys parse back") {
    auto C = HyperellipticCurve::parse(kQuintic);
    auto w = third_kind_from_divisor(C, parse_divisor(C, "(0,-144) - (-12,720)"));
    FormKey k = polar_form_key(w);
    CHECK(parse_form_key(k.to_string()) == k);
    CHECK(parse_form_key("(12*y - 864*x - 1728)/(x^2 + 12x) * dx/(2y)") == k);
    CHECK(parse_form_key("(24*y - 1728*x - 3456)/(2x^2 + 24x) * dx/(2y)") == k);
    CHECK_THROWS_AS(parse_form_key("(y^2)/(x) * dx/(2y)"), InputError);
    CHECK_THROWS_AS(parse_form_key("(y)/(x)"), InputError);
}

TEST_CASE("decomposition against a triangular W") {
    auto P = [](long n) { return PadicNumber::from_integer(5, n, 7); };
    auto rows = Matrix<PadicNumber>::from_rows({{P(2), P(3), P(1), P(0)}, {P(2), P(4), P(15), P(3)}}, P(0));
    WSubspace W(rows, 2);
    std::vector<PadicNumber> c{P(1), P(2), P(3), P(4)};
    auto dec = decompose(c, W);
    // reconstruct c = d + e W
    for (std::size_t i = 0; i < 4; ++i) {
        PadicNumber r = i < 2 ? dec.d[i] : P(0);
        for (std::size_t j = 0; j < 2; ++j) r += dec.e[j] * W.input_rows()(j, i);
        CHECK(r == c[i]);
    }
    auto bad = Matrix<PadicNumber>::from_rows({{P(1), P(0), P(0), P(0)}, {P(0), P(1), P(0), P(0)}}, P(0));
    CHECK_THROWS_AS(WSubspace(bad, 2), DomainError);
}
