#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgh/error.hpp"
#include "cgh/padic.hpp"

#include <random>

using namespace cgh;

TEST_CASE("digit strings round-trip") {
    auto a = PadicNumber::parse("2 + 4*5 + 5^3 + O(5^7)", 5);
    CHECK(a.valuation() == 0);
    CHECK(a.precision() == 7);
    CHECK(a.lift() == 2 + 4 * 5 + 125);
    CHECK(a.to_string() == "2 + 4*5 + 5^3 + O(5^7)");
    CHECK(PadicNumber::parse(a.to_string(), 5) == a);

    auto z = PadicNumber::parse("O(5^4)", 5);
    CHECK(z.is_zero());
    CHECK(z.precision() == 4);
    CHECK(z.to_string() == "O(5^4)");

    auto neg = PadicNumber::parse("3*5^-1 + 1 + O(5^3)", 5);
    CHECK(neg.valuation() == -1);
    CHECK(neg.to_string() == "3*5^-1 + 1 + O(5^3)");

    auto r = PadicNumber::parse("-1/3", 7, 5);
    CHECK((r * Rational(3) + Rational(1)).is_zero());
    CHECK_THROWS_AS(PadicNumber::parse("2 + 3*7 + O(5^3)", 5), InputError);
    CHECK_THROWS_AS(PadicNumber::parse("2 + 3*5", 5), InputError);
}

TEST_CASE("precision propagation is pessimistic") {
    auto a = PadicNumber::parse("5 + O(5^3)", 5);
    auto b = PadicNumber::parse("1 + O(5^2)", 5);
    CHECK((a + b).precision() == 2);
    CHECK((a * b).precision() == 3); // min(3 + 0, 2 + 1)
    auto c = PadicNumber::parse("5^2 + O(5^4)", 5);
    CHECK((a * c).precision() == 5); // min(3 + 2, 4 + 1)
    CHECK((c / a).precision() == 3); // relative precisions 2 and 2
    CHECK((c / a).valuation() == 1);
    auto z = PadicNumber::zero(5, 4);
    CHECK((z * a).precision() == 5); // zero counts as valuation 4
    CHECK_THROWS_AS(a / z, PrecisionError);
    CHECK_THROWS_AS(a / PadicNumber::parse("5^3 + O(5^3)", 5), PrecisionError);
    CHECK((a * Rational(1, 5)).precision() == 2);
    CHECK((a * Rational(1, 5)).valuation() == 0);
}

TEST_CASE("arithmetic agrees with rational arithmetic") {
    std::mt19937_64 rng(20240601);
    for (int it = 0; it < 200; ++it) {
        long n1 = static_cast<long>(rng() % 100000) - 50000, d1 = static_cast<long>(rng() % 1000) + 1;
        long n2 = static_cast<long>(rng() % 100000) - 50000, d2 = static_cast<long>(rng() % 1000) + 1;
        if (d1 % 7 == 0 || d2 % 7 == 0 || n2 == 0) continue;
        Rational q1(n1, d1), q2(n2, d2);
        q1.canonicalize();
        q2.canonicalize();
        auto a = PadicNumber::from_rational(7, q1, 12), b = PadicNumber::from_rational(7, q2, 12);
        int m = std::min((a * b).precision(), 12);
        CHECK((a * b).equals_mod(PadicNumber::from_rational(7, Rational(q1 * q2), 20), m));
        CHECK((a + b).equals_mod(PadicNumber::from_rational(7, Rational(q1 + q2), 20), 12));
        auto quo = a / b;
        CHECK(quo.equals_mod(PadicNumber::from_rational(7, Rational(q1 / q2), 40), quo.precision()));
    }
}

TEST_CASE("plog of 2 at p = 5 matches a rational series oracle") {
    // 2^4 = 1 + 15, so log 2 = (1/4) sum (-1)^(k+1) 15^k / k.
    Rational acc = 0, pw = 1;
    for (int k = 1; k <= 40; ++k) {
        pw *= 15;
        Rational term = pw / k;
        acc += (k % 2 ? term : Rational(-term));
    }
    acc /= 4;
    auto oracle = PadicNumber::from_rational(5, acc, 7);
    auto L = PadicNumber::zero(5, 7);
    auto got = plog(5, Rational(2), 7, L);
    CHECK(got.precision() == 7);
    CHECK(got == oracle);
    CHECK(plog(PadicNumber::from_integer(5, 1, 7), L).is_zero());
}

TEST_CASE("plog is a homomorphism and respects the branch") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {3u, 5u, 7u, 43u}) {
        for (int it = 0; it < 100; ++it) {
            auto branch = PadicNumber::from_integer(p, Integer(static_cast<unsigned long>(rng() % 100000)), 10);
            auto rnd = [&]() {
                Integer u(static_cast<unsigned long>(rng() % 1000000 + 1));
                int v = static_cast<int>(rng() % 3);
                return PadicNumber::from_integer(p, u * ipow(p, static_cast<unsigned long>(v)), 10 + v);
            };
            auto x = rnd(), y = rnd();
            auto lhs = plog(x * y, branch);
            auto rhs = plog(x, branch) + plog(y, branch);
            int m = std::min(lhs.precision(), rhs.precision());
            CHECK(lhs.equals_mod(rhs, m));
        }
        auto branch = PadicNumber::from_integer(p, 12345, 8);
        CHECK(plog(PadicNumber::from_integer(p, p, 9), branch) == branch);
    }
}

TEST_CASE("teichmueller lifts and square roots") {
    for (int a = 1; a < 7; ++a) {
        auto w = teichmuller(7, a, 10);
        CHECK(w.pow(6) == PadicNumber::from_integer(7, 1, 10));
        CHECK(w.lift() % 7 == a);
    }
    auto two = PadicNumber::from_integer(7, 2, 10);
    auto s = sqrt(two, Integer(3));
    CHECK(s * s == two);
    CHECK(s.lift() % 7 == 3);
    auto s2 = sqrt(PadicNumber::from_rational(7, Rational(2 * 49), 12));
    CHECK(s2.valuation() == 1);
    CHECK(s2 * s2 == PadicNumber::from_rational(7, Rational(98), 12));
    CHECK_THROWS_AS(sqrt(PadicNumber::from_integer(7, 3, 10)), DomainError);
}
