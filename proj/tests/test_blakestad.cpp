#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgh/blakestad.hpp"
#include "cgh/cohomology.hpp"
#include "cgh/error.hpp"
#include "cgh/matrix.hpp"
#include "cgh/zmod.hpp"
#include "support/direct_oracle.hpp"
#include "support/generators.hpp"

#include <optional>
#include <random>

using namespace cgh;
using namespace cgh::testing;

TEST_CASE("ladder and closed form match a direct expansion on random quintics") {
    LadderComparison r = compare_on_random_quintics(20260214, 10, 200);
    INFO(r.first_mismatch);
    CHECK(r.curves == 10);
    CHECK(r.comparisons > 10 * 190 * 2);
    CHECK(r.mismatches == 0);
}

TEST_CASE("rho_k on y^2 = x^5 + c") {
    auto C = HyperellipticCurve::parse("x^5 + 6");
    // -y = t^-5 exactly; rho_7 = t^-7 - 3 c t^3 + O(t^5)
    auto r5 = rho_k(C, 5, 7, 3);
    for (int e = -3; e <= 4; ++e) CHECK(r5.at(e) == 0);
    auto r7 = rho_k(C, 7, 7, 3);
    CHECK(r7.R() == 343 - 18);
    CHECK(r7.M() == 0);
    CHECK(r7.N() == 0);
    CHECK(r7.I() == 0);
    CHECK_THROWS_AS(rho_k(C, 3, 7, 3), DomainError);
    CHECK_THROWS_AS(rho_k(C, 1, 7, 3), DomainError);
}

TEST_CASE("canonical subspace reproduces the printed generators") {
    auto C5 = HyperellipticCurve::parse(kQuintic5);
    for (int n : {4, 5}) {
        auto W = canonical_subspace(C5, 5, n);
        CHECK(W.c_symmetric);
        CHECK(span_equal_mod_pN(W.basis.input_rows(), published_span5(n), n));
    }
    CHECK(span_equal_mod_pN(canonical_subspace(C5, 5, 4, RhoMethod::Ladder).basis.input_rows(), published_span5(4), 4));
    auto C7 = HyperellipticCurve::parse(kQuintic7);
    auto W7 = canonical_subspace(C7, 7, 4);
    CHECK(span_equal_mod_pN(W7.basis.input_rows(), published_span7(4), 4));
}

TEST_CASE("canonical subspace is coherent across levels and isotropic") {
    for (auto [f, p] : {std::pair{kQuintic5, 5u}, std::pair{kQuintic7, 7u}, std::pair{"x^5 + x + 3", 11u}}) {
        auto C = HyperellipticCurve::parse(f);
        if (!is_ordinary(C, p)) continue;
        auto N = cup_matrix(C);
        INFO(f << " p " << p);
        auto lo = canonical_subspace(C, p, 2);
        auto hi = canonical_subspace(C, p, 3);
        CHECK(span_equal_mod_pN(lo.basis.input_rows(), hi.basis.input_rows(), 2));
        CHECK(cup_mod(N, hi.basis.input_rows(), 0, 1, hi.modulus) == 0);
        CHECK(hi.c_symmetric);
    }
}

TEST_CASE("ordinarity agrees with the Hasse-Witt matrix") {
    std::mt19937_64 rng(7);
    int ordinary = 0, non_ordinary = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = trial % 2 ? 7 : 5;
        std::array<long, 6> b{1, 0, 0, 0, 0, 0};
        for (int i = 1; i <= 5; ++i) b[static_cast<std::size_t>(i)] = static_cast<long>(rng() % p);
        // Hasse-Witt entries: coefficient of x^(ip - j) in b(x)^((p-1)/2), i, j in {1, 2}
        std::vector<u64> f{1};
        for (unsigned e = 0; e < (p - 1) / 2; ++e) {
            std::vector<u64> g(f.size() + 5, 0);
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j < 6; ++j) g[i + 5 - j] = (g[i + 5 - j] + f[i] * static_cast<u64>(b[j])) % p;
            f = g;
        }
        auto hw = [&](unsigned i, unsigned j) { return f[i * p - j]; };
        u64 det = (hw(1, 1) * hw(2, 2) + p * p - hw(1, 2) * hw(2, 1) % p) % p;
        std::array<Integer, 6> bi;
        for (std::size_t i = 0; i < 6; ++i) bi[i] = b[i];
        std::optional<HyperellipticCurve> C;
        try {
            C = quintic(bi);
        } catch (const Error&) {
            continue;
        }
        if (!C->good_reduction(p)) continue;
        INFO(C->to_string() << " p " << p);
        CHECK(is_ordinary(*C, p) == (det != 0));
        (det != 0 ? ordinary : non_ordinary)++;
    }
    CHECK(ordinary > 0);
    CHECK(non_ordinary > 0);
}

TEST_CASE("input checks") {
    CHECK_THROWS_AS(quintic_data(HyperellipticCurve::parse("x^3 + x + 1"), 5, 2), DomainError);
    CHECK_THROWS_AS(quintic_data(HyperellipticCurve::parse(kQuintic5), 3, 2), DomainError);
    CHECK_THROWS_AS(quintic_data(HyperellipticCurve::parse("x^5 + 1/2*x + 1"), 5, 2), InputError);
    CHECK_THROWS_AS(quintic_data(HyperellipticCurve::parse(kQuintic5), 5, 14), PrecisionError);
    CHECK_THROWS_AS(quintic_data(HyperellipticCurve::parse(kQuintic5), 5, 0), InputError);
    CHECK_THROWS_AS(canonical_subspace(HyperellipticCurve::parse("x^5 + 1"), 7, 2), DomainError);
}
