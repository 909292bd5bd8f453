// Acceptance run: one PASS/FAIL line per criterion with its timing.
// Exit status is the number of failed criteria.

#include "cgh/blakestad.hpp"
#include "cgh/coleman.hpp"
#include "cgh/heights.hpp"
#include "cgh/symbols.hpp"

#include "support/direct_oracle.hpp"
#include "support/generators.hpp"
#include "support/integrator_checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace cgh;
using namespace cgh::testing;

namespace {

// Digit agreement required by each criterion, and runtime budgets in seconds.
constexpr int kPrec5 = 7;        // criteria 2 to 4: mod 5^7
constexpr int kPrec43 = 6;       // criterion 5: mod 43^6
constexpr int kPrec7 = 6;        // criteria 7 and 8: mod p^6
constexpr int kUnitRootPrec = 3; // criterion 10: mod p^3
constexpr double kFastBudget = 1.0;
constexpr double kTierBudget = 60.0;
constexpr double kLongBudget = 4 * 3600.0;

const std::string kDir = CGH_FIXTURE_DIR;
const char* kGood = "x^5 - 2x^4 + 3x^3 + x + 5";

PadicNumber five(std::vector<long> d) { return PadicNumber::from_digits(5, 0, d, kPrec5); }
PadicNumber p43(std::vector<long> d) { return PadicNumber::from_digits(43, 0, d, kPrec43); }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, double budget, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= budget;
    if (!in_time) o.detail += "; over the time budget";
    bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %-3s %s  %.2f s (budget %.0f s)  %s\n", id, pass ? "PASS" : "FAIL", secs, budget, o.detail.c_str());
    std::fflush(stdout);
}

struct G2 {
    OracleTable table = OracleTable::load(kDir + "/g2_p5.json");
    OracleBackend backend{table, LogBranch::cyclotomic(5, kPrec5)};
    const HyperellipticCurve& C = backend.curve();
    Divisor0 D1 = parse_divisor(C, "(-8,528)-w");
    Divisor0 D2 = parse_divisor(C, "(0,-144) - (-12,720)");
    Divisor0 D3 = parse_divisor(C, "(12,432) - (-12,-720)");
    Divisor0 D4 = parse_divisor(C, "(36,7920)-w");
};

Outcome span_check(const HyperellipticCurve& C, std::uint32_t p, int n, RhoMethod m, const Matrix<PadicNumber>& want) {
    auto W = canonical_subspace(C, p, n, m);
    bool ok = span_equal_mod_pN(W.basis.input_rows(), want, n) && W.c_symmetric;
    return {ok, "p = " + std::to_string(p) + " n = " + std::to_string(n) + (m == RhoMethod::Ladder ? " ladder" : " closed")};
}

} // namespace

int main() {
    criterion("1", kFastBudget, [] {
        auto C = HyperellipticCurve::parse(kQuintic5);
        Matrix<Rational> want(4, 4, Rational(0));
        const Rational rows[4][4] = {{0, 0, 0, Rational(1, 3)}, {0, 0, 1, Rational(-10, 3)}, {0, -1, 0, -56}, {Rational(-1, 3), Rational(10, 3), 56, 0}};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) want(i, j) = rows[i][j];
        auto N = cup_matrix(C);
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) ok = ok && N(i, j) == want(i, j);
        return Outcome{ok, "exact rational equality"};
    });

    criterion("2", kFastBudget, [] {
        auto C = HyperellipticCurve::parse(kQuintic5);
        std::vector<PadicNumber> s{five({0, 2, 1, 4, 4, 3, 4}), five({0, 4, 2, 4, 4, 2, 0}), five({2, 3, 0, 2, 4, 4, 0}), five({0, 0, 2, 2, 3, 2, 4})};
        std::vector<PadicNumber> c{five({0, 2, 2, 2, 4, 0, 3}), five({2, 4, 0, 1, 0, 2, 1}), five({0, 1, 3, 2, 1, 2, 1}), five({0, 4, 0, 2, 0, 3, 0})};
        auto got = psi_from_symbols(C, s);
        bool ok = true;
        for (std::size_t j = 0; j < 4; ++j) ok = ok && got[j].equals_mod(c[j], kPrec5);
        auto dec = decompose(got, WSubspace(published_span5(kPrec5), 2));
        ok = ok && dec.e[1].equals_mod(five({0, 3, 3, 0, 0, 1, 0}), kPrec5) && dec.e[0].equals_mod(five({0, 1, 4, 1, 4, 1, 3}), kPrec5) &&
             dec.d[1].equals_mod(five({2, 4, 3, 2, 3, 2, 1}), kPrec5) && dec.d[0].equals_mod(five({0, 4, 4, 3, 4, 0, 4}), kPrec5);
        return Outcome{ok, "c = -N^-1 s and (e1, e0, d1, d0) mod 5^7"};
    });

    G2 g2;
    HeightConfig cfg{5, kPrec5, LogBranch::cyclotomic(5, kPrec5), SubspaceChoice::Canonical, trivial_subspace(2, 5, kPrec5), &g2.backend};
    criterion("3", kTierBudget, [&] {
        cfg.subspace = canonical_subspace(g2.C, 5, kPrec5).basis;
        auto h13 = local_height_p(cfg, g2.C, g2.D1, g2.D3).value;
        auto h42 = local_height_p(cfg, g2.C, g2.D2, g2.D4).value;
        bool ok = h13.equals_mod(five({0, 1, 3, 2, 2, 3, 4}), kPrec5) && h42.equals_mod(five({0, 4, 2, 2, 4, 4, 4}), kPrec5);
        return Outcome{ok, "h(D1,D3) = " + h13.to_string() + ", h(D4,D2) = " + h42.to_string()};
    });

    criterion("4", kTierBudget, [&] {
        auto g13 = global_height(cfg, g2.C, g2.D1, g2.D3, UnramifiedContribution::parse(""));
        auto g42 = global_height(cfg, g2.C, g2.D2, g2.D4, UnramifiedContribution::parse("2:-2,3:1"));
        auto want = five({0, 1, 4, 0, 0, 1, 3});
        PadicNumber a = g13.global * Rational(6), b = g42.global * Rational(4);
        bool ok = a.equals_mod(want, kPrec5) && b.equals_mod(want, kPrec5);
        return Outcome{ok, "6h(D1,D3) = " + a.to_string() + ", 4h(D4,D2) = " + b.to_string()};
    });

    criterion("5", kFastBudget, [] {
        auto table = OracleTable::load(kDir + "/g1_p43.json");
        OracleBackend B(table, LogBranch::cyclotomic(43, kPrec43));
        const auto& C = B.curve();
        auto W = load_subspace(kDir + "/g1_p43_unit_root.json");
        auto DQ = parse_divisor(C, "(2523,114912)-w");
        auto DR = parse_divisor(C, "(219,16416)-w");
        auto h = genus1_unit_root_height(C, W.input_rows()(0, 0), B, DQ, DR, UnramifiedContribution::parse("2:9"));
        bool ok = h.local.equals_mod(p43({0, 29, 28, 10, 39, 7}), kPrec43) && h.global.equals_mod(p43({0, 19, 7, 8, 2, 28}), kPrec43);
        return Outcome{ok, "local " + h.local.to_string() + ", global " + h.global.to_string()};
    });

    auto C5 = HyperellipticCurve::parse(kQuintic5);
    auto C7 = HyperellipticCurve::parse(kQuintic7);
    criterion("6a", kTierBudget, [&] {
        Outcome a = span_check(C5, 5, 4, RhoMethod::Closed, published_span5(4));
        Outcome b = span_check(C5, 5, 5, RhoMethod::Closed, published_span5(5));
        Outcome c = span_check(C5, 5, 4, RhoMethod::Ladder, published_span5(4));
        Outcome d = span_check(C5, 5, 5, RhoMethod::Ladder, published_span5(5));
        return Outcome{a.pass && b.pass && c.pass && d.pass, "k = 1875, 9375 by both routes"};
    });
    criterion("6b", kTierBudget, [&] {
        Outcome a = span_check(C7, 7, 4, RhoMethod::Closed, published_span7(4));
        Outcome b = span_check(C7, 7, 4, RhoMethod::Ladder, published_span7(4));
        return Outcome{a.pass && b.pass, "k = 7203 by both routes"};
    });
    criterion("6c", kLongBudget, [&] {
        Outcome a = span_check(C5, 5, 7, RhoMethod::Closed, published_span5(7));
        Outcome b = span_check(C7, 7, 6, RhoMethod::Closed, published_span7(6));
        return Outcome{a.pass && b.pass, "full printed digits, mod 5^7 and 7^6, closed route"};
    });

    criterion("7", kTierBudget, [] {
        LadderComparison r = compare_on_random_quintics(20260214, 10, 200);
        std::ostringstream os;
        os << r.curves << " quintics, " << r.comparisons << " rho_k comparisons mod p^" << kPrec7 << ", " << r.mismatches << " mismatches";
        if (r.mismatches) os << "; first: " << r.first_mismatch;
        return Outcome{r.curves == 10 && r.mismatches == 0, os.str()};
    });

    criterion("8", kTierBudget, [] {
        auto C = HyperellipticCurve::parse(kGood);
        IdentityReport r = integrator_identities(C, 7, kPrec7, 2026);
        std::ostringstream os;
        os << "exact " << r.exact - r.failed_exact << "/" << r.exact << ", additivity " << r.additivity - r.failed_additivity << "/"
           << r.additivity << ", antisymmetry " << r.antisymmetry - r.failed_antisymmetry << "/" << r.antisymmetry << ", tiny "
           << r.tiny - r.failed_tiny << "/" << r.tiny << ", Weierstrass " << r.weierstrass - r.failed_weierstrass << "/" << r.weierstrass
           << " mod 7^" << kPrec7;
        bool counts = r.exact == 20 && r.additivity == 50 && r.antisymmetry == 50 && r.tiny == 50;
        return Outcome{counts && r.failures() == 0, os.str()};
    });

    criterion("9", kTierBudget, [] {
        const std::pair<const char*, std::uint32_t> curves[] = {{"x^3 + 1", 7},       {"x^3 - x + 1", 11}, {"x^3 + 3x + 2", 13},
                                                                {"x^3 - 2x^2 + 5", 17}, {"x^3 + x^2 - 4x + 7", 7}, {kGood, 7},
                                                                {"x^5 + 1", 7}};
        int matched = 0;
        for (auto [f, p] : curves) matched += charpoly_matches_counts(HyperellipticCurve::parse(f), p, 5);
        auto C = HyperellipticCurve::parse(kGood);
        auto F = frobenius_data(C, 11, 5);
        auto U = unit_root_subspace(F);
        bool stable = span_equal_mod_pN(U.input_rows() * F.F, U.input_rows(), 5);
        return Outcome{matched == 7 && stable, std::to_string(matched) + "/7 char-polys match point counts; unit root Frobenius-stable mod 11^5: " +
                                                   (stable ? "yes" : "no")};
    });

    criterion("10", kTierBudget, [] {
        auto C = HyperellipticCurve::parse(kGood);
        if (!C.good_reduction(11) || !is_ordinary(C, 11)) return Outcome{false, "test curve is not good ordinary at 11"};
        auto U = unit_root_subspace(frobenius_data(C, 11, kUnitRootPrec + 2));
        auto W = canonical_subspace(C, 11, kUnitRootPrec);
        bool ok = span_equal_mod_pN(U.input_rows(), W.basis.input_rows(), kUnitRootPrec);
        return Outcome{ok, std::string(kGood) + " at p = 11: canonical span = unit-root span mod 11^3"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
