#pragma once

#include "cgh/coleman.hpp"
#include "cgh/error.hpp"

#include <random>

namespace cgh::testing {

inline long mod(long a, long m) { return ((a % m) + m) % m; }

inline long eval_mod(const HyperellipticCurve& C, long x, long p) {
    long acc = 0;
    for (int i = C.degree(); i >= 0; --i) acc = mod(acc * x + mod(C.b().coeff(i).get_num().get_si(), p), p);
    return acc;
}

inline long legendre(long a, long p) {
    a = mod(a, p);
    if (a == 0) return 0;
    long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// #C(F_p) on the smooth model: one point at infinity for odd degree.
inline long count_fp(const HyperellipticCurve& C, long p) {
    long n = 1;
    for (long x = 0; x < p; ++x) n += 1 + legendre(eval_mod(C, x, p), p);
    return n;
}

// #C(F_{p^2}) with F_{p^2} = F_p(sqrt(r)), r a non-residue.
inline long count_fp2(const HyperellipticCurve& C, long p) {
    long r = 2;
    while (legendre(r, p) != -1) ++r;
    using E = std::pair<long, long>;
    auto mul = [&](E a, E b) { return E{mod(a.first * b.first + r * a.second % p * b.second, p), mod(a.first * b.second + a.second * b.first, p)}; };
    auto pw = [&](E a, long e) {
        E acc{1, 0};
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    };
    long n = 1;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) {
            E x{a, b}, acc{0, 0};
            for (int i = C.degree(); i >= 0; --i) {
                acc = mul(acc, x);
                acc.first = mod(acc.first + C.b().coeff(i).get_num().get_si(), p);
            }
            if (acc == E{0, 0}) n += 1;
            else n += pw(acc, (p * p - 1) / 2) == E{1, 0} ? 2 : 0;
        }
    return n;
}


// Random point with integral x and unit y, coordinates known to `prec`.
inline CurvePoint random_point(const HyperellipticCurve& C, std::mt19937_64& rng, std::uint32_t p, int prec) {
    Integer m = ipow(p, static_cast<unsigned long>(prec));
    for (;;) {
        Integer x = static_cast<unsigned long>(rng() % 1000000007UL);
        x %= m;
        PadicNumber xp = PadicNumber::from_integer(p, x, prec);
        PadicNumber b = PadicNumber::zero(p, prec);
        for (int i = C.degree(); i >= 0; --i) b = b * xp + C.b().coeff(i);
        if (!b.is_unit()) continue;
        try {
            PadicNumber y = sqrt(b);
            if (rng() & 1) y = -y;
            return CurvePoint::affine(xp, y);
        } catch (const DomainError&) {
        }
    }
}

// A point of the disc of P: x moved by a multiple of p.
inline CurvePoint nearby_point(const HyperellipticCurve& C, const CurvePoint& P, std::mt19937_64& rng, std::uint32_t p, int prec) {
    PadicNumber x = P.x_padic(p, prec) + PadicNumber::from_integer(p, static_cast<long>(p) * static_cast<long>(1 + rng() % 500), prec);
    PadicNumber b = PadicNumber::zero(p, prec);
    for (int i = C.degree(); i >= 0; --i) b = b * x + C.b().coeff(i);
    return CurvePoint::affine(x, sqrt(b, P.y_padic(p, prec).lift()));
}

inline Differential random_basis_form(std::mt19937_64& rng, int g) {
    Differential w;
    for (int i = 0; i < 2 * g; ++i) w += Differential::omega(i, Scalar(Rational(static_cast<long>(rng() % 11) - 5)));
    if (w.is_zero_form()) w = Differential::omega(0);
    return w;
}

inline bool agree(const PadicNumber& a, const PadicNumber& b, int m) { return (a - b).equals_mod(PadicNumber::zero(a.prime(), m), m); }

// Compares det(T - F) with the traces from point counts over F_p (and F_{p^2}
// in genus 2), modulo p^N.
inline bool charpoly_matches_counts(const HyperellipticCurve& C, std::uint32_t p, int N) {
    auto F = frobenius_data(C, p, N);
    auto cp = frobenius_charpoly(F);
    auto num = [&](long v) { return PadicNumber::from_integer(p, v, N); };
    const long q = p;
    long s1 = q + 1 - count_fp(C, q);
    if (C.genus() == 1) return cp[2] == num(1) && cp[1] == num(-s1) && cp[0] == num(q);
    if (C.genus() != 2) throw InputError("point-count comparison is implemented for genus 1 and 2");
    long s2 = (s1 * s1 - (q * q + 1 - count_fp2(C, q))) / 2;
    return cp[4] == num(1) && cp[3] == num(-s1) && cp[2] == num(s2) && cp[1] == num(-q * s1) && cp[0] == num(q * q);
}

// Identities of the reference integrator on random points with integral x
// and unit y. Each entry counts the checks that failed modulo p^N.
struct IdentityReport {
    int exact = 0, additivity = 0, antisymmetry = 0, tiny = 0, weierstrass = 0;
    int failed_exact = 0, failed_additivity = 0, failed_antisymmetry = 0, failed_tiny = 0, failed_weierstrass = 0;
    int failures() const { return failed_exact + failed_additivity + failed_antisymmetry + failed_tiny + failed_weierstrass; }
};

inline IdentityReport integrator_identities(const HyperellipticCurve& C, std::uint32_t p, int N, std::uint64_t seed, int exact_forms = 20,
                                            int triples = 50, int pairs = 50, int tiny_pairs = 50) {
    ColemanBackend B(C, p, N, LogBranch::cyclotomic(p, N));
    std::mt19937_64 rng(seed);
    const int prec = N + 4;
    const int g = C.genus();
    auto pt = [&] { return random_point(C, rng, p, prec); };
    IdentityReport r;
    auto tally = [](bool ok, int& total, int& failed) {
        ++total;
        if (!ok) ++failed;
    };
    for (int t = 0; t < exact_forms; ++t) {
        // f = f1(x) + y f2(x)
        std::vector<Rational> a, b;
        for (int i = 0; i < 4; ++i) a.emplace_back(static_cast<long>(rng() % 9) - 4);
        for (int i = 0; i < 1 + t % 4; ++i) b.emplace_back(static_cast<long>(rng() % 9) - 4);
        Poly<Rational> f1(Rational(0), a), f2(Rational(0), b);
        Poly<Rational> u = Poly<Rational>::constant(Rational(2)) * f2.derivative() * C.b() + f2 * C.b().derivative();
        Differential df = Differential::invariant(f1.derivative() * Rational(2)) + Differential::from_poly(u);
        CurvePoint P = pt(), Q = pt();
        auto f = [&](const CurvePoint& A) {
            PadicNumber x = A.x_padic(p, prec), y = A.y_padic(p, prec);
            auto lift = [&](const Rational& c) { return PadicNumber::from_rational(p, c, prec); };
            return f1.map(x, lift)(x) + f2.map(x, lift)(x) * y;
        };
        tally(agree(B.integrate(df, P, Q), f(Q) - f(P), N), r.exact, r.failed_exact);
    }
    for (int t = 0; t < triples; ++t) {
        Differential w = random_basis_form(rng, g);
        CurvePoint P = pt(), Q = pt(), R = pt();
        tally(agree(B.integrate(w, P, Q) + B.integrate(w, Q, R), B.integrate(w, P, R), N), r.additivity, r.failed_additivity);
    }
    for (int t = 0; t < pairs; ++t) {
        CurvePoint P = pt(), Q = pt();
        Differential w = Differential::omega(t % (2 * g));
        tally(agree(B.integrate(w, P.involution(), Q.involution()), -B.integrate(w, P, Q), N), r.antisymmetry, r.failed_antisymmetry);
    }
    for (int t = 0; t < tiny_pairs; ++t) {
        CurvePoint P = pt();
        CurvePoint Q = nearby_point(C, P, rng, p, prec);
        Differential w = random_basis_form(rng, g) + Differential::from_poly(Poly<Rational>::monomial(Rational(1), 2 * g + 1));
        tally(agree(B.integrate(w, P, Q), tiny_integral(C, w, P, Q, p, N), N), r.tiny, r.failed_tiny);
    }
    // Weierstrass endpoints and divisors
    CurvePoint inf = CurvePoint::infinity();
    CurvePoint P = pt(), Q = pt();
    for (int i = 0; i < 2 * g; ++i) {
        Differential w = Differential::omega(i);
        tally(agree(B.integrate(w, P.involution(), P), B.integrate(w, inf, P) * Rational(2), N), r.weierstrass, r.failed_weierstrass);
        tally(agree(B.integrate(w, inf, Q) - B.integrate(w, inf, P), B.integrate(w, P, Q), N), r.weierstrass, r.failed_weierstrass);
    }
    Divisor0 D({{P, 2}, {Q, -1}, {Q.involution(), -1}});
    Differential w = random_basis_form(rng, g);
    tally(agree(B.integrate_divisor(w, D), -B.integrate_divisor(w, -D), N), r.weierstrass, r.failed_weierstrass);
    tally(agree(B.integrate_divisor(w, D), B.integrate(w, Q, P) + B.integrate(w, Q.involution(), P), N), r.weierstrass, r.failed_weierstrass);
    tally(B.integrate(w, P, P).is_zero(), r.weierstrass, r.failed_weierstrass);
    return r;
}

} // namespace cgh::testing
