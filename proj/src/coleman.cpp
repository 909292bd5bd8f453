#include "cgh/coleman.hpp"

#include "cgh/differential.hpp"
#include "cgh/error.hpp"
#include "cgh/expansion.hpp"

#include <algorithm>
#include <optional>

namespace cgh {

namespace {

using Vec = std::vector<PadicNumber>;

int ilog(std::uint32_t p, long n) {
    int e = 0;
    for (long q = p; q <= n; q *= p) ++e;
    return e;
}

int vp(std::uint32_t p, long n) {
    int e = 0;
    if (n == 0) return 0;
    while (n % static_cast<long>(p) == 0) {
        n /= static_cast<long>(p);
        ++e;
    }
    return e;
}

// Untrimmed dense polynomial helpers: sizes follow the algebra, so digits
// known only to low precision are never silently dropped.
Vec vmul(const Vec& a, const Vec& b, const PadicNumber& z) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, z);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void vadd_into(Vec& a, const Vec& b, const PadicNumber& z) {
    if (a.size() < b.size()) a.resize(b.size(), z);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

// Quotient and remainder by a monic divisor.
std::pair<Vec, Vec> vdivmod(Vec a, const Vec& q, const PadicNumber& z) {
    const std::size_t d = q.size() - 1;
    if (a.size() <= d) {
        a.resize(d, z);
        return {{}, a};
    }
    Vec quo(a.size() - d, z);
    for (std::size_t i = a.size(); i-- > d;) {
        PadicNumber c = a[i];
        quo[i - d] = c;
        for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * q[j];
    }
    a.resize(d);
    return {quo, a};
}

Vec vderiv(const Vec& a, const PadicNumber& z) {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1, z);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<long>(i));
    return r;
}

Poly<PadicNumber> to_poly(const Vec& a, const PadicNumber& z) { return Poly<PadicNumber>(z, a); }

Vec to_vec(const Poly<Rational>& f, std::uint32_t p, int prec) {
    Vec r;
    for (const auto& c : f.coeffs()) r.push_back(PadicNumber::from_rational(p, c, prec));
    return r;
}

int min_precision(const Vec& a, int start) {
    int n = start;
    for (const auto& c : a) n = std::min(n, c.precision());
    return n;
}

// u dx/y = sum_{j<2g} c_j x^j dx/y + d(T y), by cancelling the leading
// term of d(x^b y) = (2b x^(b-1) Q + x^b Q') dx/2y against x^(b+d-1).
std::pair<Vec, Vec> reduce_x_degree(Vec acc, const Vec& Q, const Vec& dQ, int g, const PadicNumber& z) {
    const long d = static_cast<long>(Q.size()) - 1;
    Vec T;
    for (long a = static_cast<long>(acc.size()) - 1; a >= 2 * g; --a) {
        const long b = a - d + 1;
        PadicNumber c = acc[static_cast<std::size_t>(a)] / Rational(2 * b + d);
        if (T.size() <= static_cast<std::size_t>(b)) T.resize(static_cast<std::size_t>(b) + 1, z);
        T[static_cast<std::size_t>(b)] += c * Rational(2);
        // subtract c (2b x^(b-1) Q + x^b Q')
        if (b >= 1)
            for (std::size_t j = 0; j < Q.size(); ++j) acc[static_cast<std::size_t>(b - 1) + j] -= c * Q[j] * Rational(2 * b);
        for (std::size_t j = 0; j < dQ.size(); ++j) acc[static_cast<std::size_t>(b) + j] -= c * dQ[j];
    }
    acc.resize(static_cast<std::size_t>(2 * g), z);
    return {acc, T};
}

void require_good_odd(const HyperellipticCurve& C, std::uint32_t p) {
    if (!C.odd_degree()) throw CapabilityError("the Frobenius integrator needs an odd-degree model");
    if (p < 3) throw CapabilityError("the Frobenius integrator needs an odd prime");
    for (const auto& c : C.b().coeffs())
        if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p))
            throw CapabilityError("curve coefficients are not " + std::to_string(p) + "-integral");
    if (!C.good_reduction(p)) throw CapabilityError("the curve has bad reduction at " + std::to_string(p));
}

long level_of_k(std::uint32_t p, int k) { return (static_cast<long>(p) * (2 * k + 1) - 1) / 2; }

PadicNumber binom_minus_half(std::uint32_t p, int k, int prec) {
    // (-1/2 choose k) = prod_{j<k} (-1/2 - j) / (j + 1)
    Rational r = 1;
    for (int j = 0; j < k; ++j) r *= Rational(-1 - 2 * j, 2 * (j + 1));
    return PadicNumber::from_rational(p, r, prec);
}

struct KedlayaResult {
    Matrix<PadicNumber> F;
    std::vector<OverconvergentFunction> witness;
    int precision;
};

KedlayaResult kedlaya(const HyperellipticCurve& C, std::uint32_t p, int K, int Nw) {
    const int g = C.genus();
    const PadicNumber z = PadicNumber::zero(p, Nw);
    const Vec Q = to_vec(C.b(), p, Nw);
    const Vec dQ = vderiv(Q, z);
    auto [gcd, unused, t] = poly_xgcd(C.b(), C.b().derivative());
    if (gcd.degree() != 0) throw CapabilityError("the curve polynomial is not squarefree");
    const Vec bez = to_vec(t, p, Nw); // s Q + t Q' = 1

    // E = Q(x^p) - Q(x)^p
    Vec Qp(Q.size() * p - p + 1, z);
    for (std::size_t i = 0; i < Q.size(); ++i) Qp[i * p] = Q[i];
    Vec Qpow{PadicNumber::from_integer(p, 1, Nw)};
    for (std::uint32_t i = 0; i < p; ++i) Qpow = vmul(Qpow, Q, z);
    Vec E = Qp;
    for (std::size_t i = 0; i < Qpow.size(); ++i) E[i] -= Qpow[i];

    // terms[k] = (-1/2 choose k) E^k, entering at y^-(2m+1) with 2m+1 = p(2k+1)
    std::vector<Vec> terms;
    Vec Ek{PadicNumber::from_integer(p, 1, Nw)};
    for (int k = 0; k <= K; ++k) {
        Vec tk = Ek;
        PadicNumber c = binom_minus_half(p, k, Nw);
        for (auto& a : tk) a *= c;
        terms.push_back(std::move(tk));
        if (k < K) Ek = vmul(Ek, E, z);
    }
    auto level_of = [p](int k) { return level_of_k(p, k); };

    KedlayaResult out{Matrix<PadicNumber>(static_cast<std::size_t>(2 * g), static_cast<std::size_t>(2 * g), z), {}, Nw};
    for (int i = 0; i < 2 * g; ++i) {
        // phi^*(x^i dx/y) = p x^(p(i+1)-1) sum_k terms[k] y^-(p(2k+1)) dx
        const std::size_t shift = static_cast<std::size_t>(p) * static_cast<std::size_t>(i + 1) - 1;
        OverconvergentFunction h{{}, Poly<PadicNumber>(z)};
        Vec acc;
        int next = K;
        for (long m = level_of(K); m >= 1; --m) {
            if (next >= 0 && level_of(next) == m) {
                Vec add(shift, z);
                for (const auto& c : terms[static_cast<std::size_t>(next)]) add.push_back(c * Rational(static_cast<long>(p)));
                vadd_into(acc, add, z);
                --next;
            }
            if (acc.empty()) continue;
            // A = R Q + S Q', S = (A mod Q) t mod Q
            Vec S = vdivmod(vmul(vdivmod(acc, Q, z).second, bez, z), Q, z).second;
            Vec SdQ = vmul(S, dQ, z);
            Vec rest = acc;
            for (std::size_t j = 0; j < SdQ.size(); ++j) {
                if (j >= rest.size()) rest.resize(j + 1, z);
                rest[j] -= SdQ[j];
            }
            Vec R = vdivmod(rest, Q, z).first;
            const Rational two_over(2, 2 * m - 1);
            Vec hS = S;
            for (auto& c : hS) c *= -two_over;
            h.inverse_y_terms.emplace_back(static_cast<int>(2 * m - 1), to_poly(hS, z) * PadicNumber::from_rational(p, Rational(1, 2), Nw));
            Vec dS = vderiv(S, z);
            for (auto& c : dS) c *= two_over;
            vadd_into(R, dS, z);
            acc = std::move(R);
        }
        auto [coeffs, T] = reduce_x_degree(acc, Q, dQ, g, z);
        for (int j = 0; j < 2 * g; ++j) out.F(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coeffs[static_cast<std::size_t>(j)];
        out.precision = std::min(out.precision, min_precision(coeffs, Nw));
        for (auto& c : T) c *= Rational(1, 2);
        h.y_term = to_poly(T, z);
        out.witness.push_back(std::move(h));
    }
    return out;
}

bool integral(const PadicNumber& a) { return a.is_zero() || a.valuation() >= 0; }

// Affine, integral coordinates and y a unit.
bool in_good_disc(const CurvePoint& P, std::uint32_t p, int N) {
    if (!P.is_affine()) return false;
    PadicNumber x = P.x_padic(p, N), y = P.y_padic(p, N);
    return integral(x) && y.is_unit();
}

// Terms so that t^(n+1)/(n+1) vanishes mod p^N for every later n when v(t) >= vt.
int tiny_terms(std::uint32_t p, int N, int vt) {
    int n = 0;
    for (;;) {
        bool ok = true;
        for (int j = n; j < n + 4 * static_cast<int>(p) + 8; ++j)
            if ((j + 1) * vt - ilog(p, j + 1) < N) ok = false;
        if (ok) return n;
        ++n;
    }
}

} // namespace

PadicNumber OverconvergentFunction::operator()(const PadicNumber& x, const PadicNumber& y) const {
    PadicNumber acc = y_term.is_zero() ? PadicNumber::zero(x.prime(), x.precision()) : y_term(x) * y;
    if (inverse_y_terms.empty()) return acc;
    PadicNumber yinv = y.inverse();
    int max_e = 0;
    for (const auto& [e, S] : inverse_y_terms) max_e = std::max(max_e, e);
    std::vector<PadicNumber> pw{yinv};
    PadicNumber yinv2 = yinv * yinv;
    for (int e = 3; e <= max_e; e += 2) pw.push_back(pw.back() * yinv2);
    for (const auto& [e, S] : inverse_y_terms) {
        if (S.is_zero()) continue;
        acc += S(x) * pw[static_cast<std::size_t>((e - 1) / 2)];
    }
    return acc;
}

FrobeniusData frobenius_data(const HyperellipticCurve& C, std::uint32_t p, int N) {
    if (N < 1) throw InputError("precision must be at least 1");
    require_good_odd(C, p);
    const int g = C.genus();
    const long d = C.degree();
    // Dropping the terms k > K costs at most the reduction loss of their level.
    auto tail_ok = [&](int k) {
        long level = static_cast<long>(p) * (2 * k + 1);
        long degree = static_cast<long>(p) * (2 * g) + static_cast<long>(k) * p * d + 1;
        return k + 1 - ilog(p, level) - ilog(p, degree) >= N;
    };
    int K = 0;
    for (;; ++K) {
        bool ok = true;
        for (int k = K + 1; k <= K + 40; ++k) ok = ok && tail_ok(k);
        if (ok) break;
    }
    // Pessimistic precision loses the valuation of every divisor used.
    long top = level_of_k(p, K);
    int loss = 0;
    for (long m = 1; m <= top; ++m) loss += vp(p, 2 * m - 1);
    for (long b = 0; b <= 2L * g * p + d; ++b) loss += vp(p, 2 * b + d);
    int Nw = N + loss + 2;
    for (int attempt = 0; attempt < 4; ++attempt) {
        KedlayaResult r = kedlaya(C, p, K, Nw);
        if (r.precision >= N) {
            FrobeniusData out{p, N, r.F.map(PadicNumber::zero(p, N), [N](const PadicNumber& a) { return a.with_precision(N); }),
                              std::move(r.witness), K + 1, Nw};
            return out;
        }
        Nw += N - r.precision + 2;
    }
    throw PrecisionError("Frobenius reduction did not reach the requested precision");
}

std::vector<PadicNumber> frobenius_charpoly(const FrobeniusData& F) { return charpoly(F.F); }

WSubspace unit_root_subspace(const FrobeniusData& F) {
    const std::size_t n = F.F.rows(), g = n / 2;
    Matrix<PadicNumber> M = Matrix<PadicNumber>::identity(n, F.F.proto());
    Matrix<PadicNumber> B = F.F;
    for (int e = F.precision; e > 0; e >>= 1) {
        if (e & 1) M = M * B;
        if (e > 1) B = B * B;
    }
    Matrix<PadicNumber> U(g, n, F.F.proto());
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < n; ++j) U(i, j) = M(g + i, j).with_precision(F.precision);
    // ordinary exactly when these rows stay independent modulo p
    Matrix<PadicNumber> red = U.map(PadicNumber::zero(F.p, 1), [](const PadicNumber& a) { return a.with_precision(1); });
    if (saturated_row_basis(red).first.rows() != g) throw DomainError("not ordinary: Frobenius has fewer than g unit eigenvalues at " + std::to_string(F.p));
    return WSubspace(U, static_cast<int>(g));
}

PolynomialReduction reduce_polynomial_form(const HyperellipticCurve& C, const Poly<PadicNumber>& u) {
    if (!C.odd_degree()) throw CapabilityError("polynomial reduction is implemented for odd-degree models");
    const PadicNumber& z = u.proto();
    const std::uint32_t p = z.prime();
    const int g = C.genus();
    long top = std::max(0, u.degree());
    int loss = 0;
    for (long b = 0; b <= top; ++b) loss += vp(p, 2 * b + C.degree());
    const int prec = z.precision() + loss;
    const PadicNumber zw = PadicNumber::zero(p, prec);
    Vec acc;
    for (const auto& c : u.coeffs()) acc.push_back(c.valid() ? c : zw);
    const Vec Q = to_vec(C.b(), p, prec);
    auto [coeffs, T] = reduce_x_degree(acc, Q, vderiv(Q, zw), g, zw);
    for (auto& c : T) c *= Rational(1, 2);
    return {coeffs, to_poly(T, z)};
}

bool same_residue_disc(const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N) {
    if (!P.is_affine() || !Q.is_affine()) return false;
    PadicNumber xp = P.x_padic(p, N), yp = P.y_padic(p, N), xq = Q.x_padic(p, N), yq = Q.y_padic(p, N);
    if (!integral(xp) || !integral(yp) || !integral(xq) || !integral(yq)) return false;
    return (xp - xq).equals_mod(PadicNumber::zero(p, N), 1) && (yp - yq).equals_mod(PadicNumber::zero(p, N), 1);
}

CurvePoint teichmuller_point(const HyperellipticCurve& C, const CurvePoint& P, std::uint32_t p, int N) {
    if (!in_good_disc(P, p, N)) throw DomainError("Teichmueller points are taken in non-Weierstrass affine residue discs");
    PadicNumber x = P.x_padic(p, N), y = P.y_padic(p, N);
    PadicNumber xt = teichmuller(p, x.is_zero() ? Integer(0) : x.lift(), N);
    PadicNumber b = PadicNumber::zero(p, N);
    for (int i = C.degree(); i >= 0; --i) b = b * xt + C.b().coeff(i);
    PadicNumber yt = sqrt(b, y.lift());
    return CurvePoint::affine(xt, yt);
}

namespace {

struct TinySetup {
    int terms, work;
    PadicNumber t;
};

// Shared checks and truncation for integrals inside one disc; empty when
// the endpoints coincide to precision N.
std::optional<TinySetup> tiny_setup(const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N) {
    if (P == Q) return std::nullopt;
    if (!same_residue_disc(P, Q, p, N)) throw DomainError("tiny integrals need both endpoints in one residue disc");
    if (!in_good_disc(P, p, N)) throw DomainError("tiny integrals are taken in non-Weierstrass affine residue discs");
    PadicNumber dx = Q.x_padic(p, N) - P.x_padic(p, N);
    // same x, same disc and y a unit: the points coincide to precision N
    if (dx.is_zero()) return std::nullopt;
    const int terms = tiny_terms(p, N, dx.valuation());
    const int work = N + ilog(p, terms + 1) + 2;
    return TinySetup{terms, work, Q.x_padic(p, work) - P.x_padic(p, work)};
}

PadicNumber integrate_series(const LaurentSeries<PadicNumber>& s, const TinySetup& ts, int N) {
    if (s.valuation() < 0) throw DomainError("tiny integral: the form has a pole at the start point");
    const std::uint32_t p = ts.t.prime();
    PadicNumber acc = PadicNumber::zero(p, ts.work), tp = ts.t;
    for (int n = 0; n <= ts.terms; ++n) {
        PadicNumber c = s.coeff(n);
        if (!c.is_zero()) acc += c * tp / Rational(n + 1);
        tp *= ts.t;
    }
    return acc.with_precision(std::min(N, acc.precision()));
}

// Tiny integrals of omega_0 .. omega_{count-1} from one expansion of dx/2y.
std::vector<PadicNumber> tiny_basis(const HyperellipticCurve& C, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N,
                                    std::size_t count) {
    auto ts = tiny_setup(P, Q, p, N);
    std::vector<PadicNumber> out(count, PadicNumber::zero(p, N));
    if (!ts) return out;
    const PadicNumber proto = PadicNumber::zero(p, ts->work);
    LaurentSeries<PadicNumber> s = expand_form(C, Differential::omega(0), P, ts->terms, proto);
    // x = x(P) + t
    LaurentSeries<PadicNumber> x = local_expansion(C, P, ts->terms + 2, proto).x;
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = integrate_series(s, *ts, N);
        if (j + 1 < count) s = s * x;
    }
    return out;
}

} // namespace

PadicNumber tiny_integral(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N) {
    auto ts = tiny_setup(P, Q, p, N);
    if (!ts) return PadicNumber::zero(p, N);
    return integrate_series(expand_form(C, w, P, ts->terms, PadicNumber::zero(p, ts->work)), *ts, N);
}

ColemanBackend::ColemanBackend(HyperellipticCurve C, std::uint32_t p, int N, LogBranch branch)
    : curve_(std::move(C)), p_(p), prec_(N), branch_(std::move(branch)), frob_(frobenius_data(curve_, p, N + 2)) {
    if (branch_.prime() != p) throw InputError("branch prime does not match the backend prime");
    const std::size_t n = frob_.F.rows();
    Matrix<PadicNumber> A = Matrix<PadicNumber>::identity(n, frob_.F.proto()) - frob_.F;
    one_minus_f_inv_ = inverse(A);
}

std::vector<PadicNumber> ColemanBackend::basis_from_teichmuller(const CurvePoint& P, const CurvePoint& Q) const {
    const int N = frob_.precision;
    CurvePoint Pt = teichmuller_point(curve_, P, p_, N);
    CurvePoint Qt = teichmuller_point(curve_, Q, p_, N);
    const std::size_t n = frob_.F.rows();
    std::vector<PadicNumber> out(n, PadicNumber::zero(p_, N));
    if (!same_residue_disc(Pt, Qt, p_, N)) {
        std::vector<PadicNumber> dh;
        PadicNumber xp = Pt.x_padic(p_, N), yp = Pt.y_padic(p_, N), xq = Qt.x_padic(p_, N), yq = Qt.y_padic(p_, N);
        for (const auto& h : frob_.witness) dh.push_back(h(xq, yq) - h(xp, yp));
        out = one_minus_f_inv_.apply(dh);
    }
    auto a = tiny_basis(curve_, P, Pt, p_, N, n), b = tiny_basis(curve_, Qt, Q, p_, N, n);
    for (std::size_t j = 0; j < n; ++j) out[j] += a[j] + b[j];
    return out;
}

std::vector<PadicNumber> ColemanBackend::basis_generic(const CurvePoint& P, const CurvePoint& Q) const {
    const int N = frob_.precision;
    const std::size_t n = frob_.F.rows();
    auto weier = [&](const CurvePoint& A) { return A.is_exact() && is_weierstrass(curve_, A); };
    auto good = [&](const CurvePoint& A) { return in_good_disc(A, p_, N); };
    for (const CurvePoint* A : {&P, &Q})
        if (!weier(*A) && !good(*A))
            throw CapabilityError("the Frobenius integrator needs endpoints in non-Weierstrass affine discs or at Weierstrass points; got " +
                                  A->to_string());
    if (weier(P) && weier(Q)) return std::vector<PadicNumber>(n, PadicNumber::zero(p_, N));
    // int_W^Q = (1/2) int_{w(Q)}^Q for anti-invariant forms
    if (weier(P)) {
        auto v = basis_from_teichmuller(Q.involution(), Q);
        for (auto& c : v) c *= Rational(1, 2);
        return v;
    }
    if (weier(Q)) {
        auto v = basis_from_teichmuller(P.involution(), P);
        for (auto& c : v) c *= Rational(-1, 2);
        return v;
    }
    return basis_from_teichmuller(P, Q);
}

std::vector<PadicNumber> ColemanBackend::basis_integrals(const CurvePoint& P, const CurvePoint& Q) const {
    validate_point(curve_, P);
    validate_point(curve_, Q);
    auto v = basis_generic(P, Q);
    for (auto& c : v) c = c.with_precision(std::min(prec_, c.precision()));
    return v;
}

PadicNumber ColemanBackend::integrate(const Differential& w, const CurvePoint& P, const CurvePoint& Q) const {
    check_kind(w);
    if (w.has_polar()) throw CapabilityError("the Frobenius integrator handles u(x) dx/2y + v(x) dx/2 only; polar terms need the oracle backend");
    if (P == Q || w.is_zero_form()) return PadicNumber::zero(p_, prec_);
    validate_point(curve_, P);
    validate_point(curve_, Q);
    const int N = frob_.precision;
    PadicNumber total = integrate_invariant(w.invariant_part(), P, Q, p_, N);
    const auto& cs = w.omega_coeffs();
    if (!cs.empty()) {
        PadicNumber z = PadicNumber::zero(p_, N);
        Vec u;
        for (const auto& c : cs) u.push_back(c.to_padic(p_, N));
        PolynomialReduction red = reduce_polynomial_form(curve_, to_poly(u, z));
        if (!red.exact.is_zero()) {
            if (P.is_infinite() || Q.is_infinite())
                throw DomainError("the form has a pole at infinity; cannot integrate it to the point at infinity");
            total += red.exact(Q.x_padic(p_, N)) * Q.y_padic(p_, N) - red.exact(P.x_padic(p_, N)) * P.y_padic(p_, N);
        }
        bool any = false;
        for (const auto& c : red.coeffs) any = any || !c.is_zero();
        if (any) {
            auto v = basis_generic(P, Q);
            for (std::size_t j = 0; j < v.size(); ++j) total += red.coeffs[j] * v[j];
        }
    }
    return total.with_precision(std::min(prec_, total.precision()));
}

} // namespace cgh
