#include "cgh/blakestad.hpp"

#include "cgh/error.hpp"
#include "cgh/heights.hpp"
#include "cgh/ntt.hpp"
#include "cgh/zmod.hpp"

#include <iterator>
#include <map>

namespace cgh {

namespace {

using u64 = std::uint64_t;
using Series = std::vector<u64>;

Series mul(const Series& a, const Series& b, u64 m, std::size_t limit) {
    Series r = multiply_mod(a, b, m, limit);
    r.resize(limit, 0);
    return r;
}

Series sub(Series a, const Series& b, u64 m) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + m - b[i];
    return a;
}

// 1/f modulo s^limit by Newton iteration; f[0] must be a unit.
Series inverse(const Series& f, u64 m, std::size_t limit) {
    Series g{invmod(f.at(0) % m, m)};
    std::size_t prec = 1;
    while (prec < limit) {
        prec = std::min(2 * prec, limit);
        Series fg = mul(f, g, m, prec);
        // g (2 - f g)
        Series two_minus(prec, 0);
        for (std::size_t i = 0; i < prec; ++i) two_minus[i] = fg[i] ? m - fg[i] : 0;
        two_minus[0] = (two_minus[0] + 2) % m;
        g = mul(g, two_minus, m, prec);
    }
    g.resize(limit, 0);
    return g;
}

// beta(z) and beta'(z) for a series z with z(0) = 0.
std::pair<Series, Series> beta_at(const QuinticData& q, const Series& z, std::size_t limit) {
    const u64 m = q.modulus;
    Series val{q.beta[5]}, der{mulmod(5, q.beta[5], m)};
    for (int i = 4; i >= 0; --i) {
        val = mul(val, z, m, limit);
        val[0] = (val[0] + q.beta[static_cast<std::size_t>(i)]) % m;
    }
    for (int i = 3; i >= 0; --i) {
        der = mul(der, z, m, limit);
        der[0] = (der[0] + mulmod(static_cast<u64>(i + 1), q.beta[static_cast<std::size_t>(i + 1)], m)) % m;
    }
    val.resize(limit, 0);
    der.resize(limit, 0);
    return {val, der};
}

Series shift_up(const Series& a, std::size_t limit) {
    Series r(limit, 0);
    for (std::size_t i = 0; i + 1 < limit && i < a.size(); ++i) r[i + 1] = a[i];
    return r;
}

void check_k(long k) {
    if (k == 1 || k == 3) throw DomainError("rho_k does not exist for k = 1 or k = 3");
    if (k < 2) throw DomainError("rho_k needs k >= 2");
}

// m = 2i + 5j with 0 <= i <= 4
std::pair<int, long> ladder_index(long m) {
    int i = static_cast<int>((3 * m) % 5);
    return {i, (m - 2 * i) / 5};
}

PadicNumber to_padic(u64 v, const QuinticData& q) { return PadicNumber::from_integer(q.p, Integer(static_cast<unsigned long>(v)), q.n); }

} // namespace

QuinticData quintic_data(const HyperellipticCurve& C, std::uint32_t p, int n) {
    if (C.degree() != 5) throw DomainError("the canonical subspace construction needs a quintic model");
    if (p < 5) throw DomainError("the canonical subspace construction needs p >= 5");
    if (n < 1) throw InputError("level n must be at least 1");
    Integer mod = ipow(p, static_cast<unsigned long>(n));
    if (mod >= Integer(1UL << 31)) throw PrecisionError("p^n must stay below 2^31");
    QuinticData q{p, n, mod.get_ui(), {}};
    for (int i = 0; i <= 5; ++i) {
        const Rational& c = C.b().coeff(5 - i);
        if (c.get_den() != 1) throw DomainError("the canonical subspace construction needs integer coefficients");
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_num().get_mpz_t(), mod.get_mpz_t());
        q.beta[static_cast<std::size_t>(i)] = r.get_ui();
    }
    return q;
}

InfinitySeries infinity_series(const QuinticData& q, std::size_t limit) {
    const u64 m = q.modulus;
    // z = s beta(z) by Newton's method on F(z) = z - s beta(z)
    Series z{0, 1 % m};
    std::size_t prec = 2;
    const std::size_t zlimit = limit + 1;
    while (prec < zlimit) {
        prec = std::min(2 * prec, zlimit);
        z.resize(prec, 0);
        auto [bz, dbz] = beta_at(q, z, prec);
        Series F = sub(z, shift_up(bz, prec), m);
        Series dF = sub(Series{1 % m}, shift_up(dbz, prec), m);
        z = sub(z, mul(F, inverse(dF, m, prec), m, prec), m);
    }
    z.resize(zlimit, 0);
    InfinitySeries out;
    out.v = Series(z.begin() + 1, z.end()); // beta(z) = z / s
    out.u = inverse(out.v, m, limit);
    z.resize(limit);
    out.z = std::move(z);
    return out;
}

RhoKCoefficients rho_k_closed(const QuinticData& q, long k) {
    check_k(k);
    const u64 m = q.modulus;
    RhoKCoefficients out{k, q.p, q.n, m, {}};
    auto sub_at = [&](int e, u64 val) {
        if (e < -3 || e > 4) return;
        auto& slot = out.low[static_cast<std::size_t>(e + 3)];
        slot = (slot + m - val % m) % m;
    };
    if (k <= 3) out.low[static_cast<std::size_t>(3 - k)] = 1 % m;
    InfinitySeries inf = infinity_series(q, 6);
    const std::vector<u64> beta(q.beta.begin(), q.beta.end());
    if (k % 2 == 1) {
        // rho_k = t^-k - sum_{j=1..4} c_{e-2+j} (-y) z^j, (-y) z^j = t^-5 s^j u^(2-j)
        const u64 e = static_cast<u64>((k - 1) / 2);
        Series c = power_mod(beta, e, m, e + 3);
        Series v2 = mul(inf.v, inf.v, m, 6);
        const Series* factor[5] = {nullptr, &inf.u, nullptr, &inf.v, &v2};
        for (int j = 1; j <= 4; ++j) {
            u64 cj = c[e - 2 + static_cast<u64>(j)];
            for (int l = 0; -5 + 2 * j + 2 * l <= 4; ++l) {
                u64 f = j == 2 ? (l == 0 ? 1 : 0) : (*factor[j])[static_cast<std::size_t>(l)];
                sub_at(-5 + 2 * j + 2 * l, mulmod(cj, f, m));
            }
        }
    } else {
        // rho_k = s^-e - sum_{j>=1} c_{e+j} z^j, z^j = s^j v^j
        const u64 e = static_cast<u64>(k / 2);
        Series c = power_mod(beta, e, m, e + 3);
        Series v2 = mul(inf.v, inf.v, m, 6);
        sub_at(2, c[e + 1]);
        sub_at(4, mulmod(c[e + 1], inf.v[1], m));
        sub_at(4, mulmod(c[e + 2], v2[0], m));
    }
    return out;
}

std::vector<u64> rho_k_ladder_series(const QuinticData& q, long k, LadderOptions opt) {
    check_k(k);
    const u64 m = q.modulus;
    const long jmax = [&] {
        long best = 0;
        for (long mm = std::max(0L, k - 8); mm <= k; ++mm)
            if (mm != 1 && mm != 3) best = std::max(best, ladder_index(mm).second);
        return best;
    }();
    // s-degree needed by a block j: t^(-8-5j) * (series in s) known to t^4
    auto block_len = [](long j) { return static_cast<std::size_t>((12 + 5 * j) / 2 + 1); };
    const std::size_t D = block_len(jmax) + 1;
    InfinitySeries inf = infinity_series(q, D);
    std::array<Series, 5> upow;
    upow[0] = Series(D, 0);
    upow[0][0] = 1 % m;
    for (int i = 1; i <= 4; ++i) upow[static_cast<std::size_t>(i)] = mul(upow[static_cast<std::size_t>(i - 1)], inf.u, m, D);
    Series v2 = mul(inf.v, inf.v, m, D);
    const long jstep = opt.parity_skip ? 2 : 1;
    const Series step = opt.parity_skip ? mul(v2, v2, m, D) : v2;

    // U_j = u^(2j) = (-y)^j t^(5j), stepped downwards from j = jmax
    std::map<long, Series> U;
    long jtop = jmax;
    if (opt.parity_skip && (jmax - k) % 2 != 0) --jtop;
    Series Ucur = power_mod(inf.u, static_cast<u64>(2 * jtop), m, block_len(jtop));
    long jcur = jtop;
    auto get_U = [&](long j) -> const Series& {
        auto it = U.find(j);
        if (it != U.end()) return it->second;
        while (jcur > j) {
            jcur -= jstep;
            Ucur = mul(Ucur, step, m, block_len(jcur));
        }
        if (jcur != j) throw Error("ladder bookkeeping: block index skipped");
        return U.emplace(j, Ucur).first->second;
    };

    std::vector<u64> cur(static_cast<std::size_t>(k + 5), 0); // exponent e at index e + k
    std::map<long, std::array<u64, 5>> pending;               // j -> coefficients of x^i
    auto flush = [&](long j) {
        const auto& g = pending.at(j);
        const Series& Uj = get_U(j);
        const std::size_t L = block_len(j);
        Series H(L, 0);
        for (int i = 0; i <= 4; ++i) {
            if (!g[static_cast<std::size_t>(i)]) continue;
            for (std::size_t l = 0; l + static_cast<std::size_t>(4 - i) < L; ++l)
                H[l + static_cast<std::size_t>(4 - i)] =
                    (H[l + static_cast<std::size_t>(4 - i)] + mulmod(g[static_cast<std::size_t>(i)], upow[static_cast<std::size_t>(i)][l], m)) % m;
        }
        Series P = mul(H, Uj, m, L);
        for (std::size_t l = 0; l < L; ++l) {
            long e = -8 - 5 * j + 2 * static_cast<long>(l);
            if (e < -k || e > 4 || !P[l]) continue;
            auto& slot = cur[static_cast<std::size_t>(e + k)];
            slot = (slot + m - P[l]) % m;
        }
        pending.erase(j);
        U.erase(j);
    };
    // coefficient of t^-mm in x^i (-y)^j
    auto single = [&](int i, long j, long mm) -> u64 {
        long twice = 2 * i + 5 * j - mm;
        if (twice < 0 || twice % 2 != 0) return 0;
        std::size_t d = static_cast<std::size_t>(twice / 2);
        const Series& Uj = get_U(j);
        u64 acc = 0;
        for (std::size_t l = 0; l <= d; ++l) acc = (acc + mulmod(upow[static_cast<std::size_t>(i)][l], Uj[d - l], m)) % m;
        return acc;
    };

    auto [ik, jk] = ladder_index(k);
    pending[jk][static_cast<std::size_t>(ik)] = m - 1 % m; // + x^i (-y)^j
    const long mlow = k % 2 == 0 ? 0 : 2;
    for (long mm = k - 1; mm >= mlow; --mm) {
        if (mm == 1 || mm == 3) continue;
        if (opt.parity_skip && (mm - k) % 2 != 0) continue;
        // blocks that can no longer receive terms
        while (!pending.empty() && 5 * pending.rbegin()->first > mm) flush(pending.rbegin()->first);
        while (!U.empty() && 5 * U.rbegin()->first > mm) U.erase(std::prev(U.end()));
        // blocks touched at this exponent, prepared in descending order
        for (long j = mm / 5; 5 * j + 8 >= mm && j >= 0; --j)
            if (!opt.parity_skip || (j - k) % 2 == 0) get_U(j);
        auto [i, j] = ladder_index(mm);
        u64 a = cur[static_cast<std::size_t>(k - mm)];
        for (const auto& [jp, g] : pending)
            for (int ii = 0; ii <= 4; ++ii)
                if (g[static_cast<std::size_t>(ii)]) a = (a + m - mulmod(g[static_cast<std::size_t>(ii)], single(ii, jp, mm), m)) % m;
        if (a) pending[j][static_cast<std::size_t>(i)] = (pending[j][static_cast<std::size_t>(i)] + a) % m;
        else if (!pending.count(j)) pending[j] = {};
    }
    while (!pending.empty()) flush(pending.rbegin()->first);
    return cur;
}

RhoKCoefficients rho_k(const HyperellipticCurve& C, long k, std::uint32_t p, int n, RhoMethod method) {
    QuinticData q = quintic_data(C, p, n);
    if (method == RhoMethod::Closed) return rho_k_closed(q, k);
    auto series = rho_k_ladder_series(q, k);
    RhoKCoefficients out{k, p, n, q.modulus, {}};
    for (int e = -3; e <= 4; ++e)
        if (e >= -k) out.low[static_cast<std::size_t>(e + 3)] = series[static_cast<std::size_t>(e + k)];
    return out;
}

CanonicalSubspace canonical_subspace(const HyperellipticCurve& C, std::uint32_t p, int n, RhoMethod method) {
    QuinticData q = quintic_data(C, p, n);
    const u64 m = q.modulus;
    const long pn = static_cast<long>(ipow(p, static_cast<unsigned long>(n)).get_si());
    RhoKCoefficients phi = rho_k(C, 3 * pn, p, n, method);
    RhoKCoefficients psi = rho_k(C, pn, p, n, method);
    CanonicalSubspace out{p, n, m, phi.M(), phi.N(), psi.M(), psi.N(), phi.I(), psi.I(), phi.R(), psi.R(), {}, 0, 0, 0, 0, {}, false,
                          trivial_subspace(2, p, n)};
    out.M = {{{out.A, out.B}, {out.C, out.D}}};
    u64 det = (mulmod(out.A, out.D, m) + m - mulmod(out.B, out.C, m)) % m;
    if (det % p == 0)
        throw DomainError("det M_n is divisible by p: the curve does not have semistable ordinary reduction at " + std::to_string(p));
    u64 di = invmod(det, m);
    auto comb = [&](u64 a, u64 b, u64 c, u64 d) { return mulmod(di, (mulmod(a, b, m) + m - mulmod(c, d, m)) % m, m); };
    out.alpha = comb(out.D, out.I, out.B, out.J);
    out.beta = comb(out.A, out.J, out.C, out.I);
    out.delta = comb(out.D, out.R, out.B, out.S);
    out.gamma = comb(out.A, out.S, out.C, out.R);
    const u64 b1 = q.beta[1], b2 = q.beta[2], b3 = q.beta[3];
    auto mm = [m](u64 a, u64 b) { return mulmod(a, b, m); };
    auto neg = [m](u64 a) { return a ? m - a : 0; };
    u64 c11 = (mm(2, mm(b1, b2)) + neg(mm(b1, out.alpha)) + mm(mm(b1, b1), out.beta) + mm(3, out.delta) + neg(mm(3, mm(b1, out.gamma))) +
               mm(3, b3)) %
              m;
    u64 c12 = (b2 + neg(mm(b1, out.beta)) + mm(3, out.gamma)) % m;
    u64 c21 = (b2 + out.alpha + neg(mm(b1, out.beta))) % m;
    u64 c22 = out.beta;
    out.cC = {{{c11, c12}, {c21, c22}}};
    out.c_symmetric = c12 == c21;
    Matrix<PadicNumber> rows(2, 4, PadicNumber::zero(p, n));
    std::array<u64, 4> k_row{neg(c12), neg(c22), 1 % m, 0};
    std::array<u64, 4> l_row{neg(c11), (b2 + neg(c12)) % m, mm(2, b1), 3 % m};
    for (std::size_t j = 0; j < 4; ++j) {
        rows(0, j) = to_padic(k_row[j], q);
        rows(1, j) = to_padic(l_row[j], q);
    }
    out.basis = WSubspace(rows, 2);
    return out;
}

bool is_ordinary(const HyperellipticCurve& C, std::uint32_t p) {
    QuinticData q = quintic_data(C, p, 1);
    auto phi = rho_k_closed(q, 3 * static_cast<long>(p));
    auto psi = rho_k_closed(q, static_cast<long>(p));
    u64 det = (mulmod(phi.M(), psi.N(), p) + p - mulmod(phi.N(), psi.M(), p)) % p;
    return det != 0;
}

} // namespace cgh
