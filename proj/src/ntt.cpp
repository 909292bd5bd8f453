#include "cgh/ntt.hpp"

#include "cgh/error.hpp"

#include <algorithm>

namespace cgh {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrimes[3] = {998244353, 167772161, 469762049};
constexpr u64 kRoot = 3;

u64 pw(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<u64>& a, bool invert, u64 mod) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u64 w = pw(kRoot, (mod - 1) / len, mod);
        if (invert) w = pw(w, mod - 2, mod);
        std::vector<u64> ws(len / 2);
        ws[0] = 1;
        for (std::size_t k = 1; k < len / 2; ++k) ws[k] = ws[k - 1] * w % mod;
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < len / 2; ++k) {
                u64 u = a[i + k], v = a[i + k + len / 2] * ws[k] % mod;
                a[i + k] = u + v < mod ? u + v : u + v - mod;
                a[i + k + len / 2] = u >= v ? u - v : u + mod - v;
            }
    }
    if (invert) {
        u64 ninv = pw(n % mod, mod - 2, mod);
        for (auto& x : a) x = x * ninv % mod;
    }
}

std::vector<u64> schoolbook(const std::vector<u64>& a, const std::vector<u64>& b, u64 m, std::size_t limit) {
    std::size_t n = std::min(limit, a.size() + b.size() - 1);
    std::vector<u128> acc(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (!a[i]) continue;
        std::size_t top = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < top; ++j) acc[i + j] += static_cast<u128>(a[i] * b[j]);
    }
    std::vector<u64> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<u64>(acc[i] % m);
    return out;
}

} // namespace

std::vector<u64> multiply_mod(const std::vector<u64>& a, const std::vector<u64>& b, u64 m, std::size_t limit) {
    if (a.empty() || b.empty() || limit == 0) return {};
    if (m >= (u64(1) << 31)) throw PrecisionError("modulus too large for the transform multiplier");
    std::size_t la = std::min(a.size(), limit), lb = std::min(b.size(), limit);
    std::vector<u64> A(a.begin(), a.begin() + static_cast<long>(la)), B(b.begin(), b.begin() + static_cast<long>(lb));
    if (std::min(la, lb) < 48) return schoolbook(A, B, m, limit);
    std::size_t need = std::min(limit, la + lb - 1);
    std::size_t n = 1;
    while (n < la + lb - 1) n <<= 1;
    if (n > (std::size_t(1) << 23)) throw PrecisionError("series too long for the transform multiplier");
    std::vector<u64> res[3];
    for (int k = 0; k < 3; ++k) {
        u64 P = kPrimes[k];
        std::vector<u64> fa(n, 0), fb(n, 0);
        for (std::size_t i = 0; i < la; ++i) fa[i] = A[i] % P;
        for (std::size_t i = 0; i < lb; ++i) fb[i] = B[i] % P;
        ntt(fa, false, P);
        ntt(fb, false, P);
        for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % P;
        ntt(fa, true, P);
        fa.resize(need);
        res[k] = std::move(fa);
    }
    // Garner reconstruction of x = r0 + P0 (t1 + P1 t2)
    const u64 P0 = kPrimes[0], P1 = kPrimes[1], P2 = kPrimes[2];
    const u64 inv01 = pw(P0 % P1, P1 - 2, P1);
    const u64 inv012 = pw(P0 * P1 % P2, P2 - 2, P2);
    const u64 p01m = static_cast<u64>(static_cast<u128>(P0) * P1 % m);
    std::vector<u64> out(need);
    for (std::size_t i = 0; i < need; ++i) {
        u64 r0 = res[0][i], r1 = res[1][i], r2 = res[2][i];
        u64 t1 = (r1 + P1 - r0 % P1) % P1 * inv01 % P1;
        u64 x01 = r0 + P0 * t1; // < P0 P1 < 2^58
        u64 t2 = (r2 + P2 - x01 % P2) % P2 * inv012 % P2;
        out[i] = static_cast<u64>((x01 % m + static_cast<u128>(p01m) * t2) % m);
    }
    return out;
}

std::vector<u64> power_mod(const std::vector<u64>& f, u64 e, u64 m, std::size_t limit) {
    std::vector<u64> r{1 % m};
    if (e == 0) {
        r.resize(limit, 0);
        return r;
    }
    // left-to-right; f is usually sparse, so the extra multiply is cheap
    int top = 63;
    while (!((e >> top) & 1)) --top;
    r = std::vector<u64>(f.begin(), f.begin() + static_cast<long>(std::min(f.size(), limit)));
    for (auto& x : r) x %= m;
    for (int bit = top - 1; bit >= 0; --bit) {
        r = multiply_mod(r, r, m, limit);
        if ((e >> bit) & 1) r = multiply_mod(r, f, m, limit);
    }
    r.resize(limit, 0);
    return r;
}

} // namespace cgh
