#include "cgh/zmod.hpp"

#include "cgh/error.hpp"

#include <numeric>

namespace cgh {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError("residue is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t rational_mod(const Rational& q, std::uint64_t m) {
    Integer mm(static_cast<unsigned long>(m));
    Integer num, den;
    mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), mm.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), mm.get_mpz_t());
    std::uint64_t n = num.get_ui(), d = den.get_ui();
    return mulmod(n, invmod(d, m), m);
}

ZModInt ZModInt::from_rational(const Rational& q, std::uint64_t modulus) { return ZModInt(rational_mod(q, modulus), modulus); }

ZModInt ZModInt::inverse() const { return ZModInt(invmod(v_, m_), m_); }

bool is_invertible(const ZModInt& a) { return std::gcd(a.value(), a.modulus()) == 1; }

} // namespace cgh
