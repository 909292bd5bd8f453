#pragma once

#include "cgh/rational.hpp"

#include <cstdint>
#include <string>

namespace cgh {

// Residue modulo m < 2^62, carried together with its modulus.
class ZModInt {
public:
    ZModInt() = default;
    ZModInt(std::uint64_t value, std::uint64_t modulus) : v_(modulus ? value % modulus : 0), m_(modulus) {}
    static ZModInt from_rational(const Rational& q, std::uint64_t modulus);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    ZModInt operator-() const { return ZModInt(v_ ? m_ - v_ : 0, m_); }
    ZModInt& operator+=(const ZModInt& b) {
        v_ += b.v_;
        if (v_ >= m_) v_ -= m_;
        return *this;
    }
    ZModInt& operator-=(const ZModInt& b) {
        v_ = v_ >= b.v_ ? v_ - b.v_ : v_ + m_ - b.v_;
        return *this;
    }
    ZModInt& operator*=(const ZModInt& b) {
        v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * b.v_ % m_);
        return *this;
    }
    ZModInt& operator/=(const ZModInt& b) { return *this *= b.inverse(); }
    ZModInt inverse() const;
    bool operator==(const ZModInt& b) const { return v_ == b.v_ && m_ == b.m_; }

    std::string to_string() const { return std::to_string(v_); }

private:
    std::uint64_t v_ = 0;
    std::uint64_t m_ = 1;
};

inline ZModInt operator+(ZModInt a, const ZModInt& b) { return a += b; }
inline ZModInt operator-(ZModInt a, const ZModInt& b) { return a -= b; }
inline ZModInt operator*(ZModInt a, const ZModInt& b) { return a *= b; }
inline ZModInt operator/(ZModInt a, const ZModInt& b) { return a /= b; }

inline ZModInt zero_like(const ZModInt& a) { return ZModInt(0, a.modulus()); }
inline ZModInt one_like(const ZModInt& a) { return ZModInt(1, a.modulus()); }
inline ZModInt from_rational_like(const ZModInt& a, const Rational& q) { return ZModInt::from_rational(q, a.modulus()); }
inline bool is_zero(const ZModInt& a) { return a.is_zero(); }
bool is_invertible(const ZModInt& a);
inline int pivot_score(const ZModInt& a) { return is_invertible(a) ? 0 : (a.is_zero() ? 1 << 30 : 1); }

// Flat modular helpers for the hot loops of the Blakestad ladder.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse modulo m; throws DomainError when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t rational_mod(const Rational& q, std::uint64_t m);

} // namespace cgh
