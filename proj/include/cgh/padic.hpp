#pragma once

#include "cgh/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgh {

// An element of Q_p known modulo p^N (fixed absolute precision N).
//
// Stored as p^v * u with u a unit reduced modulo p^(N - v). A value whose
// known digits are all zero is "zero to precision N" and reports valuation
// kInfiniteValuation. Precision propagates pessimistically:
//   prec(a + b) = min(N_a, N_b)
//   prec(a * b) = min(N_a + v_b, N_b + v_a)
// where a zero operand contributes v = N.
class PadicNumber {
public:
    static constexpr int kInfiniteValuation = 1 << 29;

    // Placeholder with no prime; only assignment and destruction are valid.
    PadicNumber() = default;

    static PadicNumber zero(std::uint32_t p, int prec);
    static PadicNumber from_integer(std::uint32_t p, const Integer& n, int prec);
    static PadicNumber from_rational(std::uint32_t p, const Rational& q, int prec);
    // Digits a_0.. multiply p^valuation, i.e. sum a_i p^(valuation + i).
    static PadicNumber from_digits(std::uint32_t p, int valuation, const std::vector<long>& digits, int prec);

    // Accepts "2 + 4*5 + 5^3 + O(5^7)", "O(5^7)", plain rationals such as
    // "-12" or "1/3" (which get default_prec), and sums thereof.
    static PadicNumber parse(std::string_view text, std::uint32_t p, int default_prec = -1);

    std::uint32_t prime() const { return p_; }
    int valuation() const { return v_; }
    int precision() const { return n_; }
    int relative_precision() const { return is_zero() ? 0 : n_ - v_; }
    const Integer& unit() const { return u_; }
    bool is_zero() const { return v_ >= n_; }
    bool is_unit() const { return v_ == 0 && n_ > 0; }
    bool valid() const { return p_ != 0; }

    PadicNumber operator-() const;
    PadicNumber& operator+=(const PadicNumber& b);
    PadicNumber& operator-=(const PadicNumber& b);
    PadicNumber& operator*=(const PadicNumber& b);
    PadicNumber& operator/=(const PadicNumber& b);
    PadicNumber& operator+=(const Rational& q);
    PadicNumber& operator-=(const Rational& q);
    PadicNumber& operator*=(const Rational& q);
    PadicNumber& operator/=(const Rational& q);

    PadicNumber inverse() const;
    PadicNumber pow(long e) const;

    // Forget digits at and above p^n. Never raises precision.
    PadicNumber with_precision(int n) const;
    // Declare the value exact up to p^n by padding with zero digits. Only
    // meaningful when the caller knows the padded digits, e.g. integer data.
    PadicNumber padded_to(int n) const;

    // p^v * u as an exact rational representative.
    Rational to_rational() const;
    // Representative in [0, p^N); requires valuation >= 0.
    Integer lift() const;
    // Base-p digits of u, i.e. the coefficients of p^v, ..., p^(N-1).
    std::vector<unsigned long> digits() const;

    // True when a - b vanishes modulo p^m. Throws PrecisionError if m exceeds
    // the precision of either operand.
    bool equals_mod(const PadicNumber& b, int m) const;
    // Equality at the common precision.
    bool operator==(const PadicNumber& b) const;
    bool operator!=(const PadicNumber& b) const { return !(*this == b); }

    std::string to_string() const;

private:
    PadicNumber(std::uint32_t p, int v, Integer u, int n);
    static PadicNumber normalized(std::uint32_t p, int v, Integer value, int n);
    int effective_valuation() const { return is_zero() ? n_ : v_; }
    void check_prime(const PadicNumber& b) const;

    std::uint32_t p_ = 0;
    int v_ = kInfiniteValuation;
    Integer u_ = 0;
    int n_ = 0;
};

PadicNumber operator+(PadicNumber a, const PadicNumber& b);
PadicNumber operator-(PadicNumber a, const PadicNumber& b);
PadicNumber operator*(PadicNumber a, const PadicNumber& b);
PadicNumber operator/(PadicNumber a, const PadicNumber& b);
PadicNumber operator+(PadicNumber a, const Rational& q);
PadicNumber operator-(PadicNumber a, const Rational& q);
PadicNumber operator*(PadicNumber a, const Rational& q);
PadicNumber operator/(PadicNumber a, const Rational& q);
PadicNumber operator+(const Rational& q, PadicNumber a);
PadicNumber operator-(const Rational& q, const PadicNumber& a);
PadicNumber operator*(const Rational& q, PadicNumber a);
PadicNumber operator/(const Rational& q, const PadicNumber& a);

// Ring helpers for the generic containers. The prototype carries p and the
// ambient precision.
inline PadicNumber zero_like(const PadicNumber& a) { return PadicNumber::zero(a.prime(), a.precision()); }
inline PadicNumber one_like(const PadicNumber& a) { return PadicNumber::from_integer(a.prime(), 1, a.precision()); }
inline PadicNumber from_rational_like(const PadicNumber& a, const Rational& q) {
    return PadicNumber::from_rational(a.prime(), q, a.precision());
}
inline bool is_zero(const PadicNumber& a) { return a.is_zero(); }
inline bool is_invertible(const PadicNumber& a) { return !a.is_zero(); }
inline int pivot_score(const PadicNumber& a) { return a.is_zero() ? 1 << 30 : a.valuation(); }

// Iwasawa-style logarithm: log(p^v u) = v * branch + log(u) where
// log(u) = log(u^(p-1)) / (p-1) via the power series of log(1 + z).
PadicNumber plog(const PadicNumber& x, const PadicNumber& branch);
// Convenience for rationals; the result is known modulo p^prec.
PadicNumber plog(std::uint32_t p, const Rational& q, int prec, const PadicNumber& branch);

// Branch of log_p fixed by L = log_p(p); L = 0 is the cyclotomic branch.
struct LogBranch {
    PadicNumber L;
    static LogBranch cyclotomic(std::uint32_t p, int prec) { return {PadicNumber::zero(p, prec)}; }
    std::uint32_t prime() const { return L.prime(); }
    bool operator==(const LogBranch& o) const { return L.prime() == o.L.prime() && L == o.L; }
    bool operator!=(const LogBranch& o) const { return !(*this == o); }
    std::string to_string() const { return L.to_string(); }
};
inline PadicNumber plog(const PadicNumber& x, const LogBranch& b) { return plog(x, b.L); }

// The Teichmueller representative of the residue class of a modulo p.
PadicNumber teichmuller(std::uint32_t p, const Integer& a, int prec);

// A square root of a; when hint is given the root congruent to it modulo p
// is returned. Throws DomainError if a is not a square. Requires p odd.
PadicNumber sqrt(const PadicNumber& a, const std::optional<Integer>& hint = std::nullopt);
// Square root of a modulo the odd prime p, or nullopt if a is a non-residue.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

} // namespace cgh
