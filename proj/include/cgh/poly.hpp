#pragma once

#include "cgh/error.hpp"
#include "cgh/rational.hpp"
#include "cgh/ring.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cgh {

// Dense univariate polynomial, coefficients from low to high degree.
// R must provide zero_like/one_like/is_zero/is_invertible and field-like
// arithmetic. The prototype fixes the ring context (p and precision for
// p-adic coefficients).
template <class R>
class Poly {
public:
    Poly() : proto_(R()) {}
    explicit Poly(const R& proto) : proto_(zero_like(proto)) {}
    Poly(const R& proto, std::vector<R> coeffs) : proto_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const R& c) { return Poly(c, std::vector<R>{c}); }
    static Poly monomial(const R& c, int degree) {
        std::vector<R> v(static_cast<std::size_t>(degree) + 1, zero_like(c));
        v.back() = c;
        return Poly(c, std::move(v));
    }
    static Poly x(const R& proto) { return monomial(one_like(proto), 1); }

    const R& proto() const { return proto_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return proto_;
        return c_[static_cast<std::size_t>(i)];
    }
    R leading() const { return c_.empty() ? proto_ : c_.back(); }
    void set_coeff(int i, const R& v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, proto_);
        c_[static_cast<std::size_t>(i)] = v;
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Poly& operator+=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), proto_);
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), proto_);
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    Poly& operator*=(const R& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly(a.proto_);
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.proto_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.proto_, std::move(out));
    }
    friend Poly operator*(Poly a, const R& s) { return a *= s; }
    friend Poly operator*(const R& s, Poly a) { return a *= s; }
    bool operator==(const Poly& b) const {
        if (c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!detail::coeff_is_zero(c_[i] - b.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& b) const { return !(*this == b); }

    // Quotient and remainder; the divisor's leading coefficient must be
    // invertible.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        R lead_inv = one_like(proto_) / d.leading();
        std::vector<R> rem = c_;
        int dd = d.degree();
        int qd = degree() - dd;
        if (qd < 0) return {Poly(proto_), *this};
        std::vector<R> q(static_cast<std::size_t>(qd) + 1, proto_);
        for (int i = qd; i >= 0; --i) {
            R coef = rem[static_cast<std::size_t>(i + dd)] * lead_inv;
            q[static_cast<std::size_t>(i)] = coef;
            if (detail::coeff_is_zero(coef)) continue;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= coef * d.c_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {Poly(proto_, std::move(q)), Poly(proto_, std::move(rem))};
    }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(proto_);
        std::vector<R> out(c_.size() - 1, proto_);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * from_rational_like(proto_, Rational(static_cast<long>(i)));
        return Poly(proto_, std::move(out));
    }
    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        std::vector<R> out(c_.size() + 1, proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i] / from_rational_like(proto_, Rational(static_cast<long>(i + 1)));
        return Poly(proto_, std::move(out));
    }

    // Horner evaluation at any type V supporting V * R and V + R.
    template <class V>
    V evaluate(const V& x, const V& zero) const {
        V acc = zero;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    R operator()(const R& x) const { return evaluate<R>(x, zero_like(x)); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (one_like(proto_) / leading());
    }

    // Coefficient-wise conversion, e.g. Rational -> PadicNumber.
    template <class S, class F>
    Poly<S> map(const S& proto, F f) const {
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(f(a));
        return Poly<S>(proto, std::move(out));
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    R proto_;
    std::vector<R> c_;
};

template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> poly_xgcd(const Poly<R>& a, const Poly<R>& b) {
    const R& proto = a.proto();
    Poly<R> r0 = a, r1 = b;
    Poly<R> s0 = Poly<R>::constant(one_like(proto)), s1(proto);
    Poly<R> t0(proto), t1 = Poly<R>::constant(one_like(proto));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<R> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<R> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    R inv = one_like(proto) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::string format_rational_poly(const Poly<Rational>& f, const std::string& var);

template <>
inline std::string Poly<Rational>::to_string(const std::string& var) const {
    return format_rational_poly(*this, var);
}

template <class R>
std::string Poly<R>::to_string(const std::string& var) const {
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (detail::coeff_is_zero(c_[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// Parses a univariate polynomial with rational coefficients, e.g.
// "x^5 - 4x^4 + 3/2*x - 7". Juxtaposition "5x" means 5*x.
Poly<Rational> parse_rational_poly(const std::string& text, char var = 'x');

} // namespace cgh
