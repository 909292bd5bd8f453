#pragma once

#include "cgh/error.hpp"
#include "cgh/poly.hpp"
#include "cgh/rational.hpp"
#include "cgh/ring.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cgh {

// Truncated Laurent series sum_{e < T} c_e t^e known modulo t^T.
// T = kExact marks an exact (finite) series. Products follow
// T(fg) = min(T_f + v(g), T_g + v(f)).
template <class R>
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() = default;
    explicit LaurentSeries(const R& proto, int prec = kExact) : proto_(zero_like(proto)), prec_(prec) {}
    LaurentSeries(const R& proto, int start, std::vector<R> coeffs, int prec = kExact)
        : proto_(zero_like(proto)), start_(start), c_(std::move(coeffs)), prec_(prec) {
        normalize();
    }

    static LaurentSeries monomial(const R& c, int e, int prec = kExact) { return LaurentSeries(c, e, {c}, prec); }
    static LaurentSeries t(const R& proto) { return monomial(one_like(proto), 1); }
    static LaurentSeries from_poly(const Poly<R>& f, int prec = kExact) { return LaurentSeries(f.proto(), 0, f.coeffs(), prec); }

    const R& proto() const { return proto_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    // Exponent of the first nonzero coefficient, or the precision for zero.
    int valuation() const { return c_.empty() ? prec_ : start_; }
    bool is_zero() const { return c_.empty(); }
    // Window of stored coefficients [start, end).
    int start() const { return start_; }
    int end() const { return start_ + static_cast<int>(c_.size()); }

    R coeff(int e) const {
        if (e >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(e) + " is beyond the series precision t^" + std::to_string(prec_));
        if (e < start_ || e >= end()) return proto_;
        return c_[static_cast<std::size_t>(e - start_)];
    }
    R residue() const { return coeff(-1); }
    R leading() const {
        if (c_.empty()) throw PrecisionError("leading coefficient of a series that is zero to its precision");
        return c_.front();
    }

    LaurentSeries truncated(int T) const {
        LaurentSeries r = *this;
        r.prec_ = std::min(prec_, T);
        r.normalize();
        return r;
    }
    // Multiply by t^k.
    LaurentSeries shifted(int k) const {
        LaurentSeries r = *this;
        r.start_ += k;
        if (!is_exact()) r.prec_ += k;
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    LaurentSeries& operator+=(const LaurentSeries& b) { return add(b, false); }
    LaurentSeries& operator-=(const LaurentSeries& b) { return add(b, true); }
    LaurentSeries& operator+=(const R& s) { return add(monomial(s, 0), false); }
    LaurentSeries& operator-=(const R& s) { return add(monomial(s, 0), true); }
    LaurentSeries& operator*=(const R& s) {
        for (auto& a : c_) a *= s;
        normalize();
        return *this;
    }
    LaurentSeries& operator*=(const LaurentSeries& b) { return *this = *this * b; }

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator+(LaurentSeries a, const R& s) { return a += s; }
    friend LaurentSeries operator-(LaurentSeries a, const R& s) { return a -= s; }
    friend LaurentSeries operator*(LaurentSeries a, const R& s) { return a *= s; }
    friend LaurentSeries operator*(const R& s, LaurentSeries a) { return a *= s; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        int T = std::min(sat(a.prec_, b.valuation()), sat(b.prec_, a.valuation()));
        LaurentSeries r(a.proto_, T);
        if (a.c_.empty() || b.c_.empty()) return r;
        int lo = a.start_ + b.start_;
        int hi = std::min(a.end() + b.end() - 1, T);
        if (hi <= lo) return r;
        std::vector<R> out(static_cast<std::size_t>(hi - lo), a.proto_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            int ei = a.start_ + static_cast<int>(i);
            std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(std::max(0, hi - ei - b.start_)));
            for (std::size_t j = 0; j < jmax; ++j) out[static_cast<std::size_t>(ei + b.start_ + static_cast<int>(j) - lo)] += a.c_[i] * b.c_[j];
        }
        r.start_ = lo;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }

    // Multiplicative inverse. Exact inputs need an explicit cap on the result
    // precision; the leading coefficient must be invertible.
    LaurentSeries inverse(int cap = kExact) const {
        if (c_.empty()) throw PrecisionError("inverse of a series that is zero to its precision");
        const R& lead = c_.front();
        if (!is_invertible(lead)) throw DomainError("leading coefficient of the series is not invertible");
        int v = start_;
        int T = is_exact() ? cap : std::min(cap, prec_ - 2 * v);
        if (T >= kExact) throw PrecisionError("inverse of an exact series needs a precision cap");
        int n = T + v; // number of coefficients, exponents -v .. T-1
        LaurentSeries r(proto_, T);
        if (n <= 0) return r;
        R inv = one_like(proto_) / lead;
        std::vector<R> out(static_cast<std::size_t>(n), proto_);
        out[0] = inv;
        for (int k = 1; k < n; ++k) {
            R acc = proto_;
            int lim = std::min(k, static_cast<int>(c_.size()) - 1);
            for (int i = 1; i <= lim; ++i) acc += c_[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
            out[static_cast<std::size_t>(k)] = -(acc * inv);
        }
        r.start_ = -v;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }

    LaurentSeries divided_by(const LaurentSeries& b, int cap = kExact) const {
        if (b.is_exact() && cap >= kExact) {
            // keep the relative precision of the numerator
            if (is_exact()) throw PrecisionError("quotient of exact series needs a precision cap");
            cap = prec_ - b.valuation();
        }
        return (*this * b.inverse(cap)).truncated(cap);
    }

    LaurentSeries pow(long e, int cap = kExact) const {
        if (e < 0) return inverse(cap).pow(-e, cap);
        LaurentSeries result = monomial(one_like(proto_), 0);
        LaurentSeries base = *this;
        while (e > 0) {
            if (e & 1) result = (result * base).truncated(cap);
            e >>= 1;
            if (e) base = (base * base).truncated(cap);
        }
        return result;
    }

    LaurentSeries derivative() const {
        LaurentSeries r(proto_, is_exact() ? kExact : prec_ - 1);
        if (c_.empty()) return r;
        std::vector<R> out(c_.size(), proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * from_rational_like(proto_, Rational(start_ + static_cast<int>(i)));
        r.start_ = start_ - 1;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }

    // Formal antiderivative with zero constant term. A t^-1 term is not
    // integrable; its coefficient is written to *log_coeff when given,
    // otherwise a DomainError is thrown.
    LaurentSeries integral(R* log_coeff = nullptr) const {
        LaurentSeries r(proto_, is_exact() ? kExact : prec_ + 1);
        if (log_coeff) *log_coeff = proto_;
        if (c_.empty()) return r;
        std::vector<R> out(c_.size(), proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int e = start_ + static_cast<int>(i);
            if (e == -1) {
                if (detail::coeff_is_zero(c_[i])) continue;
                if (!log_coeff) throw DomainError("series has a nonzero residue and no antiderivative");
                *log_coeff = c_[i];
                continue;
            }
            out[i] = c_[i] / from_rational_like(proto_, Rational(e + 1));
        }
        r.start_ = start_ + 1;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }

    // Sum of the known coefficients at t = t0.
    R evaluate(const R& t0) const {
        R acc = proto_;
        if (c_.empty()) return acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
        if (start_ >= 0) {
            for (int k = 0; k < start_; ++k) acc *= t0;
        } else {
            R inv = one_like(proto_) / t0;
            for (int k = 0; k < -start_; ++k) acc *= inv;
        }
        return acc;
    }

    bool is_even() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if ((start_ + static_cast<int>(i)) % 2 != 0 && !detail::coeff_is_zero(c_[i])) return false;
        return true;
    }
    bool is_odd() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if ((start_ + static_cast<int>(i)) % 2 == 0 && !detail::coeff_is_zero(c_[i])) return false;
        return true;
    }

    template <class S, class F>
    LaurentSeries<S> map(const S& proto, F f) const {
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(f(a));
        return LaurentSeries<S>(proto, start_, std::move(out), prec_);
    }

    std::string to_string(const std::string& var = "t") const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::coeff_is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + str(c_[i]) + ")*" + var + "^" + std::to_string(start_ + static_cast<int>(i));
        }
        if (!is_exact()) out += (out.empty() ? "" : " + ") + std::string("O(") + var + "^" + std::to_string(prec_) + ")";
        return out.empty() ? "0" : out;
    }

private:
    static int sat(int a, int b) {
        long long s = static_cast<long long>(a) + b;
        return s >= kExact ? kExact : static_cast<int>(s);
    }
    static std::string str(const Rational& q) { return q.get_str(); }
    template <class S>
    static std::string str(const S& s) {
        return s.to_string();
    }

    LaurentSeries& add(const LaurentSeries& b, bool negate) {
        int T = std::min(prec_, b.prec_);
        if (b.c_.empty()) {
            prec_ = T;
            normalize();
            return *this;
        }
        if (c_.empty()) {
            R keep = proto_;
            *this = negate ? -b : b;
            proto_ = keep;
            prec_ = T;
            normalize();
            return *this;
        }
        int lo = std::min(start_, b.start_);
        int hi = std::min(std::max(end(), b.end()), T);
        if (hi <= lo) {
            c_.clear();
            prec_ = T;
            return *this;
        }
        std::vector<R> out(static_cast<std::size_t>(hi - lo), proto_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int e = start_ + static_cast<int>(i);
            if (e < hi) out[static_cast<std::size_t>(e - lo)] = c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            int e = b.start_ + static_cast<int>(i);
            if (e >= hi) break;
            auto& slot = out[static_cast<std::size_t>(e - lo)];
            if (negate) slot -= b.c_[i];
            else slot += b.c_[i];
        }
        start_ = lo;
        c_ = std::move(out);
        prec_ = T;
        normalize();
        return *this;
    }

    void normalize() {
        if (!c_.empty() && end() > prec_) c_.resize(static_cast<std::size_t>(std::max(0, prec_ - start_)));
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && detail::coeff_is_zero(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            start_ = 0;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            start_ += static_cast<int>(lead);
        }
    }

    R proto_{};
    int start_ = 0;
    std::vector<R> c_;
    int prec_ = kExact;
};

} // namespace cgh
