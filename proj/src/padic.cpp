#include "cgh/padic.hpp"

#include "cgh/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace cgh {

namespace {

// p^k for small k is recomputed constantly; keep the last prime's table.
const Integer& ppow(std::uint32_t p, int k) {
    thread_local std::uint32_t cached_p = 0;
    thread_local std::vector<Integer> table;
    if (k < 0) throw PrecisionError("negative p-adic modulus exponent");
    if (cached_p != p) {
        cached_p = p;
        table.assign(1, Integer(1));
    }
    while (static_cast<int>(table.size()) <= k) table.push_back(table.back() * p);
    return table[static_cast<std::size_t>(k)];
}

Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (m == 1) return 0;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("element is not invertible");
    return r;
}

// Remove all factors of p from a nonzero integer, returning the count.
int strip(Integer& a, std::uint32_t p) {
    int v = 0;
    while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
        mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int sat_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > PadicNumber::kInfiniteValuation) return PadicNumber::kInfiniteValuation;
    if (s < -PadicNumber::kInfiniteValuation) return -PadicNumber::kInfiniteValuation;
    return static_cast<int>(s);
}

} // namespace

PadicNumber::PadicNumber(std::uint32_t p, int v, Integer u, int n) : p_(p), v_(v), u_(std::move(u)), n_(n) {}

PadicNumber PadicNumber::normalized(std::uint32_t p, int v, Integer value, int n) {
    // value * p^v, known modulo p^n
    if (v >= n) return zero(p, n);
    value = mod_pos(value, ppow(p, n - v));
    if (value == 0) return zero(p, n);
    v += strip(value, p);
    if (v >= n) return zero(p, n);
    return PadicNumber(p, v, std::move(value), n);
}

PadicNumber PadicNumber::zero(std::uint32_t p, int prec) {
    if (p < 2) throw InputError("p-adic prime must be at least 2");
    return PadicNumber(p, kInfiniteValuation, Integer(0), prec);
}

PadicNumber PadicNumber::from_integer(std::uint32_t p, const Integer& n, int prec) {
    if (p < 2) throw InputError("p-adic prime must be at least 2");
    if (n == 0 || prec <= -kInfiniteValuation) return zero(p, prec);
    Integer m = n;
    int v = strip(m, p);
    return normalized(p, v, m, prec);
}

PadicNumber PadicNumber::from_rational(std::uint32_t p, const Rational& q, int prec) {
    if (p < 2) throw InputError("p-adic prime must be at least 2");
    if (sgn(q) == 0) return zero(p, prec);
    Integer num = q.get_num(), den = q.get_den();
    int v = strip(num, p) - strip(den, p);
    if (v >= prec) return zero(p, prec);
    const Integer& m = ppow(p, prec - v);
    Integer u = mod_pos(num * inverse_mod(mod_pos(den, m), m), m);
    return normalized(p, v, u, prec);
}

PadicNumber PadicNumber::from_digits(std::uint32_t p, int v, const std::vector<long>& digits, int prec) {
    Integer acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * p + digits[i];
    return normalized(p, v, acc, prec);
}

void PadicNumber::check_prime(const PadicNumber& b) const {
    if (p_ == 0 || b.p_ == 0) throw InputError("uninitialised p-adic number");
    if (p_ != b.p_) throw InputError("mixing p-adic numbers for different primes");
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    return PadicNumber(p_, v_, mod_pos(-u_, ppow(p_, n_ - v_)), n_);
}

PadicNumber& PadicNumber::operator+=(const PadicNumber& b) {
    check_prime(b);
    int n = std::min(n_, b.n_);
    if (b.is_zero() || b.v_ >= n) {
        *this = with_precision(n);
        return *this;
    }
    if (is_zero() || v_ >= n) {
        *this = b.with_precision(n);
        return *this;
    }
    int v = std::min(v_, b.v_);
    Integer value = u_ * ppow(p_, v_ - v) + b.u_ * ppow(p_, b.v_ - v);
    *this = normalized(p_, v, value, n);
    return *this;
}

PadicNumber& PadicNumber::operator-=(const PadicNumber& b) { return *this += -b; }

PadicNumber& PadicNumber::operator*=(const PadicNumber& b) {
    check_prime(b);
    int n = std::min(sat_add(n_, b.effective_valuation()), sat_add(b.n_, effective_valuation()));
    if (is_zero() || b.is_zero()) {
        *this = zero(p_, n);
        return *this;
    }
    *this = normalized(p_, v_ + b.v_, u_ * b.u_, n);
    return *this;
}

PadicNumber& PadicNumber::operator/=(const PadicNumber& b) {
    check_prime(b);
    if (b.is_zero()) throw PrecisionError("division by a p-adic number that is zero to its precision");
    if (is_zero()) {
        *this = zero(p_, n_ - b.v_);
        return *this;
    }
    int rel = std::min(n_ - v_, b.n_ - b.v_);
    int v = v_ - b.v_;
    const Integer& m = ppow(p_, rel);
    *this = normalized(p_, v, u_ * inverse_mod(b.u_, m), v + rel);
    return *this;
}

// Mixed operations treat the rational as exact and convert it with enough
// digits that the result precision is the one an exact operand deserves.
PadicNumber& PadicNumber::operator+=(const Rational& q) {
    if (sgn(q) == 0) return *this;
    return *this += from_rational(p_, q, n_);
}

PadicNumber& PadicNumber::operator-=(const Rational& q) {
    if (sgn(q) == 0) return *this;
    return *this += from_rational(p_, -q, n_);
}

PadicNumber& PadicNumber::operator*=(const Rational& q) {
    if (p_ == 0) throw InputError("uninitialised p-adic number");
    if (sgn(q) == 0) {
        *this = zero(p_, n_);
        return *this;
    }
    int vq = cgh::valuation(q, p_);
    if (is_zero()) {
        *this = zero(p_, n_ + vq);
        return *this;
    }
    return *this *= from_rational(p_, q, vq + (n_ - v_));
}

PadicNumber& PadicNumber::operator/=(const Rational& q) {
    if (sgn(q) == 0) throw DomainError("division by zero");
    return *this *= Rational(1 / q);
}

PadicNumber PadicNumber::inverse() const { return Rational(1) / *this; }

PadicNumber PadicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return from_integer(p_, 1, n_);
    std::optional<PadicNumber> result;
    PadicNumber base = *this;
    while (e > 0) {
        if (e & 1) result = result ? *result * base : base;
        e >>= 1;
        if (e) base *= base;
    }
    return *result;
}

PadicNumber PadicNumber::with_precision(int n) const {
    if (n >= n_) return *this;
    if (is_zero() || v_ >= n) return zero(p_, n);
    return PadicNumber(p_, v_, mod_pos(u_, ppow(p_, n - v_)), n);
}

PadicNumber PadicNumber::padded_to(int n) const {
    if (n <= n_) return with_precision(n);
    if (is_zero()) return zero(p_, n);
    return PadicNumber(p_, v_, u_, n);
}

Rational PadicNumber::to_rational() const {
    if (is_zero()) return 0;
    if (v_ >= 0) return Rational(u_ * ppow(p_, v_));
    Rational r(u_, ppow(p_, -v_));
    r.canonicalize();
    return r;
}

Integer PadicNumber::lift() const {
    if (is_zero()) return 0;
    if (v_ < 0) throw DomainError("lift of a p-adic number with negative valuation");
    return u_ * ppow(p_, v_);
}

std::vector<unsigned long> PadicNumber::digits() const {
    std::vector<unsigned long> out;
    if (is_zero()) return out;
    Integer u = u_;
    for (int i = v_; i < n_; ++i) {
        out.push_back(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), p_));
    }
    return out;
}

bool PadicNumber::equals_mod(const PadicNumber& b, int m) const {
    check_prime(b);
    if (m > n_ || m > b.n_) throw PrecisionError("comparison beyond known precision");
    PadicNumber d = (*this - b).with_precision(m);
    return d.is_zero();
}

bool PadicNumber::operator==(const PadicNumber& b) const {
    if (p_ != b.p_) return false;
    return (*this - b).is_zero();
}

std::string PadicNumber::to_string() const {
    std::string ps = std::to_string(p_);
    std::string out;
    if (!is_zero()) {
        auto ds = digits();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (ds[i] == 0) continue;
            int e = v_ + static_cast<int>(i);
            std::string term;
            if (e == 0) {
                term = std::to_string(ds[i]);
            } else {
                std::string power = e == 1 ? ps : ps + "^" + std::to_string(e);
                term = ds[i] == 1 ? power : std::to_string(ds[i]) + "*" + power;
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
    }
    if (!out.empty()) out += " + ";
    out += "O(" + ps + "^" + std::to_string(n_) + ")";
    return out;
}

namespace {

// Split on top-level '+' and '-' keeping the sign with each term.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool sign = (c == '+' || c == '-') && depth == 0 && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/';
        if (sign) {
            if (!cur.empty()) terms.push_back(cur);
            cur.clear();
            if (c == '-') cur.push_back('-');
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

long parse_long(const std::string& s, std::string_view whole) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw InputError("malformed p-adic literal '" + std::string(whole) + "'");
    }
}

} // namespace

PadicNumber PadicNumber::parse(std::string_view text, std::uint32_t p, int default_prec) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty p-adic literal");
    std::string ps = std::to_string(p);
    Rational value = 0;
    std::optional<int> prec;
    for (std::string term : split_terms(s)) {
        bool neg = false;
        if (!term.empty() && term[0] == '-') {
            neg = true;
            term.erase(0, 1);
        }
        if (term.rfind("O(", 0) == 0) {
            if (term.back() != ')' || neg) throw InputError("malformed O-term in '" + std::string(text) + "'");
            std::string inner = term.substr(2, term.size() - 3);
            if (inner == ps) {
                prec = 1;
            } else if (inner.rfind(ps + "^", 0) == 0) {
                prec = static_cast<int>(parse_long(inner.substr(ps.size() + 1), text));
            } else {
                throw InputError("O-term prime does not match p = " + ps + " in '" + std::string(text) + "'");
            }
            continue;
        }
        // coefficient part and power-of-p part
        Rational coeff = 1;
        long e = 0;
        std::string powpart;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            powpart = term.substr(star + 1);
        } else if (term == ps || term.rfind(ps + "^", 0) == 0) {
            powpart = term;
        } else {
            coeff = parse_rational(term);
        }
        if (!powpart.empty()) {
            if (powpart == ps) {
                e = 1;
            } else if (powpart.rfind(ps + "^", 0) == 0) {
                std::string ex = powpart.substr(ps.size() + 1);
                if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
                e = parse_long(ex, text);
            } else {
                throw InputError("power of a prime other than " + ps + " in '" + std::string(text) + "'");
            }
        }
        Rational pe = e >= 0 ? Rational(ipow(p, static_cast<unsigned long>(e))) : Rational(1, ipow(p, static_cast<unsigned long>(-e)));
        pe.canonicalize();
        value += (neg ? -coeff : coeff) * pe;
    }
    if (!prec) {
        if (default_prec < 0) throw InputError("p-adic literal '" + std::string(text) + "' has no O(p^N) term");
        prec = default_prec;
    }
    return from_rational(p, value, *prec);
}

PadicNumber operator+(PadicNumber a, const PadicNumber& b) { return a += b; }
PadicNumber operator-(PadicNumber a, const PadicNumber& b) { return a -= b; }
PadicNumber operator*(PadicNumber a, const PadicNumber& b) { return a *= b; }
PadicNumber operator/(PadicNumber a, const PadicNumber& b) { return a /= b; }
PadicNumber operator+(PadicNumber a, const Rational& q) { return a += q; }
PadicNumber operator-(PadicNumber a, const Rational& q) { return a -= q; }
PadicNumber operator*(PadicNumber a, const Rational& q) { return a *= q; }
PadicNumber operator/(PadicNumber a, const Rational& q) { return a /= q; }
PadicNumber operator+(const Rational& q, PadicNumber a) { return a += q; }
PadicNumber operator-(const Rational& q, const PadicNumber& a) { return (-a) += q; }
PadicNumber operator*(const Rational& q, PadicNumber a) { return a *= q; }

PadicNumber operator/(const Rational& q, const PadicNumber& a) {
    if (a.is_zero()) throw PrecisionError("division by a p-adic number that is zero to its precision");
    if (sgn(q) == 0) return PadicNumber::zero(a.prime(), a.precision() - 2 * a.valuation());
    int vq = valuation(q, a.prime());
    return PadicNumber::from_rational(a.prime(), q, vq + a.relative_precision()) / a;
}

PadicNumber plog(const PadicNumber& x, const PadicNumber& branch) {
    if (x.is_zero()) throw DomainError("logarithm of p-adic zero");
    const std::uint32_t p = x.prime();
    const int rel = x.relative_precision();
    PadicNumber u = PadicNumber::from_integer(p, x.unit(), rel);
    PadicNumber z = u.pow(static_cast<long>(p) - 1) - Rational(1);
    PadicNumber sum = PadicNumber::zero(p, rel);
    if (!z.is_zero()) {
        const int vz = z.valuation();
        PadicNumber zk = z;
        for (long k = 1;; ++k) {
            // Every later term has valuation at least k*vz - log_p(k).
            long floor_log = 0;
            for (long t = k; t >= static_cast<long>(p); t /= p) ++floor_log;
            if (k * vz - floor_log >= rel + 1 && k > 1) break;
            PadicNumber term = zk / Rational(k);
            if (k % 2 == 0) term = -term;
            sum += term;
            zk *= z;
        }
    }
    sum /= Rational(static_cast<long>(p) - 1);
    if (x.valuation() != 0) sum += branch * Rational(x.valuation());
    return sum;
}

PadicNumber plog(std::uint32_t p, const Rational& q, int prec, const PadicNumber& branch) {
    if (sgn(q) == 0) throw DomainError("logarithm of zero");
    int v = valuation(q, p);
    return plog(PadicNumber::from_rational(p, q, v + prec), branch).with_precision(prec);
}

PadicNumber teichmuller(std::uint32_t p, const Integer& a, int prec) {
    Integer m = ppow(p, prec);
    Integer x = mod_pos(a, m);
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return PadicNumber::zero(p, prec);
    for (int i = 0; i < prec; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    return PadicNumber::from_integer(p, x, prec);
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
    auto mulm = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto powm = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1 % p;
        b %= p;
        while (e) {
            if (e & 1) r = mulm(r, b);
            b = mulm(b, b);
            e >>= 1;
        }
        return r;
    };
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powm(a, (p - 1) / 2) != 1) return std::nullopt;
    // Tonelli-Shanks
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (powm(z, (p - 1) / 2) != p - 1) ++z;
    std::uint64_t m = s, c = powm(z, q), t = powm(a, q), r = powm(a, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulm(tt, tt);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulm(b, b);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    return r;
}

PadicNumber sqrt(const PadicNumber& a, const std::optional<Integer>& hint) {
    const std::uint32_t p = a.prime();
    if (p == 2) throw DomainError("p-adic square roots are only implemented for odd p");
    if (a.is_zero()) return PadicNumber::zero(p, a.precision() / 2);
    if (a.valuation() % 2 != 0) throw DomainError("odd valuation: not a square");
    const int rel = a.relative_precision();
    const Integer& u = a.unit();
    std::uint64_t u0 = mpz_fdiv_ui(u.get_mpz_t(), p);
    auto r0 = sqrt_mod_prime(u0, p);
    if (!r0) throw DomainError("unit part is not a square modulo p");
    Integer x = *r0;
    if (hint) {
        Integer h = mod_pos(*hint, Integer(p));
        if (h != x) x = p - x;
        if (mod_pos(x, Integer(p)) != h) throw DomainError("square root hint is not a root modulo p");
    }
    // Newton iteration x <- x - (x^2 - u) / (2x) with doubling modulus.
    int k = 1;
    while (k < rel) {
        k = std::min(2 * k, rel);
        const Integer& m = ppow(p, k);
        Integer f = mod_pos(x * x - u, m);
        x = mod_pos(x - f * inverse_mod(mod_pos(2 * x, m), m), m);
    }
    int h = a.valuation() / 2;
    Rational scale = h >= 0 ? Rational(ipow(p, static_cast<unsigned long>(h))) : Rational(Integer(1), ipow(p, static_cast<unsigned long>(-h)));
    return PadicNumber::from_integer(p, x, rel) * scale;
}

} // namespace cgh
