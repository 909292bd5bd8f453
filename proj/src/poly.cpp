#include "cgh/poly.hpp"

#include "cgh/polyparse.hpp"

#include <cctype>

namespace cgh {

std::string format_rational_poly(const Poly<Rational>& f, const std::string& var) {
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        Rational a = c[i];
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0) out += to_string(a);
        else if (a == 1) out += mono;
        else out += to_string(a) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

namespace {

BivariatePoly bp_mul(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto& slot = out[{ka.first + kb.first, ka.second + kb.second}];
            slot += va * vb;
        }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

BivariatePoly bp_add(BivariatePoly a, const BivariatePoly& b, int sign) {
    for (const auto& [k, v] : b) a[k] += sign > 0 ? v : Rational(-v);
    for (auto it = a.begin(); it != a.end();) it = sgn(it->second) == 0 ? a.erase(it) : std::next(it);
    return a;
}

class Parser {
public:
    explicit Parser(const std::string& s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    BivariatePoly parse() {
        BivariatePoly r = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse polynomial '" + s_ + "': " + why);
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool starts_factor() const {
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    BivariatePoly expr() {
        BivariatePoly acc;
        int sign = 1;
        if (peek('+')) ++pos_;
        else if (peek('-')) {
            sign = -1;
            ++pos_;
        }
        acc = bp_add(acc, term(), sign);
        while (peek('+') || peek('-')) {
            sign = s_[pos_] == '+' ? 1 : -1;
            ++pos_;
            acc = bp_add(acc, term(), sign);
        }
        return acc;
    }

    BivariatePoly term() {
        BivariatePoly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = bp_mul(acc, factor());
            } else if (peek('/')) {
                ++pos_;
                BivariatePoly d = factor();
                if (d.size() != 1 || d.begin()->first != std::make_pair(0, 0)) fail("division by a non-constant");
                BivariatePoly inv{{{0, 0}, Rational(1 / d.begin()->second)}};
                acc = bp_mul(acc, inv);
            } else if (starts_factor()) {
                acc = bp_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    BivariatePoly factor() {
        if (peek('-')) {
            ++pos_;
            return bp_mul({{{0, 0}, Rational(-1)}}, factor());
        }
        BivariatePoly base;
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
        } else if (c == 'x' || c == 'y') {
            ++pos_;
            base = {{{c == 'x' ? 1 : 0, c == 'y' ? 1 : 0}, Rational(1)}};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer n(s_.substr(start, pos_ - start));
            base = {{{0, 0}, Rational(n)}};
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (peek('^')) {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            int e = std::stoi(s_.substr(start, pos_ - start));
            BivariatePoly r{{{0, 0}, Rational(1)}};
            for (int i = 0; i < e; ++i) r = bp_mul(r, base);
            return r;
        }
        return base;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

BivariatePoly parse_bivariate(const std::string& text) { return Parser(text).parse(); }

Poly<Rational> y_coefficient(const BivariatePoly& f, int k) {
    Poly<Rational> out;
    for (const auto& [key, v] : f)
        if (key.second == k) out.set_coeff(key.first, out.coeff(key.first) + v);
    return out;
}

int y_degree(const BivariatePoly& f) {
    int d = -1;
    for (const auto& [key, v] : f) d = std::max(d, key.second);
    return d;
}

Poly<Rational> parse_rational_poly(const std::string& text, char var) {
    BivariatePoly f = parse_bivariate(text);
    Poly<Rational> out;
    for (const auto& [key, v] : f) {
        int dx = var == 'x' ? key.first : key.second;
        int other = var == 'x' ? key.second : key.first;
        if (other != 0) throw InputError("polynomial '" + text + "' must be in " + std::string(1, var) + " only");
        out.set_coeff(dx, out.coeff(dx) + v);
    }
    return out;
}

} // namespace cgh
