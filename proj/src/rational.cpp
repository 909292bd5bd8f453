#include "cgh/rational.hpp"

#include "cgh/error.hpp"

#include <cctype>

namespace cgh {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string body(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(body, 10) == 0;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto slash = t.find('/');
    Integer num, den(1);
    if (slash == std::string::npos) {
        if (!parse_integer(t, num)) throw InputError("not a rational number: '" + std::string(text) + "'");
    } else {
        if (!parse_integer(std::string_view(t).substr(0, slash), num) ||
            !parse_integer(std::string_view(t).substr(slash + 1), den))
            throw InputError("not a rational number: '" + std::string(text) + "'");
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

int valuation(const Integer& n, std::uint32_t p) {
    if (n == 0) throw DomainError("valuation of zero");
    Integer m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int valuation(const Rational& q, std::uint32_t p) {
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer ipow(std::uint32_t base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace cgh
