#include "cgh/curve.hpp"

#include "cgh/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cgh {

HyperellipticCurve::HyperellipticCurve(Poly<Rational> b) : b_(std::move(b)) {
    if (b_.degree() < 3) throw InputError("curve polynomial must have degree at least 3");
    if (b_.leading() != 1) throw InputError("curve polynomial must be monic");
    for (const auto& c : b_.coeffs())
        if (c.get_den() != 1) throw InputError("curve polynomial must have integer coefficients");
    if (poly_gcd(b_, b_.derivative()).degree() != 0) throw InputError("curve polynomial is not squarefree");
}

HyperellipticCurve HyperellipticCurve::parse(const std::string& text) {
    std::string s = text;
    auto eq = s.find('=');
    if (eq != std::string::npos) {
        std::string lhs;
        for (char c : s.substr(0, eq))
            if (!std::isspace(static_cast<unsigned char>(c))) lhs.push_back(c);
        if (lhs != "y^2") throw InputError("curve equation must have the form y^2 = b(x)");
        s = s.substr(eq + 1);
    }
    return HyperellipticCurve(parse_rational_poly(s));
}

Poly<Rational> HyperellipticCurve::reversed() const {
    std::vector<Rational> c(b_.coeffs().rbegin(), b_.coeffs().rend());
    return Poly<Rational>(Rational(0), c);
}

bool HyperellipticCurve::good_reduction(std::uint32_t p) const {
    if (p == 2) return false;
    // Work over F_p with rationals reduced to residues.
    auto red = [p](const Poly<Rational>& f) {
        std::vector<Rational> c;
        for (const auto& a : f.coeffs()) {
            Integer r;
            Integer m(static_cast<unsigned long>(p));
            Integer num = a.get_num(), den = a.get_den();
            Integer inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
            mpz_fdiv_r(r.get_mpz_t(), Integer(num * inv).get_mpz_t(), m.get_mpz_t());
            c.emplace_back(r);
        }
        return c;
    };
    // Euclid over F_p on residues.
    auto mod_poly = [p](std::vector<long> a) {
        while (!a.empty() && a.back() % static_cast<long>(p) == 0) a.pop_back();
        return a;
    };
    auto to_long = [&](const Poly<Rational>& f) {
        std::vector<long> out;
        for (const auto& c : red(f)) out.push_back(c.get_num().get_si());
        return mod_poly(out);
    };
    const long P = p;
    auto inv = [P](long a) {
        long r = 1, b = ((a % P) + P) % P, e = P - 2;
        while (e) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
            e >>= 1;
        }
        return r;
    };
    std::vector<long> a = to_long(b_), d = to_long(b_.derivative());
    if (static_cast<int>(a.size()) - 1 != degree()) return false;
    while (!d.empty()) {
        // a <- a mod d
        long li = inv(d.back());
        while (a.size() >= d.size()) {
            long f = a.back() * li % P;
            std::size_t shift = a.size() - d.size();
            for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = ((a[shift + i] - f * d[i]) % P + P) % P;
            a = mod_poly(a);
            if (a.empty()) break;
        }
        std::swap(a, d);
    }
    return a.size() == 1;
}

CurvePoint CurvePoint::affine(const Rational& x, const Rational& y) {
    CurvePoint P(PointKind::Affine);
    P.xq_ = x;
    P.yq_ = y;
    return P;
}

CurvePoint CurvePoint::affine(const PadicNumber& x, const PadicNumber& y) {
    if (x.prime() != y.prime()) throw InputError("point coordinates over different primes");
    CurvePoint P(PointKind::Affine);
    P.padic_ = std::make_pair(x, y);
    return P;
}

const Rational& CurvePoint::x() const {
    if (!is_affine() || padic_) throw DomainError("point " + to_string() + " has no rational x-coordinate");
    return xq_;
}

const Rational& CurvePoint::y() const {
    if (!is_affine() || padic_) throw DomainError("point " + to_string() + " has no rational y-coordinate");
    return yq_;
}

PadicNumber CurvePoint::x_padic(std::uint32_t p, int prec) const {
    if (!is_affine()) throw DomainError("point at infinity has no affine coordinates");
    if (padic_) return padic_->first;
    return PadicNumber::from_rational(p, xq_, prec);
}

PadicNumber CurvePoint::y_padic(std::uint32_t p, int prec) const {
    if (!is_affine()) throw DomainError("point at infinity has no affine coordinates");
    if (padic_) return padic_->second;
    return PadicNumber::from_rational(p, yq_, prec);
}

bool CurvePoint::y_is_zero() const {
    if (!is_affine()) return false;
    return padic_ ? padic_->second.is_zero() : sgn(yq_) == 0;
}

CurvePoint CurvePoint::involution() const {
    switch (kind_) {
    case PointKind::Infinity: return *this;
    case PointKind::InfinityPlus: return infinity_minus();
    case PointKind::InfinityMinus: return infinity_plus();
    case PointKind::Affine: break;
    }
    if (padic_) return affine(padic_->first, -padic_->second);
    return affine(xq_, Rational(-yq_));
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (kind_ != o.kind_) return false;
    if (!is_affine()) return true;
    if (padic_.has_value() != o.padic_.has_value()) return false;
    if (padic_) return padic_->first == o.padic_->first && padic_->second == o.padic_->second;
    return xq_ == o.xq_ && yq_ == o.yq_;
}

std::string CurvePoint::to_string() const {
    switch (kind_) {
    case PointKind::Infinity: return "inf";
    case PointKind::InfinityPlus: return "inf+";
    case PointKind::InfinityMinus: return "inf-";
    case PointKind::Affine: break;
    }
    if (padic_) return "(" + padic_->first.to_string() + ", " + padic_->second.to_string() + ")";
    return "(" + xq_.get_str() + "," + yq_.get_str() + ")";
}

std::string CurvePoint::sort_key() const {
    // Affine rational points sort by coordinates; kinds keep their order.
    std::string k(1, static_cast<char>('0' + static_cast<int>(kind_)));
    if (!is_affine()) return k;
    return k + to_string();
}

void validate_point(const HyperellipticCurve& C, const CurvePoint& P) {
    switch (P.kind()) {
    case PointKind::Infinity:
        if (!C.odd_degree()) throw InputError("even-degree model has two points at infinity: use inf+ or inf-");
        return;
    case PointKind::InfinityPlus:
    case PointKind::InfinityMinus:
        if (C.odd_degree()) throw InputError("odd-degree model has a single point at infinity: use inf");
        return;
    case PointKind::Affine: break;
    }
    if (P.is_exact()) {
        if (P.y() * P.y() != C.b()(P.x())) throw InputError("point " + P.to_string() + " is not on the curve y^2 = " + C.to_string());
        return;
    }
    // p-adic coordinates carry their own prime and precision
    PadicNumber x = P.x_padic(2, 0), y = P.y_padic(2, 0);
    PadicNumber acc = zero_like(x);
    for (std::size_t i = C.b().coeffs().size(); i-- > 0;) acc = acc * x + C.b().coeffs()[i];
    if (!(y * y - acc).is_zero()) throw InputError("p-adic point " + P.to_string() + " is not on the curve to its precision");
}

bool is_weierstrass(const HyperellipticCurve& C, const CurvePoint& P) {
    if (P.kind() == PointKind::Infinity) return C.odd_degree();
    if (!P.is_affine()) return false;
    return P.y_is_zero();
}

std::vector<CurvePoint> points_at_infinity(const HyperellipticCurve& C) {
    if (C.odd_degree()) return {CurvePoint::infinity()};
    return {CurvePoint::infinity_plus(), CurvePoint::infinity_minus()};
}

Divisor0::Divisor0(std::vector<std::pair<CurvePoint, long>> terms) : terms_(std::move(terms)) {
    normalize();
    long deg = 0;
    for (const auto& t : terms_) deg += t.second;
    if (deg != 0) throw DomainError("divisor " + to_string() + " has degree " + std::to_string(deg) + ", expected 0");
}

Divisor0::Divisor0(std::vector<std::pair<CurvePoint, long>> terms, Unchecked) : terms_(std::move(terms)) { normalize(); }

Divisor0 Divisor0::difference(const CurvePoint& P, const CurvePoint& Q) { return Divisor0({{P, 1}, {Q, -1}}); }

void Divisor0::normalize() {
    std::vector<std::pair<CurvePoint, long>> merged;
    for (const auto& t : terms_) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first == t.first; });
        if (it == merged.end()) merged.push_back(t);
        else it->second += t.second;
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& m) { return m.second == 0; }), merged.end());
    std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    terms_ = std::move(merged);
}

long Divisor0::multiplicity(const CurvePoint& P) const {
    for (const auto& t : terms_)
        if (t.first == P) return t.second;
    return 0;
}

std::vector<CurvePoint> Divisor0::support() const {
    std::vector<CurvePoint> out;
    for (const auto& t : terms_) out.push_back(t.first);
    return out;
}

bool Divisor0::is_affine() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_affine(); });
}

bool Divisor0::disjoint_from(const Divisor0& o) const {
    for (const auto& t : terms_)
        if (o.multiplicity(t.first) != 0) return false;
    return true;
}

Divisor0 Divisor0::involution() const {
    std::vector<std::pair<CurvePoint, long>> out;
    for (const auto& t : terms_) out.emplace_back(t.first.involution(), t.second);
    return Divisor0(out, Unchecked{});
}

Divisor0 Divisor0::operator-() const {
    std::vector<std::pair<CurvePoint, long>> out;
    for (const auto& t : terms_) out.emplace_back(t.first, -t.second);
    return Divisor0(out, Unchecked{});
}

Divisor0 operator+(const Divisor0& a, const Divisor0& b) {
    auto t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return Divisor0(t, Divisor0::Unchecked{});
}

Divisor0 operator*(long n, const Divisor0& a) {
    std::vector<std::pair<CurvePoint, long>> out;
    for (const auto& t : a.terms_) out.emplace_back(t.first, n * t.second);
    return Divisor0(out, Divisor0::Unchecked{});
}

bool Divisor0::operator==(const Divisor0& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& t : terms_)
        if (o.multiplicity(t.first) != t.second) return false;
    return true;
}

std::string Divisor0::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [P, n] : terms_) {
        long a = n < 0 ? -n : n;
        if (out.empty()) out += n < 0 ? "-" : "";
        else out += n < 0 ? " - " : " + ";
        if (a != 1) out += std::to_string(a) + "*";
        out += P.is_affine() ? P.to_string() : "(" + P.to_string() + ")";
    }
    return out;
}

CurvePoint parse_point(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')' && s.find(',') == std::string::npos) s = s.substr(1, s.size() - 2);
    if (s == "inf" || s == "oo" || s == "infinity") return CurvePoint::infinity();
    if (s == "inf+" || s == "oo+") return CurvePoint::infinity_plus();
    if (s == "inf-" || s == "oo-") return CurvePoint::infinity_minus();
    // strip redundant outer parentheses around "(x,y)"
    while (s.size() >= 4 && s.substr(0, 2) == "((" && s.substr(s.size() - 2) == "))") s = s.substr(1, s.size() - 2);
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw InputError("malformed point '" + text + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("malformed point '" + text + "'");
    return CurvePoint::affine(parse_rational(s.substr(1, comma - 1)), parse_rational(s.substr(comma + 1, s.size() - comma - 2)));
}

namespace {

Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("divisor JSON coordinates must be integers or strings");
}

} // namespace

Divisor0 parse_divisor(const HyperellipticCurve& C, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty divisor");
    std::vector<std::pair<CurvePoint, long>> terms;
    if (s.front() == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s);
        } catch (const std::exception& e) {
            throw InputError(std::string("divisor JSON: ") + e.what());
        }
        for (const auto& t : j) {
            long mult = t.value("mult", 1L);
            CurvePoint P = t.contains("point") ? parse_point(t["point"].get<std::string>())
                                               : CurvePoint::affine(json_rational(t.at("x")), json_rational(t.at("y")));
            terms.emplace_back(P, mult);
        }
    } else {
        std::size_t i = 0;
        auto fail = [&](const std::string& why) { throw InputError("cannot parse divisor '" + text + "': " + why); };
        while (i < s.size()) {
            long sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!terms.empty()) {
                fail("expected '+' or '-'");
            }
            long mult = 1;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j > i && j < s.size() && s[j] == '*') {
                mult = std::stol(s.substr(i, j - i));
                i = j + 1;
            }
            // point atom: balanced parentheses or inf keyword
            std::string atom;
            if (s.compare(i, 3, "inf") == 0) {
                std::size_t k = i + 3;
                if (!C.odd_degree()) {
                    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                    else fail("even-degree models need inf+ or inf-");
                }
                atom = s.substr(i, k - i);
                i = k;
            } else if (s[i] == '(') {
                int depth = 0;
                std::size_t k = i;
                for (; k < s.size(); ++k) {
                    if (s[k] == '(') ++depth;
                    if (s[k] == ')' && --depth == 0) break;
                }
                if (k == s.size()) fail("unbalanced parentheses");
                atom = s.substr(i, k - i + 1);
                i = k + 1;
            } else {
                fail("expected a point");
            }
            CurvePoint P = parse_point(atom);
            validate_point(C, P);
            terms.emplace_back(P, sign * mult);
            if (s.compare(i, 2, "-w") == 0) {
                terms.emplace_back(P.involution(), -sign * mult);
                i += 2;
            }
        }
    }
    for (const auto& t : terms) validate_point(C, t.first);
    return Divisor0(terms);
}

} // namespace cgh
