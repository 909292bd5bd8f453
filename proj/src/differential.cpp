#include "cgh/differential.hpp"

#include "cgh/error.hpp"
#include "cgh/expansion.hpp"
#include "cgh/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cgh {

std::string to_string(DifferentialKind k) {
    switch (k) {
    case DifferentialKind::Holomorphic: return "holomorphic";
    case DifferentialKind::Second: return "second";
    case DifferentialKind::Third: return "third";
    case DifferentialKind::Mixed: return "mixed";
    }
    return "mixed";
}

Differential Differential::omega(int i, const Scalar& c) {
    Differential w;
    w.omega_.assign(static_cast<std::size_t>(i) + 1, Scalar(0L));
    w.omega_[static_cast<std::size_t>(i)] = c;
    w.normalize();
    return w;
}

Differential Differential::polar(const CurvePoint& P, const Rational& weight) {
    if (!P.is_affine()) throw DomainError("polar building blocks need an affine point");
    Differential w;
    w.polar_.push_back({P, weight});
    w.normalize();
    return w;
}

Differential Differential::invariant(const Poly<Rational>& v) {
    Differential w;
    w.inv_ = v;
    return w;
}

Differential Differential::from_poly(const Poly<Rational>& u) {
    Differential w;
    for (const auto& c : u.coeffs()) w.omega_.emplace_back(c);
    w.normalize();
    return w;
}

Scalar Differential::omega_coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(omega_.size())) return Scalar(0L);
    return omega_[static_cast<std::size_t>(i)];
}

int Differential::omega_degree() const { return static_cast<int>(omega_.size()) - 1; }

bool Differential::is_exact() const {
    for (const auto& c : omega_)
        if (!c.is_exact()) return false;
    for (const auto& t : polar_)
        if (!t.point.is_exact()) return false;
    return true;
}

Poly<Rational> Differential::exact_omega_poly() const {
    std::vector<Rational> c;
    for (const auto& s : omega_) c.push_back(s.rational());
    return Poly<Rational>(Rational(0), c);
}

Differential Differential::polar_part() const {
    Differential w;
    w.polar_ = polar_;
    return w;
}

Differential Differential::omega_part() const {
    Differential w;
    w.omega_ = omega_;
    return w;
}

Differential Differential::invariant_part_form() const { return invariant(inv_); }

void Differential::normalize() {
    std::vector<PolarTerm> merged;
    for (const auto& t : polar_) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const PolarTerm& m) { return m.point == t.point; });
        if (it == merged.end()) merged.push_back(t);
        else it->weight += t.weight;
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const PolarTerm& m) { return sgn(m.weight) == 0; }), merged.end());
    std::stable_sort(merged.begin(), merged.end(), [](const PolarTerm& a, const PolarTerm& b) { return a.point < b.point; });
    polar_ = std::move(merged);
    while (!omega_.empty() && omega_.back().is_exact() && omega_.back().is_zero()) omega_.pop_back();
}

Differential Differential::operator-() const {
    Differential w = *this;
    for (auto& t : w.polar_) t.weight = -t.weight;
    for (auto& c : w.omega_) c = -c;
    w.inv_ = -w.inv_;
    return w;
}

Differential& Differential::operator+=(const Differential& o) {
    polar_.insert(polar_.end(), o.polar_.begin(), o.polar_.end());
    if (o.omega_.size() > omega_.size()) omega_.resize(o.omega_.size(), Scalar(0L));
    for (std::size_t i = 0; i < o.omega_.size(); ++i) omega_[i] += o.omega_[i];
    inv_ += o.inv_;
    normalize();
    return *this;
}

Differential& Differential::operator*=(const Scalar& s) {
    if (!polar_.empty() || !inv_.is_zero()) {
        if (!s.is_exact()) throw DomainError("polar and invariant parts admit only exact scalars");
        for (auto& t : polar_) t.weight *= s.rational();
        inv_ *= s.rational();
    }
    for (auto& c : omega_) c *= s;
    normalize();
    return *this;
}

namespace {

int pole_estimate(const HyperellipticCurve& C, const Differential& w) {
    return 2 * (std::max(w.omega_degree(), w.invariant_part().degree() + C.genus() + 1) + C.degree()) + 8;
}

template <class R>
R scalar_to(const Scalar& s, const R& proto);

template <>
Rational scalar_to(const Scalar& s, const Rational&) {
    return s.rational();
}

template <>
PadicNumber scalar_to(const Scalar& s, const PadicNumber& proto) {
    return s.to_padic(proto.prime(), proto.precision());
}

template <class R>
LaurentSeries<R> eval_poly(const std::vector<R>& c, const LaurentSeries<R>& s, const R& proto) {
    LaurentSeries<R> acc(proto);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
    return acc;
}

template <class R>
LaurentSeries<R> expand_at(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P, int T, const R& proto) {
    using S = LaurentSeries<R>;
    auto e = local_expansion(C, P, T, proto);
    const R two = from_rational_like(proto, Rational(2));
    S dx = e.x.derivative();
    S base = dx * (e.y * two).inverse();
    S out(proto);
    if (!w.omega_coeffs().empty()) {
        std::vector<R> c;
        for (const auto& s : w.omega_coeffs()) c.push_back(scalar_to(s, proto));
        out += eval_poly(c, e.x, proto) * base;
    }
    if (!w.invariant_part().is_zero()) {
        std::vector<R> c;
        for (const auto& q : w.invariant_part().coeffs()) c.push_back(from_rational_like(proto, q));
        out += eval_poly(c, e.x, proto) * dx * from_rational_like(proto, Rational(1, 2));
    }
    for (const auto& t : w.polar_terms()) {
        R xk = point_x(t.point, proto), yk = point_y(t.point, proto);
        S num = e.y + yk;
        S den = e.x - xk;
        out += num * den.inverse() * base * from_rational_like(proto, t.weight);
    }
    return out;
}

} // namespace

template <class R>
LaurentSeries<R> expand_form(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P, int need, const R& proto) {
    int T = need + pole_estimate(C, w);
    for (int attempt = 0; attempt < 8; ++attempt) {
        LaurentSeries<R> s = expand_at(C, w, P, T, proto);
        if (s.precision() > need) return s;
        T += (need - s.precision()) + 16;
    }
    throw PrecisionError("could not expand the differential far enough at " + P.to_string());
}

template LaurentSeries<Rational> expand_form(const HyperellipticCurve&, const Differential&, const CurvePoint&, int, const Rational&);
template LaurentSeries<PadicNumber> expand_form(const HyperellipticCurve&, const Differential&, const CurvePoint&, int, const PadicNumber&);

Rational residue(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P) {
    if (!w.is_exact() || !P.is_exact()) throw DomainError("exact residues need exact data");
    return expand_form(C, w, P, -1, Rational(0)).residue();
}

Divisor0 residue_divisor(const HyperellipticCurve& C, const Differential& w) {
    std::vector<CurvePoint> cands = points_at_infinity(C);
    for (const auto& t : w.polar_terms()) {
        cands.push_back(t.point);
        cands.push_back(t.point.involution());
    }
    std::vector<std::pair<CurvePoint, long>> terms;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) seen = seen || cands[j] == cands[i];
        if (seen) continue;
        Rational r = residue(C, w, cands[i]);
        if (r.get_den() != 1) throw DomainError("residue " + r.get_str() + " at " + cands[i].to_string() + " is not an integer");
        if (sgn(r) != 0) terms.emplace_back(cands[i], r.get_num().get_si());
    }
    return Divisor0(terms);
}

DifferentialKind Differential::kind(const HyperellipticCurve& C) const {
    const int g = C.genus();
    bool exact_omega = std::all_of(omega_.begin(), omega_.end(), [](const Scalar& s) { return s.is_exact(); });
    // residues at infinity from the omega part (even degree only)
    bool inf_residues = false;
    if (!C.odd_degree() && omega_degree() >= g) {
        if (!exact_omega) return DifferentialKind::Mixed;
        Differential om = omega_part();
        for (const auto& A : points_at_infinity(C))
            if (sgn(residue(C, om, A)) != 0) inf_residues = true;
    }
    if (polar_.empty() && !inf_residues) {
        if (inv_.is_zero() && omega_degree() <= g - 1) return DifferentialKind::Holomorphic;
        return DifferentialKind::Second;
    }
    int bound = C.odd_degree() ? g - 1 : g;
    if (!inv_.is_zero() || omega_degree() > bound) return DifferentialKind::Mixed;
    // p-adic x^i dx/2y terms below the bound carry no residues
    Differential ex = polar_part();
    if (exact_omega) ex += omega_part();
    if (!ex.is_exact()) {
        for (const auto& t : polar_)
            if (t.weight.get_den() != 1) return DifferentialKind::Mixed;
        return DifferentialKind::Third;
    }
    try {
        residue_divisor(C, ex);
    } catch (const DomainError&) {
        return DifferentialKind::Mixed;
    }
    return DifferentialKind::Third;
}

FormKey canonical_form_key(Poly<Rational> u, Poly<Rational> v, Poly<Rational> w) {
    if (w.is_zero()) throw DomainError("zero denominator in a differential");
    Poly<Rational> g = w;
    if (!u.is_zero()) g = poly_gcd(g, u);
    if (!v.is_zero()) g = poly_gcd(g, v);
    if (g.degree() > 0) {
        u = u / g;
        v = v / g;
        w = w / g;
    }
    Rational lead = w.leading();
    Rational inv = 1 / lead;
    return {u * inv, v * inv, w * inv};
}

namespace {

std::string numerator_string(const Poly<Rational>& u, const Poly<Rational>& v) {
    std::string us = u.to_string(), vs = v.to_string();
    if (v.is_zero()) return us;
    std::string yv = "y*(" + vs + ")";
    if (u.is_zero()) return yv;
    return us + " + " + yv;
}

} // namespace

std::string FormKey::to_string() const {
    std::string num = numerator_string(u, v);
    if (w.degree() == 0) return "(" + num + ") * dx/(2y)";
    return "(" + num + ")/(" + w.to_string() + ") * dx/(2y)";
}

FormKey polar_form_key(const Differential& form) {
    std::vector<Rational> xs;
    std::map<std::string, std::pair<Rational, Rational>> by_x; // x -> (sum w*y, sum w)
    for (const auto& t : form.polar_terms()) {
        const Rational& x = t.point.x();
        auto& slot = by_x[x.get_str()];
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        slot.first += t.weight * t.point.y();
        slot.second += t.weight;
    }
    Rational z(0);
    Poly<Rational> one = Poly<Rational>::constant(Rational(1));
    Poly<Rational> u(z), v(z), w = one;
    for (const auto& x : xs) w *= Poly<Rational>(z, {Rational(-x), Rational(1)});
    for (const auto& x : xs) {
        Poly<Rational> others = one;
        for (const auto& x2 : xs)
            if (x2 != x) others *= Poly<Rational>(z, {Rational(-x2), Rational(1)});
        const auto& [a, b] = by_x[x.get_str()];
        u += others * a;
        v += others * b;
    }
    return canonical_form_key(u, v, w);
}

FormKey parse_form_key(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const std::string suffix = "*dx/(2y)";
    if (s.size() <= suffix.size() || s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0)
        throw InputError("differential '" + text + "' must end with '* dx/(2y)'");
    s = s.substr(0, s.size() - suffix.size());
    auto balanced_end = [&](std::size_t start) {
        int depth = 0;
        for (std::size_t k = start; k < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')' && --depth == 0) return k;
        }
        throw InputError("unbalanced parentheses in '" + text + "'");
    };
    if (s.empty() || s[0] != '(') throw InputError("differential numerator must be parenthesised in '" + text + "'");
    std::size_t e = balanced_end(0);
    std::string num = s.substr(1, e - 1);
    Poly<Rational> w = Poly<Rational>::constant(Rational(1));
    if (e + 1 < s.size()) {
        if (s[e + 1] != '/') throw InputError("expected '/' in '" + text + "'");
        std::string den = s.substr(e + 2);
        if (!den.empty() && den.front() == '(' && balanced_end(e + 2) == s.size() - 1) den = den.substr(1, den.size() - 2);
        w = parse_rational_poly(den);
    }
    BivariatePoly nb = parse_bivariate(num);
    if (y_degree(nb) > 1) throw InputError("numerator of '" + text + "' must be linear in y");
    return canonical_form_key(y_coefficient(nb, 0), y_coefficient(nb, 1), w);
}

std::string Differential::to_string(const HyperellipticCurve& C) const {
    (void)C;
    bool exact_points = std::all_of(polar_.begin(), polar_.end(), [](const PolarTerm& t) { return t.point.is_exact(); });
    std::string padic_tail;
    Poly<Rational> uo;
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        if (omega_[i].is_exact()) uo.set_coeff(static_cast<int>(i), omega_[i].rational());
        else if (!omega_[i].is_zero()) padic_tail += " + (" + omega_[i].to_string() + ")*omega_" + std::to_string(i);
    }
    std::string head;
    if (exact_points) {
        FormKey k = polar_.empty() ? FormKey{Poly<Rational>(), Poly<Rational>(), Poly<Rational>::constant(Rational(1))} : polar_form_key(*this);
        k = canonical_form_key(k.u + uo * k.w, k.v + inv_ * k.w, k.w);
        head = k.to_string();
        if (k.u.is_zero() && k.v.is_zero()) head = padic_tail.empty() ? "0" : "";
    } else {
        head = "p-adic polar part";
    }
    if (head.empty()) return padic_tail.substr(3);
    return head + padic_tail;
}

Differential third_kind_from_divisor(const HyperellipticCurve& C, const Divisor0& D) {
    Differential w;
    long finite = 0;
    for (const auto& [P, n] : D.terms()) {
        if (!P.is_affine()) continue;
        w += Differential::polar(P, Rational(n));
        finite += n;
    }
    if (!C.odd_degree()) {
        const Rational a(D.multiplicity(CurvePoint::infinity_plus()));
        w += Differential::omega(C.genus(), Scalar(Rational(-finite - 2 * a)));
    }
    return w;
}

} // namespace cgh
