#include "cgh/integration.hpp"

#include "cgh/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace cgh {

using nlohmann::json;

void IntegrationBackend::check_kind(const Differential& w) const {
    auto caps = capabilities();
    auto k = w.kind(curve());
    bool ok = (k == DifferentialKind::Holomorphic || k == DifferentialKind::Second) ? caps.supports_kind2
              : k == DifferentialKind::Third                                         ? caps.supports_kind3
                                                                                     : caps.supports_kind2 && caps.supports_kind3;
    if (!ok) throw CapabilityError(name() + " backend cannot integrate forms of kind '" + to_string(k) + "'");
}

std::vector<WeightedPath> divisor_paths(const Divisor0& D) {
    std::vector<std::pair<CurvePoint, long>> pos, neg;
    for (const auto& [P, n] : D.terms()) (n > 0 ? pos : neg).emplace_back(P, n > 0 ? n : -n);
    std::vector<WeightedPath> out;
    auto take = [&](std::size_t i, std::size_t j) {
        long m = std::min(pos[i].second, neg[j].second);
        if (m == 0) return;
        out.push_back({neg[j].first, pos[i].first, m});
        pos[i].second -= m;
        neg[j].second -= m;
    };
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j)
            if (neg[j].first == pos[i].first.involution()) take(i, j);
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) take(i, j);
    return out;
}

PadicNumber IntegrationBackend::integrate_divisor(const Differential& w, const Divisor0& D) const {
    PadicNumber total = PadicNumber::zero(prime(), precision());
    for (const auto& path : divisor_paths(D)) total += integrate(w, path.from, path.to) * Rational(path.weight);
    return total;
}

FormKey omega_form_key(int i) {
    Rational z(0);
    return {Poly<Rational>::monomial(Rational(1), i), Poly<Rational>(z), Poly<Rational>::constant(Rational(1))};
}

FormKey exact_form_key(const Differential& w) {
    Poly<Rational> om = w.exact_omega_poly();
    if (!w.has_polar()) return canonical_form_key(om, Poly<Rational>(Rational(0)), Poly<Rational>::constant(Rational(1)));
    FormKey k = polar_form_key(w);
    return canonical_form_key(k.u + om * k.w, k.v, k.w);
}

PadicNumber integrate_invariant(const Poly<Rational>& v, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int prec) {
    if (v.is_zero() || P == Q) return PadicNumber::zero(p, prec);
    if (P.is_infinite() || Q.is_infinite())
        throw DomainError("v(x) dx/2 has a pole at infinity; cannot integrate it to " + (P.is_infinite() ? P : Q).to_string());
    Poly<Rational> V = v.antiderivative() * Rational(1, 2);
    if (P.is_exact() && Q.is_exact()) return PadicNumber::from_rational(p, V(Q.x()) - V(P.x()), prec);
    auto at = [&](const CurvePoint& A) {
        PadicNumber x = A.x_padic(p, prec);
        PadicNumber acc = PadicNumber::zero(p, prec);
        for (int i = V.degree(); i >= 0; --i) acc = acc * x + V.coeff(i);
        return acc;
    };
    return at(Q) - at(P);
}

namespace {

// lambda with (u, v) = lambda (u', v') and w = w', if any.
std::optional<Rational> proportion(const FormKey& query, const FormKey& entry) {
    if (!(query.w == entry.w)) return std::nullopt;
    std::optional<Rational> lambda;
    auto match = [&](const Poly<Rational>& a, const Poly<Rational>& b) {
        int d = std::max(a.degree(), b.degree());
        for (int i = 0; i <= d; ++i) {
            Rational x = a.coeff(i), y = b.coeff(i);
            if (sgn(y) == 0) {
                if (sgn(x) != 0) return false;
                continue;
            }
            Rational r = x / y;
            if (!lambda) lambda = r;
            else if (*lambda != r) return false;
        }
        return true;
    };
    if (!match(query.u, entry.u) || !match(query.v, entry.v) || !lambda) return std::nullopt;
    return lambda;
}

CurvePoint point_from_json(const json& j) {
    if (j.is_string()) return parse_point(j.get<std::string>());
    if (j.is_object() && j.contains("x") && j.contains("y")) {
        auto coord = [](const json& c) { return c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()); };
        return CurvePoint::affine(coord(j["x"]), coord(j["y"]));
    }
    throw InputError("oracle table: a point must be a string like \"(x,y)\" or an object {x, y}");
}

std::string point_to_text(const CurvePoint& P) { return P.to_string(); }

} // namespace

OracleTable::OracleTable(HyperellipticCurve C, std::uint32_t p, int prec, LogBranch branch, std::vector<OracleEntry> entries)
    : curve_(std::move(C)), p_(p), prec_(prec), branch_(std::move(branch)), entries_(std::move(entries)) {
    if (branch_.prime() != p_) throw InputError("oracle table: branch prime differs from table prime");
    for (const auto& e : entries_) {
        if (e.value.prime() != p_) throw InputError("oracle table: value prime differs from table prime");
        validate_point(curve_, e.from);
        validate_point(curve_, e.to);
    }
}

OracleTable OracleTable::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw InputError(std::string("oracle table is not valid JSON: ") + ex.what());
    }
    for (const char* field : {"curve", "p", "N", "entries"})
        if (!doc.contains(field)) throw InputError(std::string("oracle table: missing field '") + field + "'");
    try {
        auto C = HyperellipticCurve::parse(doc["curve"].get<std::string>());
        auto p = doc["p"].get<std::uint32_t>();
        int N = doc["N"].get<int>();
        LogBranch branch = LogBranch::cyclotomic(p, N);
        if (doc.contains("branch")) {
            const auto& b = doc["branch"];
            branch = {b.is_string() ? PadicNumber::parse(b.get<std::string>(), p, N) : PadicNumber::from_integer(p, b.get<long>(), N)};
        }
        if (!doc["entries"].is_array()) throw InputError("oracle table: 'entries' must be a list");
        std::vector<OracleEntry> entries;
        for (const auto& e : doc["entries"]) {
            for (const char* field : {"form", "from", "to", "value"})
                if (!e.contains(field)) throw InputError(std::string("oracle entry: missing field '") + field + "'");
            std::string form = e["form"].get<std::string>();
            FormKey key = form.rfind("omega_", 0) == 0 ? omega_form_key(std::stoi(form.substr(6))) : parse_form_key(form);
            OracleEntry entry{form, key, point_from_json(e["from"]), point_from_json(e["to"]),
                              PadicNumber::parse(e["value"].get<std::string>(), p, N)};
            entries.push_back(std::move(entry));
        }
        return OracleTable(std::move(C), p, N, std::move(branch), std::move(entries));
    } catch (const json::exception& ex) {
        throw InputError(std::string("oracle table schema violation: ") + ex.what());
    }
}

OracleTable OracleTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open oracle table '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::optional<PadicNumber> OracleTable::lookup(const FormKey& key, const CurvePoint& P, const CurvePoint& Q) const {
    for (const auto& e : entries_) {
        bool forward = e.from == P && e.to == Q;
        bool backward = e.from == Q && e.to == P;
        if (!forward && !backward) continue;
        auto lambda = proportion(key, e.key);
        if (!lambda) continue;
        PadicNumber v = e.value * *lambda;
        return forward ? v : -v;
    }
    return std::nullopt;
}

std::string OracleTable::to_json_text() const {
    json doc;
    doc["curve"] = curve_.to_string();
    doc["p"] = p_;
    doc["N"] = prec_;
    doc["branch"] = branch_.to_string();
    doc["entries"] = json::array();
    for (const auto& e : entries_)
        doc["entries"].push_back({{"form", e.form}, {"from", point_to_text(e.from)}, {"to", point_to_text(e.to)}, {"value", e.value.to_string()}});
    return doc.dump(2);
}

OracleBackend::OracleBackend(OracleTable table, const LogBranch& branch) : table_(std::move(table)) {
    if (branch != table_.branch())
        throw DomainError("oracle table was recorded with branch L = " + table_.branch().to_string() + " but L = " + branch.to_string() +
                          " was requested; recorded integrals are not converted between branches");
}

PadicNumber OracleBackend::require(const FormKey& key, const CurvePoint& P, const CurvePoint& Q) const {
    if (auto v = table_.lookup(key, P, Q)) return *v;
    throw CapabilityError("oracle table has no entry for " + key.to_string() + " from " + P.to_string() + " to " + Q.to_string());
}

PadicNumber OracleBackend::integrate(const Differential& w, const CurvePoint& P, const CurvePoint& Q) const {
    const std::uint32_t p = prime();
    const int N = precision();
    if (P == Q) return PadicNumber::zero(p, N);
    if (!P.is_exact() || !Q.is_exact()) throw CapabilityError("oracle lookups need rational endpoints");
    validate_point(curve(), P);
    validate_point(curve(), Q);
    PadicNumber total = integrate_invariant(w.invariant_part(), P, Q, p, N);
    Differential rest = w.polar_part() + w.omega_part();
    if (rest.is_zero_form()) return total;
    if (rest.is_exact()) {
        if (auto v = table_.lookup(exact_form_key(rest), P, Q)) return total + *v;
    }
    if (rest.has_polar()) {
        Differential polar = rest.polar_part();
        if (!polar.is_exact()) throw CapabilityError("oracle lookups need polar terms at rational points");
        total += require(polar_form_key(polar), P, Q);
    }
    const auto& cs = rest.omega_coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        total += cs[i].to_padic(p, N) * require(omega_form_key(static_cast<int>(i)), P, Q);
    }
    return total;
}

} // namespace cgh
