#include "cgh/heights.hpp"

#include "cgh/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace cgh {

using nlohmann::json;

std::string to_string(SubspaceChoice s) {
    switch (s) {
    case SubspaceChoice::Canonical: return "canonical";
    case SubspaceChoice::UnitRoot: return "unit-root";
    case SubspaceChoice::Trivial: return "trivial";
    case SubspaceChoice::Explicit: return "explicit";
    }
    return "?";
}

UnramifiedContribution UnramifiedContribution::parse(const std::string& text) {
    UnramifiedContribution out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw InputError("away contribution '" + item + "' must look like q:a_q");
        Rational q = parse_rational(item.substr(0, colon));
        if (q.get_den() != 1 || q < 2 || mpz_probab_prime_p(q.get_num().get_mpz_t(), 30) == 0)
            throw InputError("away contribution prime '" + item.substr(0, colon) + "' is not a prime");
        out.terms.emplace_back(q.get_num(), parse_rational(item.substr(colon + 1)));
        pos = end + 1;
    }
    return out;
}

PadicNumber UnramifiedContribution::value(std::uint32_t p, int prec, const LogBranch& branch) const {
    PadicNumber total = PadicNumber::zero(p, prec);
    for (const auto& [q, a] : terms) {
        if (q == p) throw DomainError("away contributions must be at primes other than p");
        total += plog(p, Rational(q), prec, branch.L) * a;
    }
    return total;
}

std::string UnramifiedContribution::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [q, a] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + cgh::to_string(a) + ")*log(" + q.get_str() + ")";
    }
    return out;
}

WSubspace trivial_subspace(int genus, std::uint32_t p, int prec) {
    const std::size_t g = static_cast<std::size_t>(genus);
    PadicNumber z = PadicNumber::zero(p, prec);
    Matrix<PadicNumber> rows(g, 2 * g, z);
    for (std::size_t j = 0; j < g; ++j) rows(j, g + j) = PadicNumber::from_integer(p, 1, prec);
    return WSubspace(rows, genus);
}

WSubspace subspace_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
        auto p = doc.at("p").get<std::uint32_t>();
        int N = doc.at("N").get<int>();
        const auto& rows = doc.at("rows");
        if (!rows.is_array() || rows.empty()) throw InputError("subspace file: 'rows' must be a nonempty list");
        std::size_t g = rows.size();
        Matrix<PadicNumber> M(g, 2 * g, PadicNumber::zero(p, N));
        for (std::size_t i = 0; i < g; ++i) {
            if (rows[i].size() != 2 * g) throw InputError("subspace file: each row needs 2g entries");
            for (std::size_t j = 0; j < 2 * g; ++j) {
                const auto& e = rows[i][j];
                M(i, j) = e.is_string() ? PadicNumber::parse(e.get<std::string>(), p, N) : PadicNumber::from_integer(p, e.get<long>(), N);
            }
        }
        return WSubspace(M, static_cast<int>(g));
    } catch (const json::exception& ex) {
        throw InputError(std::string("subspace file schema violation: ") + ex.what());
    }
}

WSubspace load_subspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open subspace file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return subspace_from_json_text(ss.str());
}

std::string subspace_to_json_text(const WSubspace& W) {
    json doc;
    doc["p"] = W.prime();
    doc["N"] = W.precision();
    doc["rows"] = json::array();
    for (std::size_t i = 0; i < W.input_rows().rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < W.input_rows().cols(); ++j) row.push_back(W.input_rows()(i, j).to_string());
        doc["rows"].push_back(row);
    }
    return doc.dump(2);
}

LocalHeightReport local_height_p(const HeightConfig& cfg, const HyperellipticCurve& C, const Divisor0& D1, const Divisor0& D2) {
    if (!cfg.backend) throw CapabilityError("local heights need an integration backend");
    const auto& B = *cfg.backend;
    if (B.prime() != cfg.p || cfg.subspace.prime() != cfg.p) throw InputError("backend, subspace and height prime must agree");
    if (!(B.curve() == C)) throw InputError("backend was built for a different curve");
    if (B.branch() != cfg.branch)
        throw DomainError("backend branch L = " + B.branch().to_string() + " differs from the height branch L = " + cfg.branch.to_string());
    if (!D1.disjoint_from(D2)) throw DomainError("disjoint support required: D1 and D2 share a point");
    if (!D1.is_affine()) throw DomainError("D1 must be supported on affine points; choose an affine representative");
    LocalHeightReport out{PadicNumber::zero(cfg.p, cfg.prec), omega_D(C, D1, cfg.subspace, &B, cfg.prec)};
    out.value = B.integrate_divisor(out.omega.form, D2).with_precision(cfg.prec);
    return out;
}

GlobalHeightReport global_height(const HeightConfig& cfg, const HyperellipticCurve& C, const Divisor0& D1, const Divisor0& D2,
                                 const UnramifiedContribution& away) {
    GlobalHeightReport out{local_height_p(cfg, C, D1, D2).value, away.value(cfg.p, cfg.prec, cfg.branch), PadicNumber()};
    out.global = out.local + out.away;
    return out;
}

GlobalHeightReport genus1_unit_root_height(const HyperellipticCurve& C, const PadicNumber& alpha, const IntegrationBackend& backend,
                                           const Divisor0& D1, const Divisor0& D2, const UnramifiedContribution& away) {
    if (C.genus() != 1) throw InputError("genus1_unit_root_height needs a genus-1 model");
    const std::uint32_t p = backend.prime();
    const int N = std::min(backend.precision(), alpha.precision());
    Matrix<PadicNumber> row(1, 2, PadicNumber::zero(p, N));
    row(0, 0) = alpha;
    row(0, 1) = PadicNumber::from_integer(p, 1, N);
    HeightConfig cfg{p, N, backend.branch(), SubspaceChoice::UnitRoot, WSubspace(row, 1), &backend};
    return global_height(cfg, C, D1, D2, away);
}

} // namespace cgh
