// Command-line front end: one job per invocation, text or JSON output.

#include "cgh/blakestad.hpp"
#include "cgh/coleman.hpp"
#include "cgh/error.hpp"
#include "cgh/heights.hpp"
#include "cgh/symbols.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <memory>

using namespace cgh;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kGeneric = 1, kUsage = 2, kDomain = 3, kPrecision = 4, kCapability = 5 };

struct Options {
    std::string curve, branch = "0", subspace = "canonical", backend, oracle, D1, D2, away, out = "text";
    std::string form, from, to, method = "closed";
    std::uint32_t p = 0;
    int n = 0;
};

Json padic_json(const PadicNumber& a) {
    Json j;
    j["value"] = a.to_string();
    j["valuation"] = a.is_zero() ? Json(nullptr) : Json(a.valuation());
    j["precision"] = a.precision();
    return j;
}

Json padic_rows(const Matrix<PadicNumber>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
        rows.push_back(r);
    }
    return rows;
}

Json padic_list(const std::vector<PadicNumber>& v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(a.to_string());
    return out;
}

// Text rendering of the same document the machine mode prints.
void render_text(const Json& doc, std::ostream& os, const std::string& indent = "") {
    for (const auto& [key, val] : doc.items()) {
        if (val.is_object() && val.contains("value") && val.contains("precision")) {
            os << indent << key << ": " << val["value"].get<std::string>() << "\n";
        } else if (val.is_object()) {
            os << indent << key << ":\n";
            render_text(val, os, indent + "  ");
        } else if (val.is_array() && !val.empty() && val[0].is_array()) {
            os << indent << key << ":\n";
            for (const auto& row : val) {
                os << indent << "  [";
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
                os << "]\n";
            }
        } else if (val.is_array()) {
            os << indent << key << ":\n";
            for (const auto& e : val) os << indent << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        } else {
            os << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
    }
}

int default_precision(std::uint32_t p) { return p == 5 ? 7 : 6; }

// Everything a job needs, resolved and validated once.
struct Context {
    Options opt;
    std::optional<OracleTable> table;
    std::optional<HyperellipticCurve> curve;
    std::uint32_t p = 0;
    int n = 0;
    std::optional<LogBranch> branch;
    std::unique_ptr<IntegrationBackend> backend;

    std::string oracle_path() const {
        if (!opt.oracle.empty()) return opt.oracle;
        if (opt.backend.rfind("oracle:", 0) == 0) return opt.backend.substr(7);
        return "";
    }

    void resolve(bool need_prime) {
        if (!opt.backend.empty() && opt.backend != "kedlaya" && opt.backend.rfind("oracle:", 0) != 0)
            throw InputError("--backend must be 'kedlaya' or 'oracle:PATH'");
        std::string path = oracle_path();
        if (!path.empty()) table = OracleTable::load(path);
        if (!opt.curve.empty()) curve = HyperellipticCurve::parse(opt.curve);
        if (table) {
            if (curve && curve->b() != table->curve().b())
                throw InputError("--curve does not match the oracle table curve " + table->curve().to_string());
            curve = table->curve();
            if (opt.p && opt.p != table->prime()) throw InputError("--p does not match the oracle table prime");
            if (opt.n && opt.n != table->precision()) throw InputError("--n does not match the oracle table precision");
        }
        if (!curve) throw InputError("a curve is required: pass --curve or an oracle table");
        p = opt.p ? opt.p : (table ? table->prime() : 0);
        if (need_prime && !p) throw InputError("a prime is required: pass --p or an oracle table");
        if (p) {
            n = opt.n ? opt.n : (table ? table->precision() : default_precision(p));
            if (n < 1) throw InputError("--n must be positive");
            PadicNumber L = PadicNumber::parse(opt.branch, p, n);
            branch = LogBranch{L.with_precision(std::min(n, L.precision()))};
        }
    }

    const IntegrationBackend& make_backend() {
        if (backend) return *backend;
        if (table) {
            backend = std::make_unique<OracleBackend>(*table, *branch);
        } else if (opt.backend.empty() || opt.backend == "kedlaya") {
            backend = std::make_unique<ColemanBackend>(*curve, p, n, *branch);
        }
        return *backend;
    }

    WSubspace subspace(SubspaceChoice& choice) {
        const std::string& s = opt.subspace;
        if (s == "canonical") {
            choice = SubspaceChoice::Canonical;
            if (curve->genus() != 2 || curve->degree() != 5)
                throw DomainError("the canonical subspace is defined here for genus-2 quintic models; use --subspace unit-root or file:PATH");
            return canonical_subspace(*curve, p, n).basis;
        }
        if (s == "unit-root") {
            choice = SubspaceChoice::UnitRoot;
            return unit_root_subspace(frobenius_data(*curve, p, n));
        }
        if (s == "trivial") {
            choice = SubspaceChoice::Trivial;
            return trivial_subspace(curve->genus(), p, n);
        }
        if (s.rfind("file:", 0) == 0) {
            choice = SubspaceChoice::Explicit;
            WSubspace W = load_subspace(s.substr(5));
            if (W.prime() != p) throw InputError("subspace file prime does not match the job prime");
            if (W.genus() != curve->genus()) throw InputError("subspace file genus does not match the curve");
            return W;
        }
        throw InputError("--subspace must be canonical, unit-root, trivial or file:PATH");
    }

    Divisor0 divisor(const std::string& text, const char* flag) const {
        if (text.empty()) throw InputError(std::string("missing ") + flag);
        return parse_divisor(*curve, text);
    }

    Json header(const std::string& command) const {
        Json doc;
        doc["command"] = command;
        doc["curve"] = curve->to_string();
        if (p) {
            doc["p"] = p;
            doc["N"] = n;
            doc["branch"] = branch->to_string();
        }
        return doc;
    }
};

Differential parse_form_option(const Context& ctx) {
    const std::string& f = ctx.opt.form;
    if (f.empty()) {
        if (!ctx.opt.D1.empty()) return third_kind_from_divisor(*ctx.curve, ctx.divisor(ctx.opt.D1, "--D1"));
        throw InputError("integrate needs --form (omega_i or a polynomial u(x) for u(x) dx/2y) or --D1");
    }
    if (f.rfind("omega_", 0) == 0) {
        try {
            std::size_t used = 0;
            int i = std::stoi(f.substr(6), &used);
            if (used == f.size() - 6 && i >= 0) return Differential::omega(i);
        } catch (const std::exception&) {
        }
        throw InputError("bad form '" + f + "'");
    }
    return Differential::from_poly(parse_rational_poly(f));
}

Json run(const std::string& command, Context& ctx) {
    if (command == "cup-matrix") {
        ctx.resolve(false);
        Json doc = ctx.header(command);
        doc["basis"] = rho_basis_names(*ctx.curve);
        Matrix<Rational> N = cup_matrix(*ctx.curve);
        Json rows = Json::array();
        for (std::size_t i = 0; i < N.rows(); ++i) {
            Json r = Json::array();
            for (std::size_t j = 0; j < N.cols(); ++j) r.push_back(to_string(N(i, j)));
            rows.push_back(r);
        }
        doc["matrix"] = rows;
        return doc;
    }
    if (command == "third-kind") {
        ctx.resolve(false);
        Divisor0 D = ctx.divisor(ctx.opt.D1, "--D1");
        Json doc = ctx.header(command);
        doc["divisor"] = D.to_string();
        doc["form"] = third_kind_from_divisor(*ctx.curve, D).to_string(*ctx.curve);
        return doc;
    }
    if (command == "psi") {
        ctx.resolve(true);
        Divisor0 D = ctx.divisor(ctx.opt.D1, "--D1");
        Differential w = third_kind_from_divisor(*ctx.curve, D);
        const IntegrationBackend& B = ctx.make_backend();
        PsiResult r = psi(*ctx.curve, w, &B, ctx.p, ctx.n);
        Json doc = ctx.header(command);
        doc["backend"] = B.name();
        doc["form"] = w.to_string(*ctx.curve);
        doc["symbols"] = padic_list(r.symbols);
        doc["basis"] = r.psi.basis;
        doc["psi"] = padic_list(r.psi.coords);
        return doc;
    }
    if (command == "canonical-subspace") {
        ctx.resolve(true);
        RhoMethod m = ctx.opt.method == "ladder" ? RhoMethod::Ladder : RhoMethod::Closed;
        if (ctx.opt.method != "ladder" && ctx.opt.method != "closed") throw InputError("--method must be closed or ladder");
        CanonicalSubspace W = canonical_subspace(*ctx.curve, ctx.p, ctx.n, m);
        Json doc = ctx.header(command);
        doc["level"] = W.n;
        doc["method"] = ctx.opt.method;
        Json data;
        for (auto [name, v] : {std::pair{"A", W.A}, {"B", W.B}, {"C", W.C}, {"D", W.D}, {"I", W.I}, {"J", W.J}, {"R", W.R}, {"S", W.S},
                               {"alpha", W.alpha}, {"beta", W.beta}, {"gamma", W.gamma}, {"delta", W.delta}})
            data[name] = v;
        doc["data_mod_p^n"] = data;
        doc["cC_mod_p^n"] = Json::array({Json::array({W.cC[0][0], W.cC[0][1]}), Json::array({W.cC[1][0], W.cC[1][1]})});
        doc["cC_symmetric"] = W.c_symmetric;
        doc["basis_rows"] = padic_rows(W.basis.input_rows());
        doc["reduced_rows"] = padic_rows(W.basis.rows());
        return doc;
    }
    if (command == "is-ordinary") {
        ctx.resolve(true);
        Json doc = ctx.header(command);
        bool ord;
        if (ctx.curve->degree() == 5) {
            doc["test"] = "det M_1 is a unit";
            ord = is_ordinary(*ctx.curve, ctx.p);
        } else {
            doc["test"] = "Frobenius has g unit eigenvalues";
            try {
                unit_root_subspace(frobenius_data(*ctx.curve, ctx.p, 2));
                ord = true;
            } catch (const DomainError&) {
                ord = false;
            }
        }
        doc["ordinary"] = ord;
        return doc;
    }
    if (command == "unit-root") {
        ctx.resolve(true);
        FrobeniusData F = frobenius_data(*ctx.curve, ctx.p, ctx.n);
        Json doc = ctx.header(command);
        doc["frobenius"] = padic_rows(F.F);
        doc["charpoly"] = padic_list(frobenius_charpoly(F));
        WSubspace U = unit_root_subspace(F);
        doc["basis_rows"] = padic_rows(U.input_rows());
        doc["reduced_rows"] = padic_rows(U.rows());
        return doc;
    }
    if (command == "integrate") {
        ctx.resolve(true);
        Differential w = parse_form_option(ctx);
        if (ctx.opt.from.empty() || ctx.opt.to.empty()) throw InputError("integrate needs --from and --to");
        CurvePoint P = parse_point(ctx.opt.from), Q = parse_point(ctx.opt.to);
        const IntegrationBackend& B = ctx.make_backend();
        Json doc = ctx.header(command);
        doc["backend"] = B.name();
        doc["form"] = w.to_string(*ctx.curve);
        doc["from"] = P.to_string();
        doc["to"] = Q.to_string();
        doc["integral"] = padic_json(B.integrate(w, P, Q));
        return doc;
    }
    if (command == "local-height" || command == "global-height") {
        ctx.resolve(true);
        Divisor0 D1 = ctx.divisor(ctx.opt.D1, "--D1"), D2 = ctx.divisor(ctx.opt.D2, "--D2");
        HeightConfig cfg{ctx.p, ctx.n, *ctx.branch, SubspaceChoice::Explicit, trivial_subspace(ctx.curve->genus(), ctx.p, ctx.n), nullptr};
        cfg.subspace = ctx.subspace(cfg.choice);
        cfg.backend = &ctx.make_backend();
        Json doc = ctx.header(command);
        doc["backend"] = cfg.backend->name();
        doc["subspace"] = to_string(cfg.choice);
        doc["subspace_rows"] = padic_rows(cfg.subspace.input_rows());
        doc["D1"] = D1.to_string();
        doc["D2"] = D2.to_string();
        if (command == "local-height") {
            LocalHeightReport r = local_height_p(cfg, *ctx.curve, D1, D2);
            doc["omega_D1"] = r.omega.form.to_string(*ctx.curve);
            doc["local_height"] = padic_json(r.value);
        } else {
            UnramifiedContribution away = UnramifiedContribution::parse(ctx.opt.away);
            GlobalHeightReport r = global_height(cfg, *ctx.curve, D1, D2, away);
            doc["away"] = away.to_string();
            doc["local_height"] = padic_json(r.local);
            doc["away_value"] = padic_json(r.away);
            doc["global_height"] = padic_json(r.global);
        }
        return doc;
    }
    throw InputError("unknown command " + command);
}

const char* error_class(int code) {
    switch (code) {
    case kUsage: return "usage";
    case kDomain: return "domain";
    case kPrecision: return "precision";
    case kCapability: return "capability";
    default: return "error";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coleman-Gross p-adic heights on hyperelliptic curves"};
    app.require_subcommand(1);
    Options opt;
    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec commands[] = {
        {"cup-matrix", "cup product matrix on the rho basis"},
        {"third-kind", "third-kind differential with residue divisor D1"},
        {"psi", "global symbols and Psi of the third-kind form of D1"},
        {"canonical-subspace", "Blakestad's canonical subspace at level n"},
        {"is-ordinary", "ordinarity test at p"},
        {"unit-root", "Frobenius matrix and unit-root subspace"},
        {"integrate", "a Coleman integral from --from to --to"},
        {"local-height", "the local height h_p(D1, D2)"},
        {"global-height", "local height at p plus the supplied away contributions"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--curve", opt.curve, "polynomial b(x) of y^2 = b(x)");
        sub->add_option("--p", opt.p, "the prime p");
        sub->add_option("--n,--prec", opt.n, "precision N (level n for canonical-subspace)");
        sub->add_option("--branch", opt.branch, "L = log_p(p), rational or p-adic digit string")->capture_default_str();
        sub->add_option("--subspace", opt.subspace, "canonical | unit-root | trivial | file:PATH")->capture_default_str();
        sub->add_option("--backend", opt.backend, "kedlaya | oracle:PATH");
        sub->add_option("--oracle", opt.oracle, "oracle table path (same as --backend oracle:PATH)");
        sub->add_option("--D1", opt.D1, "first divisor");
        sub->add_option("--D2", opt.D2, "second divisor");
        sub->add_option("--away", opt.away, "away contributions q:a_q,... meaning sum a_q log_p(q)");
        sub->add_option("--form", opt.form, "omega_i, or u(x) for u(x) dx/2y");
        sub->add_option("--from", opt.from, "start point");
        sub->add_option("--to", opt.to, "end point");
        sub->add_option("--method", opt.method, "closed | ladder")->capture_default_str();
        sub->add_option("--out", opt.out, "text | machine")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    Context ctx{opt, {}, {}, 0, 0, {}, {}};
    int code = kOk;
    std::string message;
    Json doc;
    try {
        doc = run(command, ctx);
    } catch (const InputError& e) {
        code = kUsage, message = e.what();
    } catch (const DomainError& e) {
        code = kDomain, message = e.what();
    } catch (const PrecisionError& e) {
        code = kPrecision, message = e.what();
    } catch (const CapabilityError& e) {
        code = kCapability, message = e.what();
    } catch (const Error& e) {
        code = kGeneric, message = e.what();
    } catch (const std::exception& e) {
        code = kGeneric, message = e.what();
    }
    if (code != kOk) {
        if (opt.out == "machine") {
            std::cout << Json{{"command", command}, {"error", {{"class", error_class(code)}, {"message", message}}}}.dump(2) << "\n";
        } else {
            std::cerr << "cgheights " << command << ": " << error_class(code) << " error: " << message << "\n";
        }
        return code;
    }
    if (opt.out == "machine") std::cout << doc.dump(2) << "\n";
    else render_text(doc, std::cout);
    return kOk;
}
