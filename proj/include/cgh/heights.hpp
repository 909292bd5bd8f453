#pragma once

#include "cgh/cohomology.hpp"
#include "cgh/integration.hpp"
#include "cgh/symbols.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cgh {

enum class SubspaceChoice { Canonical, UnitRoot, Trivial, Explicit };
std::string to_string(SubspaceChoice s);

struct HeightConfig {
    std::uint32_t p;
    int prec;
    LogBranch branch;
    SubspaceChoice choice = SubspaceChoice::Explicit;
    WSubspace subspace;
    const IntegrationBackend* backend = nullptr;
};

// sum a_q log_p(q) over primes q != p: local heights away from p, supplied
// by the user.
struct UnramifiedContribution {
    std::vector<std::pair<Integer, Rational>> terms;
    // Parses "q:a_q,q:a_q,...", e.g. "2:-2,3:1"; the empty string is zero.
    static UnramifiedContribution parse(const std::string& text);
    PadicNumber value(std::uint32_t p, int prec, const LogBranch& branch) const;
    std::string to_string() const;
};

// The subspace spanned by rho_g, ..., rho_{2g-1}.
WSubspace trivial_subspace(int genus, std::uint32_t p, int prec);
// Reads {p, N, rows: [[digit strings]]}.
WSubspace load_subspace(const std::string& path);
WSubspace subspace_from_json_text(const std::string& text);
std::string subspace_to_json_text(const WSubspace& W);

struct LocalHeightReport {
    PadicNumber value;
    OmegaD omega;
};

// h_p(D1, D2) = integral over D2 of omega_{D1}.
LocalHeightReport local_height_p(const HeightConfig& cfg, const HyperellipticCurve& C, const Divisor0& D1, const Divisor0& D2);

struct GlobalHeightReport {
    PadicNumber local;
    PadicNumber away;
    PadicNumber global;
};
GlobalHeightReport global_height(const HeightConfig& cfg, const HyperellipticCurve& C, const Divisor0& D1, const Divisor0& D2,
                                 const UnramifiedContribution& away);

// Genus 1 with the unit-root line spanned by alpha [omega_0] + [omega_1].
GlobalHeightReport genus1_unit_root_height(const HyperellipticCurve& C, const PadicNumber& alpha, const IntegrationBackend& backend,
                                           const Divisor0& D1, const Divisor0& D2, const UnramifiedContribution& away);

} // namespace cgh
