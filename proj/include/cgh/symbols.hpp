#pragma once

#include "cgh/cohomology.hpp"
#include "cgh/integration.hpp"

namespace cgh {

// <w, rho> = -integral over D of rho - sum_{A at infinity} Res_A(w * integral(rho)),
// where D is the residue divisor of w. D must avoid infinity and rho must
// be of the second kind. With D = 0 no backend is consulted.
PadicNumber global_symbol(const HyperellipticCurve& C, const Differential& w, const Differential& rho,
                          const IntegrationBackend* backend, std::uint32_t p, int prec);

// The residue divisor of w. Only the exact part may carry residues.
Divisor0 symbol_divisor(const HyperellipticCurve& C, const Differential& w);

// Coordinates c of Psi(w) in the rho-basis: c = -N^{-1} s with
// s_j = <w, rho_j>.
struct PsiResult {
    std::vector<PadicNumber> symbols;
    CohomologyClass psi;
};
PsiResult psi(const HyperellipticCurve& C, const Differential& w, const IntegrationBackend* backend, std::uint32_t p, int prec);
// c = -N^{-1} s for a given symbol vector.
std::vector<PadicNumber> psi_from_symbols(const HyperellipticCurve& C, const std::vector<PadicNumber>& s);

// omega_D = w - sum d_i rho_i where w is the third-kind form with residue
// divisor D and Psi(w) = sum d_i rho_i + sum e_j W_j.
struct OmegaD {
    Differential form;
    Differential third_kind;
    PsiResult psi;
    Decomposition decomposition;
};
OmegaD omega_D(const HyperellipticCurve& C, const Divisor0& D, const WSubspace& W, const IntegrationBackend* backend, int prec);

} // namespace cgh
