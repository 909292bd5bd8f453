#include "cgh/symbols.hpp"

#include "cgh/error.hpp"

namespace cgh {

namespace {

Differential exact_part(const Differential& w) {
    Differential out = w.polar_part() + w.invariant_part_form();
    Poly<Rational> ex;
    for (std::size_t i = 0; i < w.omega_coeffs().size(); ++i)
        if (w.omega_coeffs()[i].is_exact()) ex.set_coeff(static_cast<int>(i), w.omega_coeffs()[i].rational());
    return out + Differential::from_poly(ex);
}

} // namespace

Divisor0 symbol_divisor(const HyperellipticCurve& C, const Differential& w) {
    const int g = C.genus();
    if (!C.odd_degree())
        for (std::size_t i = static_cast<std::size_t>(g); i < w.omega_coeffs().size(); ++i)
            if (!w.omega_coeffs()[i].is_exact() && !w.omega_coeffs()[i].is_zero())
                throw DomainError("p-adic multiples of x^i dx/2y with i >= g have residues at infinity on even-degree models");
    return residue_divisor(C, exact_part(w));
}

PadicNumber global_symbol(const HyperellipticCurve& C, const Differential& w, const Differential& rho,
                          const IntegrationBackend* backend, std::uint32_t p, int prec) {
    auto kr = rho.kind(C);
    if (kr != DifferentialKind::Holomorphic && kr != DifferentialKind::Second)
        throw DomainError("the second argument of a global symbol must be of the second kind");
    Divisor0 D = symbol_divisor(C, w);
    if (!D.is_affine())
        throw DomainError("global symbols are implemented only for residue divisors supported away from infinity; "
                          "move the divisor to affine points first");
    PadicNumber out = residue_pairing_at_infinity(C, w, rho).to_padic(p, prec);
    out = -out;
    if (!D.is_zero()) {
        if (!backend) throw CapabilityError("a global symbol with nonzero residue divisor needs an integration backend");
        if (backend->prime() != p) throw InputError("backend prime differs from the requested prime");
        out -= backend->integrate_divisor(rho, D);
    }
    return out;
}

std::vector<PadicNumber> psi_from_symbols(const HyperellipticCurve& C, const std::vector<PadicNumber>& s) {
    auto N = cup_matrix(C);
    const std::size_t n = N.rows();
    if (s.size() != n) throw InputError("symbol vector has the wrong length");
    Matrix<Rational> Ni = inverse(N);
    std::vector<PadicNumber> c;
    for (std::size_t i = 0; i < n; ++i) {
        PadicNumber acc = PadicNumber::zero(s[0].prime(), s[0].precision());
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(Ni(i, j)) != 0) acc -= s[j] * Ni(i, j);
        c.push_back(acc);
    }
    return c;
}

PsiResult psi(const HyperellipticCurve& C, const Differential& w, const IntegrationBackend* backend, std::uint32_t p, int prec) {
    PsiResult out;
    for (const auto& r : rho_basis(C)) out.symbols.push_back(global_symbol(C, w, r, backend, p, prec));
    out.psi.coords = psi_from_symbols(C, out.symbols);
    out.psi.basis = rho_basis_names(C);
    return out;
}

OmegaD omega_D(const HyperellipticCurve& C, const Divisor0& D, const WSubspace& W, const IntegrationBackend* backend, int prec) {
    if (W.genus() != C.genus()) throw InputError("subspace genus differs from the curve genus");
    const std::uint32_t p = W.prime();
    OmegaD out;
    out.third_kind = third_kind_from_divisor(C, D);
    out.psi = psi(C, out.third_kind, backend, p, prec);
    out.decomposition = decompose(out.psi.psi.coords, W);
    out.form = out.third_kind;
    for (int i = 0; i < C.genus(); ++i)
        out.form -= Differential::omega(i, Scalar(out.decomposition.d[static_cast<std::size_t>(i)]));
    return out;
}

} // namespace cgh
