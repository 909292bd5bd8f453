#pragma once

#include "cgh/cohomology.hpp"
#include "cgh/integration.hpp"
#include "cgh/matrix.hpp"

#include <vector>

namespace cgh {

// An element of the overconvergent function ring written as
//   sum_e S_e(x) y^(-e)  (e odd, positive)  +  T(x) y.
struct OverconvergentFunction {
    std::vector<std::pair<int, Poly<PadicNumber>>> inverse_y_terms;
    Poly<PadicNumber> y_term;

    // Value at a point with y(P) a p-adic unit (or at any point if only
    // the y_term is present).
    PadicNumber operator()(const PadicNumber& x, const PadicNumber& y) const;
};

// Matrix of the p-power Frobenius lift x -> x^p on the basis
// omega_i = x^i dx/2y of H^1_dR, i = 0..2g-1, in row convention:
//   phi^* omega_i = sum_j F(i, j) omega_j + d witness_i.
struct FrobeniusData {
    std::uint32_t p;
    int precision;
    Matrix<PadicNumber> F;
    std::vector<OverconvergentFunction> witness;
    // Terms kept in the binomial expansion of the Frobenius lift of 1/y, and
    // the precision carried during reduction.
    int series_terms;
    int working_precision;
};

// Kedlaya's algorithm. Requires an odd-degree monic model with p-integral
// coefficients and good reduction at the odd prime p.
FrobeniusData frobenius_data(const HyperellipticCurve& C, std::uint32_t p, int N);

// det(T - F), constant term first.
std::vector<PadicNumber> frobenius_charpoly(const FrobeniusData& F);

// The slope-zero part of H^1_dR: the row span of F^N restricted to the
// non-holomorphic basis directions. Throws DomainError unless the reduction
// is ordinary.
WSubspace unit_root_subspace(const FrobeniusData& F);

// Writes u(x) dx/2y as sum_{j<2g} c_j omega_j + d(T(x) y).
struct PolynomialReduction {
    std::vector<PadicNumber> coeffs;
    Poly<PadicNumber> exact; // T
};
PolynomialReduction reduce_polynomial_form(const HyperellipticCurve& C, const Poly<PadicNumber>& u);

// Integral of a differential between two points of one non-Weierstrass
// residue disc by termwise integration of its local expansion in x - x(P).
PadicNumber tiny_integral(const HyperellipticCurve& C, const Differential& w, const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N);

// The point of the residue disc of P fixed by the Frobenius lift.
CurvePoint teichmuller_point(const HyperellipticCurve& C, const CurvePoint& P, std::uint32_t p, int N);

// True when P and Q reduce to the same point modulo p (affine, integral).
bool same_residue_disc(const CurvePoint& P, const CurvePoint& Q, std::uint32_t p, int N);

// Coleman integration of second-kind forms u(x) dx/2y + v(x) dx/2 on an
// odd-degree curve with good reduction at p. Endpoints must lie in
// non-Weierstrass affine residue discs or be Weierstrass points; the latter
// use the doubling identity for the anti-invariant part.
class ColemanBackend : public IntegrationBackend {
public:
    ColemanBackend(HyperellipticCurve C, std::uint32_t p, int N, LogBranch branch);

    std::string name() const override { return "kedlaya"; }
    BackendCapabilities capabilities() const override { return {true, false, ReductionRequirement::GoodOdd}; }
    const HyperellipticCurve& curve() const override { return curve_; }
    std::uint32_t prime() const override { return p_; }
    int precision() const override { return prec_; }
    const LogBranch& branch() const override { return branch_; }
    const FrobeniusData& frobenius() const { return frob_; }

    PadicNumber integrate(const Differential& w, const CurvePoint& P, const CurvePoint& Q) const override;
    // Integrals of omega_0 .. omega_{2g-1} from P to Q.
    std::vector<PadicNumber> basis_integrals(const CurvePoint& P, const CurvePoint& Q) const;

private:
    std::vector<PadicNumber> basis_from_teichmuller(const CurvePoint& P, const CurvePoint& Q) const;
    std::vector<PadicNumber> basis_generic(const CurvePoint& P, const CurvePoint& Q) const;

    HyperellipticCurve curve_;
    std::uint32_t p_;
    int prec_;
    LogBranch branch_;
    FrobeniusData frob_;
    Matrix<PadicNumber> one_minus_f_inv_;
};

} // namespace cgh
