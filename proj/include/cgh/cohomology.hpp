#pragma once

#include "cgh/curve.hpp"
#include "cgh/differential.hpp"
#include "cgh/matrix.hpp"

#include <string>
#include <vector>

namespace cgh {

// Basis rho_0, ..., rho_{2g-1} of first de Rham cohomology. Odd degree:
// rho_i = omega_i. Even degree: rho_j = omega_j (j < g) and
// rho_j = omega_{j+1} + 2 Res_{inf+}(omega_{j+1}) omega_g for j >= g.
std::vector<Differential> rho_basis(const HyperellipticCurve& C);
std::vector<std::string> rho_basis_names(const HyperellipticCurve& C);

// Sum over the points A at infinity of Res_A(w * integral(rho)), where the
// formal integral of rho has zero constant term. p-adic coefficients enter
// bilinearly, so all series work is exact.
Scalar residue_pairing_at_infinity(const HyperellipticCurve& C, const Differential& w, const Differential& rho);

// N_ij = sum_{A at infinity} Res_A(rho_j * integral(rho_i)).
Matrix<Rational> cup_matrix(const HyperellipticCurve& C);

// Coordinates of a class in the rho-basis.
struct CohomologyClass {
    std::vector<PadicNumber> coords;
    std::vector<std::string> basis;
    std::string to_string() const;
};

// A g-dimensional subspace W of H^1_dR complementary to the holomorphic
// forms, given by g rows in rho-coordinates. The rows are reduced so the
// block in columns g..2g-1 is the identity; `input_rows` keeps the rows as
// supplied.
class WSubspace {
public:
    WSubspace(const Matrix<PadicNumber>& rows, int genus);
    const Matrix<PadicNumber>& rows() const { return reduced_; }
    const Matrix<PadicNumber>& input_rows() const { return input_; }
    // Inverse of the block of input rows in columns g..2g-1.
    const Matrix<PadicNumber>& block_inverse() const { return binv_; }
    int genus() const { return g_; }
    int precision() const;
    std::uint32_t prime() const { return reduced_(0, 0).prime(); }
    std::string to_string() const;

private:
    Matrix<PadicNumber> input_;
    Matrix<PadicNumber> reduced_;
    Matrix<PadicNumber> binv_;
    int g_;
};

// Splits c = sum d_i rho_i (i < g) + sum e_j W_j with W_j the input rows.
struct Decomposition {
    std::vector<PadicNumber> d;
    std::vector<PadicNumber> e;
};
Decomposition decompose(const std::vector<PadicNumber>& c, const WSubspace& W);

} // namespace cgh
