#pragma once

#include "cgh/cohomology.hpp"
#include "cgh/curve.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cgh {

// Integer data of a monic quintic y^2 = x^5 + b1 x^4 + ... + b5 reduced
// modulo p^n, with the expansion at infinity in the parameter t = -x^2/y.
// Writing s = t^2 and z = 1/x one has z = s beta(z) with
// beta(z) = 1 + b1 z + ... + b5 z^5, x = u(s)/s and -y = u(s)^2/t^5 where
// u = 1/beta(z(s)).
struct QuinticData {
    std::uint32_t p;
    int n;
    std::uint64_t modulus;
    std::array<std::uint64_t, 6> beta; // beta_0 = 1, ..., beta_5 = b5 mod p^n
};
QuinticData quintic_data(const HyperellipticCurve& C, std::uint32_t p, int n);

// Power series z(s), u(s) = 1/beta(z(s)) and v(s) = beta(z(s)) modulo
// (p^n, s^limit).
struct InfinitySeries {
    std::vector<std::uint64_t> z, u, v;
};
InfinitySeries infinity_series(const QuinticData& q, std::size_t limit);

enum class RhoMethod {
    // rho_k from the coefficients of beta(z)^e, e = floor(k/2)
    Closed,
    // the descending ladder over x^i (-y)^j
    Ladder,
};

// The part of rho_k below t^5 that survives the ladder: exponents -3..4.
// For odd k these are M_k, N_k, I, R at t^-3, t^-1, t, t^3; for even k the
// series is even and normalized to have no constant term.
struct RhoKCoefficients {
    long k;
    std::uint32_t p;
    int n;
    std::uint64_t modulus;
    std::array<std::uint64_t, 8> low{}; // coefficient of t^e at index e + 3
    std::uint64_t at(int e) const { return low[static_cast<std::size_t>(e + 3)]; }
    std::uint64_t M() const { return at(-3); }
    std::uint64_t N() const { return at(-1); }
    std::uint64_t I() const { return at(1); }
    std::uint64_t R() const { return at(3); }
};

RhoKCoefficients rho_k(const HyperellipticCurve& C, long k, std::uint32_t p, int n, RhoMethod method = RhoMethod::Closed);

struct LadderOptions {
    // Skip the exponents of the wrong parity (their ladder coefficients vanish).
    bool parity_skip = true;
};
// The full ladder output modulo p^n: coefficients of t^e for e in [-k, 4]
// at index e + k.
std::vector<std::uint64_t> rho_k_ladder_series(const QuinticData& q, long k, LadderOptions opt = {});
RhoKCoefficients rho_k_closed(const QuinticData& q, long k);

// Blakestad's level-n data. phi = rho_{3p^n}, psi = rho_{p^n}.
struct CanonicalSubspace {
    std::uint32_t p;
    int n;
    std::uint64_t modulus;
    std::uint64_t A, B, C, D, I, J, R, S;
    std::array<std::array<std::uint64_t, 2>, 2> M;
    std::uint64_t alpha, beta, gamma, delta;
    std::array<std::array<std::uint64_t, 2>, 2> cC;
    // c^C_12 == c^C_21 modulo p^n
    bool c_symmetric;
    // Rows k = -eta_2 = (-c12, -c22, 1, 0) and l = -eta_1 = (-c11, b2 - c12, 2 b1, 3).
    WSubspace basis;
};
CanonicalSubspace canonical_subspace(const HyperellipticCurve& C, std::uint32_t p, int n, RhoMethod method = RhoMethod::Closed);

// det(M_1) is a p-adic unit.
bool is_ordinary(const HyperellipticCurve& C, std::uint32_t p);

} // namespace cgh
