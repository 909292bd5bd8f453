#include "cgh/cohomology.hpp"

#include "cgh/error.hpp"

namespace cgh {

namespace {

// Res_A(a * integral(b)) for exact forms, at one point at infinity.
Rational exact_pairing(const HyperellipticCurve& C, const Differential& a, const Differential& b, const CurvePoint& A) {
    if (a.is_zero_form() || b.is_zero_form()) return 0;
    const Rational z(0);
    // The integral of b needs terms up to exponent -1 - v(a); v(a) is at
    // least minus the pole estimate used by the expansion.
    LaurentSeries<Rational> ea = expand_form(C, a, A, -1, z);
    int va = ea.valuation();
    LaurentSeries<Rational> eb = expand_form(C, b, A, -2 - va, z);
    int vb = eb.valuation();
    if (ea.precision() <= -2 - vb) ea = expand_form(C, a, A, -2 - vb, z);
    Rational logc;
    LaurentSeries<Rational> ib = eb.integral(&logc);
    if (sgn(logc) != 0) throw DomainError("formal integral at infinity has a logarithmic term");
    return (ea * ib).residue();
}

} // namespace

std::vector<Differential> rho_basis(const HyperellipticCurve& C) {
    const int g = C.genus();
    std::vector<Differential> out;
    if (C.odd_degree()) {
        for (int i = 0; i < 2 * g; ++i) out.push_back(Differential::omega(i));
        return out;
    }
    for (int j = 0; j < g; ++j) out.push_back(Differential::omega(j));
    for (int j = g; j < 2 * g; ++j) {
        Differential w = Differential::omega(j + 1);
        Rational r = residue(C, w, CurvePoint::infinity_plus());
        out.push_back(w + Differential::omega(g, Scalar(Rational(2 * r))));
    }
    return out;
}

std::vector<std::string> rho_basis_names(const HyperellipticCurve& C) {
    std::vector<std::string> out;
    auto basis = rho_basis(C);
    for (const auto& w : basis) out.push_back(w.to_string(C));
    return out;
}

Scalar residue_pairing_at_infinity(const HyperellipticCurve& C, const Differential& w, const Differential& rho) {
    // Split both forms into exact pieces with scalar weights.
    std::vector<std::pair<Scalar, Differential>> wa, rb;
    auto split = [](const Differential& f, std::vector<std::pair<Scalar, Differential>>& out) {
        Differential exact_rest = f.polar_part() + f.invariant_part_form();
        Poly<Rational> ex;
        for (std::size_t i = 0; i < f.omega_coeffs().size(); ++i) {
            const Scalar& c = f.omega_coeffs()[i];
            if (c.is_exact()) ex.set_coeff(static_cast<int>(i), c.rational());
            else if (!c.is_zero()) out.emplace_back(c, Differential::omega(static_cast<int>(i)));
        }
        exact_rest += Differential::from_poly(ex);
        out.emplace_back(Scalar(1L), exact_rest);
    };
    split(w, wa);
    split(rho, rb);
    Scalar total(0L);
    for (const auto& [cw, fw] : wa)
        for (const auto& [cr, fr] : rb) {
            Rational r = 0;
            for (const auto& A : points_at_infinity(C)) r += exact_pairing(C, fw, fr, A);
            if (sgn(r) != 0) total += cw * cr * Scalar(r);
        }
    return total;
}

Matrix<Rational> cup_matrix(const HyperellipticCurve& C) {
    auto rho = rho_basis(C);
    const std::size_t n = rho.size();
    Matrix<Rational> N(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational r = 0;
            for (const auto& A : points_at_infinity(C)) r += exact_pairing(C, rho[j], rho[i], A);
            N(i, j) = r;
        }
    return N;
}

std::string CohomologyClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out += "c" + std::to_string(i) + " = " + coords[i].to_string();
        if (i < basis.size()) out += "    [" + basis[i] + "]";
        out += "\n";
    }
    return out;
}

WSubspace::WSubspace(const Matrix<PadicNumber>& rows, int genus) : input_(rows), g_(genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    if (rows.rows() != g || rows.cols() != 2 * g) throw InputError("W must be given by g rows of length 2g");
    Matrix<PadicNumber> B(g, g, rows.proto());
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) B(i, j) = rows(i, g + j);
    Matrix<PadicNumber> Binv;
    try {
        Binv = inverse(B);
    } catch (const DomainError&) {
        throw DomainError("W is not complementary to the holomorphic forms");
    }
    reduced_ = Binv * rows;
    binv_ = Binv;
}

int WSubspace::precision() const {
    int n = 1 << 29;
    for (std::size_t i = 0; i < reduced_.rows(); ++i)
        for (std::size_t j = 0; j < reduced_.cols(); ++j) n = std::min(n, reduced_(i, j).precision());
    return n;
}

std::string WSubspace::to_string() const { return cgh::to_string(reduced_); }

Decomposition decompose(const std::vector<PadicNumber>& c, const WSubspace& W) {
    const std::size_t g = static_cast<std::size_t>(W.genus());
    if (c.size() != 2 * g) throw InputError("class has the wrong dimension");
    Decomposition out;
    // e B = (c_g, ..., c_{2g-1}) with B the right block of the input rows
    for (std::size_t j = 0; j < g; ++j) {
        PadicNumber e = c[g] * W.block_inverse()(0, j);
        for (std::size_t k = 1; k < g; ++k) e += c[g + k] * W.block_inverse()(k, j);
        out.e.push_back(e);
    }
    for (std::size_t i = 0; i < g; ++i) {
        PadicNumber d = c[i];
        for (std::size_t j = 0; j < g; ++j) d -= out.e[j] * W.input_rows()(j, i);
        out.d.push_back(d);
    }
    return out;
}

} // namespace cgh
