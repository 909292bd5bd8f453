#include "cgh/scalar.hpp"

#include "cgh/error.hpp"

namespace cgh {

const Rational& Scalar::rational() const {
    if (!is_exact()) throw DomainError("expected an exact rational coefficient");
    return std::get<Rational>(v_);
}

const PadicNumber& Scalar::padic() const {
    if (is_exact()) throw DomainError("expected a p-adic coefficient");
    return std::get<PadicNumber>(v_);
}

PadicNumber Scalar::to_padic(std::uint32_t p, int prec) const {
    if (is_exact()) return PadicNumber::from_rational(p, std::get<Rational>(v_), prec);
    const auto& a = std::get<PadicNumber>(v_);
    if (a.prime() != p) throw InputError("p-adic coefficient has the wrong prime");
    return a;
}

bool Scalar::is_zero() const {
    return is_exact() ? sgn(std::get<Rational>(v_)) == 0 : std::get<PadicNumber>(v_).is_zero();
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
    return Scalar(-std::get<PadicNumber>(v_));
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (is_exact() && b.is_exact()) v_ = Rational(std::get<Rational>(v_) + b.rational());
    else if (is_exact()) v_ = b.padic() + std::get<Rational>(v_);
    else if (b.is_exact()) v_ = std::get<PadicNumber>(v_) + b.rational();
    else v_ = std::get<PadicNumber>(v_) + b.padic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
    if (is_exact() && b.is_exact()) v_ = Rational(std::get<Rational>(v_) * b.rational());
    else if (is_exact()) v_ = std::get<Rational>(v_) * b.padic();
    else if (b.is_exact()) v_ = std::get<PadicNumber>(v_) * b.rational();
    else v_ = std::get<PadicNumber>(v_) * b.padic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
    if (is_exact() && b.is_exact()) {
        if (sgn(b.rational()) == 0) throw DomainError("division by zero");
        v_ = Rational(std::get<Rational>(v_) / b.rational());
    } else if (is_exact()) {
        v_ = std::get<Rational>(v_) / b.padic();
    } else if (b.is_exact()) {
        v_ = std::get<PadicNumber>(v_) / b.rational();
    } else {
        v_ = std::get<PadicNumber>(v_) / b.padic();
    }
    return *this;
}

std::string Scalar::to_string() const {
    return is_exact() ? cgh::to_string(std::get<Rational>(v_)) : std::get<PadicNumber>(v_).to_string();
}

} // namespace cgh
