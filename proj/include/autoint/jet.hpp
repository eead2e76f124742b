#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "autoint/errors.hpp"

namespace autoint {

/// Truncated polynomial of fixed order n over the reals: coeffs[i] multiplies
/// eps^i and eps^(n+1) = 0, so multiplication is a truncated convolution.
/// coeffs[0] is the real part. Operands of different order never mix; there
/// is no implicit truncation or extension. Values are immutable once built
/// (operations return fresh jets), so they are safe to share across threads.
class Jet {
public:
    /// Zero jet of the given order (order + 1 zero coefficients).
    explicit Jet(int order);

    /// Takes ownership of the coefficient vector; order = coeffs.size() - 1.
    /// All entries must be finite.
    explicit Jet(std::vector<double> coeffs);

    static Jet constant(int order, double value);

    /// value + eps, the canonical embedding of the variable.
    static Jet variable(int order, double value);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double real() const noexcept { return coeffs_[0]; }

    double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    /// Copy with the real part zeroed: the eps-portion of this jet. Its
    /// (order+1)-th power vanishes identically.
    Jet nilpotent_part() const;

    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator*=(double s);

    friend bool operator==(const Jet& lhs, const Jet& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

private:
    std::vector<double> coeffs_;
};

Jet operator+(Jet lhs, const Jet& rhs);
Jet operator-(Jet lhs, const Jet& rhs);
Jet operator-(Jet u);
Jet operator*(const Jet& lhs, const Jet& rhs);
Jet operator*(double s, Jet u);
Jet operator*(Jet u, double s);

/// lhs * recip(rhs); requires rhs to have a nonzero real part.
Jet operator/(const Jet& lhs, const Jet& rhs);

/// Multiplicative inverse by the series recurrence
///   r[0] = 1/u[0],   r[k] = -(sum_{j=1..k} u[j] r[k-j]) / u[0].
/// A zero real part is a pole and raises DomainError.
Jet recip(const Jet& u);

/// Lift of a function to jets from its derivative list at x = u.real():
/// given derivs = [f(x), f'(x), ..., f^(n)(x)], evaluates
///   sum_{k=0..n} f^(k)(x)/k! * w^k
/// by Horner over jets, where w is the nilpotent part of u. w^(n+1) = 0, so
/// the sum is finite and the result is the order-n Taylor lift of f at u.
Jet universal_extend(std::span<const double> derivs, const Jet& u);

std::ostream& operator<<(std::ostream& os, const Jet& u);

} // namespace autoint
