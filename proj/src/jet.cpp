#include "autoint/jet.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

namespace autoint {

namespace {

void check_finite(const std::vector<double>& coeffs) {
    for (double c : coeffs) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("jet coefficients must be finite");
        }
    }
}

void require_same_order(const Jet& a, const Jet& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("jet order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
}

} // namespace

Jet::Jet(int order) {
    if (order < 0) throw std::invalid_argument("jet order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet::Jet(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("jet needs at least the real coefficient");
    }
    check_finite(coeffs_);
}

Jet Jet::constant(int order, double value) {
    Jet j(order);
    j.coeffs_[0] = value;
    check_finite(j.coeffs_);
    return j;
}

Jet Jet::variable(int order, double value) {
    if (order < 1) throw std::invalid_argument("variable jet needs order >= 1");
    Jet j = constant(order, value);
    j.coeffs_[1] = 1.0;
    return j;
}

Jet Jet::nilpotent_part() const {
    Jet w = *this;
    w.coeffs_[0] = 0.0;
    return w;
}

Jet& Jet::operator+=(const Jet& rhs) {
    require_same_order(*this, rhs);
    for (int i = 0; i <= order(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    require_same_order(*this, rhs);
    for (int i = 0; i <= order(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }

Jet operator-(Jet u) { return u *= -1.0; }

Jet operator*(const Jet& lhs, const Jet& rhs) {
    require_same_order(lhs, rhs);
    const int n = lhs.order();
    Jet out(n);
    // out[k] = sum_{i+j=k} lhs[i] rhs[j]; everything with i+j > n is dropped.
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += lhs[i] * rhs[k - i];
        out[k] = s;
    }
    return out;
}

Jet operator*(double s, Jet u) { return u *= s; }
Jet operator*(Jet u, double s) { return u *= s; }

Jet operator/(const Jet& lhs, const Jet& rhs) { return lhs * recip(rhs); }

Jet recip(const Jet& u) {
    if (u.real() == 0.0) {
        throw DomainError("reciprocal of a jet with zero real part");
    }
    const int n = u.order();
    Jet r(n);
    r[0] = 1.0 / u[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += u[j] * r[k - j];
        r[k] = -s / u[0];
    }
    return r;
}

Jet universal_extend(std::span<const double> derivs, const Jet& u) {
    const int n = u.order();
    if (static_cast<int>(derivs.size()) != n + 1) {
        throw std::invalid_argument("universal_extend: need order+1 derivatives, got " +
                                    std::to_string(derivs.size()) + " for order " +
                                    std::to_string(n));
    }
    // Taylor coefficients f^(k)(x)/k!.
    std::vector<double> c(derivs.begin(), derivs.end());
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        c[k] /= fact;
    }
    const Jet w = u.nilpotent_part();
    Jet r = Jet::constant(n, c[n]);
    for (int k = n - 1; k >= 0; --k) {
        r = r * w;
        r[0] += c[k];
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Jet& u) {
    os << '(';
    for (int i = 0; i <= u.order(); ++i) {
        if (i > 0) os << ", ";
        os << u[i];
    }
    return os << ')';
}

} // namespace autoint
