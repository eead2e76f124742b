#include "autoint/elementary.hpp"

#include <cmath>
#include <string>

#include "autoint/format.hpp"

namespace autoint {

namespace {

[[noreturn]] void domain_fail(const ElemFn& fn, double x) {
    std::string why;
    switch (fn.tag()) {
        case ElemFn::Tag::Ln: why = "argument must be positive"; break;
        case ElemFn::Tag::Recip: why = "argument must be nonzero"; break;
        default: why = "argument outside domain"; break;
    }
    throw DomainError(std::string(fn.name()) + ": " + why + " (got " + fmt_sig(x, 10) + ")");
}

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace

ElemFn ElemFn::pow(int k) {
    if (k < 0) throw std::invalid_argument("pow: exponent must be >= 0");
    return {Tag::Pow, k};
}

const char* ElemFn::name() const noexcept {
    switch (tag_) {
        case Tag::Exp: return "exp";
        case Tag::Sin: return "sin";
        case Tag::Cos: return "cos";
        case Tag::Ln: return "ln";
        case Tag::Recip: return "recip";
        case Tag::Arctan: return "atan";
        case Tag::Pow: return "pow";
    }
    return "?";
}

bool ElemFn::in_domain(double x) const noexcept {
    switch (tag_) {
        case Tag::Ln: return x > 0.0;
        case Tag::Recip: return x != 0.0;
        default: return true;
    }
}

double ElemFn::eval(double x) const {
    if (!in_domain(x)) domain_fail(*this, x);
    switch (tag_) {
        case Tag::Exp: return std::exp(x);
        case Tag::Sin: return std::sin(x);
        case Tag::Cos: return std::cos(x);
        case Tag::Ln: return std::log(x);
        case Tag::Recip: return 1.0 / x;
        case Tag::Arctan: return std::atan(x);
        case Tag::Pow: return pow_int(x, power_);
    }
    return 0.0;
}

std::vector<double> derivs(const ElemFn& fn, double x, int order) {
    if (order < 0) throw std::invalid_argument("derivs: order must be >= 0");
    if (!fn.in_domain(x)) domain_fail(fn, x);

    std::vector<double> d(static_cast<std::size_t>(order) + 1, 0.0);
    switch (fn.tag()) {
        case ElemFn::Tag::Exp: {
            const double e = std::exp(x);
            for (int i = 0; i <= order; ++i) d[i] = e;
            break;
        }
        case ElemFn::Tag::Sin: {
            const double s = std::sin(x), c = std::cos(x);
            const double cycle[4] = {s, c, -s, -c};
            for (int i = 0; i <= order; ++i) d[i] = cycle[i % 4];
            break;
        }
        case ElemFn::Tag::Cos: {
            const double s = std::sin(x), c = std::cos(x);
            const double cycle[4] = {c, -s, -c, s};
            for (int i = 0; i <= order; ++i) d[i] = cycle[i % 4];
            break;
        }
        case ElemFn::Tag::Ln: {
            d[0] = std::log(x);
            if (order >= 1) d[1] = 1.0 / x;
            for (int i = 1; i < order; ++i) d[i + 1] = d[i] * (-i) / x;
            break;
        }
        case ElemFn::Tag::Recip: {
            d[0] = 1.0 / x;
            for (int i = 1; i <= order; ++i) d[i] = d[i - 1] * (-i) / x;
            break;
        }
        case ElemFn::Tag::Arctan: {
            d[0] = std::atan(x);
            if (order >= 1) {
                // u = arctan' = 1/(1+x^2); differentiate u (1+x^2) = 1.
                const double q = 1.0 + x * x;
                std::vector<double> u(static_cast<std::size_t>(order), 0.0);
                u[0] = 1.0 / q;
                for (int k = 1; k < order; ++k) {
                    double s = 2.0 * x * k * u[k - 1];
                    if (k >= 2) s += static_cast<double>(k) * (k - 1) * u[k - 2];
                    u[k] = -s / q;
                }
                for (int i = 1; i <= order; ++i) d[i] = u[i - 1];
            }
            break;
        }
        case ElemFn::Tag::Pow: {
            const int k = fn.power();
            double falling = 1.0;
            for (int i = 0; i <= order; ++i) {
                if (i > k) break; // higher derivatives vanish
                d[i] = falling * pow_int(x, k - i);
                falling *= (k - i);
            }
            break;
        }
    }
    return d;
}

Jet extend(const ElemFn& fn, const Jet& u) {
    const std::vector<double> d = derivs(fn, u.real(), u.order());
    return universal_extend(d, u);
}

} // namespace autoint
