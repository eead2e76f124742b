#pragma once

#include <vector>

#include "autoint/jet.hpp"

namespace autoint {

/// One of the elementary integrand building blocks. Each tag has a
/// derivative generator valid on its domain: ln needs x > 0, recip needs
/// x != 0, pow takes an integer exponent k >= 0, the rest are entire.
class ElemFn {
public:
    enum class Tag { Exp, Sin, Cos, Ln, Recip, Arctan, Pow };

    static ElemFn exp() { return {Tag::Exp, 0}; }
    static ElemFn sin() { return {Tag::Sin, 0}; }
    static ElemFn cos() { return {Tag::Cos, 0}; }
    static ElemFn ln() { return {Tag::Ln, 0}; }
    static ElemFn recip() { return {Tag::Recip, 0}; }
    static ElemFn arctan() { return {Tag::Arctan, 0}; }
    static ElemFn pow(int k);

    Tag tag() const noexcept { return tag_; }
    int power() const noexcept { return power_; }

    /// Name as it appears in expression source ("atan" for Arctan).
    const char* name() const noexcept;

    bool in_domain(double x) const noexcept;

    /// Scalar evaluation; raises DomainError outside the domain.
    double eval(double x) const;

    friend bool operator==(const ElemFn& a, const ElemFn& b) noexcept {
        return a.tag_ == b.tag_ && a.power_ == b.power_;
    }

private:
    ElemFn(Tag tag, int power) : tag_(tag), power_(power) {}

    Tag tag_;
    int power_; // exponent for Tag::Pow, unused otherwise
};

/// [f(x), f'(x), ..., f^(order)(x)] by closed recurrence:
///   exp        all e^x
///   sin, cos   the 4-cycle of signs over {sin, cos}
///   ln         d[1] = 1/x, d[i+1] = d[i] * (-i)/x
///   recip      d[0] = 1/x, d[i] = d[i-1] * (-i)/x
///   arctan     d[i] = u^(i-1) with u = 1/(1+x^2), via
///              u^(k) = -(2x k u^(k-1) + k(k-1) u^(k-2)) / (1+x^2)
///   pow k      falling factorial k(k-1)...(k-i+1) * x^(k-i), zero past i = k
std::vector<double> derivs(const ElemFn& fn, double x, int order);

/// The jet extension of fn at u: the derivative list at u.real() pushed
/// through universal_extend.
Jet extend(const ElemFn& fn, const Jet& u);

} // namespace autoint
