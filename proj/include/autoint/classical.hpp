#pragma once

#include <functional>
#include <string>

namespace autoint {

using RealFn = std::function<double(double)>;

struct RuleResult {
    std::string rule;
    int n_sub = 0;
    double value = 0.0;
};

/// Dispatch by rule name ("midpoint", "trapezoid", "simpson").
RuleResult run_rule(const std::string& rule, const RealFn& f, double a, double b, int n_sub);

/// h * sum f(a + (i - 1/2) h); summed in ascending node order.
double midpoint(const RealFn& f, double a, double b, int n_sub);

/// h * (f(a)/2 + f(a+h) + ... + f(b-h) + f(b)/2); ascending node order.
double trapezoid(const RealFn& f, double a, double b, int n_sub);

/// Composite Simpson; n_sub must be even.
double simpson(const RealFn& f, double a, double b, int n_sub);

/// High-accuracy reference value: 20-node Gauss-Legendre per panel, panel
/// count doubled until two successive refinements agree to 1e-10 absolute.
/// Deterministic. Throws std::runtime_error if the cap is hit without
/// convergence (non-integrable or wildly non-smooth input).
double reference_integral(const RealFn& f, double a, double b);

} // namespace autoint
