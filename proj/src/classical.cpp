#include "autoint/classical.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace autoint {

namespace {

void check_rule_args(double a, double b, int n_sub) {
    if (!(a < b)) throw std::invalid_argument("quadrature: requires a < b");
    if (n_sub < 1) throw std::invalid_argument("quadrature: n_sub must be >= 1");
}

constexpr int kGaussNodes = 20;

struct GaussRule {
    std::array<double, kGaussNodes> node{};
    std::array<double, kGaussNodes> weight{};
};

// Newton iteration on the Legendre polynomial; nodes/weights on [-1, 1].
const GaussRule& gauss20() {
    static const GaussRule rule = [] {
        GaussRule r;
        const int m = kGaussNodes;
        for (int i = 0; i < (m + 1) / 2; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= m; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = m * (z * p1 - p2) / (z * z - 1.0);
                const double z1 = z;
                z = z1 - p1 / pp;
                if (std::abs(z - z1) <= 1e-14) break;
            }
            r.node[i] = -z;
            r.node[m - 1 - i] = z;
            r.weight[i] = r.weight[m - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
        return r;
    }();
    return rule;
}

double gauss_panels(const RealFn& f, double a, double b, int panels) {
    const GaussRule& g = gauss20();
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + p * h + h / 2.0;
        const double half = h / 2.0;
        double s = 0.0;
        for (int i = 0; i < kGaussNodes; ++i) s += g.weight[i] * f(mid + half * g.node[i]);
        total += half * s;
    }
    return total;
}

} // namespace

double midpoint(const RealFn& f, double a, double b, int n_sub) {
    check_rule_args(a, b, n_sub);
    const double h = (b - a) / n_sub;
    double s = 0.0;
    for (int i = 1; i <= n_sub; ++i) s += f(a + (i - 0.5) * h);
    return h * s;
}

double trapezoid(const RealFn& f, double a, double b, int n_sub) {
    check_rule_args(a, b, n_sub);
    const double h = (b - a) / n_sub;
    double s = 0.5 * f(a);
    for (int i = 1; i < n_sub; ++i) s += f(a + i * h);
    s += 0.5 * f(b);
    return h * s;
}

double simpson(const RealFn& f, double a, double b, int n_sub) {
    check_rule_args(a, b, n_sub);
    if (n_sub % 2 != 0) throw std::invalid_argument("simpson: n_sub must be even");
    const double h = (b - a) / n_sub;
    double s = f(a);
    for (int i = 1; i < n_sub; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    s += f(b);
    return s * h / 3.0;
}

RuleResult run_rule(const std::string& rule, const RealFn& f, double a, double b, int n_sub) {
    if (rule == "midpoint") return {rule, n_sub, midpoint(f, a, b, n_sub)};
    if (rule == "trapezoid") return {rule, n_sub, trapezoid(f, a, b, n_sub)};
    if (rule == "simpson") return {rule, n_sub, simpson(f, a, b, n_sub)};
    throw std::invalid_argument("unknown rule '" + rule + "'");
}

double reference_integral(const RealFn& f, double a, double b) {
    if (a == b) return 0.0;
    if (!(a < b)) throw std::invalid_argument("reference_integral: requires a <= b");

    constexpr double kTol = 1e-10;
    constexpr int kMaxRefinements = 16;

    double prev = gauss_panels(f, a, b, 1);
    for (int k = 1; k <= kMaxRefinements; ++k) {
        const double cur = gauss_panels(f, a, b, 1 << k);
        if (std::abs(cur - prev) <= kTol) return cur;
        prev = cur;
    }
    throw std::runtime_error("reference_integral: no convergence to 1e-10 within the refinement cap");
}

} // namespace autoint
