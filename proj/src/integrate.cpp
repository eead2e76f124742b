#include "autoint/integrate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "autoint/format.hpp"

namespace autoint {

namespace {

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

} // namespace

BetaParams::BetaParams(std::vector<double> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) throw std::invalid_argument("beta: need at least beta_1");
    for (double b : beta_) check_finite(b, "beta");
    if (beta_[0] == 0.0) {
        throw std::invalid_argument("beta: first component must be nonzero (the embedding requires beta_1 != 0)");
    }
}

BetaParams BetaParams::canonical(int order) {
    if (order < 1) throw std::invalid_argument("beta: order must be >= 1");
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    b[0] = 1.0;
    return BetaParams(std::move(b));
}

BetaParams BetaParams::resized(int order) const {
    if (order < 1) throw std::invalid_argument("beta: order must be >= 1");
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    for (int i = 0; i < order && i < this->order(); ++i) b[i] = beta_[i];
    return BetaParams(std::move(b));
}

std::pair<double, double> QuadPlan::bounds(int i) const {
    const int n = subintervals();
    if (i < 0 || i >= n) throw std::invalid_argument("plan: subinterval index out of range");
    const double lo = (i == 0) ? a : breaks[i - 1];
    const double hi = (i == n - 1) ? b : breaks[i];
    return {lo, hi};
}

void QuadPlan::validate() const {
    check_finite(a, "plan bounds");
    check_finite(b, "plan bounds");
    if (!(a < b)) throw std::invalid_argument("plan: requires a < b");
    double prev = a;
    for (double x : breaks) {
        check_finite(x, "plan breaks");
        if (!(x > prev)) throw std::invalid_argument("plan: breaks must be strictly increasing");
        prev = x;
    }
    if (!breaks.empty() && !(breaks.back() < b)) {
        throw std::invalid_argument("plan: breaks must lie strictly inside (a, b)");
    }
    if (centers.size() != breaks.size() + 1) {
        throw std::invalid_argument("plan: need exactly one center per subinterval (" +
                                    std::to_string(breaks.size() + 1) + " expected, " +
                                    std::to_string(centers.size()) + " given)");
    }
    if (orders.size() != centers.size()) {
        throw std::invalid_argument("plan: need exactly one order per subinterval");
    }
    for (int i = 0; i < subintervals(); ++i) {
        check_finite(centers[i], "plan centers");
        const auto [lo, hi] = bounds(i);
        if (centers[i] < lo || centers[i] > hi) {
            throw std::invalid_argument("plan: center " + fmt_sig(centers[i], 10) +
                                        " outside subinterval [" + fmt_sig(lo, 10) + ", " +
                                        fmt_sig(hi, 10) + "]");
        }
        if (orders[i] < 1) throw std::invalid_argument("plan: orders must be >= 1");
    }
}

Jet omega(double center, const BetaParams& beta) {
    Jet u(beta.order());
    u[0] = center;
    for (int i = 1; i <= beta.order(); ++i) u[i] = beta.values()[i - 1];
    return u;
}

GammaWeights gamma_weights(double a, double b, double c, const BetaParams& beta) {
    const int n = beta.order();
    const Jet w = omega(0.0, beta); // the nilpotent embedding jet

    // C[i][k] = (w^k)[i] / k!, the multiplier of f^(k)(c) in y_i.
    std::vector<std::vector<double>> C(n + 1, std::vector<double>(n + 1, 0.0));
    Jet wk = Jet::constant(n, 1.0);
    double kfact = 1.0;
    for (int k = 1; k <= n; ++k) {
        wk = wk * w;
        kfact *= k;
        for (int i = k; i <= n; ++i) C[i][k] = wk[i] / kfact;
    }

    // Target moments ((b-c)^(k+1) - (a-c)^(k+1)) / (k+1)!.
    std::vector<double> m(n + 1, 0.0);
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) {
        fact *= (k + 1);
        m[k] = (pow_int(b - c, k + 1) - pow_int(a - c, k + 1)) / fact;
    }

    // Back-substitution; diagonal is beta_1^k / k! != 0.
    std::vector<double> A(n + 1, 0.0);
    for (int k = n; k >= 1; --k) {
        double s = m[k];
        for (int i = k + 1; i <= n; ++i) s -= A[i] * C[i][k];
        A[k] = s / C[k][k];
    }

    GammaWeights gw;
    gw.span = b - a;
    gw.weights.assign(A.begin() + 1, A.end());
    return gw;
}

double gamma_apply(const GammaWeights& w, const Jet& y) {
    const int n = static_cast<int>(w.weights.size());
    if (y.order() != n) {
        throw std::invalid_argument("gamma_apply: jet order " + std::to_string(y.order()) +
                                    " does not match weight count " + std::to_string(n));
    }
    double s = w.span * y[0];
    for (int i = 1; i <= n; ++i) s += w.weights[i - 1] * y[i];
    return s;
}

double taylor_integral_reference(std::span<const double> derivs, double a, double b, double c) {
    double s = 0.0;
    double fact = 1.0; // (i+1)!
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        fact *= static_cast<double>(i + 1);
        const int p = static_cast<int>(i) + 1;
        s += (pow_int(b - c, p) - pow_int(a - c, p)) / fact * derivs[i];
    }
    return s;
}

double integrate_single(const JetFn& f, double a, double b, double c, const BetaParams& beta) {
    if (!(a <= b)) throw std::invalid_argument("integrate_single: requires a <= b");
    if (c < a || c > b) {
        throw std::invalid_argument("integrate_single: center " + fmt_sig(c, 10) +
                                    " outside [" + fmt_sig(a, 10) + ", " + fmt_sig(b, 10) + "]");
    }
    const Jet y = f(omega(c, beta));
    return gamma_apply(gamma_weights(a, b, c, beta), y);
}

IntegrationReport integrate_composite(const JetFn& f, const QuadPlan& plan,
                                      const BetaParams& beta,
                                      std::optional<double> reference) {
    plan.validate();

    IntegrationReport r;
    r.method = "auto";
    r.a = plan.a;
    r.b = plan.b;
    r.n_sub = plan.subintervals();
    r.breaks = plan.breaks;
    r.centers = plan.centers;
    r.orders = plan.orders;
    r.beta = beta.values();

    const int n_sub = plan.subintervals();
    r.subinterval_values.reserve(static_cast<std::size_t>(n_sub));
    for (int i = 0; i < n_sub; ++i) {
        const auto [lo, hi] = plan.bounds(i);
        try {
            r.subinterval_values.push_back(
                integrate_single(f, lo, hi, plan.centers[i], beta.resized(plan.orders[i])));
        } catch (const DomainError& e) {
            throw DomainError("subinterval " + std::to_string(i + 1) + " [" + fmt_sig(lo, 10) +
                              ", " + fmt_sig(hi, 10) + "]: " + e.what());
        }
    }

    double total = 0.0;
    for (double v : r.subinterval_values) total += v; // ascending index order
    r.total = total;
    if (reference) {
        r.reference = *reference;
        r.signed_error = total - *reference;
    }
    return r;
}

QuadPlan make_plan(double a, double b, int n_sub, CenterStrategy strategy, int order) {
    if (!(a < b)) throw std::invalid_argument("make_plan: requires a < b");
    if (n_sub < 1) throw std::invalid_argument("make_plan: n_sub must be >= 1");
    if (order < 1) throw std::invalid_argument("make_plan: order must be >= 1");

    QuadPlan plan;
    plan.a = a;
    plan.b = b;
    const double h = (b - a) / n_sub;
    for (int i = 1; i < n_sub; ++i) plan.breaks.push_back(a + i * h);
    for (int i = 0; i < n_sub; ++i) {
        const double lo = (i == 0) ? a : plan.breaks[i - 1];
        const double hi = (i == n_sub - 1) ? b : plan.breaks[i];
        switch (strategy) {
            case CenterStrategy::Left: plan.centers.push_back(lo); break;
            case CenterStrategy::Mid: plan.centers.push_back(lo + (hi - lo) / 2.0); break;
            case CenterStrategy::Right: plan.centers.push_back(hi); break;
        }
    }
    plan.orders.assign(static_cast<std::size_t>(n_sub), order);
    return plan;
}

std::vector<double> derivatives_at(const JetFn& f, double c, int order) {
    if (order < 1) throw std::invalid_argument("derivatives_at: order must be >= 1");
    const Jet y = f(Jet::variable(order, c));
    std::vector<double> d(static_cast<std::size_t>(order) + 1, 0.0);
    double fact = 1.0;
    for (int i = 0; i <= order; ++i) {
        if (i > 0) fact *= i;
        d[i] = y[i] * fact;
    }
    return d;
}

} // namespace autoint
