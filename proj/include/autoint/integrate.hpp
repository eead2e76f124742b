#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autoint/jet.hpp"

namespace autoint {

/// An integrand that can be evaluated over jets (the lifted form of f).
using JetFn = std::function<Jet(const Jet&)>;

/// Embedding parameters beta_1..beta_n of the map c -> c + sum beta_i eps^i.
/// beta_1 must be nonzero; the extracted integral does not depend on the
/// choice beyond that.
class BetaParams {
public:
    /// beta[0] is beta_1. Throws if empty, non-finite, or beta_1 == 0.
    explicit BetaParams(std::vector<double> beta);

    /// (1, 0, ..., 0) of the given order.
    static BetaParams canonical(int order);

    int order() const noexcept { return static_cast<int>(beta_.size()); }
    const std::vector<double>& values() const noexcept { return beta_; }

    /// Zero-padded or truncated copy with the given order (>= 1). beta_1 is
    /// always kept, so the result is valid.
    BetaParams resized(int order) const;

private:
    std::vector<double> beta_;
};

/// The linear functional that reads the Taylor-polynomial integral off a
/// lifted jet value: span * y_0 + sum_i A_i y_i.
struct GammaWeights {
    double span = 0.0;            // b - a
    std::vector<double> weights;  // A_1..A_n
};

enum class CenterStrategy { Left, Mid, Right };

/// Partition of [a, b] with one expansion center and one polynomial order per
/// subinterval. breaks are the interior split points x_1 < ... < x_{N-1};
/// centers[i] must lie inside the i-th subinterval; orders[i] >= 1.
struct QuadPlan {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> breaks;
    std::vector<double> centers;
    std::vector<int> orders;

    int subintervals() const noexcept { return static_cast<int>(centers.size()); }

    /// Bounds of the i-th (0-based) subinterval.
    std::pair<double, double> bounds(int i) const;

    /// Throws std::invalid_argument on any violated structural invariant.
    void validate() const;
};

/// Result of one integration run. total is always the ascending-index sum of
/// subinterval_values; signed_error = total - reference when a reference is
/// present.
struct IntegrationReport {
    std::string method;
    double a = 0.0;
    double b = 0.0;
    int n_sub = 0; // the rule's subinterval count (panels may pair up for simpson)
    std::vector<double> breaks;
    std::vector<double> centers;
    std::vector<int> orders;
    std::vector<double> beta;
    std::vector<double> subinterval_values;
    double total = 0.0;
    std::optional<double> reference;
    std::optional<double> signed_error;
};

/// The embedding of a center: jet with coefficients (c, beta_1, ..., beta_n).
Jet omega(double center, const BetaParams& beta);

/// Weights A_1..A_n such that span*y_0 + sum A_i y_i equals the integral over
/// [a, b] of the order-n Taylor polynomial of f centered at c, for every f.
///
/// Writing the lifted value as y_i = sum_k C[i][k] f^(k)(c) with
/// C[i][k] = (w^k)[i] / k! (w the nilpotent embedding jet), the A_i must
/// reproduce the moments ((b-c)^(k+1) - (a-c)^(k+1)) / (k+1)!. The system is
/// triangular with diagonal beta_1^k / k! != 0 and is solved by
/// back-substitution from k = n down to 1.
GammaWeights gamma_weights(double a, double b, double c, const BetaParams& beta);

/// span * y_0 + sum A_i y_i. The jet order must match the weight count.
double gamma_apply(const GammaWeights& w, const Jet& y);

/// Exact integral over [a, b] of the Taylor polynomial with the given
/// derivative list at c: sum_i ((b-c)^(i+1) - (a-c)^(i+1)) / (i+1)! * d[i].
/// Serves as the independent closed-form route for the jet pipeline.
double taylor_integral_reference(std::span<const double> derivs, double a, double b, double c);

/// Single-center approximation: gamma applied to f(omega(c, beta)).
/// Requires a <= b and c in [a, b].
double integrate_single(const JetFn& f, double a, double b, double c, const BetaParams& beta);

/// Composite approximation over a validated plan; beta is resized to each
/// subinterval's order. Subinterval values are accumulated in ascending index
/// order, so results are reproducible bit for bit. Domain errors are reported
/// with the offending subinterval.
IntegrationReport integrate_composite(const JetFn& f, const QuadPlan& plan,
                                      const BetaParams& beta,
                                      std::optional<double> reference = std::nullopt);

/// Uniform plan: n_sub equal subintervals, centers per strategy, one order.
QuadPlan make_plan(double a, double b, int n_sub, CenterStrategy strategy, int order);

/// Recover [f(c), f'(c), ..., f^(order)(c)] from a single jet evaluation at
/// c + eps, where the i-th coefficient is f^(i)(c)/i!.
std::vector<double> derivatives_at(const JetFn& f, double c, int order);

} // namespace autoint
