#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "autoint/classical.hpp"
#include "autoint/expr.hpp"
#include "autoint/format.hpp"
#include "autoint/integrate.hpp"
#include "autoint/report.hpp"

namespace {

using namespace autoint;

constexpr const char* kGrammarHelp =
    "Expression grammar:\n"
    "  expr   := term (('+'|'-') term)*\n"
    "  term   := factor (('*'|'/') factor)*\n"
    "  factor := '-' factor | atom ('^' uint)?\n"
    "  atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'\n"
    "  ident  := exp | sin | cos | ln | atan | recip\n"
    "Whitespace is ignored; '^' takes a non-negative integer exponent.\n";

struct IntegrateOptions {
    std::string expr;
    double a = 0.0;
    double b = 0.0;
    int order = 5;
    std::vector<int> orders;
    std::vector<double> breaks;
    std::vector<double> centers;
    std::string strategy = "mid";
    std::vector<double> beta;
    std::string rule = "auto";
    int n_sub = 1;
    std::string format = "text";
    std::string reference = "auto";
};

struct ExtendOptions {
    std::string expr;
    double center = 0.0;
    int order = 5;
    std::vector<double> beta;
};

CenterStrategy parse_strategy(const std::string& s) {
    if (s == "left") return CenterStrategy::Left;
    if (s == "mid") return CenterStrategy::Mid;
    if (s == "right") return CenterStrategy::Right;
    throw std::invalid_argument("center-strategy must be left, mid, or right");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("format must be text, csv, or json");
}

std::optional<double> resolve_reference(const std::string& choice, const RealFn& f, double a,
                                        double b) {
    if (choice == "none") return std::nullopt;
    if (choice == "auto") return reference_integral(f, a, b);
    try {
        std::size_t used = 0;
        const double v = std::stod(choice, &used);
        if (used != choice.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("reference must be auto, none, or a number");
    }
}

QuadPlan build_plan(const IntegrateOptions& opt) {
    QuadPlan plan;
    plan.a = opt.a;
    plan.b = opt.b;

    if (!opt.breaks.empty()) {
        plan.breaks = opt.breaks;
    } else if (opt.centers.empty() && opt.n_sub > 1) {
        const double h = (opt.b - opt.a) / opt.n_sub;
        for (int i = 1; i < opt.n_sub; ++i) plan.breaks.push_back(opt.a + i * h);
    } else if (opt.centers.size() > 1) {
        throw std::invalid_argument(
            "several centers need matching --breaks (or use --n-sub with a strategy)");
    }
    const std::size_t n_sub = plan.breaks.size() + 1;

    if (!opt.centers.empty()) {
        plan.centers = opt.centers;
    } else {
        const CenterStrategy strategy = parse_strategy(opt.strategy);
        for (std::size_t i = 0; i < n_sub; ++i) {
            const double lo = (i == 0) ? plan.a : plan.breaks[i - 1];
            const double hi = (i == n_sub - 1) ? plan.b : plan.breaks[i];
            switch (strategy) {
                case CenterStrategy::Left: plan.centers.push_back(lo); break;
                case CenterStrategy::Mid: plan.centers.push_back(lo + (hi - lo) / 2.0); break;
                case CenterStrategy::Right: plan.centers.push_back(hi); break;
            }
        }
    }

    if (!opt.orders.empty()) {
        plan.orders = opt.orders;
    } else {
        plan.orders.assign(n_sub, opt.order);
    }
    return plan;
}

IntegrationReport classical_report(const IntegrateOptions& opt, const RealFn& f) {
    if (opt.rule == "simpson" && opt.n_sub % 2 != 0) {
        throw std::invalid_argument("simpson: n_sub must be even");
    }
    IntegrationReport r;
    r.method = opt.rule;
    r.a = opt.a;
    r.b = opt.b;
    r.n_sub = opt.n_sub;
    if (!(opt.a < opt.b)) throw std::invalid_argument("requires a < b");
    if (opt.n_sub < 1) throw std::invalid_argument("n_sub must be >= 1");

    // Panel decomposition; the total is the ascending sum of the panels.
    const double h = (opt.b - opt.a) / opt.n_sub;
    if (opt.rule == "midpoint") {
        for (int i = 1; i <= opt.n_sub; ++i) {
            r.subinterval_values.push_back(h * f(opt.a + (i - 0.5) * h));
        }
    } else if (opt.rule == "trapezoid") {
        for (int i = 0; i < opt.n_sub; ++i) {
            r.subinterval_values.push_back(h * 0.5 * (f(opt.a + i * h) + f(opt.a + (i + 1) * h)));
        }
    } else { // simpson: one panel per node pair
        for (int i = 0; i < opt.n_sub; i += 2) {
            const double x0 = opt.a + i * h;
            r.subinterval_values.push_back(h / 3.0 * (f(x0) + 4.0 * f(x0 + h) + f(x0 + 2 * h)));
        }
    }
    for (std::size_t i = 1; i < r.subinterval_values.size(); ++i) {
        const double step = (opt.b - opt.a) / r.subinterval_values.size();
        r.breaks.push_back(opt.a + i * step);
    }
    double total = 0.0;
    for (double v : r.subinterval_values) total += v;
    r.total = total;
    return r;
}

int run_integrate(const IntegrateOptions& opt) {
    const OutputFormat fmt = parse_format(opt.format);
    const ExprPtr e = parse(opt.expr);
    const RealFn rf = [e](double x) { return eval_real(*e, x); };

    IntegrationReport report;
    if (opt.rule == "auto") {
        const JetFn jf = [e](const Jet& u) { return eval_jet(*e, u); };
        QuadPlan plan = build_plan(opt);
        plan.validate();
        int max_order = 1;
        for (int k : plan.orders) max_order = std::max(max_order, k);
        const BetaParams beta =
            opt.beta.empty() ? BetaParams::canonical(max_order)
                             : BetaParams(opt.beta).resized(max_order);
        report = integrate_composite(jf, plan, beta);
    } else if (opt.rule == "midpoint" || opt.rule == "trapezoid" || opt.rule == "simpson") {
        report = classical_report(opt, rf);
    } else {
        throw std::invalid_argument("rule must be auto, midpoint, trapezoid, or simpson");
    }
    // resolved after the run so integrand failures surface with their own context
    if (auto ref = resolve_reference(opt.reference, rf, opt.a, opt.b)) {
        report.reference = *ref;
        report.signed_error = report.total - *ref;
    }

    std::cout << render(report, fmt);
    return 0;
}

int run_extend(const ExtendOptions& opt) {
    const ExprPtr e = parse(opt.expr);
    const BetaParams beta = opt.beta.empty() ? BetaParams::canonical(opt.order)
                                             : BetaParams(opt.beta).resized(opt.order);
    const Jet y = eval_jet(*e, omega(opt.center, beta));
    std::cout << '(' << join_sig(y.coeffs(), 10) << ")\n";
    return 0;
}

int run_reproduce() {
    const auto rows = reproduce_rows();
    std::cout << render_reproduce(rows);
    for (const auto& row : rows) {
        if (!row.ok()) return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taylor-polynomial automatic integration with classical baselines"};
    app.require_subcommand(1);
    app.footer(kGrammarHelp);

    IntegrateOptions iopt;
    CLI::App* integrate = app.add_subcommand(
        "integrate", "Integrate an expression over [a, b] by the selected rule");
    integrate->add_option("--expr", iopt.expr, "Integrand, e.g. \"exp(x^2)\"")->required();
    integrate->add_option("--a", iopt.a, "Lower bound")->required();
    integrate->add_option("--b", iopt.b, "Upper bound")->required();
    auto* order_opt =
        integrate->add_option("--order", iopt.order, "Taylor order for every subinterval (default 5)");
    integrate->add_option("--orders", iopt.orders, "Per-subinterval Taylor orders")
        ->delimiter(',')
        ->excludes(order_opt);
    integrate->add_option("--breaks", iopt.breaks, "Interior breakpoints x1<x2<...")
        ->delimiter(',');
    auto* centers_opt =
        integrate->add_option("--centers", iopt.centers, "Expansion centers, one per subinterval")
            ->delimiter(',');
    integrate->add_option("--center-strategy", iopt.strategy,
                          "left|mid|right when --centers is omitted (default mid)")
        ->excludes(centers_opt);
    integrate->add_option("--beta", iopt.beta, "Embedding parameters; beta_1 must be nonzero")
        ->delimiter(',');
    integrate->add_option("--rule", iopt.rule, "auto|midpoint|trapezoid|simpson (default auto)");
    integrate->add_option("--n-sub", iopt.n_sub, "Subinterval count (default 1)");
    integrate->add_option("--format", iopt.format, "text|json|csv (default text)");
    integrate->add_option("--reference", iopt.reference,
                          "auto|none|<real>: error baseline (default auto)");

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "Recompute the frozen golden values for exp(x^2) on [0, 2]");

    ExtendOptions eopt;
    CLI::App* extend = app.add_subcommand(
        "extend", "Print the jet extension of an expression at a center");
    extend->add_option("--expr", eopt.expr, "Expression")->required();
    extend->add_option("--center", eopt.center, "Expansion point")->required();
    extend->add_option("--order", eopt.order, "Jet order (default 5)");
    extend->add_option("--beta", eopt.beta, "Embedding parameters (default 1,0,...)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (integrate->parsed()) return run_integrate(iopt);
        if (extend->parsed()) return run_extend(eopt);
        if (reproduce->parsed()) return run_reproduce();
    } catch (const DomainError& err) {
        std::cerr << "domain error: " << err.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
