#include "autoint/report.hpp"

#include <algorithm>
#include <cmath>

#include "autoint/classical.hpp"
#include "autoint/expr.hpp"
#include "autoint/format.hpp"

namespace autoint {

namespace {

std::string order_field(const std::vector<int>& orders) {
    if (orders.empty()) return "";
    std::string out = std::to_string(orders[0]);
    const bool uniform = std::all_of(orders.begin(), orders.end(),
                                     [&](int k) { return k == orders[0]; });
    if (uniform) return out;
    for (std::size_t i = 1; i < orders.size(); ++i) out += ';' + std::to_string(orders[i]);
    return out;
}

void append_json_array(std::string& out, const std::vector<double>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += fmt_sig(v[i], 17);
    }
    out += ']';
}

} // namespace

std::string render_text(const IntegrationReport& r) {
    std::string out;
    out += "method       " + r.method + "\n";
    out += "interval     [" + fmt_sig(r.a, 10) + ", " + fmt_sig(r.b, 10) + "]\n";
    if (!r.beta.empty()) out += "beta         " + join_sig(r.beta, 10) + "\n";
    if (!r.orders.empty()) {
        out += "orders       ";
        for (std::size_t i = 0; i < r.orders.size(); ++i) {
            if (i > 0) out += ", ";
            out += std::to_string(r.orders[i]);
        }
        out += "\n";
    }
    if (!r.centers.empty()) out += "centers      " + join_sig(r.centers, 10) + "\n";
    if (r.centers.empty() && r.n_sub > 0) out += "n_sub        " + std::to_string(r.n_sub) + "\n";
    if (r.subinterval_values.size() > 1) {
        out += "subintervals\n";
        for (std::size_t i = 0; i < r.subinterval_values.size(); ++i) {
            const double lo = (i == 0) ? r.a : r.breaks[i - 1];
            const double hi = (i + 1 == r.subinterval_values.size()) ? r.b : r.breaks[i];
            out += "  " + std::to_string(i + 1) + "  [" + fmt_sig(lo, 10) + ", " +
                   fmt_sig(hi, 10) + "]  " + fmt_sig(r.subinterval_values[i], 10) + "\n";
        }
    }
    out += "total        " + fmt_sig(r.total, 10) + "\n";
    if (r.reference) out += "reference    " + fmt_sig(*r.reference, 10) + "\n";
    if (r.signed_error) out += "error        " + fmt_sig(*r.signed_error, 10) + "\n";
    return out;
}

std::string render_csv(const IntegrationReport& r) {
    std::string out = "method,a,b,n_sub,order,total,reference,error\n";
    out += r.method + ',' + fmt_sig(r.a, 17) + ',' + fmt_sig(r.b, 17) + ',';
    out += std::to_string(r.n_sub) + ',';
    out += order_field(r.orders) + ',';
    out += fmt_sig(r.total, 17) + ',';
    out += r.reference ? fmt_sig(*r.reference, 17) : "";
    out += ',';
    out += r.signed_error ? fmt_sig(*r.signed_error, 17) : "";
    out += '\n';
    return out;
}

std::string render_json(const IntegrationReport& r) {
    std::string out = "{\"method\":\"" + r.method + "\",\"plan\":{";
    out += "\"a\":" + fmt_sig(r.a, 17) + ",\"b\":" + fmt_sig(r.b, 17) + ",\"breaks\":";
    append_json_array(out, r.breaks);
    out += ",\"centers\":";
    append_json_array(out, r.centers);
    out += ",\"orders\":[";
    for (std::size_t i = 0; i < r.orders.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(r.orders[i]);
    }
    out += "],\"beta\":";
    append_json_array(out, r.beta);
    out += "},\"subintervals\":";
    append_json_array(out, r.subinterval_values);
    out += ",\"total\":" + fmt_sig(r.total, 17);
    out += ",\"reference\":" + (r.reference ? fmt_sig(*r.reference, 17) : "null");
    out += ",\"error\":" + (r.signed_error ? fmt_sig(*r.signed_error, 17) : "null");
    out += "}\n";
    return out;
}

std::string render(const IntegrationReport& r, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: return render_text(r);
        case OutputFormat::Csv: return render_csv(r);
        case OutputFormat::Json: return render_json(r);
    }
    return {};
}

std::vector<ReproduceRow> reproduce_rows() {
    const ExprPtr e = parse("exp(x^2)");
    const JetFn jf = [e](const Jet& u) { return eval_jet(*e, u); };
    const RealFn rf = [e](double x) { return eval_real(*e, x); };
    const BetaParams beta = BetaParams::canonical(5);

    const auto composite = [&](std::vector<double> breaks, std::vector<double> centers) {
        QuadPlan plan;
        plan.a = 0.0;
        plan.b = 2.0;
        plan.breaks = std::move(breaks);
        plan.centers = std::move(centers);
        plan.orders.assign(plan.centers.size(), 5);
        return integrate_composite(jf, plan, beta).total;
    };

    std::vector<ReproduceRow> rows;
    rows.push_back({"auto order=5 centers=0", composite({}, {0.0}), 7.866666667, 1e-8});
    rows.push_back({"auto order=5 centers=0.9", composite({}, {0.9}), 14.081438, 5e-4});
    rows.push_back({"auto order=5 breaks=1.38 centers=0,1.38",
                    composite({1.38}, {0.0, 1.38}), 15.82475528, 5e-4});
    rows.push_back({"auto order=5 breaks=1.38 centers=0.65,1.38",
                    composite({1.38}, {0.65, 1.38}), 16.13772199, 5e-4});
    rows.push_back({"auto order=5 breaks=1.38,1.39 centers=0.65,1.38,1.69",
                    composite({1.38, 1.39}, {0.65, 1.38, 1.69}), 16.40544197, 5e-4});
    const struct {
        const char* rule;
        int n_sub;
        double expected;
    } baselines[] = {
        {"midpoint", 8, 15.9056767},  {"trapezoid", 8, 17.5650858},
        {"simpson", 8, 16.5385947},   {"midpoint", 16, 16.3118539},
        {"trapezoid", 16, 16.7353812},
    };
    for (const auto& row : baselines) {
        const RuleResult res = run_rule(row.rule, rf, 0.0, 2.0, row.n_sub);
        rows.push_back({res.rule + " n=" + std::to_string(res.n_sub), res.value, row.expected,
                        1e-6});
    }
    return rows;
}

std::string render_reproduce(const std::vector<ReproduceRow>& rows) {
    std::string out = "integral of exp(x^2) over [0, 2]\n\n";
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    for (const auto& row : rows) {
        out += row.ok() ? "PASS  " : "FAIL  ";
        out += row.name + std::string(width - row.name.size() + 2, ' ');
        out += fmt_sig(row.computed, 10) + "  expected " + fmt_sig(row.expected, 10);
        out += "  |d| " + fmt_sig(row.delta(), 3) + " (tol " + fmt_sig(row.tolerance, 3) + ")\n";
    }
    const bool all_ok = std::all_of(rows.begin(), rows.end(),
                                    [](const ReproduceRow& r) { return r.ok(); });
    out += all_ok ? "\nall values within tolerance\n" : "\nsome values out of tolerance\n";
    return out;
}

} // namespace autoint
