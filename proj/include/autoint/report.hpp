#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "autoint/integrate.hpp"

namespace autoint {

enum class OutputFormat { Text, Csv, Json };

/// Text table at 10 significant digits.
std::string render_text(const IntegrationReport& r);

/// Single CSV record under the header
///   method,a,b,n_sub,order,total,reference,error
/// Numbers carry 17 significant digits; absent reference/error are empty
/// fields; mixed per-subinterval orders are joined with ';'.
std::string render_csv(const IntegrationReport& r);

/// {"method", "plan":{"a","b","breaks","centers","orders","beta"},
///  "subintervals", "total", "reference", "error"} with numbers at 17
/// significant digits (bit-exact round trip); absent values are null.
std::string render_json(const IntegrationReport& r);

std::string render(const IntegrationReport& r, OutputFormat fmt);

/// One golden-value row of the `reproduce` table.
struct ReproduceRow {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;

    double delta() const { return std::abs(computed - expected); }
    bool ok() const { return delta() <= tolerance; }
};

/// Recomputes the frozen golden values for integral of exp(x^2) over [0, 2]:
/// five order-5 automatic runs with hand-picked centers plus the classical
/// baselines M(8), T(8), S(8), M(16), T(16).
std::vector<ReproduceRow> reproduce_rows();

std::string render_reproduce(const std::vector<ReproduceRow>& rows);

} // namespace autoint
