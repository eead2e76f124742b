#pragma once

#include <string>
#include <vector>

namespace autoint {

/// %.{digits}g rendering in the classic locale. 17 digits round-trips a
/// double exactly; 10 matches the display precision used by the CLI.
std::string fmt_sig(double value, int digits);

std::string join_sig(const std::vector<double>& values, int digits,
                     const std::string& sep = ", ");

} // namespace autoint
