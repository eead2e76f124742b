#include "autoint/format.hpp"

#include <cstdio>

namespace autoint {

std::string fmt_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

std::string join_sig(const std::vector<double>& values, int digits, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += fmt_sig(values[i], digits);
    }
    return out;
}

} // namespace autoint
