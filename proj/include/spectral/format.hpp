#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include "spectral/errors.hpp"

namespace spectral {

/// Shortest decimal string with `sig` significant figures ("%.{sig}g").
inline std::string format_sig(double v, int sig) {
    if (sig < 1 || sig > 17)
        throw DegenerateInput("format_sig: precision must be between 1 and 17");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

/// The double nearest to `v` rounded to `sig` significant figures. Used when
/// embedding display-precision numbers in structured output so that JSON and
/// text renderings agree.
inline double round_sig(double v, int sig) {
    return std::strtod(format_sig(v, sig).c_str(), nullptr);
}

/// Full-precision round-trippable rendering, for matrix payloads.
inline std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace spectral
