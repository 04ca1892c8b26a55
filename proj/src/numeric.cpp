#include "mcdm/numeric.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

namespace mcdm {

std::string formatFixed(double value, int dp) {
    char buf[64];
    int len = std::snprintf(buf, sizeof buf, "%.*f", dp, value);
    return std::string(buf, static_cast<std::size_t>(len));
}

double roundTo(double value, int dp) {
    std::string text = formatFixed(value, dp);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string formatShortest(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        return "0";
    }
    return std::string(buf, end);
}

} // namespace mcdm
