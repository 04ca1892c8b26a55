#pragma once

#include <string>

namespace mcdm {

// Fixed-point decimal string with `dp` digits after the point; the decimal
// conversion is correctly rounded with ties to even.
std::string formatFixed(double value, int dp);

// `value` rounded to `dp` decimal digits, same convention as formatFixed.
double roundTo(double value, int dp);

// Shortest decimal string that parses back to exactly `value`.
std::string formatShortest(double value);

} // namespace mcdm
