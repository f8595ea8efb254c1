#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kappa0 {

// Exact rational arithmetic everywhere a weight or an exit weight is
// computed. Floats are only used in the simulator's sampling loop and in
// statistical summaries.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p/q", integer literals, and decimal/scientific literals
// ("0.1" parses to exactly 1/10). Throws std::invalid_argument.
Rat rat_from_string(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

}  // namespace kappa0
