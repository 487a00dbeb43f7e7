#pragma once

#include <string>
#include <vector>

namespace rotwalk {

// Generator tuple of the circle walk: d rotation angles, each reduced into
// [0,1), plus the textual spec it was built from (kept for reporting).
struct AlphaVector {
    std::vector<double> entries;
    std::string spec;

    int d() const { return static_cast<int>(entries.size()); }
};

// Accepted specs:
//   phi              golden ratio (sqrt(5)-1)/2
//   plastic          (g^-2, g^-1) with g the real root of x^3 - x - 1
//   sqrt:n1,n2,...   fractional parts of square roots of integers
//   dec:v1,v2,...    literal decimal values, reduced mod 1
// Throws ParseError on malformed specs, empty tuples, non-finite values.
AlphaVector parse_alpha(const std::string& spec);

// Real root of x^3 - x - 1 (~1.3247), to double precision.
double plastic_root();

}  // namespace rotwalk
