#include "rotwalk/numerics.hpp"

#include <stdexcept>

namespace rotwalk {

double big_ratio(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::invalid_argument("big_ratio: denominator must be positive");
    if (num < 0 || num > den) throw std::invalid_argument("big_ratio: need 0 <= num <= den");
    if (num == 0) return 0.0;

    // Scale the quotient to ~64 significant bits, convert, then undo the
    // scaling exactly with ldexp.
    const long bn = static_cast<long>(boost::multiprecision::msb(num));
    const long bd = static_cast<long>(boost::multiprecision::msb(den));
    long shift = bd - bn + 64;
    if (shift < 0) shift = 0;
    const BigInt q = (num << static_cast<unsigned>(shift)) / den;
    return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

}  // namespace rotwalk
