#include "rotwalk/alpha.hpp"

#include "rotwalk/errors.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

namespace rotwalk {

namespace {

double reduce_mod_1(double v) {
    double r = v - std::floor(v);
    if (r >= 1.0) r -= 1.0;   // v just below an integer can round up
    if (r < 0.0) r = 0.0;
    return r;
}

std::vector<std::string_view> split_list(std::string_view body) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) {
            items.push_back(body.substr(start));
            break;
        }
        items.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    return items;
}

double parse_double(std::string_view item) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
        throw ParseError("alpha: bad decimal literal '" + std::string(item) + "'");
    return v;
}

long long parse_int(std::string_view item) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
        throw ParseError("alpha: bad integer '" + std::string(item) + "'");
    return v;
}

}  // namespace

double plastic_root() {
    // Newton on x^3 - x - 1 from 1.3; converges in a handful of steps.
    double x = 1.3;
    for (int i = 0; i < 64; ++i) {
        const double f = x * x * x - x - 1.0;
        const double step = f / (3.0 * x * x - 1.0);
        x -= step;
        if (std::abs(step) < 1e-17) break;
    }
    return x;
}

AlphaVector parse_alpha(const std::string& spec) {
    AlphaVector a;
    a.spec = spec;

    const std::string_view s{spec};
    if (s == "phi") {
        a.entries = {reduce_mod_1((std::sqrt(5.0) - 1.0) / 2.0)};
        return a;
    }
    if (s == "plastic") {
        const double g = plastic_root();
        a.entries = {reduce_mod_1(1.0 / (g * g)), reduce_mod_1(1.0 / g)};
        return a;
    }
    if (s.starts_with("sqrt:")) {
        for (const auto item : split_list(s.substr(5))) {
            const long long n = parse_int(item);
            const double r = std::sqrt(static_cast<double>(n));
            if (!std::isfinite(r))
                throw ParseError("alpha: sqrt of '" + std::string(item) + "' is not finite");
            a.entries.push_back(reduce_mod_1(r));
        }
        return a;
    }
    if (s.starts_with("dec:")) {
        for (const auto item : split_list(s.substr(4))) {
            const double v = parse_double(item);
            if (!std::isfinite(v))
                throw ParseError("alpha: literal '" + std::string(item) + "' is not finite");
            a.entries.push_back(reduce_mod_1(v));
        }
        return a;
    }
    throw ParseError("alpha: unrecognized spec '" + spec +
                     "' (expected phi | plastic | sqrt:... | dec:...)");
}

}  // namespace rotwalk
