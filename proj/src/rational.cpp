#include "decomp/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace decomp {

std::string to_string(const Rational& value) {
    std::string out = std::to_string(value.numerator());
    if (value.denominator() != 1) {
        out += '/';
        out += std::to_string(value.denominator());
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long p = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return Rational(p);
        }
        std::size_t used = 0;
        long long p = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("bad numerator");
        std::string den = text.substr(slash + 1);
        long long q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument("bad denominator");
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
}

}  // namespace decomp
