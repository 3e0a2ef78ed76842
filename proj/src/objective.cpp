#include "decomp/objective.hpp"

#include <stdexcept>

namespace decomp {

void ObjectiveSpec::validate_for(int r, int k) const {
    switch (kind) {
        case Kind::CliqueSum:
            return;
        case Kind::MixedSum:
            if (r != 2)
                throw std::invalid_argument("objective: chi_m requires uniformity 2");
            if (m < 0 || m > k)
                throw std::invalid_argument("objective: chi_m needs 0 <= m <= k");
            return;
        case Kind::ConvexSum:
            if (r != 2)
                throw std::invalid_argument("objective: a_r requires uniformity 2");
            if (coeff < Rational(0) || coeff > Rational(1))
                throw std::invalid_argument("objective: a_r coefficient must lie in [0,1]");
            return;
    }
    throw std::invalid_argument("objective: unknown kind");
}

std::string ObjectiveSpec::to_string() const {
    switch (kind) {
        case Kind::CliqueSum: return "omega";
        case Kind::MixedSum: return "chi_m:" + std::to_string(m);
        case Kind::ConvexSum: return "a_r:" + decomp::to_string(coeff);
    }
    return "?";
}

ObjectiveSpec ObjectiveSpec::parse(const std::string& text) {
    if (text == "omega") return clique_sum();
    const std::string chi_prefix = "chi_m:";
    const std::string ar_prefix = "a_r:";
    if (text.rfind(chi_prefix, 0) == 0) {
        std::string arg = text.substr(chi_prefix.size());
        std::size_t used = 0;
        int m = std::stoi(arg, &used);
        if (used != arg.size() || m < 0)
            throw std::invalid_argument("objective: bad chi_m argument '" + arg + "'");
        return mixed_sum(m);
    }
    if (text.rfind(ar_prefix, 0) == 0)
        return convex_sum(parse_rational(text.substr(ar_prefix.size())));
    throw std::invalid_argument("objective: unknown spec '" + text + "'");
}

}  // namespace decomp
