#include "spslice/linalg/charpoly.hpp"

#include <sstream>

namespace spslice {

std::string charpoly_string(const std::vector<GaussRat>& coeffs, const std::string& var)
{
    const std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k <= n; ++k) {
        const GaussRat& c = coeffs[k];
        if (c.is_zero()) continue;
        const std::size_t deg = n - k;
        std::string mono = deg == 0 ? "" : (deg == 1 ? var : var + "^" + std::to_string(deg));
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            coeff = mpq_class(abs(c.re())).get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << '-';
        if (mono.empty()) os << coeff;
        else if (coeff == "1") os << mono;
        else os << coeff << '*' << mono;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

} // namespace spslice
