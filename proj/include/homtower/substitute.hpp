#pragma once

#include <vector>

#include "homtower/laurent.hpp"
#include "homtower/padic.hpp"
#include "homtower/series.hpp"

namespace homtower {

// Substitution along a corank-one character of Q = Zp^2. For the subgroup
// generated by x*y^(-lambda) this sends x -> (1+t)^lambda and y -> 1+t;
// axis_swap selects the subgroup generated by y*x^(-lambda) instead, sending
// y -> (1+t)^lambda and x -> 1+t. A monomial c*x^e*y^f therefore maps to
// c*(1+t)^(lambda*e + f) (exponents combined p-adically). Reducing the result
// mod p presents the coinvariants of the module along that subgroup.
std::vector<std::vector<TruncatedSeries>> substitute_character(
    const ModulePresentation& pres, const PadicInt& lam, bool axis_swap, int D,
    int K_out);

// Substitutes an explicit series for every variable; negative exponents
// require the substituted series to be units.
TruncatedSeries substitute_poly(const LaurentPoly& poly,
                                const std::vector<TruncatedSeries>& subs);

}  // namespace homtower
