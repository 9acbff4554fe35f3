#include "homtower/substitute.hpp"

namespace homtower {

std::vector<std::vector<TruncatedSeries>> substitute_character(
    const ModulePresentation& pres, const PadicInt& lam, bool axis_swap, int D,
    int K_out) {
    if (pres.n != 2)
        throw InputError("corank-one character substitution requires n = 2");
    if (lam.prime() != pres.p)
        throw InputError("character exponent prime differs from presentation");

    std::vector<std::vector<TruncatedSeries>> out;
    out.reserve(pres.relations.size());
    for (const auto& row : pres.relations) {
        std::vector<TruncatedSeries> srow;
        srow.reserve(row.size());
        for (const LaurentPoly& poly : row) {
            TruncatedSeries acc(pres.p, K_out, D);
            for (const auto& [exp, coeff] : poly.terms()) {
                long ex = exp[0], ey = exp[1];
                // exponent of (1+t) carried by this monomial
                PadicInt power = axis_swap ? lam.mul_int(ey).add_int(ex)
                                           : lam.mul_int(ex).add_int(ey);
                acc = acc + one_plus_t_pow(power, D, K_out).scale(coeff);
            }
            srow.push_back(acc);
        }
        out.push_back(std::move(srow));
    }
    return out;
}

TruncatedSeries substitute_poly(const LaurentPoly& poly,
                                const std::vector<TruncatedSeries>& subs) {
    if (static_cast<int>(subs.size()) != poly.rank())
        throw InputError("substitution needs one series per variable");
    if (subs.empty()) throw InputError("empty substitution");
    const long p = subs[0].prime();
    const int K = subs[0].coeff_precision();
    const int D = subs[0].trunc_degree();

    TruncatedSeries acc(p, K, D);
    for (const auto& [exp, coeff] : poly.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(p, K, D, coeff);
        for (size_t i = 0; i < subs.size(); ++i) {
            long e = exp[i];
            if (e == 0) continue;
            if (e > 0) {
                term = term * subs[i].pow(e);
            } else {
                term = term * series_inverse(subs[i]).pow(-e);
            }
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace homtower
