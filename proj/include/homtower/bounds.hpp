#pragma once

#include <vector>

#include "homtower/common.hpp"
#include "homtower/series_matrix.hpp"

namespace homtower {

// Cyclic decomposition of a finite F_p[[t]]-module: summands F_p[[t]]/(t^i_j).
struct CyclicDecomposition {
    std::vector<long> exponents;  // i_1 <= ... <= i_s, all >= 1
    long m = 0;                   // max exponent (0 for the trivial module)
    long d_H = 0;                 // sum of exponents = F_p-dimension
};

// Requires a certified finite cokernel (dvr_snf certified, no free part).
CyclicDecomposition decompose_finite_module(const SeriesMatrix& m);

// Generator count of the split extension by the p^j-th power of the acting
// generator, via the decomposition: sum of exponents + 1. Valid only when
// p^j > m; the boundary case is served by d_of_U_direct.
long d_of_U(const CyclicDecomposition& dec, long p, long j);

// Same quantity computed directly: adjoin the relation (1+t)^(p^j) - 1 to the
// module and take the cokernel dimension, + 1. Defined for every j.
long d_of_U_direct(const SeriesMatrix& m, long p, long j);

// Positive rational bound constant.
struct Rational {
    long num = 1;
    long den = 1;
};

Rational parse_rational(const std::string& text);

struct WilsonBoundParams {
    Rational k;
    long index = 1;  // [G : U]
};

// d_U <= k * sqrt(index), checked exactly in integers.
bool wilson_check(long d_U, const WilsonBoundParams& params);

struct FiveTermInput {
    long dim_H0 = 0;
    long dim_H1Q = 0;
    long dim_H2Q = 0;
};

// Sandwich for the generator count of an extension:
//   dim_H0 + dim_H1Q - dim_H2Q <= d(G) <= dim_H0 + dim_H1Q (lower clamped at 0).
std::pair<long, long> five_term_bounds(const FiveTermInput& in);

// d_H + C(n-1, 2) - n + 1, clamped at 0.
long coinvariant_dim_bound(long d_H, int n);

}  // namespace homtower
