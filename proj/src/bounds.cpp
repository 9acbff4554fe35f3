#include "homtower/bounds.hpp"

#include <numeric>

namespace homtower {

CyclicDecomposition decompose_finite_module(const SeriesMatrix& m) {
    DvrSnfResult snf = dvr_snf(m);
    if (!snf.certified || snf.free_columns != 0)
        throw InputError("module not certified finite at truncation degree " +
                         std::to_string(m.trunc_degree()));
    CyclicDecomposition dec;
    for (const ExtNat& v : snf.divisor_valuations) {
        if (v.value == 0) continue;  // unit divisor, trivial summand
        dec.exponents.push_back(v.value);
        dec.d_H += v.value;
        dec.m = std::max(dec.m, v.value);
    }
    return dec;
}

namespace {

long pow_check(long p, long j, long limit) {
    long v = 1;
    for (long i = 0; i < j; ++i) {
        if (v > limit / p) return limit + 1;  // saturate
        v *= p;
    }
    return v;
}

}  // namespace

long d_of_U(const CyclicDecomposition& dec, long p, long j) {
    if (j < 0) throw InputError("power index must be >= 0");
    long pj = pow_check(p, j, 1L << 60);
    if (pj <= dec.m)
        throw InputError("d_of_U requires p^j > m; have p^j = " +
                         std::to_string(pj) + ", m = " + std::to_string(dec.m));
    return dec.d_H + 1;
}

long d_of_U_direct(const SeriesMatrix& m, long p, long j) {
    if (j < 0) throw InputError("power index must be >= 0");
    const int D = m.trunc_degree();
    // (1+t)^(p^j) - 1 = t^(p^j) over F_p; zero mod t^D when p^j >= D, in which
    // case it already annihilates every certified-finite module at this
    // truncation.
    long pj = pow_check(p, j, 4L * D + 4);
    SeriesMatrix aug(m.prime(), D, m.rows() + m.cols(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long c = 0; c < m.cols(); ++c) aug.set(i, c, m.at(i, c));
    for (long c = 0; c < m.cols(); ++c) {
        TruncatedSeries rel(m.prime(), 1, D);
        if (pj < D) rel.set_coeff(static_cast<int>(pj), 1);
        aug.set(m.rows() + c, c, rel);
    }
    ExtNat dim = cokernel_fp_dim(aug);
    if (!dim.exact)
        throw InputError("module not certified finite at truncation degree " +
                         std::to_string(D));
    return dim.value + 1;
}

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        Rational r;
        if (slash == std::string::npos) {
            r.num = std::stol(text);
            r.den = 1;
        } else {
            r.num = std::stol(text.substr(0, slash));
            r.den = std::stol(text.substr(slash + 1));
        }
        if (r.num <= 0 || r.den <= 0)
            throw InputError("bound constant must be positive: " + text);
        long g = std::gcd(r.num, r.den);
        r.num /= g;
        r.den /= g;
        return r;
    } catch (const std::logic_error&) {
        throw InputError("cannot parse rational: " + text);
    }
}

bool wilson_check(long d_U, const WilsonBoundParams& params) {
    if (d_U < 0 || params.index < 1)
        throw InputError("wilson_check needs d_U >= 0 and index >= 1");
    // d_U <= (num/den) * sqrt(index)  <=>  (d_U * den)^2 <= num^2 * index
    mpz_class lhs = mpz_class(d_U) * params.k.den;
    lhs *= lhs;
    mpz_class rhs = mpz_class(params.k.num) * params.k.num * params.index;
    return lhs <= rhs;
}

std::pair<long, long> five_term_bounds(const FiveTermInput& in) {
    if (in.dim_H0 < 0 || in.dim_H1Q < 0 || in.dim_H2Q < 0)
        throw InputError("five_term_bounds needs non-negative dimensions");
    long upper = in.dim_H0 + in.dim_H1Q;
    long lower = std::max(0L, upper - in.dim_H2Q);
    return {lower, upper};
}

long coinvariant_dim_bound(long d_H, int n) {
    if (n < 1) throw InputError("rank must be >= 1");
    if (d_H < 0) throw InputError("d_H must be >= 0");
    long choose = static_cast<long>(n - 1) * (n - 2) / 2;
    return std::max(0L, d_H + choose - n + 1);
}

}  // namespace homtower
