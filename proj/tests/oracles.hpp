#pragma once

// Independent oracles for the test suites. Everything here recomputes
// expected values through a different route than the library code under test:
// plain convolution on coefficient vectors, exact integer binomials, and
// flattened F_p linear algebra.

#include <gmpxx.h>

#include <vector>

#include "homtower/common.hpp"
#include "homtower/kernels.hpp"
#include "homtower/series.hpp"
#include "homtower/series_matrix.hpp"

namespace oracles {

using homtower::SeriesMatrix;
using homtower::TruncatedSeries;

// Schoolbook convolution of coefficient vectors mod m, truncated at D.
inline std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b,
                                       const mpz_class& m, int D) {
    std::vector<mpz_class> r(static_cast<size_t>(D), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < static_cast<size_t>(D) && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
            mpz_mod(r[i + j].get_mpz_t(), r[i + j].get_mpz_t(), m.get_mpz_t());
        }
    return r;
}

inline std::vector<mpz_class> coeffs_of(const TruncatedSeries& s) {
    std::vector<mpz_class> v;
    for (int j = 0; j < s.trunc_degree(); ++j) v.push_back(s.coeff(j));
    return v;
}

// Exact integer binomial C(lam, j) for an integer lam of either sign.
inline mpz_class integer_binomial(long lam, long j) {
    mpz_class num = 1;
    for (long i = 0; i < j; ++i) num *= mpz_class(lam - i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

// (1+t)^lam mod p^K for an integer lam, through exact integer binomials
// (negative lam included) -- an independent route from the p-adic product
// formula in the library.
inline std::vector<mpz_class> one_plus_t_pow_int(long lam, long p, int K, int D) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(K));
    std::vector<mpz_class> r(static_cast<size_t>(D));
    for (long j = 0; j < D; ++j) {
        r[static_cast<size_t>(j)] = integer_binomial(lam, j);
        mpz_mod(r[static_cast<size_t>(j)].get_mpz_t(),
                r[static_cast<size_t>(j)].get_mpz_t(), m.get_mpz_t());
    }
    return r;
}

// (1+t)^lam for lam >= 0 by repeated polynomial multiplication.
inline std::vector<mpz_class> one_plus_t_pow_product(long lam, long p, int K,
                                                     int D) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(K));
    std::vector<mpz_class> acc(static_cast<size_t>(D), mpz_class(0));
    acc[0] = 1;
    std::vector<mpz_class> base(static_cast<size_t>(D), mpz_class(0));
    base[0] = 1;
    if (D > 1) base[1] = 1;
    for (long i = 0; i < lam; ++i) acc = convolve(acc, base, m, D);
    return acc;
}

// F_p-dimension of the truncated cokernel of a series matrix, by flattening
// the multiplication action into a (rows*D) x (cols*D) matrix over F_p and
// row-reducing with the serial kernel. Rows are relations, columns are
// generators; every t-multiple of every relation is a row.
inline long flatten_fp_dim(const SeriesMatrix& m) {
    const int D = m.trunc_degree();
    const long p = m.prime();
    const long R = m.rows() * D;
    const long C = m.cols() * D;
    std::vector<std::uint64_t> a(static_cast<size_t>(R) * C, 0);
    for (long i = 0; i < m.rows(); ++i)
        for (int k = 0; k < D; ++k) {
            long row = i * D + k;
            for (long c = 0; c < m.cols(); ++c)
                for (int d = 0; d + k < D; ++d) {
                    // coefficient of t^(d+k) in t^k * M[i][c]
                    unsigned long v = m.at(i, c).coeff(d).get_ui();
                    a[static_cast<size_t>(row) * C + c * D + d + k] = v % p;
                }
        }
    long rank = homtower::kernels::fp_rank_serial(a, R, C,
                                                  static_cast<std::uint64_t>(p));
    return C - rank;
}

// Random polynomial of degree < deg with unit constant term when unit=true.
inline TruncatedSeries random_series(homtower::SplitMix64& rng, long p, int D,
                                     int deg, bool unit) {
    TruncatedSeries s(p, 1, D);
    for (int j = 0; j < deg && j < D; ++j)
        s.set_coeff(j, static_cast<long>(rng.below(static_cast<std::uint64_t>(p))));
    if (unit) {
        long c0 = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(p - 1)));
        s.set_coeff(0, c0);
    }
    return s;
}

// k x k matrix with cokernel (+) F_p[[t]]/(t^e_i): unit lower-triangular *
// diag(t^e) * unit upper-triangular.
inline SeriesMatrix random_finite_module(homtower::SplitMix64& rng, long p,
                                         int D, const std::vector<int>& exps) {
    const long k = static_cast<long>(exps.size());
    SeriesMatrix diag(p, D, k, k);
    for (long i = 0; i < k; ++i)
        diag.set(i, i,
                 TruncatedSeries::monomial(p, 1, D, exps[static_cast<size_t>(i)], 1));

    SeriesMatrix lo(p, D, k, k), up(p, D, k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            if (i == j) {
                lo.set(i, j, random_series(rng, p, D, 1, true));
                up.set(i, j, random_series(rng, p, D, 1, true));
            } else if (i > j) {
                lo.set(i, j, random_series(rng, p, D, 4, false));
            } else {
                up.set(i, j, random_series(rng, p, D, 4, false));
            }
        }

    auto mul = [&](const SeriesMatrix& a, const SeriesMatrix& b) {
        SeriesMatrix r(p, D, k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) {
                TruncatedSeries acc(p, 1, D);
                for (long t = 0; t < k; ++t) acc = acc + a.at(i, t) * b.at(t, j);
                r.set(i, j, acc);
            }
        return r;
    };
    return mul(mul(lo, diag), up);
}

// Deterministic prime in (2^30, 2^31) for the modular rank oracle.
inline std::uint64_t random_prime_31(homtower::SplitMix64& rng) {
    mpz_class start = mpz_class(1073741824) +  // 2^30
                      static_cast<unsigned long>(rng.below(1073741823ULL));
    mpz_class pr;
    mpz_nextprime(pr.get_mpz_t(), start.get_mpz_t());
    return pr.get_ui();
}

}  // namespace oracles
