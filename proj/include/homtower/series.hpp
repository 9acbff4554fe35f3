#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "homtower/common.hpp"
#include "homtower/padic.hpp"

namespace homtower {

// Univariate power series over Z/p^K known modulo t^D (K = 1 means F_p).
// Immutable value semantics; mixed-parameter arithmetic is rejected.
class TruncatedSeries {
public:
    TruncatedSeries(long p, int coeff_precision, int trunc_degree);

    static TruncatedSeries constant(long p, int K, int D, const mpz_class& c);
    static TruncatedSeries one_plus_t(long p, int K, int D);
    static TruncatedSeries monomial(long p, int K, int D, int degree,
                                    const mpz_class& c);

    long prime() const { return p_; }
    int coeff_precision() const { return k_; }
    int trunc_degree() const { return d_; }
    const mpz_class& coeff_modulus() const { return mod_; }
    const mpz_class& coeff(int j) const { return c_[j]; }

    void set_coeff(int j, const mpz_class& v);  // builder use; reduces mod p^K

    bool is_zero() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);

    TruncatedSeries add_int(long c) const;
    TruncatedSeries scale(const mpz_class& c) const;

    // Non-negative integer power by repeated squaring.
    TruncatedSeries pow(long e) const;

    // Coefficients reduced to a lower precision (typically mod p).
    TruncatedSeries reduced(int K) const;

    bool operator==(const TruncatedSeries&) const = default;

    std::string to_string() const;  // "c0 + c1*t + ... + O(t^D)"

private:
    long p_;
    int k_;
    int d_;
    mpz_class mod_;
    std::vector<mpz_class> c_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; requires a unit constant term.
TruncatedSeries series_inverse(const TruncatedSeries& a);

// (1+t)^lambda for a p-adic exponent: coefficient of t^j is C(lambda, j)
// reduced to K_out. Requires p^K > D*p and K_out <= K - max_{j<D} v_p(j!).
TruncatedSeries one_plus_t_pow(const PadicInt& lam, int D, int K_out);

// Smallest j with a nonzero coefficient, or "at least D" if none stored.
ExtNat series_valuation(const TruncatedSeries& a);

// Precision a p-adic exponent must carry so that one_plus_t_pow(lam, D, K_out)
// is accepted.
int required_exponent_precision(long p, int D, int K_out);

}  // namespace homtower
