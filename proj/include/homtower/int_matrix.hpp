#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "homtower/common.hpp"

namespace homtower {

// Dense matrix of exact integers.
class IntegerMatrix {
public:
    IntegerMatrix(long rows, long cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), mpz_class(0)) {
        if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const mpz_class& at(long i, long j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    mpz_class& at(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<mpz_class>& data() const { return a_; }

    std::string to_text() const;  // aligned columns

private:
    long rows_;
    long cols_;
    std::vector<mpz_class> a_;
};

// Exact rank over Q via fraction-free elimination (equals the rank over Q_p).
long rank_over_Q(const IntegerMatrix& m);
long rank_over_Q_serial(const IntegerMatrix& m);

// Rank of M mod p.
long rank_over_Fp(const IntegerMatrix& m, long p);
long rank_over_Fp_serial(const IntegerMatrix& m, long p);

// Probabilistic fast path: rank modulo a word-sized prime. Never used by the
// acceptance suite; callers opt in explicitly.
long rank_mod_prime(const IntegerMatrix& m, std::uint64_t q);

// Elementary divisors d1 | d2 | ... (positive, ones included); the cokernel is
// (+) Z/d_i (+) Z^(cols - rank). gcd-driven reduction, cubic with coefficient
// growth, intended for the small matrices the reports need.
std::vector<mpz_class> integer_snf(const IntegerMatrix& m, long size_cap = 20000);

}  // namespace homtower
