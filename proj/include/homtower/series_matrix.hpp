#pragma once

#include <vector>

#include "homtower/common.hpp"
#include "homtower/series.hpp"

namespace homtower {

// Matrix over F_p[[t]] with a shared truncation degree; rows are relations,
// columns are module generators. Coefficient precision of every entry must
// be 1 (coefficients in F_p).
class SeriesMatrix {
public:
    SeriesMatrix(long p, int D, long rows, long cols);

    long prime() const { return p_; }
    int trunc_degree() const { return d_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const TruncatedSeries& at(long i, long j) const {
        return e_[static_cast<size_t>(i) * cols_ + j];
    }
    void set(long i, long j, const TruncatedSeries& s);

private:
    long p_;
    int d_;
    long rows_, cols_;
    std::vector<TruncatedSeries> e_;
};

// Elementary divisors t^{i_1} | t^{i_2} | ... of a matrix over the discrete
// valuation ring F_p[[t]], by minimal-valuation pivoting. Eliminating with a
// pivot of valuation v costs certified degrees in its row and column; the
// result downgrades to lower bounds instead of reporting uncertified values.
struct DvrSnfResult {
    std::vector<ExtNat> divisor_valuations;  // non-decreasing
    bool certified = true;                   // all divisors exact
    long free_columns = 0;                   // meaningful only when certified
};

DvrSnfResult dvr_snf(const SeriesMatrix& m);

// F_p-dimension of the cokernel: the sum of the divisor valuations when the
// result is certified with no free part, otherwise a lower bound.
ExtNat cokernel_fp_dim(const SeriesMatrix& m);
ExtNat cokernel_fp_dim(const DvrSnfResult& r, int D);

}  // namespace homtower
