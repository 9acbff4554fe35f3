#include "homtower/series_matrix.hpp"

#include <algorithm>

#include "homtower/kernels.hpp"

namespace homtower {

SeriesMatrix::SeriesMatrix(long p, int D, long rows, long cols)
    : p_(p), d_(D), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
         TruncatedSeries(p, 1, D)) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

void SeriesMatrix::set(long i, long j, const TruncatedSeries& s) {
    if (s.prime() != p_ || s.trunc_degree() != d_ || s.coeff_precision() != 1)
        throw InputError("series matrix entry has mismatched parameters");
    e_[static_cast<size_t>(i) * cols_ + j] = s;
}

namespace {

// Working entry: coefficients mod p, certified below degree `cert`
// (coefficients at degrees >= cert are kept at zero).
struct Ent {
    std::vector<long> c;
    int cert;
};

// Exact valuation if a nonzero certified coefficient exists, otherwise the
// certification degree as a lower bound.
ExtNat val_of(const Ent& e) {
    for (int j = 0; j < e.cert; ++j)
        if (e.c[static_cast<size_t>(j)] != 0) return ExtNat::exactly(j);
    return ExtNat::at_least(e.cert);
}

long val_lb(const Ent& e) {
    ExtNat v = val_of(e);
    return v.value;
}

Ent shift_down(const Ent& e, int v, int D) {
    Ent r;
    r.c.assign(static_cast<size_t>(D), 0);
    r.cert = std::max(0, e.cert - v);
    for (int j = 0; j < r.cert; ++j)
        r.c[static_cast<size_t>(j)] = e.c[static_cast<size_t>(j + v)];
    return r;
}

Ent mul(const Ent& a, const Ent& b, long p, int D) {
    Ent r;
    r.c.assign(static_cast<size_t>(D), 0);
    r.cert = std::min(
        {D, static_cast<int>(a.cert + val_lb(b)), static_cast<int>(b.cert + val_lb(a))});
    r.cert = std::max(0, r.cert);
    for (int i = 0; i < a.cert && i < r.cert; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < b.cert && i + j < r.cert; ++j)
            r.c[static_cast<size_t>(i + j)] =
                (r.c[static_cast<size_t>(i + j)] +
                 a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)]) % p;
    }
    for (int j = r.cert; j < D; ++j) r.c[static_cast<size_t>(j)] = 0;
    return r;
}

// a - b, certified where both are.
void sub_in_place(Ent& a, const Ent& b, long p) {
    a.cert = std::min(a.cert, b.cert);
    for (int j = 0; j < a.cert; ++j)
        a.c[static_cast<size_t>(j)] =
            ((a.c[static_cast<size_t>(j)] - b.c[static_cast<size_t>(j)]) % p + p) % p;
    for (size_t j = static_cast<size_t>(a.cert); j < a.c.size(); ++j) a.c[j] = 0;
}

// Inverse of a unit (v(e) = 0) up to its certification degree.
Ent invert_unit(const Ent& e, long p, int D) {
    Ent r;
    r.c.assign(static_cast<size_t>(D), 0);
    r.cert = e.cert;
    const long c0 = e.c[0];
    const long c0_inv = static_cast<long>(
        kernels::inv_mod(static_cast<std::uint64_t>(c0), static_cast<std::uint64_t>(p)));
    if (r.cert > 0) r.c[0] = c0_inv;
    for (int k = 1; k < r.cert; ++k) {
        long s = 0;
        for (int i = 1; i <= k; ++i)
            s = (s + e.c[static_cast<size_t>(i)] * r.c[static_cast<size_t>(k - i)]) % p;
        r.c[static_cast<size_t>(k)] = ((-c0_inv * s) % p + p) % p;
    }
    return r;
}

}  // namespace

DvrSnfResult dvr_snf(const SeriesMatrix& m) {
    const long p = m.prime();
    const int D = m.trunc_degree();

    std::vector<std::vector<Ent>> a(static_cast<size_t>(m.rows()));
    for (long i = 0; i < m.rows(); ++i) {
        a[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols()));
        for (long j = 0; j < m.cols(); ++j) {
            Ent& e = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            e.c.assign(static_cast<size_t>(D), 0);
            e.cert = D;
            for (int d = 0; d < D; ++d)
                e.c[static_cast<size_t>(d)] = m.at(i, j).coeff(d).get_si();
        }
    }

    std::vector<long> live_rows(static_cast<size_t>(m.rows()));
    std::vector<long> live_cols(static_cast<size_t>(m.cols()));
    for (long i = 0; i < m.rows(); ++i) live_rows[static_cast<size_t>(i)] = i;
    for (long j = 0; j < m.cols(); ++j) live_cols[static_cast<size_t>(j)] = j;

    DvrSnfResult res;
    long last_exact = 0;

    while (!live_rows.empty() && !live_cols.empty()) {
        // minimal certified valuation, ties broken row-major; also the
        // tightest lower bound among entries whose valuation is unknown
        long pr = -1, pc = -1;
        int best = D + 1;
        int unknown_bound = D + 1;
        for (size_t ri = 0; ri < live_rows.size(); ++ri)
            for (size_t ci = 0; ci < live_cols.size(); ++ci) {
                const Ent& e = a[static_cast<size_t>(live_rows[ri])]
                                [static_cast<size_t>(live_cols[ci])];
                ExtNat v = val_of(e);
                if (v.exact) {
                    if (v.value < best) {
                        best = static_cast<int>(v.value);
                        pr = static_cast<long>(ri);
                        pc = static_cast<long>(ci);
                    }
                } else {
                    unknown_bound = std::min(unknown_bound, static_cast<int>(v.value));
                }
            }

        if (pr < 0 || best > unknown_bound) {
            // cannot certify the next divisor: remaining slots become bounds
            long slots = static_cast<long>(std::min(live_rows.size(), live_cols.size()));
            long bound = std::max<long>(unknown_bound, last_exact);
            for (long s = 0; s < slots; ++s)
                res.divisor_valuations.push_back(ExtNat::at_least(bound));
            res.certified = false;
            res.free_columns = 0;
            return res;
        }

        const int v = best;
        res.divisor_valuations.push_back(ExtNat::exactly(v));
        last_exact = v;

        const long prow = live_rows[static_cast<size_t>(pr)];
        const long pcol = live_cols[static_cast<size_t>(pc)];
        Ent unit = shift_down(a[static_cast<size_t>(prow)][static_cast<size_t>(pcol)], v, D);
        Ent unit_inv = invert_unit(unit, p, D);

        live_rows.erase(live_rows.begin() + pr);
        live_cols.erase(live_cols.begin() + pc);

        for (long row : live_rows) {
            Ent& b = a[static_cast<size_t>(row)][static_cast<size_t>(pcol)];
            // quotient q with b = q * pivot; val(b) >= v by pivot minimality
            Ent q = mul(shift_down(b, v, D), unit_inv, p, D);
            if (val_lb(q) >= D) continue;  // certified zero quotient: row unchanged
            for (long col : live_cols) {
                Ent prod = mul(q, a[static_cast<size_t>(prow)][static_cast<size_t>(col)], p, D);
                sub_in_place(a[static_cast<size_t>(row)][static_cast<size_t>(col)], prod, p);
            }
        }
    }

    res.free_columns = static_cast<long>(live_cols.size());
    return res;
}

ExtNat cokernel_fp_dim(const DvrSnfResult& r, int D) {
    long sum = 0;
    for (const ExtNat& v : r.divisor_valuations) sum += v.value;
    if (r.certified && r.free_columns == 0) return ExtNat::exactly(sum);
    return ExtNat::at_least(sum + r.free_columns * D);
}

ExtNat cokernel_fp_dim(const SeriesMatrix& m) {
    return cokernel_fp_dim(dvr_snf(m), m.trunc_degree());
}

}  // namespace homtower
