#include "homtower/kernels.hpp"

#include "homtower/common.hpp"

namespace homtower::kernels {

namespace {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % q);
}

}  // namespace

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    // extended Euclid; q prime, a != 0 mod q
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(q), newr = static_cast<long long>(a % q);
    while (newr != 0) {
        long long quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw InternalError("inv_mod of a non-unit");
    if (t < 0) t += static_cast<long long>(q);
    return static_cast<std::uint64_t>(t);
}

long fp_rank(std::vector<std::uint64_t>& a, long rows, long cols,
             std::uint64_t q) {
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = c; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        const std::uint64_t inv = inv_mod(a[static_cast<size_t>(r) * cols + c], q);
        const std::uint64_t* src = &a[static_cast<size_t>(r) * cols];
#pragma omp parallel for schedule(static)
        for (long i = r + 1; i < rows; ++i) {
            std::uint64_t* dst = &a[static_cast<size_t>(i) * cols];
            std::uint64_t f = mul_mod(dst[c], inv, q);
            if (f == 0) continue;
            std::uint64_t neg = q - f;
            for (long j = c; j < cols; ++j)
                dst[j] = static_cast<std::uint64_t>(
                    (dst[j] + static_cast<unsigned __int128>(neg) * src[j]) % q);
        }
        ++r;
    }
    return r;
}

long fp_rank_serial(std::vector<std::uint64_t>& a, long rows, long cols,
                    std::uint64_t q) {
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = c; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        const std::uint64_t inv = inv_mod(a[static_cast<size_t>(r) * cols + c], q);
        const std::uint64_t* src = &a[static_cast<size_t>(r) * cols];
        for (long i = r + 1; i < rows; ++i) {
            std::uint64_t* dst = &a[static_cast<size_t>(i) * cols];
            std::uint64_t f = mul_mod(dst[c], inv, q);
            if (f == 0) continue;
            std::uint64_t neg = q - f;
            for (long j = c; j < cols; ++j)
                dst[j] = static_cast<std::uint64_t>(
                    (dst[j] + static_cast<unsigned __int128>(neg) * src[j]) % q);
        }
        ++r;
    }
    return r;
}

long bareiss_rank(std::vector<mpz_class>& a, long rows, long cols) {
    mpz_class prev = 1;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        const mpz_class pv = a[static_cast<size_t>(r) * cols + c];
        const mpz_class* src = &a[static_cast<size_t>(r) * cols];
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = r + 1; i < rows; ++i) {
            mpz_class* dst = &a[static_cast<size_t>(i) * cols];
            mpz_class aic = dst[c];
            mpz_class t;
            for (long j = c + 1; j < cols; ++j) {
                t = dst[j] * pv - aic * src[j];
                mpz_divexact(dst[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            dst[c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

long bareiss_rank_serial(std::vector<mpz_class>& a, long rows, long cols) {
    mpz_class prev = 1;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv) * cols + j],
                          a[static_cast<size_t>(r) * cols + j]);
        const mpz_class pv = a[static_cast<size_t>(r) * cols + c];
        const mpz_class* src = &a[static_cast<size_t>(r) * cols];
        mpz_class t, quot, rem;
        for (long i = r + 1; i < rows; ++i) {
            mpz_class* dst = &a[static_cast<size_t>(i) * cols];
            mpz_class aic = dst[c];
            for (long j = c + 1; j < cols; ++j) {
                t = dst[j] * pv - aic * src[j];
                // the reference validates the fraction-free exactness claim
                mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0)
                    throw InternalError("Bareiss division was not exact");
                dst[j] = quot;
            }
            dst[c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

}  // namespace homtower::kernels
