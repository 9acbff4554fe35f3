#include "homtower/int_matrix.hpp"

#include <algorithm>

#include "homtower/kernels.hpp"

namespace homtower {

std::string IntegerMatrix::to_text() const {
    std::vector<std::string> cells;
    cells.reserve(a_.size());
    size_t width = 1;
    for (const auto& v : a_) {
        cells.push_back(v.get_str());
        width = std::max(width, cells.back().size());
    }
    std::string out;
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * cols_ + j];
            out.append(width - s.size() + (j ? 1 : 0), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

long rank_over_Q(const IntegerMatrix& m) {
    std::vector<mpz_class> a = m.data();
    return kernels::bareiss_rank(a, m.rows(), m.cols());
}

long rank_over_Q_serial(const IntegerMatrix& m) {
    std::vector<mpz_class> a = m.data();
    return kernels::bareiss_rank_serial(a, m.rows(), m.cols());
}

namespace {

std::vector<std::uint64_t> reduce_mod(const IntegerMatrix& m, std::uint64_t q) {
    std::vector<std::uint64_t> a(static_cast<size_t>(m.rows()) * m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            a[static_cast<size_t>(i) * m.cols() + j] =
                mpz_fdiv_ui(m.at(i, j).get_mpz_t(), static_cast<unsigned long>(q));
    return a;
}

}  // namespace

long rank_over_Fp(const IntegerMatrix& m, long p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    auto a = reduce_mod(m, static_cast<std::uint64_t>(p));
    return kernels::fp_rank(a, m.rows(), m.cols(), static_cast<std::uint64_t>(p));
}

long rank_over_Fp_serial(const IntegerMatrix& m, long p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    auto a = reduce_mod(m, static_cast<std::uint64_t>(p));
    return kernels::fp_rank_serial(a, m.rows(), m.cols(),
                                   static_cast<std::uint64_t>(p));
}

long rank_mod_prime(const IntegerMatrix& m, std::uint64_t q) {
    auto a = reduce_mod(m, q);
    return kernels::fp_rank(a, m.rows(), m.cols(), q);
}

std::vector<mpz_class> integer_snf(const IntegerMatrix& m, long size_cap) {
    if (m.rows() > size_cap || m.cols() > size_cap)
        throw ResourceError("integer_snf: matrix exceeds size cap " +
                            std::to_string(size_cap));
    const long rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a = m.data();
    auto at = [&](long i, long j) -> mpz_class& {
        return a[static_cast<size_t>(i) * cols + j];
    };

    std::vector<mpz_class> divisors;
    const long k = std::min(rows, cols);
    for (long i = 0; i < k; ++i) {
        // locate the minimal nonzero |entry| in the trailing submatrix
        auto locate = [&]() -> std::pair<long, long> {
            long br = -1, bc = -1;
            mpz_class best;
            for (long r = i; r < rows; ++r)
                for (long c = i; c < cols; ++c) {
                    if (at(r, c) == 0) continue;
                    mpz_class v = abs(at(r, c));
                    if (br < 0 || v < best) {
                        best = v;
                        br = r;
                        bc = c;
                    }
                }
            return {br, bc};
        };

        auto [pr, pc] = locate();
        if (pr < 0) break;  // trailing submatrix is zero

        while (true) {
            if (pr != i)
                for (long j = 0; j < cols; ++j) std::swap(at(pr, j), at(i, j));
            if (pc != i)
                for (long r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, i));

            bool clean = true;
            for (long r = i + 1; r < rows; ++r) {
                if (at(r, i) == 0) continue;
                mpz_class q = at(r, i) / at(i, i);  // truncated division
                if (q != 0)
                    for (long j = i; j < cols; ++j) at(r, j) -= q * at(i, j);
                if (at(r, i) != 0) clean = false;
            }
            for (long c = i + 1; c < cols; ++c) {
                if (at(i, c) == 0) continue;
                mpz_class q = at(i, c) / at(i, i);
                if (q != 0)
                    for (long r = i; r < rows; ++r) at(r, c) -= q * at(r, i);
                if (at(i, c) != 0) clean = false;
            }
            if (!clean) {
                auto [nr, nc] = locate();
                pr = nr;
                pc = nc;
                continue;
            }

            // pivot is lone; enforce divisibility of the trailing block
            long br = -1;
            for (long r = i + 1; r < rows && br < 0; ++r)
                for (long c = i + 1; c < cols; ++c)
                    if (at(r, c) % at(i, i) != 0) {
                        br = r;
                        break;
                    }
            if (br < 0) break;
            for (long j = 0; j < cols; ++j) at(i, j) += at(br, j);
            pr = i;
            pc = i;
        }

        if (at(i, i) < 0)
            for (long j = i; j < cols; ++j) at(i, j) = -at(i, j);
        divisors.push_back(at(i, i));
    }
    return divisors;
}

}  // namespace homtower
