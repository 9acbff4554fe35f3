#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace homtower::kernels {

// Dense elimination kernels. Each kernel has an OpenMP-parallel version and a
// serial reference used by the tests and the benchmark. Both mutate the
// row-major working buffer and return the rank. Pivot selection is serial and
// row updates are independent, so results do not depend on the thread count.

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

// Gaussian elimination over F_q, q prime < 2^31; entries must be reduced.
long fp_rank(std::vector<std::uint64_t>& a, long rows, long cols, std::uint64_t q);
long fp_rank_serial(std::vector<std::uint64_t>& a, long rows, long cols,
                    std::uint64_t q);

// Fraction-free (Bareiss) elimination over Z; divisions are exact.
long bareiss_rank(std::vector<mpz_class>& a, long rows, long cols);
long bareiss_rank_serial(std::vector<mpz_class>& a, long rows, long cols);

}  // namespace homtower::kernels
