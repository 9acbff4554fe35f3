// Benchmark comparing the OpenMP elimination kernels against their serial
// reference implementations on the matrices this project actually produces:
// dense mod-p blocks and the integer level matrices of the tower sweeps.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "homtower/common.hpp"
#include "homtower/kernels.hpp"
#include "homtower/laurent.hpp"
#include "homtower/level.hpp"

using namespace homtower;

namespace {

std::vector<std::uint64_t> random_fp_matrix(long n, std::uint64_t q,
                                            std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> a(static_cast<size_t>(n) * n);
    for (auto& v : a) v = rng.below(q);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    long n = (argc > 1) ? std::atol(argv[1]) : 900;
    int level = (argc > 2) ? std::atoi(argv[2]) : 3;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]",
                "speedup");

    {
        auto a1 = random_fp_matrix(n, 3, 42);
        auto a2 = a1;
        double t0 = omp_get_wtime();
        long r1 = kernels::fp_rank_serial(a1, n, n, 3);
        double t1 = omp_get_wtime();
        long r2 = kernels::fp_rank(a2, n, n, 3);
        double t2 = omp_get_wtime();
        if (r1 != r2) {
            std::fprintf(stderr, "rank mismatch: %ld vs %ld\n", r1, r2);
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %8.2f\n",
                    ("fp_rank mod 3, n=" + std::to_string(n)).c_str(), t1 - t0,
                    t2 - t1, (t1 - t0) / (t2 - t1));
    }

    {
        std::uint64_t q = 2147483647ULL;
        auto a1 = random_fp_matrix(n, q, 43);
        auto a2 = a1;
        double t0 = omp_get_wtime();
        long r1 = kernels::fp_rank_serial(a1, n, n, q);
        double t1 = omp_get_wtime();
        long r2 = kernels::fp_rank(a2, n, n, q);
        double t2 = omp_get_wtime();
        if (r1 != r2) {
            std::fprintf(stderr, "rank mismatch: %ld vs %ld\n", r1, r2);
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %8.2f\n",
                    ("fp_rank mod 2^31-1, n=" + std::to_string(n)).c_str(),
                    t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1));
    }

    {
        // the rank-growth worst case: one permutation-minus-identity block
        ModulePresentation pres =
            parse_presentation("p=3; n=2; gens=1; rel: y - 1");
        LevelMatrix lm = expand_level(pres, level, 1 << 20);
        std::vector<mpz_class> a1 = lm.mat.data();
        std::vector<mpz_class> a2 = a1;
        double t0 = omp_get_wtime();
        long r1 = kernels::bareiss_rank_serial(a1, lm.mat.rows(), lm.mat.cols());
        double t1 = omp_get_wtime();
        long r2 = kernels::bareiss_rank(a2, lm.mat.rows(), lm.mat.cols());
        double t2 = omp_get_wtime();
        if (r1 != r2) {
            std::fprintf(stderr, "rank mismatch: %ld vs %ld\n", r1, r2);
            return 1;
        }
        std::printf("%-28s %10.3f %10.3f %8.2f\n",
                    ("bareiss level matrix s=" + std::to_string(level)).c_str(),
                    t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1));
    }

    return 0;
}
