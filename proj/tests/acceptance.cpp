// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "homtower/bounds.hpp"
#include "homtower/cli.hpp"
#include "homtower/tower.hpp"
#include "oracles.hpp"

using namespace homtower;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failure(msg);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ------------------------------------------------------------- criterion 1+2

void criterion_growth_example(const char* text, int s_max,
                              const std::vector<long>& dims, int n,
                              double budget_s) {
    auto t0 = std::chrono::steady_clock::now();
    ModulePresentation pres = parse_presentation(text);
    TowerReport rep = fpdim_tower(pres, s_max, FpdimRoute::Series);
    require(static_cast<int>(rep.levels.size()) == s_max, "missing levels");
    for (int s = 1; s <= s_max; ++s) {
        const TowerLevel& l = rep.levels[static_cast<size_t>(s - 1)];
        require(l.fpdim == ExtNat::exactly(dims[static_cast<size_t>(s - 1)]),
                "fpdim mismatch at s=" + std::to_string(s));
        require(l.h1_fpdim_split ==
                    ExtNat::exactly(dims[static_cast<size_t>(s - 1)] + n),
                "h1 dim mismatch at s=" + std::to_string(s));
    }
    double el = seconds_since(t0);
    require(el < budget_s, "series route too slow: " + std::to_string(el) + "s");
}

void criterion1_block_crosscheck() {
    auto t0 = std::chrono::steady_clock::now();
    ModulePresentation pres =
        parse_presentation("p=3; n=2; gens=1; rel: p; rel: y - 2*x + 1");
    TowerReport series = fpdim_tower(pres, 2, FpdimRoute::Series);
    TowerReport block = fpdim_tower(pres, 2, FpdimRoute::Block);
    for (int s = 1; s <= 2; ++s)
        require(series.levels[static_cast<size_t>(s - 1)].fpdim ==
                    block.levels[static_cast<size_t>(s - 1)].fpdim,
                "route disagreement at s=" + std::to_string(s));
    double el = seconds_since(t0);
    require(el < 120.0, "block cross-check too slow");
}

// --------------------------------------------------------------- criterion 3+4

void criterion_king(bool check_congruence) {
    auto t0 = std::chrono::steady_clock::now();
    for (long p : {3L, 5L, 7L}) {
        const int D = static_cast<int>(2 * p);
        const int K = scan_exponent_precision(p, D);
        LambdaGridSpec spec;
        spec.all_residues_mod = p * p;
        spec.randoms = 20;
        spec.seed = 1;
        std::vector<PadicInt> grid = build_lambda_grid(p, spec, K);
        require(grid.size() == static_cast<size_t>(p * p + 20), "grid size");

        if (p == 5) {
            // independent oracle first: f_3 over F_5 via exact integer
            // binomials has valuation 4
            auto c3 = oracles::one_plus_t_pow_int(3, 5, 1, D);
            auto cm3 = oracles::one_plus_t_pow_int(-3, 5, 1, D);
            auto c1 = oracles::one_plus_t_pow_int(1, 5, 1, D);
            auto cm1 = oracles::one_plus_t_pow_int(-1, 5, 1, D);
            int val = -1;
            for (int j = 0; j < D && val < 0; ++j) {
                mpz_class c = (c3[static_cast<size_t>(j)] + cm3[static_cast<size_t>(j)] +
                               c1[static_cast<size_t>(j)] + cm1[static_cast<size_t>(j)] -
                               (j == 0 ? 4 : 0)) % 5;
                if (c < 0) c += 5;
                if (c != 0) val = j;
            }
            require(val == 4, "oracle valuation for lambda=3 is not 4");
        }

        for (const PadicInt& lam : grid) {
            KingReport rep = king_valuation(lam, p, D);
            require(rep.valuation.exact && rep.valuation.value < p,
                    "valuation bound failed");
            long lam_mod_p = lam.digit(0);
            bool l2p1_nonzero = (lam_mod_p * lam_mod_p + 1) % p != 0;
            if (l2p1_nonzero)
                require(rep.valuation.value == 2, "valuation should be 2");
            else
                require(rep.valuation.value > 2, "valuation should exceed 2");
            if (p == 3 || p == 7)
                require(rep.valuation.value == 2, "valuation must be 2");
            if (p == 5 && !l2p1_nonzero)
                require(rep.valuation.value == 3 || rep.valuation.value == 4,
                        "valuation must be 3 or 4");
            if (p == 5 && lam.residue() == 3)
                require(rep.valuation.value == 4, "lambda=3 valuation must be 4");
            if (check_congruence)
                for (int j = 0; j < p; ++j)
                    require(rep.f_series.coeff(j) == rep.g_poly.coeff(j),
                            "f/g congruence failed");
        }
    }
    double el = seconds_since(t0);
    require(el < 30.0, "king sweep too slow: " + std::to_string(el) + "s");
}

// ----------------------------------------------------------------- criterion 5

void criterion5a_stabilization() {
    SplitMix64 rng(101);
    struct Shape {
        long p;
        int n;
        int s0;
    };
    std::vector<Shape> shapes = {{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 1, 2},
                                 {2, 2, 1}, {2, 2, 2}};
    int done = 0;
    while (done < 50) {
        Shape sh = shapes[static_cast<size_t>(done) % shapes.size()];
        ModulePresentation pres;
        pres.p = sh.p;
        pres.n = sh.n;
        pres.g = 1;
        long pj = 1;
        for (int i = 0; i < sh.s0; ++i) pj *= sh.p;
        // annihilate (Q^(p^s0) - 1): adjoin x_i^(p^s0) - 1 for every i
        for (int var = 0; var < sh.n; ++var) {
            LaurentPoly rel(sh.n);
            std::vector<int> e(static_cast<size_t>(sh.n), 0);
            e[static_cast<size_t>(var)] = static_cast<int>(pj);
            rel.add_term(e, 1);
            rel.add_term(std::vector<int>(static_cast<size_t>(sh.n), 0), -1);
            pres.relations.push_back({rel});
        }
        // a couple of random extra relations
        int extra = static_cast<int>(rng.below(3));
        for (int r = 0; r < extra; ++r) {
            LaurentPoly poly(sh.n);
            for (int t = 0; t < 2; ++t) {
                std::vector<int> e(static_cast<size_t>(sh.n));
                for (int i = 0; i < sh.n; ++i)
                    e[static_cast<size_t>(i)] = static_cast<int>(rng.below(5)) - 2;
                poly.add_term(e, static_cast<long>(rng.below(5)) - 2);
            }
            pres.relations.push_back({poly});
        }

        int s_max = sh.s0 + 2;
        StabilizationReport rep = stabilization_probe(pres, s_max);
        require(static_cast<int>(rep.ranks.size()) == s_max, "probe truncated");
        for (int s = sh.s0; s <= s_max; ++s)
            require(rep.ranks[static_cast<size_t>(s - 1)] ==
                        rep.ranks[static_cast<size_t>(sh.s0 - 1)],
                    "rank not constant past s0");
        require(rep.stabilized_at >= 1 && rep.stabilized_at <= sh.s0,
                "stabilization not reported by s0");
        ++done;
    }
}

void criterion5b_pairing() {
    ModulePresentation pres = parse_presentation("p=3; n=2; gens=1; rel: y - 1");
    // hypothesis failure: one scanned subgroup only bounded from below
    int D = 6;
    int K = scan_exponent_precision(3, D);
    std::vector<PadicInt> grid;
    for (long r = 0; r < 9; ++r) grid.push_back(PadicInt(3, K, r));
    HypothesisReport scan = corank1_scan(pres, grid, D);
    int flagged = 0;
    for (const ScanEntry& e : scan.entries)
        if (!e.fp_dim.exact) ++flagged;
    require(flagged == 1, "expected exactly one flagged subgroup");
    require(!scan.hypothesis_plausible, "hypothesis should not be plausible");

    // paired with strict rank growth 3, 9, 27
    TowerReport rep = rank_tower(pres, 3);
    long expect = 1;
    for (int s = 1; s <= 3; ++s) {
        expect *= 3;
        require(rep.levels[static_cast<size_t>(s - 1)].rank ==
                    ExtNat::exactly(expect),
                "rank growth mismatch at s=" + std::to_string(s));
    }
    require(rep.verdict == std::string(kVerdictUnbounded),
            "verdict should be unbounded-growth-detected");
}

// ----------------------------------------------------------------- criterion 6

void criterion6_oracles() {
    {  // dvr_snf vs flattened linear algebra, 200 instances <= 4x4
        SplitMix64 rng(37);
        int done = 0;
        while (done < 200) {
            long p = (done % 2) ? 3 : 5;
            int D = 16;
            long k = 1 + static_cast<long>(rng.below(4));
            std::vector<int> exps;
            for (long i = 0; i < k; ++i)
                exps.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(D - 4))));
            SeriesMatrix m = oracles::random_finite_module(rng, p, D, exps);
            ExtNat dim = cokernel_fp_dim(m);
            require(dim.exact, "dvr result not certified");
            require(dim.value == oracles::flatten_fp_dim(m),
                    "dvr/flatten disagreement");
            ++done;
        }
    }
    {  // rank_over_Q vs 3-prime modular oracle, 200 instances <= 12x12
        SplitMix64 rng(19);
        int done = 0;
        while (done < 200) {
            long rows = 1 + static_cast<long>(rng.below(12));
            long cols = 1 + static_cast<long>(rng.below(12));
            IntegerMatrix m(rows, cols);
            for (long i = 0; i < rows; ++i)
                for (long j = 0; j < cols; ++j)
                    m.at(i, j) = static_cast<long>(rng.below(41)) - 20;
            long exact = rank_over_Q(m);
            long best = 0;
            for (int t = 0; t < 3; ++t)
                best = std::max(best,
                                rank_mod_prime(m, oracles::random_prime_31(rng)));
            require(best == exact, "modular oracle disagreement");
            ++done;
        }
    }
    {  // one_plus_t_pow vs direct product oracle, integer lambda <= 50
        for (long lam = 0; lam <= 50; ++lam) {
            long p = 3;
            int D = 12, K_out = 1;
            int K = required_exponent_precision(p, D, K_out);
            TruncatedSeries got = one_plus_t_pow(PadicInt(p, K, lam), D, K_out);
            auto expect = oracles::one_plus_t_pow_product(lam, p, K_out, D);
            for (int j = 0; j < D; ++j)
                require(got.coeff(j) == expect[static_cast<size_t>(j)],
                        "binomial-product oracle disagreement");
        }
    }
}

// ----------------------------------------------------------------- criterion 7

void criterion7_prop_a() {
    SplitMix64 rng(53);
    int done = 0;
    while (done < 300) {
        long p = (done % 3 == 0) ? 2 : ((done % 3 == 1) ? 3 : 5);
        int D = 16;
        long k = 1 + static_cast<long>(rng.below(3));
        std::vector<int> exps;
        for (long i = 0; i < k; ++i)
            exps.push_back(static_cast<int>(rng.below(4)));
        SeriesMatrix m = oracles::random_finite_module(rng, p, D, exps);
        CyclicDecomposition dec = decompose_finite_module(m);
        long j = 0, pj = 1;
        while (pj <= dec.m) {
            pj *= p;
            ++j;
        }
        require(d_of_U(dec, p, j) == d_of_U_direct(m, p, j),
                "formula/direct disagreement");
        // Wilson chain at the minimal index p^j > m >= p^(j-1)
        long d_u = dec.d_H + 1;
        for (long knum = 1; knum <= d_u; ++knum) {
            if (wilson_check(d_u, {Rational{knum, 1}, pj}))
                require(dec.d_H < knum * knum * p, "chain bound violated");
        }
        require(wilson_check(d_u, {Rational{d_u, 1}, pj}),
                "k = d_U must pass");
        ++done;
    }
}

// ----------------------------------------------------------------- criterion 8

void criterion8_determinism() {
    std::vector<RunConfig> cfgs;
    {
        RunConfig c;
        c.command = "fpdim";
        c.file = std::string(HOMTOWER_SOURCE_DIR) + "/fixtures/king_ex1.mod";
        c.s_max = 4;
        c.route = "series";
        c.format = "json";
        cfgs.push_back(c);
        c.s_max = 2;
        c.route = "block";
        c.format = "csv";
        cfgs.push_back(c);
    }
    {
        RunConfig c;
        c.command = "fpdim";
        c.file = std::string(HOMTOWER_SOURCE_DIR) + "/fixtures/king_ex2.mod";
        c.s_max = 6;
        c.route = "series";
        c.format = "csv";
        cfgs.push_back(c);
    }
    for (long p : {3L, 5L, 7L}) {
        RunConfig c;
        c.command = "king";
        c.p = p;
        c.grid.all_residues_mod = p * p;
        c.grid.randoms = 20;
        c.grid.seed = 1;
        c.format = (p == 5) ? "json" : "csv";
        cfgs.push_back(c);
    }
    {
        RunConfig c;
        c.command = "scan";
        c.inline_pres = "p=3; n=2; gens=1; rel: y - 1";
        c.grid.all_residues_mod = 9;
        c.format = "text";
        cfgs.push_back(c);
        c.command = "tower";
        c.s_max = 3;
        c.format = "csv";
        cfgs.push_back(c);
    }
    {
        RunConfig c;
        c.command = "decompose";
        c.file = std::string(HOMTOWER_SOURCE_DIR) + "/fixtures/king_ex3.mod";
        c.grid.explicit_values = {"3"};
        c.j = 1;
        c.format = "json";
        cfgs.push_back(c);
    }
    {
        RunConfig c;
        c.command = "bounds";
        c.five_term = {{3, 2, 1}};
        c.format = "json";
        cfgs.push_back(c);
    }

    for (const RunConfig& c : cfgs) {
        std::ostringstream out1, err1, out2, err2;
        int rc1 = run(c, out1, err1);
        int rc2 = run(c, out2, err2);
        require(rc1 == 0, "command failed: " + c.command + " (" + err1.str() + ")");
        require(rc1 == rc2, "exit codes differ across runs");
        require(out1.str() == out2.str(),
                "byte-identical output violated for " + c.command);
        require(!out1.str().empty(), "empty report");
    }
}

}  // namespace

int main() {
    struct Criterion {
        std::string label;
        std::function<void()> body;
    };
    std::vector<Criterion> criteria = {
        {"1. odd-prime growth example: dims 3,9,27,81 (series) + block cross-check",
         [] {
             criterion_growth_example(
                 "p=3; n=2; gens=1; rel: p; rel: y - 2*x + 1", 4,
                 {3, 9, 27, 81}, 2, 10.0);
             criterion1_block_crosscheck();
         }},
        {"2. p=2 growth example: dims 2,4,...,64",
         [] {
             criterion_growth_example(
                 "p=2; n=2; gens=1; rel: p; rel: y - x^2 + x - 1", 6,
                 {2, 4, 8, 16, 32, 64}, 2, 10.0);
         }},
        {"3. valuation bound < p over the lambda grids (p = 3, 5, 7)",
         [] { criterion_king(false); }},
        {"4. f/g congruence mod t^p over the same grids",
         [] { criterion_king(true); }},
        {"5. stabilization on annihilated modules + blow-up pairing for y - 1",
         [] {
             criterion5a_stabilization();
             criterion5b_pairing();
         }},
        {"6. oracle equivalence suites (dvr/flatten, 3-prime rank, binomial product)",
         [] { criterion6_oracles(); }},
        {"7. generator-count consistency and chain bound on 300 modules",
         [] { criterion7_prop_a(); }},
        {"8. byte-identical reports on repeated runs",
         [] { criterion8_determinism(); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body();
            std::printf("PASS  %s  (%.2fs)\n", c.label.c_str(), seconds_since(t0));
        } catch (const std::exception& e) {
            std::printf("FAIL  %s: %s\n", c.label.c_str(), e.what());
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
