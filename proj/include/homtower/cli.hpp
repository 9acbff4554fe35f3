#pragma once

#include <array>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "homtower/padic.hpp"

namespace homtower {

struct LambdaGridSpec {
    long all_residues_mod = 0;               // 0 = none
    std::vector<std::string> explicit_values;  // decimal or "d0,d1,..." digits
    int randoms = 0;
    std::uint64_t seed = 1;
    int K = 0;  // lambda precision; 0 = auto
};

// Fully resolved run configuration; every run echoes it into the output.
struct RunConfig {
    std::string command;      // tower|fpdim|scan|king|bounds|decompose
    std::string file;         // presentation path
    std::string inline_pres;  // inline presentation text
    long p = 0;               // king/bounds only
    int s_max = 4;
    int D = 0;                // truncation degree; 0 = auto
    long cap = 20000;         // level-matrix column cap
    std::string route = "auto";  // fpdim: block|series|auto
    std::string format = "text";  // json|csv|text
    bool torsion = false;
    bool modular_rank = false;  // probabilistic rank fast path (opt-in)
    bool axis_swap = false;     // decompose orientation
    long j = -1;                // power index for decompose / bounds --d-of-u
    int print_level = 0;        // tower: dump the level-s matrix instead
    LambdaGridSpec grid;

    // bounds sub-calculators (exactly one per run)
    std::optional<std::array<long, 3>> five_term;            // H0, H1Q, H2Q
    std::optional<std::pair<long, long>> coinvariant;        // d_H, n
    std::optional<std::tuple<long, std::string, long>> wilson;  // d_U, k, index
    std::string d_of_u_exponents;  // "i1,i2,..."
};

// Executes one command; deterministic output for a fixed config. Returns the
// process exit code: 0 ok, 1 input error, 2 resource cap, 3 broken invariant.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Lambda parsing shared with the tests: decimal integer or base-p digit
// string "d0,d1,...,dK-1" (least significant first).
PadicInt parse_lambda(const std::string& text, long p, int auto_precision);

std::vector<PadicInt> build_lambda_grid(long p, const LambdaGridSpec& grid,
                                        int auto_precision);

}  // namespace homtower
