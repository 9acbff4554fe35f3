#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtower/common.hpp"
#include "homtower/level.hpp"
#include "homtower/padic.hpp"
#include "homtower/series.hpp"
#include "homtower/series_matrix.hpp"

namespace homtower {

// Verdict vocabulary: reports say what was observed on the computed range
// and nothing stronger; finite evidence never claims a supremum.
inline constexpr const char* kVerdictBounded = "bounded-on-range";
inline constexpr const char* kVerdictUnbounded = "unbounded-growth-detected";
inline constexpr const char* kVerdictInconclusive = "inconclusive";

struct TowerLevel {
    int s = 0;
    ExtNat rank;                        // torsion-free rank of the coinvariants
    ExtNat fpdim;                       // F_p-dimension of the coinvariants
    std::vector<mpz_class> torsion;     // elementary divisors != 1, optional
    std::vector<long> torsion_exponents;  // v_p of those divisors
    ExtNat h1_rank_bound;               // n + rank
    ExtNat h1_fpdim_split;              // n + fpdim (split extension)
    bool has_rank = false;
    bool has_fpdim = false;
    bool has_torsion = false;
};

struct TowerReport {
    std::vector<TowerLevel> levels;
    int capped_at = 0;          // largest feasible level when the cap bit
    int stabilized_at = -1;     // least s with constant value through s_max
    std::string verdict;
};

enum class FpdimRoute { Block, Series, Auto };

struct TowerOptions {
    long column_cap = 20000;
    bool want_torsion = false;
    bool modular_rank = false;  // probabilistic fast path, opt-in only
    std::uint64_t modular_seed = 1;
    int series_D = 0;           // 0 = auto (p^s_max + 2)
};

TowerReport rank_tower(const ModulePresentation& pres, int s_max,
                       const TowerOptions& opt = {});

TowerReport fpdim_tower(const ModulePresentation& pres, int s_max,
                        FpdimRoute route, const TowerOptions& opt = {});

// n + fpdim_s / n + rank_s for the split extension tower subgroup at level s.
ExtNat h1_fpdim_split(const ModulePresentation& pres, int s,
                      FpdimRoute route = FpdimRoute::Auto,
                      const TowerOptions& opt = {});
ExtNat h1_rank_bound(const ModulePresentation& pres, int s,
                     const TowerOptions& opt = {});

struct StabilizationReport {
    std::vector<ExtNat> ranks;  // levels 1..s_max
    int stabilized_at = -1;     // -1: not stabilized within range
    std::string verdict;
};

StabilizationReport stabilization_probe(const ModulePresentation& pres, int s_max,
                                        const TowerOptions& opt = {});

// One corank-one subgroup probe: fp-dimension of the coinvariants along the
// subgroup generated by x*y^(-lambda) (or y*x^(-lambda) when axis_swap).
struct ScanEntry {
    bool axis_swap = false;
    PadicInt lambda;
    ExtNat fp_dim;
};

struct HypothesisReport {
    std::vector<ScanEntry> entries;
    ExtNat sup_observed;
    bool hypothesis_plausible = true;  // false iff any dim is only a bound
    std::string verdict;
};

HypothesisReport corank1_scan(const ModulePresentation& pres,
                              const std::vector<PadicInt>& lambdas, int D);

// Valuation analysis of f = (1+t)^lambda + (1+t)^(-lambda) + (1+t) +
// (1+t)^(-1) - 4 over F_p, with its digit-split polynomial congruent to f
// mod t^p. Requires odd p and D >= p + 1.
struct KingReport {
    PadicInt lambda;
    DigitSplit split;
    ExtNat valuation;
    TruncatedSeries f_series;  // mod p
    TruncatedSeries g_poly;    // mod p
    bool bound_ok = false;     // valuation certified and < p
};

KingReport king_valuation(const PadicInt& lam, long p, int D);

// The series-route level matrix (exposed for route cross-checks).
SeriesMatrix series_level_matrix(const ModulePresentation& pres, int s, int D);
bool series_route_applicable(const ModulePresentation& pres, std::string* why = nullptr);

// Exponent precision the scan engine gives lambda values it constructs.
int scan_exponent_precision(long p, int D);

}  // namespace homtower
