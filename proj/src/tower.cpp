#include "homtower/tower.hpp"

#include <algorithm>

#include "homtower/int_matrix.hpp"
#include "homtower/substitute.hpp"

namespace homtower {

namespace {

struct Elimination {
    size_t row;      // eliminating relation row
    int var;         // variable index substituted away
    TruncatedSeries psi(const ModulePresentation& pres, int D) const;
    const LaurentPoly* poly = nullptr;
    mpz_class unit_coeff;  // coefficient of the bare variable monomial
};

// n = 2, g = 1: a relation eliminates a variable when that variable occurs
// only as the single degree-1 monomial c*v with c a unit mod p.
std::optional<Elimination> find_elimination(const ModulePresentation& pres) {
    if (pres.n != 2 || pres.g != 1) return std::nullopt;
    for (size_t r = 0; r < pres.relations.size(); ++r) {
        const LaurentPoly& poly = pres.relations[r][0];
        for (int var = 0; var < 2; ++var) {
            mpz_class coeff = 0;
            bool clean = true;
            for (const auto& [exp, c] : poly.terms()) {
                int ev = exp[static_cast<size_t>(var)];
                int eo = exp[static_cast<size_t>(1 - var)];
                if (ev == 0) continue;
                if (ev == 1 && eo == 0 && coeff == 0) {
                    coeff = c;
                } else {
                    clean = false;
                    break;
                }
            }
            if (!clean || coeff == 0) continue;
            if (mpz_divisible_ui_p(coeff.get_mpz_t(),
                                   static_cast<unsigned long>(pres.p)))
                continue;  // not a unit mod p
            Elimination e;
            e.row = r;
            e.var = var;
            e.poly = &poly;
            e.unit_coeff = coeff;
            return e;
        }
    }
    return std::nullopt;
}

TruncatedSeries Elimination::psi(const ModulePresentation& pres, int D) const {
    // solve c*v + q(w) = 0 for v with w -> 1+t
    const long p = pres.p;
    TruncatedSeries one_plus_t = TruncatedSeries::one_plus_t(p, 1, D);
    TruncatedSeries ipt = series_inverse(one_plus_t);
    TruncatedSeries q(p, 1, D);
    for (const auto& [exp, c] : poly->terms()) {
        if (exp[static_cast<size_t>(var)] != 0) continue;  // the c*v monomial
        int ew = exp[static_cast<size_t>(1 - var)];
        TruncatedSeries mono = (ew >= 0) ? one_plus_t.pow(ew) : ipt.pow(-ew);
        q = q + mono.scale(c);
    }
    mpz_class p_mpz(p);
    mpz_class c_mod;
    mpz_mod(c_mod.get_mpz_t(), unit_coeff.get_mpz_t(), p_mpz.get_mpz_t());
    mpz_class c_inv;
    mpz_invert(c_inv.get_mpz_t(), c_mod.get_mpz_t(), p_mpz.get_mpz_t());
    return (-q).scale(c_inv);
}

long pow_long_checked(long p, int s) {
    long v = 1;
    for (int i = 0; i < s; ++i) {
        if (v > (1L << 41) / p)
            throw ResourceError("p^s too large for the series route");
        v *= p;
    }
    return v;
}

int stabilization_point(const std::vector<ExtNat>& vals) {
    const int s_max = static_cast<int>(vals.size());
    if (s_max < 2) return -1;
    for (const ExtNat& v : vals)
        if (!v.exact) return -1;
    int s = -1;
    for (int i = s_max - 2; i >= 0; --i) {
        if (vals[static_cast<size_t>(i)] == vals[static_cast<size_t>(s_max - 1)])
            s = i + 1;  // levels are 1-based
        else
            break;
    }
    return s;
}

std::string growth_verdict(const std::vector<ExtNat>& vals, int stabilized_at) {
    if (stabilized_at >= 1) return kVerdictBounded;
    bool strictly_increasing = vals.size() >= 2;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        if (!vals[i].exact || !vals[i + 1].exact ||
            vals[i + 1].value <= vals[i].value) {
            strictly_increasing = false;
            break;
        }
    }
    if (strictly_increasing) return kVerdictUnbounded;
    return kVerdictInconclusive;
}

}  // namespace

bool series_route_applicable(const ModulePresentation& pres, std::string* why) {
    if (pres.n == 1) return true;
    if (pres.n != 2) {
        if (why) *why = "series route supports n = 1 or n = 2 only";
        return false;
    }
    if (pres.g != 1) {
        if (why) *why = "series route for n = 2 needs gens = 1";
        return false;
    }
    if (!find_elimination(pres)) {
        if (why)
            *why = "no eliminating relation (a variable occurring only as a "
                   "unit-coefficient degree-1 monomial)";
        return false;
    }
    return true;
}

SeriesMatrix series_level_matrix(const ModulePresentation& pres, int s, int D) {
    if (s < 1) throw InputError("tower levels start at 1");
    const long p = pres.p;
    const long pj = pow_long_checked(p, s);

    std::vector<TruncatedSeries> subs;
    if (pres.n == 1) {
        subs.push_back(TruncatedSeries::one_plus_t(p, 1, D));
    } else {
        std::string why;
        if (!series_route_applicable(pres, &why))
            throw InputError("series route inapplicable: " + why);
        Elimination e = *find_elimination(pres);
        TruncatedSeries one = TruncatedSeries::one_plus_t(p, 1, D);
        TruncatedSeries psi = e.psi(pres, D);
        if (e.var == 0) {
            subs.push_back(psi);
            subs.push_back(one);
        } else {
            subs.push_back(one);
            subs.push_back(psi);
        }
    }

    const long rel_rows = static_cast<long>(pres.relations.size());
    const long tower_rows = static_cast<long>(pres.n) * pres.g;
    SeriesMatrix m(p, D, rel_rows + tower_rows, pres.g);
    for (long r = 0; r < rel_rows; ++r)
        for (int c = 0; c < pres.g; ++c)
            m.set(r, c,
                  substitute_poly(
                      pres.relations[static_cast<size_t>(r)][static_cast<size_t>(c)],
                      subs));
    // level relations sigma_i^(p^s) - 1 on each generator
    for (int v = 0; v < pres.n; ++v) {
        TruncatedSeries rel =
            subs[static_cast<size_t>(v)].pow(pj).add_int(-1);
        for (int c = 0; c < pres.g; ++c)
            m.set(rel_rows + static_cast<long>(v) * pres.g + c, c, rel);
    }
    return m;
}

TowerReport rank_tower(const ModulePresentation& pres, int s_max,
                       const TowerOptions& opt) {
    if (s_max < 1) throw InputError("tower levels start at 1");
    TowerReport rep;
    std::vector<ExtNat> ranks;
    for (int s = 1; s <= s_max; ++s) {
        LevelMatrix lm;
        try {
            lm = expand_level(pres, s, opt.column_cap);
        } catch (const ResourceError&) {
            if (s == 1) throw;
            break;
        }
        TowerLevel lvl;
        lvl.s = s;
        long rank = opt.modular_rank
                        ? rank_mod_prime(lm.mat, 2147483647ULL)
                        : rank_over_Q(lm.mat);
        lvl.rank = ExtNat::exactly(lm.mat.cols() - rank);
        lvl.h1_rank_bound = lvl.rank + pres.n;
        lvl.has_rank = true;
        if (opt.want_torsion) {
            for (const mpz_class& d : integer_snf(lm.mat, opt.column_cap))
                if (d != 1) {
                    lvl.torsion.push_back(d);
                    mpz_class unit;
                    lvl.torsion_exponents.push_back(static_cast<long>(
                        mpz_remove(unit.get_mpz_t(), d.get_mpz_t(),
                                   mpz_class(pres.p).get_mpz_t())));
                }
            lvl.has_torsion = true;
        }
        ranks.push_back(lvl.rank);
        rep.levels.push_back(std::move(lvl));
        rep.capped_at = s;
    }
    rep.stabilized_at = stabilization_point(ranks);
    rep.verdict = growth_verdict(ranks, rep.stabilized_at);
    return rep;
}

TowerReport fpdim_tower(const ModulePresentation& pres, int s_max,
                        FpdimRoute route, const TowerOptions& opt) {
    if (s_max < 1) throw InputError("tower levels start at 1");
    if (route == FpdimRoute::Auto)
        route = series_route_applicable(pres) ? FpdimRoute::Series
                                              : FpdimRoute::Block;
    if (route == FpdimRoute::Series) {
        std::string why;
        if (!series_route_applicable(pres, &why))
            throw InputError("series route inapplicable: " + why);
    }

    int D = opt.series_D;
    if (D == 0 && route == FpdimRoute::Series) {
        long need = pow_long_checked(pres.p, s_max) + 2;
        if (need > 200000)
            throw ResourceError("series route needs truncation degree " +
                                std::to_string(need));
        D = static_cast<int>(need);
    }

    TowerReport rep;
    std::vector<ExtNat> dims;
    for (int s = 1; s <= s_max; ++s) {
        TowerLevel lvl;
        lvl.s = s;
        if (route == FpdimRoute::Series) {
            lvl.fpdim = cokernel_fp_dim(series_level_matrix(pres, s, D));
        } else {
            LevelMatrix lm;
            try {
                lm = expand_level(pres, s, opt.column_cap);
            } catch (const ResourceError&) {
                if (s == 1) throw;
                break;
            }
            lvl.fpdim =
                ExtNat::exactly(lm.mat.cols() - rank_over_Fp(lm.mat, pres.p));
        }
        lvl.h1_fpdim_split = lvl.fpdim + pres.n;
        lvl.has_fpdim = true;
        dims.push_back(lvl.fpdim);
        rep.levels.push_back(std::move(lvl));
        rep.capped_at = s;
    }
    rep.stabilized_at = stabilization_point(dims);
    rep.verdict = growth_verdict(dims, rep.stabilized_at);
    return rep;
}

ExtNat h1_fpdim_split(const ModulePresentation& pres, int s, FpdimRoute route,
                      const TowerOptions& opt) {
    if (s < 1) throw InputError("tower levels start at 1");
    TowerReport rep = fpdim_tower(pres, s, route, opt);
    if (static_cast<int>(rep.levels.size()) < s)
        throw ResourceError("level " + std::to_string(s) + " infeasible");
    return rep.levels[static_cast<size_t>(s - 1)].h1_fpdim_split;
}

ExtNat h1_rank_bound(const ModulePresentation& pres, int s,
                     const TowerOptions& opt) {
    if (s < 1) throw InputError("tower levels start at 1");
    TowerReport rep = rank_tower(pres, s, opt);
    if (static_cast<int>(rep.levels.size()) < s)
        throw ResourceError("level " + std::to_string(s) + " infeasible");
    return rep.levels[static_cast<size_t>(s - 1)].h1_rank_bound;
}

StabilizationReport stabilization_probe(const ModulePresentation& pres,
                                        int s_max, const TowerOptions& opt) {
    TowerReport rep = rank_tower(pres, s_max, opt);
    StabilizationReport out;
    for (const TowerLevel& lvl : rep.levels) out.ranks.push_back(lvl.rank);
    out.stabilized_at = stabilization_point(out.ranks);
    out.verdict = growth_verdict(out.ranks, out.stabilized_at);
    return out;
}

int scan_exponent_precision(long p, int D) {
    return std::max(required_exponent_precision(p, D, 1), 2);
}

HypothesisReport corank1_scan(const ModulePresentation& pres,
                              const std::vector<PadicInt>& lambdas, int D) {
    if (pres.n != 2) throw InputError("corank-one scan requires n = 2");

    HypothesisReport rep;
    const size_t count = lambdas.size() * 2;
    rep.entries.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        const PadicInt& lam = lambdas[i % lambdas.size()];
        rep.entries.push_back(ScanEntry{i >= lambdas.size(), lam, ExtNat{}});
    }

    std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i) {
        ScanEntry& e = rep.entries[static_cast<size_t>(i)];
        try {
            auto rows = substitute_character(pres, e.lambda, e.axis_swap, D, 1);
            SeriesMatrix m(pres.p, D, static_cast<long>(rows.size()), pres.g);
            for (long r = 0; r < static_cast<long>(rows.size()); ++r)
                for (int c = 0; c < pres.g; ++c)
                    m.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            e.fp_dim = cokernel_fp_dim(m);
        } catch (const std::exception& ex) {
            errors[static_cast<size_t>(i)] = ex.what();
        }
    }
    for (const std::string& err : errors)
        if (!err.empty()) throw InputError("scan failed: " + err);

    rep.sup_observed = ExtNat::exactly(0);
    rep.hypothesis_plausible = true;
    for (const ScanEntry& e : rep.entries) {
        rep.sup_observed = ext_sup(rep.sup_observed, e.fp_dim);
        if (!e.fp_dim.exact) rep.hypothesis_plausible = false;
    }
    rep.verdict = rep.hypothesis_plausible ? kVerdictBounded : kVerdictInconclusive;
    return rep;
}

KingReport king_valuation(const PadicInt& lam, long p, int D) {
    if (p == 2) throw InputError("this analysis needs an odd prime");
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (lam.prime() != p) throw InputError("lambda prime mismatch");
    if (D < p + 1)
        throw InputError("truncation degree must be at least p + 1");

    TruncatedSeries one_plus_t = TruncatedSeries::one_plus_t(p, 1, D);
    TruncatedSeries f = one_plus_t_pow(lam, D, 1) + one_plus_t_pow(-lam, D, 1) +
                        one_plus_t + series_inverse(one_plus_t);
    f = f.add_int(-4);

    DigitSplit split = digit_split(lam);
    TruncatedSeries g = one_plus_t.pow(split.z0) + one_plus_t.pow(split.a0) +
                        one_plus_t + one_plus_t.pow(p - 1);
    g = g.add_int(-4);

    for (int j = 0; j < p; ++j)
        if (f.coeff(j) != g.coeff(j))
            throw InternalError("digit-split polynomial congruence failed at t^" +
                                std::to_string(j));

    KingReport rep{lam, split, series_valuation(f), f, g, false};
    rep.bound_ok = rep.valuation.exact && rep.valuation.value < p;
    if (!rep.bound_ok)
        throw InternalError("valuation bound < p failed for lambda = " +
                            lam.to_string());
    return rep;
}

}  // namespace homtower
