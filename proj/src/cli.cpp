#include "homtower/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "homtower/bounds.hpp"
#include "homtower/int_matrix.hpp"
#include "homtower/substitute.hpp"
#include "homtower/tower.hpp"

namespace homtower {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json ext_json(const ExtNat& v) {
    if (v.exact) return v.value;
    return ordered_json{{"lower_bound", v.value}};
}

ordered_json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ordered_json series_json(const TruncatedSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (int j = 0; j < s.trunc_degree(); ++j) coeffs.push_back(mpz_json(s.coeff(j)));
    return ordered_json{{"p", s.prime()},
                        {"K", s.coeff_precision()},
                        {"D", s.trunc_degree()},
                        {"coeffs", coeffs}};
}

struct PresSource {
    ModulePresentation pres;
    std::string label;
};

PresSource load_presentation(const RunConfig& cfg) {
    const bool have_file = !cfg.file.empty();
    const bool have_inline = !cfg.inline_pres.empty();
    if (have_file == have_inline)
        throw InputError("exactly one of --file or --pres is required");
    if (have_file)
        return PresSource{parse_presentation_file(cfg.file), cfg.file};
    return PresSource{parse_presentation(cfg.inline_pres), "inline"};
}

ordered_json config_json(const RunConfig& cfg, const PresSource* src,
                         int resolved_D, int resolved_K) {
    ordered_json c;
    c["command"] = cfg.command;
    if (src) {
        c["source"] = src->label;
        c["p"] = src->pres.p;
        c["n"] = src->pres.n;
        c["gens"] = src->pres.g;
    } else if (cfg.p) {
        c["p"] = cfg.p;
    }
    if (cfg.command == "tower" || cfg.command == "fpdim")
        c["s_max"] = cfg.s_max;
    if (cfg.command == "fpdim") c["route"] = cfg.route;
    if (resolved_D) c["D"] = resolved_D;
    if (resolved_K) c["K"] = resolved_K;
    if (cfg.command == "tower" || cfg.command == "fpdim")
        c["cap"] = cfg.cap;
    if (cfg.command == "tower") {
        c["torsion"] = cfg.torsion;
        c["modular_rank"] = cfg.modular_rank;
    }
    if (cfg.command == "king" || cfg.command == "scan") {
        ordered_json g;
        g["all_residues_mod"] = cfg.grid.all_residues_mod;
        g["explicit"] = cfg.grid.explicit_values;
        g["randoms"] = cfg.grid.randoms;
        g["seed"] = cfg.grid.seed;
        c["lambda_grid"] = g;
    }
    if (cfg.command == "decompose") {
        c["axis_swap"] = cfg.axis_swap;
        if (cfg.j >= 0) c["j"] = cfg.j;
    }
    c["format"] = cfg.format;
    return c;
}

void emit_config_text(std::ostream& out, const ordered_json& c) {
    out << "homtower " << c.at("command").get<std::string>() << "\n";
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (it.key() == "command") continue;
        out << "  " << it.key() << "=" << (it->is_string() ? it->get<std::string>()
                                                           : it->dump())
            << "\n";
    }
}

void emit_config_csv(std::ostream& out, const ordered_json& c) {
    out << "# homtower " << c.at("command").get<std::string>() << "\n";
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (it.key() == "command") continue;
        out << "# " << it.key() << "="
            << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
}

// the documented default sweep: all residues mod p^2 plus 20 seeded randoms
LambdaGridSpec resolve_grid(const LambdaGridSpec& grid, long p) {
    if (grid.all_residues_mod == 0 && grid.explicit_values.empty() &&
        grid.randoms == 0) {
        LambdaGridSpec d = grid;
        d.all_residues_mod = p * p;
        d.randoms = 20;
        return d;
    }
    return grid;
}

// ---------------------------------------------------------------- tower/fpdim

int run_print_level(const RunConfig& cfg, const PresSource& src,
                    std::ostream& out) {
    LevelMatrix lm = expand_level(src.pres, cfg.print_level, cfg.cap);
    ordered_json c = config_json(cfg, &src, 0, 0);
    c["print_level"] = cfg.print_level;
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "level_matrix";
        doc["config"] = c;
        doc["s"] = lm.s;
        doc["rows"] = lm.mat.rows();
        doc["cols"] = lm.mat.cols();
        ordered_json grid = ordered_json::array();
        for (long i = 0; i < lm.mat.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (long j = 0; j < lm.mat.cols(); ++j)
                row.push_back(mpz_json(lm.mat.at(i, j)));
            grid.push_back(row);
        }
        doc["matrix"] = grid;
        out << doc.dump(2) << "\n";
    } else {
        emit_config_text(out, c);
        out << lm.mat.rows() << " x " << lm.mat.cols() << " over Z:\n"
            << lm.mat.to_text();
    }
    return 0;
}

int run_tower(const RunConfig& cfg, std::ostream& out) {
    PresSource src = load_presentation(cfg);
    if (cfg.print_level > 0) return run_print_level(cfg, src, out);
    TowerOptions opt;
    opt.column_cap = cfg.cap;
    opt.want_torsion = cfg.torsion;
    opt.modular_rank = cfg.modular_rank;
    TowerReport rep = rank_tower(src.pres, cfg.s_max, opt);

    ordered_json c = config_json(cfg, &src, 0, 0);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "coinvariant_rank_tower";
        doc["config"] = c;
        ordered_json levels = ordered_json::array();
        for (const TowerLevel& l : rep.levels) {
            ordered_json e;
            e["s"] = l.s;
            e["rank"] = ext_json(l.rank);
            e["h1_rank_bound"] = ext_json(l.h1_rank_bound);
            if (l.has_torsion) {
                ordered_json t = ordered_json::array();
                for (const mpz_class& d : l.torsion) t.push_back(mpz_json(d));
                e["torsion"] = t;
                e["torsion_p_exponents"] = l.torsion_exponents;
            }
            levels.push_back(e);
        }
        doc["levels"] = levels;
        doc["stabilized_at"] =
            rep.stabilized_at < 0 ? ordered_json(nullptr) : ordered_json(rep.stabilized_at);
        doc["verdict"] = rep.verdict;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << (cfg.torsion ? "s,rank,h1_rank_bound,torsion\n"
                            : "s,rank,h1_rank_bound\n");
        for (const TowerLevel& l : rep.levels) {
            out << l.s << "," << to_string(l.rank) << ","
                << to_string(l.h1_rank_bound);
            if (cfg.torsion) {
                out << ",";
                for (size_t i = 0; i < l.torsion.size(); ++i)
                    out << (i ? ";" : "") << l.torsion[i].get_str();
            }
            out << "\n";
        }
        out << "# stabilized_at="
            << (rep.stabilized_at < 0 ? std::string("none")
                                      : std::to_string(rep.stabilized_at))
            << "\n# verdict=" << rep.verdict << "\n";
    } else {
        emit_config_text(out, c);
        for (const TowerLevel& l : rep.levels) {
            out << "s=" << l.s << "  rank=" << to_string(l.rank)
                << "  h1_rank_bound=" << to_string(l.h1_rank_bound);
            if (l.has_torsion) {
                out << "  torsion=[";
                for (size_t i = 0; i < l.torsion.size(); ++i)
                    out << (i ? " " : "") << l.torsion[i].get_str();
                out << "]  p_exponents=[";
                for (size_t i = 0; i < l.torsion_exponents.size(); ++i)
                    out << (i ? " " : "") << l.torsion_exponents[i];
                out << "]";
            }
            out << "\n";
        }
        out << "stabilized: "
            << (rep.stabilized_at < 0
                    ? std::string("not stabilized within range")
                    : "at s=" + std::to_string(rep.stabilized_at))
            << "\nverdict: " << rep.verdict << "\n";
    }
    return 0;
}

int run_fpdim(const RunConfig& cfg, std::ostream& out) {
    PresSource src = load_presentation(cfg);
    FpdimRoute route;
    if (cfg.route == "block") route = FpdimRoute::Block;
    else if (cfg.route == "series") route = FpdimRoute::Series;
    else if (cfg.route == "auto") route = FpdimRoute::Auto;
    else throw InputError("route must be block, series or auto");
    if (route == FpdimRoute::Auto)
        route = series_route_applicable(src.pres) ? FpdimRoute::Series
                                                  : FpdimRoute::Block;

    TowerOptions opt;
    opt.column_cap = cfg.cap;
    opt.series_D = cfg.D;
    TowerReport rep = fpdim_tower(src.pres, cfg.s_max, route, opt);

    // resolved configuration: concrete route, and the series truncation used
    RunConfig resolved = cfg;
    resolved.route = (route == FpdimRoute::Series) ? "series" : "block";
    int shown_D = cfg.D;
    if (shown_D == 0 && route == FpdimRoute::Series) {
        long v = 1;
        for (int i = 0; i < cfg.s_max; ++i) v *= src.pres.p;
        shown_D = static_cast<int>(v + 2);
    }
    ordered_json c = config_json(resolved, &src, shown_D, 0);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "coinvariant_fp_dimension_tower";
        doc["config"] = c;
        ordered_json levels = ordered_json::array();
        for (const TowerLevel& l : rep.levels) {
            ordered_json e;
            e["s"] = l.s;
            e["fpdim"] = ext_json(l.fpdim);
            e["h1_fpdim"] = ext_json(l.h1_fpdim_split);
            levels.push_back(e);
        }
        doc["levels"] = levels;
        doc["stabilized_at"] =
            rep.stabilized_at < 0 ? ordered_json(nullptr) : ordered_json(rep.stabilized_at);
        doc["verdict"] = rep.verdict;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << "s,fpdim,h1_fpdim\n";
        for (const TowerLevel& l : rep.levels)
            out << l.s << "," << to_string(l.fpdim, true) << ","
                << to_string(l.h1_fpdim_split, true) << "\n";
        out << "# verdict=" << rep.verdict << "\n";
    } else {
        emit_config_text(out, c);
        for (const TowerLevel& l : rep.levels)
            out << "s=" << l.s << "  fpdim=" << to_string(l.fpdim, true)
                << "  h1_fpdim=" << to_string(l.h1_fpdim_split, true) << "\n";
        out << "verdict: " << rep.verdict << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ lambda IO

std::string lambda_label(const PadicInt& lam) { return lam.residue().get_str(); }

// ----------------------------------------------------------------------- king

int run_king(const RunConfig& cfg, std::ostream& out) {
    if (cfg.p < 2) throw InputError("king requires --p");
    if (cfg.p == 2) throw InputError("this analysis needs an odd prime");
    if (!is_prime(cfg.p)) throw InputError(std::to_string(cfg.p) + " is not prime");
    const int D = cfg.D ? cfg.D : static_cast<int>(2 * cfg.p);
    if (D < cfg.p + 1) throw InputError("truncation degree must be at least p + 1");
    const int K = cfg.grid.K ? cfg.grid.K : scan_exponent_precision(cfg.p, D);

    RunConfig resolved = cfg;
    resolved.grid = resolve_grid(cfg.grid, cfg.p);
    std::vector<PadicInt> grid = build_lambda_grid(cfg.p, resolved.grid, K);
    if (grid.empty()) throw InputError("empty lambda grid");

    std::vector<KingReport> reports;
    reports.reserve(grid.size());
    for (const PadicInt& lam : grid) reports.push_back(king_valuation(lam, cfg.p, D));

    ordered_json c = config_json(resolved, nullptr, D, K);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "one_variable_relation_valuations";
        doc["config"] = c;
        ordered_json rows = ordered_json::array();
        for (const KingReport& r : reports) {
            ordered_json e;
            e["lambda"] = lambda_label(r.lambda);
            e["z0"] = r.split.z0;
            e["a0"] = r.split.a0;
            e["valuation"] = ext_json(r.valuation);
            e["bound_ok"] = r.bound_ok;
            e["f"] = series_json(r.f_series);
            e["g"] = series_json(r.g_poly);
            rows.push_back(e);
        }
        doc["rows"] = rows;
        bool all_ok = true;
        for (const KingReport& r : reports) all_ok = all_ok && r.bound_ok;
        doc["all_bounds_ok"] = all_ok;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << "lambda,z0,a0,valuation,bound_ok\n";
        for (const KingReport& r : reports)
            out << lambda_label(r.lambda) << "," << r.split.z0 << "," << r.split.a0
                << "," << to_string(r.valuation) << "," << (r.bound_ok ? 1 : 0)
                << "\n";
    } else {
        emit_config_text(out, c);
        for (const KingReport& r : reports)
            out << "lambda=" << lambda_label(r.lambda) << "  z0=" << r.split.z0
                << " a0=" << r.split.a0
                << "  valuation=" << to_string(r.valuation)
                << "  bound_ok=" << (r.bound_ok ? "yes" : "no")
                << "  f=" << r.f_series.to_string() << "\n";
        out << "all valuations < p: yes\n";
    }
    return 0;
}

// ----------------------------------------------------------------------- scan

int run_scan(const RunConfig& cfg, std::ostream& out) {
    PresSource src = load_presentation(cfg);
    if (src.pres.n != 2) throw InputError("corank-one scan requires n = 2");
    const long p = src.pres.p;
    const int D = cfg.D ? cfg.D : static_cast<int>(2 * p);
    const int K = cfg.grid.K ? cfg.grid.K : scan_exponent_precision(p, D);

    RunConfig resolved = cfg;
    resolved.grid = resolve_grid(cfg.grid, p);
    std::vector<PadicInt> grid = build_lambda_grid(p, resolved.grid, K);
    if (grid.empty()) throw InputError("empty lambda grid");

    HypothesisReport rep = corank1_scan(src.pres, grid, D);

    ordered_json c = config_json(resolved, &src, D, K);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "corank_one_coinvariant_dimensions";
        doc["config"] = c;
        ordered_json rows = ordered_json::array();
        for (const ScanEntry& e : rep.entries) {
            ordered_json r;
            r["subgroup"] = e.axis_swap ? "y*x^-lambda" : "x*y^-lambda";
            r["lambda"] = lambda_label(e.lambda);
            r["fp_dim"] = ext_json(e.fp_dim);
            rows.push_back(r);
        }
        doc["rows"] = rows;
        doc["sup_observed"] = ext_json(rep.sup_observed);
        doc["hypothesis_plausible"] = rep.hypothesis_plausible;
        doc["verdict"] = rep.verdict;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << "subgroup,lambda,fp_dim\n";
        for (const ScanEntry& e : rep.entries)
            out << (e.axis_swap ? "y*x^-lambda" : "x*y^-lambda") << ","
                << lambda_label(e.lambda) << "," << to_string(e.fp_dim, true)
                << "\n";
        out << "# sup_observed=" << to_string(rep.sup_observed, true)
            << "\n# hypothesis_plausible=" << (rep.hypothesis_plausible ? 1 : 0)
            << "\n# verdict=" << rep.verdict << "\n";
    } else {
        emit_config_text(out, c);
        for (const ScanEntry& e : rep.entries)
            out << (e.axis_swap ? "H=<y*x^-l>" : "H=<x*y^-l>")
                << "  lambda=" << lambda_label(e.lambda)
                << "  fp_dim=" << to_string(e.fp_dim, true) << "\n";
        out << "sup observed: " << to_string(rep.sup_observed, true)
            << "\nhypothesis plausible: "
            << (rep.hypothesis_plausible ? "yes" : "no")
            << "\nverdict: " << rep.verdict << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ decompose

int run_decompose(const RunConfig& cfg, std::ostream& out) {
    PresSource src = load_presentation(cfg);
    if (src.pres.n != 2) throw InputError("decompose works on n = 2 modules");
    const long p = src.pres.p;
    const int D = cfg.D ? cfg.D : static_cast<int>(2 * p);
    const int K = cfg.grid.K ? cfg.grid.K : scan_exponent_precision(p, D);
    if (cfg.grid.explicit_values.size() != 1)
        throw InputError("decompose needs exactly one --lambda");
    PadicInt lam = parse_lambda(cfg.grid.explicit_values[0], p, K);

    auto rows = substitute_character(src.pres, lam, cfg.axis_swap, D, 1);
    SeriesMatrix m(p, D, static_cast<long>(rows.size()), src.pres.g);
    for (long r = 0; r < static_cast<long>(rows.size()); ++r)
        for (int c2 = 0; c2 < src.pres.g; ++c2)
            m.set(r, c2, rows[static_cast<size_t>(r)][static_cast<size_t>(c2)]);
    DvrSnfResult snf = dvr_snf(m);
    CyclicDecomposition dec = decompose_finite_module(m);

    long du = -1, du_direct = -1;
    if (cfg.j >= 0) {
        du_direct = d_of_U_direct(m, p, cfg.j);
        long pj = 1;
        for (long i = 0; i < cfg.j; ++i) pj *= p;
        if (pj > dec.m) du = d_of_U(dec, p, cfg.j);
    }

    ordered_json c = config_json(cfg, &src, D, K);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["schema"] = 1;
        doc["quantity"] = "cyclic_decomposition";
        doc["config"] = c;
        doc["lambda"] = lambda_label(lam);
        ordered_json divisors = ordered_json::array();
        for (const ExtNat& v : snf.divisor_valuations) divisors.push_back(ext_json(v));
        doc["snf"] = ordered_json{{"divisors", divisors}, {"certified", snf.certified}};
        doc["exponents"] = dec.exponents;
        doc["m"] = dec.m;
        doc["d_H"] = dec.d_H;
        if (cfg.j >= 0) {
            doc["d_of_U_direct"] = du_direct;
            doc["d_of_U"] = du < 0 ? ordered_json(nullptr) : ordered_json(du);
        }
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << "name,value\n";
        out << "lambda," << lambda_label(lam) << "\n";
        out << "exponents,";
        for (size_t i = 0; i < dec.exponents.size(); ++i)
            out << (i ? ";" : "") << dec.exponents[i];
        out << "\nm," << dec.m << "\nd_H," << dec.d_H << "\n";
        if (cfg.j >= 0) {
            out << "d_of_U_direct," << du_direct << "\n";
            if (du >= 0) out << "d_of_U," << du << "\n";
        }
    } else {
        emit_config_text(out, c);
        out << "lambda=" << lambda_label(lam) << "\nexponents=[";
        for (size_t i = 0; i < dec.exponents.size(); ++i)
            out << (i ? " " : "") << dec.exponents[i];
        out << "]\nm=" << dec.m << "\nd_H=" << dec.d_H << "\n";
        if (cfg.j >= 0) {
            out << "d_of_U_direct=" << du_direct << "\n";
            if (du >= 0) out << "d_of_U=" << du << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------------- bounds

int run_bounds(const RunConfig& cfg, std::ostream& out) {
    int chosen = (cfg.five_term ? 1 : 0) + (cfg.coinvariant ? 1 : 0) +
                 (cfg.wilson ? 1 : 0) + (cfg.d_of_u_exponents.empty() ? 0 : 1);
    if (chosen != 1)
        throw InputError(
            "bounds needs exactly one of --five-term, --coinvariant, --wilson, "
            "--d-of-u");

    ordered_json c = config_json(cfg, nullptr, 0, 0);
    ordered_json doc;
    doc["schema"] = 1;
    doc["quantity"] = "";
    doc["config"] = c;
    std::ostringstream text;

    if (cfg.five_term) {
        FiveTermInput in{(*cfg.five_term)[0], (*cfg.five_term)[1],
                         (*cfg.five_term)[2]};
        auto [lo, hi] = five_term_bounds(in);
        doc["quantity"] = "five_term_generator_bounds";
        doc["lower"] = lo;
        doc["upper"] = hi;
        text << "lower=" << lo << "\nupper=" << hi << "\n";
    } else if (cfg.coinvariant) {
        long b = coinvariant_dim_bound(cfg.coinvariant->first,
                                       static_cast<int>(cfg.coinvariant->second));
        doc["quantity"] = "coinvariant_dimension_bound";
        doc["bound"] = b;
        text << "bound=" << b << "\n";
    } else if (cfg.wilson) {
        WilsonBoundParams params{parse_rational(std::get<1>(*cfg.wilson)),
                                 std::get<2>(*cfg.wilson)};
        bool ok = wilson_check(std::get<0>(*cfg.wilson), params);
        doc["quantity"] = "generator_growth_check";
        doc["ok"] = ok;
        text << "ok=" << (ok ? 1 : 0) << "\n";
    } else {
        if (cfg.p < 2 || cfg.j < 0)
            throw InputError("--d-of-u needs --p and --j");
        CyclicDecomposition dec;
        std::istringstream ss(cfg.d_of_u_exponents);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            long v = std::stol(tok);
            if (v < 1) throw InputError("exponents must be >= 1");
            dec.exponents.push_back(v);
            dec.d_H += v;
            dec.m = std::max(dec.m, v);
        }
        std::sort(dec.exponents.begin(), dec.exponents.end());
        long du = d_of_U(dec, cfg.p, cfg.j);
        doc["quantity"] = "cyclic_decomposition_generator_count";
        doc["d_of_U"] = du;
        text << "d_of_U=" << du << "\n";
    }

    if (cfg.format == "json") {
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_config_csv(out, c);
        out << "name,value\n";
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() == "schema" || it.key() == "config" || it.key() == "quantity")
                continue;
            out << it.key() << ","
                << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    } else {
        emit_config_text(out, c);
        out << text.str();
    }
    return 0;
}

}  // namespace

PadicInt parse_lambda(const std::string& text, long p, int auto_precision) {
    if (text.empty()) throw InputError("empty lambda");
    if (text.find(',') != std::string::npos) {
        std::vector<long> digits;
        std::istringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                digits.push_back(std::stol(tok));
            } catch (const std::logic_error&) {
                throw InputError("bad digit in lambda: '" + tok + "'");
            }
        }
        return PadicInt::from_digits(p, digits);
    }
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (!(std::isdigit(static_cast<unsigned char>(ch)) ||
              (i == 0 && (ch == '-' || ch == '+'))))
            throw InputError("bad lambda: '" + text + "'");
    }
    return PadicInt(p, auto_precision, mpz_class(text));
}

std::vector<PadicInt> build_lambda_grid(long p, const LambdaGridSpec& grid,
                                        int auto_precision) {
    std::vector<PadicInt> out;
    for (long r = 0; r < grid.all_residues_mod; ++r)
        out.push_back(PadicInt(p, auto_precision, r));
    for (const std::string& s : grid.explicit_values)
        out.push_back(parse_lambda(s, p, auto_precision));
    if (grid.randoms > 0) {
        SplitMix64 rng(grid.seed);
        for (int i = 0; i < grid.randoms; ++i) {
            std::vector<long> digits;
            for (int d = 0; d < 4; ++d)
                digits.push_back(static_cast<long>(rng.below(static_cast<std::uint64_t>(p))));
            PadicInt lam = PadicInt::from_digits(p, digits);
            // lift the 4 sampled digits to the working precision
            out.push_back(PadicInt(p, auto_precision, lam.residue()));
        }
    }
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "tower") return run_tower(cfg, out);
        if (cfg.command == "fpdim") return run_fpdim(cfg, out);
        if (cfg.command == "king") return run_king(cfg, out);
        if (cfg.command == "scan") return run_scan(cfg, out);
        if (cfg.command == "decompose") return run_decompose(cfg, out);
        if (cfg.command == "bounds") return run_bounds(cfg, out);
        throw InputError("unknown command: " + cfg.command);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace homtower
