#include <CLI11.hpp>

#include "homtower/cli.hpp"

int main(int argc, char** argv) {
    homtower::RunConfig cfg;

    CLI::App app{"homtower: exact homology-growth invariants of metabelian "
                 "pro-p groups presented by modules over completed group "
                 "algebras"};
    app.require_subcommand(1);

    long five_a = 0, five_b = 0, five_c = 0;
    long coin_dh = 0, coin_n = 0;
    long wil_du = 0, wil_index = 0;
    std::string wil_k;

    auto add_pres = [&](CLI::App* sub) {
        sub->add_option("--file", cfg.file, "presentation file");
        sub->add_option("--pres", cfg.inline_pres, "inline presentation text");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--all-residues-mod", cfg.grid.all_residues_mod,
                        "scan lambda = 0..M-1");
        sub->add_option("--lambda", cfg.grid.explicit_values,
                        "explicit lambda (decimal, or base-p digits d0,d1,...)");
        sub->add_option("--random", cfg.grid.randoms,
                        "append N seeded pseudo-random lambda (4 digits)");
        sub->add_option("--seed", cfg.grid.seed, "seed for --random");
        sub->add_option("--K", cfg.grid.K, "lambda precision (0 = auto)");
    };

    CLI::App* tower = app.add_subcommand(
        "tower", "torsion-free ranks of the coinvariants along the tower");
    add_pres(tower);
    tower->add_option("--s-max", cfg.s_max, "largest tower level");
    tower->add_option("--cap", cfg.cap, "level-matrix column cap");
    tower->add_flag("--torsion", cfg.torsion, "also report elementary divisors");
    tower->add_flag("--modular-rank", cfg.modular_rank,
                    "probabilistic modular rank fast path");
    tower->add_option("--print-level", cfg.print_level,
                      "dump the level-s matrix instead of the rank report");
    add_format(tower);

    CLI::App* fpdim = app.add_subcommand(
        "fpdim", "F_p-dimensions of the coinvariants along the tower");
    add_pres(fpdim);
    fpdim->add_option("--s-max", cfg.s_max, "largest tower level");
    fpdim->add_option("--route", cfg.route, "block|series|auto");
    fpdim->add_option("--D", cfg.D, "series truncation degree (0 = auto)");
    fpdim->add_option("--cap", cfg.cap, "level-matrix column cap");
    add_format(fpdim);

    CLI::App* scan = app.add_subcommand(
        "scan",
        "corank-one coinvariant dimensions over a lambda grid (n = 2; "
        "subgroups <x*y^-lambda> and <y*x^-lambda>)");
    add_pres(scan);
    scan->add_option("--D", cfg.D, "truncation degree (0 = auto: 2p)");
    add_grid(scan);
    add_format(scan);

    CLI::App* king = app.add_subcommand(
        "king", "valuation analysis of (1+t)^l + (1+t)^-l + (1+t) + (1+t)^-1 - 4");
    king->add_option("--p", cfg.p, "odd prime")->required();
    king->add_option("--D", cfg.D, "truncation degree (0 = auto: 2p)");
    add_grid(king);
    add_format(king);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "cyclic decomposition of a corank-one coinvariant module");
    add_pres(decompose);
    decompose->add_option("--lambda", cfg.grid.explicit_values,
                          "character parameter (exactly one)");
    decompose->add_flag("--axis-swap", cfg.axis_swap,
                        "use the subgroup <y*x^-lambda>");
    decompose->add_option("--D", cfg.D, "truncation degree (0 = auto: 2p)");
    decompose->add_option("--K", cfg.grid.K, "lambda precision (0 = auto)");
    decompose->add_option("--j", cfg.j, "also report d_of_U at index p^j");
    add_format(decompose);

    CLI::App* bounds = app.add_subcommand("bounds", "bound calculators");
    auto* ft = bounds->add_option_group("five-term");
    ft->add_option("--five-term", [&](const std::vector<std::string>& v) {
          five_a = std::stol(v[0]);
          five_b = std::stol(v[1]);
          five_c = std::stol(v[2]);
          cfg.five_term = {five_a, five_b, five_c};
          return true;
      },
      "dim_H0 dim_H1Q dim_H2Q -> sandwich for d(G)")
        ->expected(3);
    bounds->add_option("--coinvariant", [&](const std::vector<std::string>& v) {
              coin_dh = std::stol(v[0]);
              coin_n = std::stol(v[1]);
              cfg.coinvariant = {coin_dh, coin_n};
              return true;
          },
          "d_H n -> coinvariant dimension bound")
        ->expected(2);
    bounds->add_option("--wilson", [&](const std::vector<std::string>& v) {
              wil_du = std::stol(v[0]);
              wil_k = v[1];
              wil_index = std::stol(v[2]);
              cfg.wilson = {wil_du, wil_k, wil_index};
              return true;
          },
          "d_U k index -> check d_U <= k*sqrt(index)")
        ->expected(3);
    bounds->add_option("--d-of-u", cfg.d_of_u_exponents,
                       "comma-separated exponents i1,i2,...");
    bounds->add_option("--p", cfg.p, "prime (for --d-of-u)");
    bounds->add_option("--j", cfg.j, "power index (for --d-of-u)");
    add_format(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (CLI::App* sub :
         {tower, fpdim, scan, king, decompose, bounds})
        if (sub->parsed()) cfg.command = sub->get_name();

    return homtower::run(cfg, std::cout, std::cerr);
}
