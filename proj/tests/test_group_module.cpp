#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homtower/int_matrix.hpp"
#include "homtower/level.hpp"
#include "homtower/substitute.hpp"
#include "oracles.hpp"

using namespace homtower;

namespace {

LaurentPoly term(int n, std::vector<int> e, long c) {
    return LaurentPoly::monomial(n, e, c);
}

// cokernel invariants: (divisors > 1, free rank)
std::pair<std::vector<std::string>, long> cokernel_invariants(const IntegerMatrix& m) {
    std::vector<mpz_class> div = integer_snf(m);
    std::vector<std::string> nontrivial;
    long rank = 0;
    for (const mpz_class& d : div) {
        ++rank;
        if (d != 1) nontrivial.push_back(d.get_str());
    }
    return {nontrivial, m.cols() - rank};
}

ModulePresentation random_presentation(SplitMix64& rng, long p, int n, int g) {
    ModulePresentation pres;
    pres.p = p;
    pres.n = n;
    pres.g = g;
    int rels = 1 + static_cast<int>(rng.below(2));
    for (int r = 0; r < rels; ++r) {
        std::vector<LaurentPoly> row;
        for (int c = 0; c < g; ++c) {
            LaurentPoly poly(n);
            int terms = static_cast<int>(rng.below(4));
            for (int t = 0; t < terms; ++t) {
                std::vector<int> e(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    e[static_cast<size_t>(i)] = static_cast<int>(rng.below(5)) - 2;
                poly.add_term(e, static_cast<long>(rng.below(7)) - 3);
            }
            row.push_back(poly);
        }
        pres.relations.push_back(row);
    }
    return pres;
}

}  // namespace

TEST_CASE("parser handles the shipped grammar") {
    ModulePresentation pres =
        parse_presentation("p=3; n=2; gens=1; rel: p; rel: y - 2*x + 1");
    CHECK(pres.p == 3);
    CHECK(pres.n == 2);
    CHECK(pres.g == 1);
    REQUIRE(pres.relations.size() == 2);
    CHECK(pres.relations[0][0] == LaurentPoly::constant(2, 3));
    LaurentPoly expect(2);
    expect.add_term({0, 1}, 1);
    expect.add_term({1, 0}, -2);
    expect.add_term({0, 0}, 1);
    CHECK(pres.relations[1][0] == expect);
}

TEST_CASE("parser handles negative exponents") {
    ModulePresentation pres =
        parse_presentation("p=5; n=2; gens=1; rel: x + x^-1 + y + y^-1 - 4");
    LaurentPoly expect(2);
    expect.add_term({1, 0}, 1);
    expect.add_term({-1, 0}, 1);
    expect.add_term({0, 1}, 1);
    expect.add_term({0, -1}, 1);
    expect.add_term({0, 0}, -4);
    CHECK(pres.relations[0][0] == expect);
}

TEST_CASE("parser rejects bad input with positions") {
    CHECK_THROWS_WITH_AS(parse_presentation("p=4; n=1; gens=1; rel: x"),
                         "parse error at line 1, col 1: non-prime p = 4",
                         InputError);
    CHECK_THROWS_AS(parse_presentation("p=3; n=1; gens=1; rel: x^999999999"),
                    InputError);
    CHECK_THROWS_AS(parse_presentation("p=3; n=1; gens=1; rel: z"), InputError);
    CHECK_THROWS_AS(parse_presentation("p=3; n=1; gens=2; rel: x"), InputError);
    CHECK_THROWS_AS(parse_presentation("n=1; gens=1"), InputError);
    // y needs n = 2
    CHECK_THROWS_AS(parse_presentation("p=3; n=1; gens=1; rel: y"), InputError);
    // only the exact keyword introduces a relation row
    CHECK_THROWS_AS(parse_presentation("p=3; n=1; gens=1; release: x"),
                    InputError);
}

TEST_CASE("parser: multi-generator rows, comments, newlines") {
    ModulePresentation pres = parse_presentation(
        "# a two-generator module\n"
        "p=3; n=1; gens=2\n"
        "rel: x - 1 | x^2\n"
        "rel: 0 | p\n");
    CHECK(pres.g == 2);
    REQUIRE(pres.relations.size() == 2);
    CHECK(pres.relations[0][1] == term(1, {2}, 1));
    CHECK(pres.relations[1][0].is_zero());
    CHECK(pres.relations[1][1] == LaurentPoly::constant(1, 3));
}

TEST_CASE("expand_level: free module") {
    ModulePresentation pres = parse_presentation("p=5; n=1; gens=1;");
    LevelMatrix lm = expand_level(pres, 1);
    CHECK(lm.mat.rows() == 0);
    CHECK(lm.mat.cols() == 5);
    CHECK(lm.group_order == 5);
}

TEST_CASE("expand_level: cyclic shift minus 4I") {
    ModulePresentation pres = parse_presentation("p=3; n=1; gens=1; rel: x - 4");
    LevelMatrix lm = expand_level(pres, 1);
    REQUIRE(lm.mat.rows() == 3);
    REQUIRE(lm.mat.cols() == 3);
    // row for group element q: -4 at column q, +1 at column q+1 mod 3
    IntegerMatrix expect(3, 3);
    for (long q = 0; q < 3; ++q) {
        expect.at(q, q) = -4;
        expect.at(q, (q + 1) % 3) = 1;
    }
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) CHECK(lm.mat.at(i, j) == expect.at(i, j));
    CHECK(rank_over_Q(lm.mat) == 3);  // det = 4^3 - 1 = 63
    auto div = integer_snf(lm.mat);
    REQUIRE(div.size() == 3);
    CHECK(div[0] == 1);
    CHECK(div[1] == 1);
    CHECK(div[2] == 63);
}

TEST_CASE("expand_level: first worked example at level 1") {
    ModulePresentation pres =
        parse_presentation("p=3; n=2; gens=1; rel: p; rel: y - 2*x + 1");
    LevelMatrix lm = expand_level(pres, 1);
    CHECK(lm.mat.cols() == 9);   // g * p^(n*s)
    CHECK(lm.mat.rows() == 18);  // one block row per relation
    CHECK(rank_over_Fp(lm.mat, 3) == 6);  // cokernel dim 3 mod p
    CHECK(rank_over_Q(lm.mat) == 9);      // p-block has full rank over Q
}

TEST_CASE("expand_level respects the column cap") {
    ModulePresentation pres = parse_presentation("p=5; n=2; gens=1;");
    CHECK_THROWS_AS(expand_level(pres, 3, 1000), ResourceError);
    try {
        expand_level(pres, 3, 1000);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("15625") != std::string::npos);
    }
}

TEST_CASE("expand_level functoriality: level s reduced to level s-1") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 12; ++iter) {
        long p = (iter % 2) ? 2 : 3;
        int n = 1 + static_cast<int>(rng.below(2));
        int g = 1 + static_cast<int>(rng.below(2));
        int s = 2;
        ModulePresentation pres = random_presentation(rng, p, n, g);
        if (p == 3 && n == 2 && g == 2) continue;  // keep SNF sizes small

        LevelMatrix hi = expand_level(pres, s);
        LevelMatrix lo = expand_level(pres, s - 1);

        // append identification rows x_i^(p^(s-1)) * col - col
        long q = 1;
        for (int i = 0; i < s; ++i) q *= p;
        long qlow = q / p;
        long order = hi.group_order;
        IntegerMatrix aug(hi.mat.rows() + static_cast<long>(n) * g * order,
                          hi.mat.cols());
        for (long i = 0; i < hi.mat.rows(); ++i)
            for (long j = 0; j < hi.mat.cols(); ++j)
                aug.at(i, j) = hi.mat.at(i, j);
        long row = hi.mat.rows();
        std::vector<long> e(static_cast<size_t>(n), 0);
        for (int var = 0; var < n; ++var) {
            std::fill(e.begin(), e.end(), 0);
            for (long qi = 0; qi < order; ++qi) {
                auto index_of = [&](const std::vector<long>& v) {
                    long idx = 0;
                    for (int i = 0; i < n; ++i) idx = idx * q + v[static_cast<size_t>(i)];
                    return idx;
                };
                std::vector<long> shifted = e;
                shifted[static_cast<size_t>(var)] =
                    (shifted[static_cast<size_t>(var)] + qlow) % q;
                for (int gen = 0; gen < g; ++gen) {
                    aug.at(row, gen * order + index_of(shifted)) += 1;
                    aug.at(row, gen * order + index_of(e)) -= 1;
                    ++row;
                }
                for (int i = n - 1; i >= 0; --i) {
                    if (++e[static_cast<size_t>(i)] < q) break;
                    e[static_cast<size_t>(i)] = 0;
                }
            }
        }
        CHECK(cokernel_invariants(aug) == cokernel_invariants(lo.mat));
    }
}

TEST_CASE("substitute_character on the shipped examples") {
    // x + x^-1 + y + y^-1 - 4 at lambda = 0 becomes t^2 * unit mod p
    ModulePresentation king =
        parse_presentation("p=5; n=2; gens=1; rel: p; rel: x + x^-1 + y + y^-1 - 4");
    PadicInt zero(5, 3, 0);
    auto rows = substitute_character(king, zero, false, 10, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0].is_zero());  // scalar p vanishes mod p
    CHECK(series_valuation(rows[1][0]) == ExtNat::exactly(2));

    // the character kills its own kernel generator: x*y^-lambda - 1 -> 0
    ModulePresentation kernel_rel =
        parse_presentation("p=5; n=2; gens=1; rel: x*y^-3 - 1");
    PadicInt three(5, 3, 3);
    auto rows2 = substitute_character(kernel_rel, three, false, 10, 1);
    CHECK(rows2[0][0].is_zero());

    // axis elimination: y - 2x + 1 under x -> 1+t, y -> 1 gives -2t
    ModulePresentation ex1 =
        parse_presentation("p=3; n=2; gens=1; rel: y - 2*x + 1");
    PadicInt zero3(3, 3, 0);
    auto rows3 = substitute_character(ex1, zero3, true, 6, 1);
    TruncatedSeries expect(3, 1, 6);
    expect.set_coeff(1, -2);
    CHECK(rows3[0][0] == expect);
    CHECK(series_valuation(rows3[0][0]) == ExtNat::exactly(1));
}

TEST_CASE("substitute_character respects products") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        long p = 5;
        int D = 10, K = 4;
        LaurentPoly a(2), b(2);
        for (int t = 0; t < 3; ++t) {
            a.add_term({static_cast<int>(rng.below(7)) - 3,
                        static_cast<int>(rng.below(7)) - 3},
                       static_cast<long>(rng.below(9)) - 4);
            b.add_term({static_cast<int>(rng.below(7)) - 3,
                        static_cast<int>(rng.below(7)) - 3},
                       static_cast<long>(rng.below(9)) - 4);
        }
        ModulePresentation pres;
        pres.p = p;
        pres.n = 2;
        pres.g = 1;
        pres.relations = {{a}, {b}, {a * b}};
        PadicInt lam(p, K, static_cast<long>(rng.below(625)));
        auto rows = substitute_character(pres, lam, false, D, 1);
        CHECK(rows[2][0] == rows[0][0] * rows[1][0]);
    }
}

TEST_CASE("substitute_character matches integer polynomial substitution") {
    SplitMix64 rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        long p = 3;
        int D = 8, K_out = 1;
        long lam_int = static_cast<long>(rng.below(5));
        LaurentPoly a(2);
        for (int t = 0; t < 3; ++t)
            a.add_term({static_cast<int>(rng.below(3)),
                        static_cast<int>(rng.below(3))},
                       static_cast<long>(rng.below(7)) - 3);
        ModulePresentation pres;
        pres.p = p;
        pres.n = 2;
        pres.g = 1;
        pres.relations = {{a}};
        int K = required_exponent_precision(p, D, K_out) + 4;
        auto rows = substitute_character(pres, PadicInt(p, K, lam_int), false, D, K_out);

        // integer oracle: evaluate with x = (1+t)^lam, y = (1+t), all by
        // repeated polynomial products
        mpz_class mod(p);
        std::vector<mpz_class> acc(static_cast<size_t>(D), mpz_class(0));
        for (const auto& [e, c] : a.terms()) {
            long power = lam_int * e[0] + e[1];
            REQUIRE(power >= 0);
            auto mono = oracles::one_plus_t_pow_product(power, p, K_out, D);
            for (int j = 0; j < D; ++j) {
                acc[static_cast<size_t>(j)] += c * mono[static_cast<size_t>(j)];
                mpz_mod(acc[static_cast<size_t>(j)].get_mpz_t(),
                        acc[static_cast<size_t>(j)].get_mpz_t(), mod.get_mpz_t());
            }
        }
        for (int j = 0; j < D; ++j)
            CHECK(rows[0][0].coeff(j) == acc[static_cast<size_t>(j)]);
    }
}

TEST_CASE("substitute_character requires n = 2") {
    ModulePresentation pres = parse_presentation("p=3; n=1; gens=1; rel: x - 1");
    CHECK_THROWS_AS(substitute_character(pres, PadicInt(3, 4, 0), false, 6, 1),
                    InputError);
}
