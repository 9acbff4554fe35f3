#include "homtower/level.hpp"

namespace homtower {

LevelMatrix expand_level(const ModulePresentation& pres, int s, long column_cap) {
    if (s < 1) throw InputError("tower levels start at 1");
    if (pres.p < 2 || pres.n < 1 || pres.g < 1)
        throw InputError("malformed presentation");

    // q = p^s, group_order = q^n; fail fast when g * group_order exceeds the cap
    mpz_class q_big;
    mpz_ui_pow_ui(q_big.get_mpz_t(), static_cast<unsigned long>(pres.p),
                  static_cast<unsigned long>(s));
    mpz_class order_big;
    mpz_pow_ui(order_big.get_mpz_t(), q_big.get_mpz_t(),
               static_cast<unsigned long>(pres.n));
    mpz_class cols_big = order_big * pres.g;
    if (cols_big > column_cap)
        throw ResourceError("level matrix needs " + cols_big.get_str() +
                            " columns; raise the size cap (currently " +
                            std::to_string(column_cap) + ")");

    const long q = static_cast<long>(q_big.get_si());
    const long order = static_cast<long>(order_big.get_si());
    const int n = pres.n;
    const int g = pres.g;

    // lexicographic rank of an exponent vector in [0, q)^n, first coordinate major
    auto index_of = [&](const std::vector<long>& e) {
        long idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * q + e[static_cast<size_t>(i)];
        return idx;
    };

    const long rel_count = static_cast<long>(pres.relations.size());
    LevelMatrix lm;
    lm.p = pres.p;
    lm.s = s;
    lm.n = n;
    lm.g = g;
    lm.group_order = order;
    lm.mat = IntegerMatrix(rel_count * order, g * order);

    std::vector<long> e(static_cast<size_t>(n), 0);
    for (long ri = 0; ri < rel_count; ++ri) {
        const auto& row = pres.relations[static_cast<size_t>(ri)];
        // enumerate group elements in lexicographic order
        std::fill(e.begin(), e.end(), 0);
        for (long qi = 0; qi < order; ++qi) {
            long out_row = ri * order + qi;
            for (int gen = 0; gen < g; ++gen) {
                for (const auto& [exp, coeff] : row[static_cast<size_t>(gen)].terms()) {
                    std::vector<long> shifted(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i) {
                        long v = (e[static_cast<size_t>(i)] + exp[static_cast<size_t>(i)]) % q;
                        if (v < 0) v += q;
                        shifted[static_cast<size_t>(i)] = v;
                    }
                    long col = gen * order + index_of(shifted);
                    lm.mat.at(out_row, col) += coeff;
                }
            }
            // advance e lexicographically
            for (int i = n - 1; i >= 0; --i) {
                if (++e[static_cast<size_t>(i)] < q) break;
                e[static_cast<size_t>(i)] = 0;
            }
        }
    }
    return lm;
}

}  // namespace homtower
