#include "homtower/laurent.hpp"

namespace homtower {

LaurentPoly LaurentPoly::constant(int n, const mpz_class& c) {
    LaurentPoly r(n);
    r.add_term(std::vector<int>(static_cast<size_t>(n), 0), c);
    return r;
}

LaurentPoly LaurentPoly::monomial(int n, const std::vector<int>& exp,
                                  const mpz_class& c) {
    LaurentPoly r(n);
    r.add_term(exp, c);
    return r;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const mpz_class& c) {
    if (static_cast<int>(exp.size()) != n_)
        throw InputError("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_) throw InputError("group rank mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_) throw InputError("group rank mismatch");
    LaurentPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            std::string var = (e.size() <= 2)
                                  ? (i == 0 ? "x" : "y")
                                  : "x" + std::to_string(i + 1);
            mono += var;
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += c.get_str();
        } else if (c == 1) {
            s += mono;
        } else if (c == -1) {
            s += "-" + mono;
        } else {
            s += c.get_str() + "*" + mono;
        }
    }
    return s;
}

}  // namespace homtower
