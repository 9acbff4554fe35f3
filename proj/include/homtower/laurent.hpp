#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "homtower/common.hpp"

namespace homtower {

// Element of the integral group ring Z[x1^+-, ..., xn^+-]: finitely many
// exponent vectors with exact integer coefficients. Zero coefficients are
// never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int n) : n_(n) {
        if (n < 1) throw InputError("group rank must be >= 1");
    }

    static LaurentPoly constant(int n, const mpz_class& c);
    static LaurentPoly monomial(int n, const std::vector<int>& exp,
                                const mpz_class& c);

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exp, const mpz_class& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator-(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const;

private:
    int n_;
    std::map<std::vector<int>, mpz_class> terms_;
};

// Finitely presented module over Zp[[Q]], Q of rank n, given by relation rows
// over the group ring. The scalar p may appear as a relation coefficient.
struct ModulePresentation {
    long p = 0;
    int n = 0;
    int g = 0;
    std::vector<std::vector<LaurentPoly>> relations;
};

// Parses the presentation grammar:
//   p=<prime>; n=<rank>; gens=<g>;
//   rel: <entry> | <entry> | ...
// Statements are separated by ';' or newlines; '#' starts a comment.
// Monomials look like c*x^e*y^f (x,y for n<=2, x1..xn generally); a bare
// integer, or the symbol p, is a scalar relation.
ModulePresentation parse_presentation(const std::string& text);

ModulePresentation parse_presentation_file(const std::string& path);

}  // namespace homtower
