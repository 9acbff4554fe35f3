#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "homtower/common.hpp"

namespace homtower {

// A p-adic integer known modulo p^K. Immutable after construction; safe to
// share between threads. Arithmetic carries precision = min of the operand
// precisions and never pretends more precision than justified.
class PadicInt {
public:
    PadicInt(long p, int precision, mpz_class residue);

    // Digits least significant first; precision = digits.size().
    static PadicInt from_digits(long p, const std::vector<long>& digits);

    long prime() const { return p_; }
    int precision() const { return k_; }
    const mpz_class& residue() const { return r_; }
    const mpz_class& modulus() const { return mod_; }

    bool is_zero() const { return r_ == 0; }
    long digit(int i) const;  // base-p digit, 0 <= i < precision

    PadicInt reduced(int precision) const;
    PadicInt operator-() const;
    PadicInt mul_int(long c) const;
    PadicInt add_int(long c) const;

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

    // Equal prime, precision and residue.
    bool operator==(const PadicInt& o) const {
        return p_ == o.p_ && k_ == o.k_ && r_ == o.r_;
    }

    std::string to_string() const;  // "r + O(p^K)"

private:
    long p_;
    int k_;
    mpz_class mod_;  // p^K
    mpz_class r_;    // in [0, p^K)
};

// Largest v <= K with p^v | residue; "at least K" when the residue vanishes.
ExtNat padic_valuation(const PadicInt& x);

// C(lambda, j) = lambda(lambda-1)...(lambda-j+1)/j!. Output precision is
// K - v_p(j!); throws InputError when v_p(j!) >= K (precision exhausted).
PadicInt padic_binomial(const PadicInt& lam, long j);

// lambda = z0 + p*lambda1 and -lambda = a0 + p*lambda2, with z0, a0 in [0, p).
struct DigitSplit {
    long z0;
    long a0;
    PadicInt lambda1;
    PadicInt lambda2;
};

DigitSplit digit_split(const PadicInt& lam);  // requires precision >= 2

}  // namespace homtower
