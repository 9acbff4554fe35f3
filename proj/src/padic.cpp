#include "homtower/padic.hpp"

namespace homtower {

namespace {

mpz_class pow_long(long base, int exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

void check_compatible(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime())
        throw InputError("p-adic arithmetic on mismatched primes " +
                         std::to_string(a.prime()) + " and " +
                         std::to_string(b.prime()));
}

}  // namespace

PadicInt::PadicInt(long p, int precision, mpz_class residue)
    : p_(p), k_(precision) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (precision < 1) throw InputError("p-adic precision must be >= 1");
    mod_ = pow_long(p, precision);
    mpz_mod(r_.get_mpz_t(), residue.get_mpz_t(), mod_.get_mpz_t());
}

PadicInt PadicInt::from_digits(long p, const std::vector<long>& digits) {
    if (digits.empty()) throw InputError("empty digit string");
    mpz_class r = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < 0 || digits[i] >= p)
            throw InputError("digit " + std::to_string(digits[i]) +
                             " out of range for p = " + std::to_string(p));
        r = r * p + digits[i];
    }
    return PadicInt(p, static_cast<int>(digits.size()), r);
}

long PadicInt::digit(int i) const {
    if (i < 0 || i >= k_) throw InputError("digit index out of range");
    mpz_class q = r_;
    for (int t = 0; t < i; ++t) q /= p_;
    mpz_class d = q % p_;
    return d.get_si();
}

PadicInt PadicInt::reduced(int precision) const {
    if (precision > k_)
        throw InputError("cannot raise p-adic precision from " +
                         std::to_string(k_) + " to " + std::to_string(precision));
    return PadicInt(p_, precision, r_);
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, k_, -r_); }

PadicInt PadicInt::mul_int(long c) const { return PadicInt(p_, k_, r_ * c); }

PadicInt PadicInt::add_int(long c) const { return PadicInt(p_, k_, r_ + c); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    check_compatible(a, b);
    int k = std::min(a.precision(), b.precision());
    return PadicInt(a.prime(), k, a.residue() + b.residue());
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    check_compatible(a, b);
    int k = std::min(a.precision(), b.precision());
    return PadicInt(a.prime(), k, a.residue() - b.residue());
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    check_compatible(a, b);
    int k = std::min(a.precision(), b.precision());
    return PadicInt(a.prime(), k, a.residue() * b.residue());
}

std::string PadicInt::to_string() const {
    return r_.get_str() + " + O(" + std::to_string(p_) + "^" +
           std::to_string(k_) + ")";
}

ExtNat padic_valuation(const PadicInt& x) {
    if (x.is_zero()) return ExtNat::at_least(x.precision());
    mpz_class r = x.residue();
    long v = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(x.prime()))) {
        r /= x.prime();
        ++v;
    }
    return ExtNat::exactly(v);
}

PadicInt padic_binomial(const PadicInt& lam, long j) {
    if (j < 0) throw InputError("binomial index must be non-negative");
    const long p = lam.prime();
    const int K = lam.precision();
    if (j == 0) return PadicInt(p, K, 1);

    const int v = factorial_valuation(j, p);
    if (v >= K)
        throw InputError("precision exhausted: v_p(" + std::to_string(j) +
                         "!) = " + std::to_string(v) + " >= precision " +
                         std::to_string(K));

    // Numerator lambda(lambda-1)...(lambda-j+1) mod p^K, then exact division
    // by the p-part of j! and a unit inverse for the rest.
    const mpz_class& mod = lam.modulus();
    mpz_class num = 1;
    for (long i = 0; i < j; ++i) {
        num *= lam.residue() - i;
        mpz_mod(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    }

    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(v));
    mpz_class unit = fact / pv;

    if (!mpz_divisible_p(num.get_mpz_t(), pv.get_mpz_t()))
        throw InternalError("binomial numerator not divisible by p-part of j!");
    mpz_class reduced_num = num / pv;

    const int k_out = K - v;
    mpz_class out_mod;
    mpz_ui_pow_ui(out_mod.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k_out));
    mpz_class unit_inv;
    if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), out_mod.get_mpz_t()) == 0)
        throw InternalError("unit part of j! not invertible");
    return PadicInt(p, k_out, reduced_num * unit_inv);
}

DigitSplit digit_split(const PadicInt& lam) {
    if (lam.precision() < 2)
        throw InputError("digit_split needs precision >= 2");
    const long p = lam.prime();
    const int K = lam.precision();

    mpz_class z0m = lam.residue() % p;
    long z0 = z0m.get_si();
    PadicInt lambda1(p, K - 1, (lam.residue() - z0) / p);

    PadicInt neg = -lam;
    mpz_class a0m = neg.residue() % p;
    long a0 = a0m.get_si();
    PadicInt lambda2(p, K - 1, (neg.residue() - a0) / p);

    return DigitSplit{z0, a0, lambda1, lambda2};
}

}  // namespace homtower
