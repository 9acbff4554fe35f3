#include "homtower/series.hpp"

namespace homtower {

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.prime() != b.prime() || a.coeff_precision() != b.coeff_precision() ||
        a.trunc_degree() != b.trunc_degree())
        throw InputError("series parameter mismatch: (" +
                         std::to_string(a.prime()) + "," +
                         std::to_string(a.coeff_precision()) + "," +
                         std::to_string(a.trunc_degree()) + ") vs (" +
                         std::to_string(b.prime()) + "," +
                         std::to_string(b.coeff_precision()) + "," +
                         std::to_string(b.trunc_degree()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(long p, int coeff_precision, int trunc_degree)
    : p_(p), k_(coeff_precision), d_(trunc_degree) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (k_ < 1) throw InputError("coefficient precision must be >= 1");
    if (d_ < 1) throw InputError("truncation degree must be >= 1");
    mpz_ui_pow_ui(mod_.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k_));
    c_.assign(static_cast<size_t>(d_), mpz_class(0));
}

TruncatedSeries TruncatedSeries::constant(long p, int K, int D, const mpz_class& c) {
    TruncatedSeries s(p, K, D);
    s.set_coeff(0, c);
    return s;
}

TruncatedSeries TruncatedSeries::one_plus_t(long p, int K, int D) {
    TruncatedSeries s(p, K, D);
    s.set_coeff(0, 1);
    if (D > 1) s.set_coeff(1, 1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(long p, int K, int D, int degree,
                                          const mpz_class& c) {
    TruncatedSeries s(p, K, D);
    if (degree < 0) throw InputError("monomial degree must be >= 0");
    if (degree < D) s.set_coeff(degree, c);
    return s;
}

void TruncatedSeries::set_coeff(int j, const mpz_class& v) {
    if (j < 0 || j >= d_) throw InputError("coefficient index out of range");
    mpz_mod(c_[j].get_mpz_t(), v.get_mpz_t(), mod_.get_mpz_t());
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(p_, k_, d_);
    for (int j = 0; j < d_; ++j) r.set_coeff(j, -c_[j]);
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries r(a.p_, a.k_, a.d_);
    for (int j = 0; j < a.d_; ++j) r.set_coeff(j, a.c_[j] + b.c_[j]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries r(a.p_, a.k_, a.d_);
    for (int j = 0; j < a.d_; ++j) r.set_coeff(j, a.c_[j] - b.c_[j]);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

TruncatedSeries TruncatedSeries::add_int(long c) const {
    TruncatedSeries r = *this;
    r.set_coeff(0, c_[0] + c);
    return r;
}

TruncatedSeries TruncatedSeries::scale(const mpz_class& c) const {
    TruncatedSeries r(p_, k_, d_);
    for (int j = 0; j < d_; ++j) r.set_coeff(j, c_[j] * c);
    return r;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
    if (e < 0) throw InputError("pow expects a non-negative exponent");
    TruncatedSeries acc = constant(p_, k_, d_, 1);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::reduced(int K) const {
    if (K > k_) throw InputError("cannot raise coefficient precision");
    TruncatedSeries r(p_, K, d_);
    for (int j = 0; j < d_; ++j) r.set_coeff(j, c_[j]);
    return r;
}

std::string TruncatedSeries::to_string() const {
    std::string s;
    for (int j = 0; j < d_; ++j) {
        if (c_[j] == 0) continue;
        if (!s.empty()) s += " + ";
        if (j == 0) {
            s += c_[j].get_str();
        } else {
            if (c_[j] != 1) s += c_[j].get_str() + "*";
            s += (j == 1) ? "t" : "t^" + std::to_string(j);
        }
    }
    if (s.empty()) s = "0";
    s += " + O(t^" + std::to_string(d_) + ")";
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    const int D = a.trunc_degree();
    std::vector<mpz_class> acc(static_cast<size_t>(D), mpz_class(0));
    for (int i = 0; i < D; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < D; ++j) {
            if (b.coeff(j) == 0) continue;
            acc[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    TruncatedSeries r(a.prime(), a.coeff_precision(), D);
    for (int j = 0; j < D; ++j) r.set_coeff(j, acc[static_cast<size_t>(j)]);
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    const long p = a.prime();
    const int D = a.trunc_degree();
    if (mpz_divisible_ui_p(a.coeff(0).get_mpz_t(), static_cast<unsigned long>(p)))
        throw InputError("series has no inverse: constant term " +
                         a.coeff(0).get_str() + " is not a unit mod " +
                         std::to_string(p));
    mpz_class c0_inv;
    if (mpz_invert(c0_inv.get_mpz_t(), a.coeff(0).get_mpz_t(),
                   a.coeff_modulus().get_mpz_t()) == 0)
        throw InternalError("unit constant term not invertible");

    TruncatedSeries r(p, a.coeff_precision(), D);
    r.set_coeff(0, c0_inv);
    for (int k = 1; k < D; ++k) {
        mpz_class s = 0;
        for (int i = 1; i <= k; ++i) s += a.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, -c0_inv * s);
    }
    return r;
}

int required_exponent_precision(long p, int D, int K_out) {
    // p^K > D*p, i.e. p^(K-1) > D.
    int k1 = 1;
    mpz_class q = 1;
    while (q <= D) {
        q *= p;
        ++k1;
    }
    int k2 = K_out + (D > 1 ? factorial_valuation(D - 1, p) : 0);
    return std::max(k1, k2);
}

TruncatedSeries one_plus_t_pow(const PadicInt& lam, int D, int K_out) {
    const long p = lam.prime();
    const int K = lam.precision();
    if (K_out < 1) throw InputError("output precision must be >= 1");

    const int needed = required_exponent_precision(p, D, K_out);
    if (K < needed)
        throw InputError("insufficient exponent precision: have " +
                         std::to_string(K) + " base-" + std::to_string(p) +
                         " digits, need " + std::to_string(needed) +
                         " for truncation degree " + std::to_string(D));

    TruncatedSeries r(p, K_out, D);
    mpz_class out_mod = r.coeff_modulus();

    // Incremental numerator products; division by j! split into its p-part
    // (exact division) and unit part (inverse mod p^(K - v)).
    mpz_class num = 1;          // lambda(lambda-1)...(lambda-j+1) mod p^K
    mpz_class unit = 1;         // j! / p^(v_p(j!)) mod p^K
    int v = 0;                  // v_p(j!)
    const mpz_class& mod = lam.modulus();
    r.set_coeff(0, 1);
    for (long j = 1; j < D; ++j) {
        num *= lam.residue() - (j - 1);
        mpz_mod(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
        long jj = j;
        while (jj % p == 0) {
            jj /= p;
            ++v;
        }
        unit *= jj;
        mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());

        if (v + K_out > K)
            throw InternalError("exponent precision bookkeeping violated");
        mpz_class pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(v));
        if (!mpz_divisible_p(num.get_mpz_t(), pv.get_mpz_t()))
            throw InternalError("binomial numerator not divisible by p-part");
        mpz_class reduced_num = num / pv;
        mpz_class unit_inv;
        if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(),
                       out_mod.get_mpz_t()) == 0)
            throw InternalError("unit part of j! not invertible");
        r.set_coeff(static_cast<int>(j), reduced_num * unit_inv);
    }
    return r;
}

ExtNat series_valuation(const TruncatedSeries& a) {
    for (int j = 0; j < a.trunc_degree(); ++j)
        if (a.coeff(j) != 0) return ExtNat::exactly(j);
    return ExtNat::at_least(a.trunc_degree());
}

}  // namespace homtower
