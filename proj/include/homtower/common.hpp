#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homtower {

// Error taxonomy mirrors the CLI exit codes: InputError -> 1,
// ResourceError -> 2, InternalError -> 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A non-negative quantity that is either known exactly or only certified from
// below. Truncated series and finite-precision residues cannot certify
// vanishing, so "all coefficients seen are zero" surfaces as a lower bound,
// never as infinity.
struct ExtNat {
    long value = 0;
    bool exact = true;

    static ExtNat exactly(long v) { return ExtNat{v, true}; }
    static ExtNat at_least(long v) { return ExtNat{v, false}; }

    bool operator==(const ExtNat&) const = default;
};

inline ExtNat operator+(ExtNat a, long k) { return ExtNat{a.value + k, a.exact}; }

// Observed supremum; any lower-bound participant makes the result a bound.
ExtNat ext_sup(const ExtNat& a, const ExtNat& b);

// "7" for exact values, ">= 7" for bounds; dim_flavor appends
// " (possibly infinite)" to bounds, matching the dimension reports.
std::string to_string(const ExtNat& v, bool dim_flavor = false);

// Deterministic 64-bit generator used for seeded sweeps and test data.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

bool is_prime(long p);

// Legendre's formula: v_p(j!).
int factorial_valuation(long j, long p);

}  // namespace homtower
