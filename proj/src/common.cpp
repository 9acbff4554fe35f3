#include "homtower/common.hpp"

namespace homtower {

ExtNat ext_sup(const ExtNat& a, const ExtNat& b) {
    ExtNat r;
    r.value = a.value > b.value ? a.value : b.value;
    r.exact = a.exact && b.exact;
    return r;
}

std::string to_string(const ExtNat& v, bool dim_flavor) {
    if (v.exact) return std::to_string(v.value);
    std::string s = ">= " + std::to_string(v.value);
    if (dim_flavor) s += " (possibly infinite)";
    return s;
}

bool is_prime(long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

int factorial_valuation(long j, long p) {
    int v = 0;
    long q = j;
    while (q >= p) {
        q /= p;
        v += static_cast<int>(q);
    }
    return v;
}

}  // namespace homtower
