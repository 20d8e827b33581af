#include "degenseq/lucas_lehmer.hpp"

#include <stdexcept>

namespace degenseq {

bool is_prime_small(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool lucas_lehmer(unsigned p) {
    if (p < 2) throw std::invalid_argument("lucas_lehmer: requires p >= 2");
    if (p == 2) return true;
    if (!is_prime_small(p)) return false; // composite p forces composite M_p
    const BigInt m = (BigInt(1) << p) - 1;
    BigInt s = 4;
    for (unsigned i = 0; i < p - 2; ++i)
        s = (s * s - 2) % m;
    return s == 0;
}

} // namespace degenseq
