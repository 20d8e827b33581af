#pragma once

#include "degenseq/rational.hpp"

namespace degenseq {

bool is_prime_small(unsigned n);

// Lucas-Lehmer primality test for M_p = 2^p - 1: for odd prime p, M_p is
// prime iff s_{p-2} = 0 mod M_p with s_0 = 4, s_{i+1} = s_i^2 - 2.
// p = 2 returns true (M_2 = 3); composite p returns false without iterating.
// Throws for p < 2.
bool lucas_lehmer(unsigned p);

} // namespace degenseq
