#pragma once

#include "degenseq/trunc_series.hpp"

#include <vector>

namespace degenseq {

// Ordered Bell-polynomial arguments x_1, x_2, ..., x_m (1-indexed).
// Polynomial-valued so that degenerate Bernoulli polynomials can be fed in.
struct BellArgs {
    std::vector<BivarPoly> args;

    // x_i, 1-indexed.
    const BivarPoly& at(unsigned i) const { return args.at(i - 1); }
    unsigned size() const { return static_cast<unsigned>(args.size()); }

    static BellArgs all_equal(const BivarPoly& v, unsigned m) {
        return BellArgs{std::vector<BivarPoly>(m, v)};
    }
};

// Multiplicities (l_1,...,l_{n-k+1}) with sum l_i = k and sum i*l_i = n.
struct PartitionProfile {
    std::vector<unsigned> multiplicities;

    bool operator==(const PartitionProfile&) const = default;
};

// Stirling numbers of the second kind via the triangle recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
BigInt stirling2(unsigned n, unsigned k);

// S(n,k) as n!/k! times the t^n coefficient of (e^t - 1)^k.
BigInt stirling2_via_gf(unsigned n, unsigned k, unsigned order);

// Every profile with sum l_i = k, sum i*l_i = n, in lexicographic order.
std::vector<PartitionProfile> enumerate_partition_profiles(unsigned n, unsigned k);

// Incomplete Bell polynomial B_{n,k} by explicit partition sum:
// sum over profiles of n!/(prod l_i!) * prod (x_i/i!)^{l_i}.
// Convention: B_{n,0} = [n=0].
BivarPoly incomplete_bell_partition(unsigned n, unsigned k, const BellArgs& a);

// B_{n,k} as n!/k! times the t^n coefficient of (sum_i x_i t^i/i!)^k.
BivarPoly incomplete_bell_series(unsigned n, unsigned k, const BellArgs& a, unsigned order);

// Complete Bell polynomial B_n = sum_{k=1}^{n} B_{n,k}; B_0 = 1.
BivarPoly complete_bell(unsigned n, const BellArgs& a);

// Bell polynomial phi_n(x) = sum_k S(n,k) x^k, in x only.
BivarPoly bell_polynomial(unsigned n);

} // namespace degenseq
