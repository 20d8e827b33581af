#include "degenseq/bell.hpp"

#include <stdexcept>

namespace degenseq {

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n == 0) return 1;
    if (k == 0) return 0;
    // One row of the triangle at a time.
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1; // S(0,0)
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = std::min(m, k); j >= 1; --j)
            row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

namespace {

// Truncated series with constant coefficients c_n = x_n t^n scaled arbitrarily;
// powers are taken by repeated Cauchy product.
TruncSeries repeated_power(const TruncSeries& base, unsigned k, unsigned order) {
    TruncSeries p = TruncSeries::constant(BivarPoly(1), order);
    for (unsigned i = 0; i < k; ++i) p = p * base;
    return p;
}

} // namespace

BigInt stirling2_via_gf(unsigned n, unsigned k, unsigned order) {
    if (order < n)
        throw std::out_of_range("stirling2_via_gf: order < n");
    // e^t - 1 with rational constant coefficients.
    TruncSeries em1(order);
    BigInt fact = 1;
    for (unsigned i = 1; i <= order; ++i) {
        fact *= i;
        em1.set_coeff(i, BivarPoly(Rational(BigInt(1), fact)));
    }
    TruncSeries p = repeated_power(em1, k, order);
    Rational c = (Rational(factorial(n)) / Rational(factorial(k))) * p.coeff(n).as_rational();
    if (!c.is_integer())
        throw std::logic_error("stirling2_via_gf: non-integer result");
    return c.num();
}

namespace {

void enumerate_rec(unsigned i, unsigned m, unsigned remaining_count, unsigned remaining_weight,
                   std::vector<unsigned>& current, std::vector<PartitionProfile>& out) {
    if (i > m) {
        if (remaining_count == 0 && remaining_weight == 0)
            out.push_back(PartitionProfile{current});
        return;
    }
    // Slots i..m each add between i and m per unit of multiplicity.
    if (remaining_weight < remaining_count * i || remaining_weight > remaining_count * m)
        return;
    unsigned max_l = std::min(remaining_count, remaining_weight / i);
    for (unsigned l = 0; l <= max_l; ++l) {
        current[i - 1] = l;
        enumerate_rec(i + 1, m, remaining_count - l, remaining_weight - l * i, current, out);
    }
    current[i - 1] = 0;
}

} // namespace

std::vector<PartitionProfile> enumerate_partition_profiles(unsigned n, unsigned k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("enumerate_partition_profiles: requires 1 <= k <= n");
    unsigned m = n - k + 1;
    std::vector<PartitionProfile> out;
    std::vector<unsigned> current(m, 0);
    enumerate_rec(1, m, k, n, current, out);
    return out;
}

BivarPoly incomplete_bell_partition(unsigned n, unsigned k, const BellArgs& a) {
    if (k == 0) return n == 0 ? BivarPoly(1) : BivarPoly();
    if (k > n) return BivarPoly();
    unsigned m = n - k + 1;
    if (a.size() < m)
        throw std::invalid_argument("incomplete_bell_partition: needs n-k+1 arguments");
    BivarPoly r;
    for (const auto& profile : enumerate_partition_profiles(n, k)) {
        BigInt den = 1;
        BivarPoly prod(1);
        for (unsigned i = 1; i <= m; ++i) {
            unsigned l = profile.multiplicities[i - 1];
            if (l == 0) continue;
            den *= factorial(l);
            BigInt ifact = factorial(i);
            for (unsigned j = 0; j < l; ++j) {
                den *= ifact;
                prod *= a.at(i);
            }
        }
        r += Rational(factorial(n), den) * prod;
    }
    return r;
}

BivarPoly incomplete_bell_series(unsigned n, unsigned k, const BellArgs& a, unsigned order) {
    if (order < n)
        throw std::out_of_range("incomplete_bell_series: order < n");
    if (k == 0) return n == 0 ? BivarPoly(1) : BivarPoly();
    if (k <= n && a.size() < n - k + 1)
        throw std::invalid_argument("incomplete_bell_series: needs n-k+1 arguments");
    TruncSeries inner(order);
    BigInt fact = 1;
    for (unsigned i = 1; i <= order && i <= a.size(); ++i) {
        fact *= i;
        inner.set_coeff(i, a.at(i).scale(Rational(BigInt(1), fact)));
    }
    TruncSeries p = repeated_power(inner, k, order);
    return p.coeff(n).scale(Rational(factorial(n)) / Rational(factorial(k)));
}

BivarPoly complete_bell(unsigned n, const BellArgs& a) {
    if (n == 0) return BivarPoly(1);
    if (a.size() < n)
        throw std::invalid_argument("complete_bell: needs n arguments");
    BivarPoly r;
    for (unsigned k = 1; k <= n; ++k)
        r += incomplete_bell_partition(n, k, a);
    return r;
}

BivarPoly bell_polynomial(unsigned n) {
    BivarPoly r;
    for (unsigned k = 0; k <= n; ++k) {
        BivarPoly xk(1);
        for (unsigned j = 0; j < k; ++j) xk *= BivarPoly::x();
        r += Rational(stirling2(n, k)) * xk;
    }
    return r;
}

} // namespace degenseq
