#pragma once

#include "degenseq/trunc_series.hpp"

#include <string>
#include <vector>

namespace degenseq {

// Generalized falling factorial: product base*(base-lambda)*...*(base-(n-1)lambda);
// 1 for n = 0. At lambda=0 this is base^n, at lambda=1 the ordinary falling
// factorial.
BivarPoly gff(const BivarPoly& base, unsigned n);

// Series with t^n coefficient gff(base, n)/n! for n <= order.
TruncSeries degenerate_exp_series(const BivarPoly& base, unsigned order);

// Degenerate Bernoulli polynomial beta_{n,lambda}(x) as n! times the t^n
// coefficient of the quotient of the degenerate exponential of x by the
// down-shifted series (e_lambda(t)-1)/t. The shift is done by index, never by
// dividing by t, so the divisor's constant term is exactly 1.
BivarPoly degen_bernoulli_via_series(unsigned n, unsigned order);

// beta_{0,lambda}(x) .. beta_{n_max,lambda}(x) from one series division.
std::vector<BivarPoly> degen_bernoulli_table(unsigned n_max, unsigned order);

// Same polynomial assembled from the degenerate Bernoulli numbers
// beta_{k,lambda} via binomial convolution with falling factorials.
BivarPoly degen_bernoulli_via_classic_recurrence(unsigned n);

// Same polynomial via the recurrence through dimorphic Mersenne numbers,
// bootstrapped from beta_0 = 1.
BivarPoly degen_bernoulli_via_theorem1(unsigned n);

// Classical Bernoulli number B_n by its own recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = [n=0]. Independent of the degenerate path so
// the lambda=0 cross-check is non-circular.
Rational classical_bernoulli(unsigned n);

// Mersenne number 2^n - 1.
BigInt mersenne(unsigned n);

// OGF coefficients of z/(1 - 3z + 2z^2) through z^order.
std::vector<BigInt> mersenne_gf_coeffs(unsigned order);

// Dimorphic Mersenne number M_{n,lambda} = (2)_{n,lambda} - (1)_{n,lambda},
// a polynomial in lambda alone.
BivarPoly dimorphic_mersenne(unsigned n);

// EGF of the dimorphic Mersenne numbers: e_lambda^2(t) - e_lambda(t).
TruncSeries dimorphic_mersenne_egf(unsigned order);

enum class SequenceFamily {
    FallingFactorial,
    DegenBernoulli,
    DimorphicMersenne,
    Mersenne,
    Stirling2,
};

// Table of one sequence family over an index range, tagged with the
// construction path that produced it (for cross-method tests).
struct DegenSequenceTable {
    SequenceFamily family;
    std::string method;
    unsigned from = 0;
    unsigned to = 0;
    std::vector<BivarPoly> values;
};

DegenSequenceTable build_table(SequenceFamily family, unsigned n_max, unsigned order);

} // namespace degenseq
