#include "degenseq/degenerate.hpp"

#include <stdexcept>

namespace degenseq {

BivarPoly gff(const BivarPoly& base, unsigned n) {
    BivarPoly r(1);
    for (unsigned i = 0; i < n; ++i)
        r *= base - BivarPoly::lambda().scale(Rational(i));
    return r;
}

TruncSeries degenerate_exp_series(const BivarPoly& base, unsigned order) {
    TruncSeries s(order);
    BivarPoly prod(1);
    BigInt fact = 1;
    s.set_coeff(0, prod);
    for (unsigned n = 1; n <= order; ++n) {
        prod *= base - BivarPoly::lambda().scale(Rational(n - 1));
        fact *= n;
        s.set_coeff(n, prod.scale(Rational(BigInt(1), fact)));
    }
    return s;
}

namespace {

// (e_lambda(t) - 1)/t with the shift done by index: coefficient of t^n is
// (1)_{n+1,lambda}/(n+1)!. Constant term is exactly 1.
TruncSeries shifted_exp_divisor(unsigned order) {
    TruncSeries full = degenerate_exp_series(BivarPoly(1), order + 1);
    TruncSeries d(order);
    for (unsigned n = 0; n <= order; ++n) d.set_coeff(n, full.coeff(n + 1));
    return d;
}

// All beta_{k,lambda}(x) for k <= n_max from one series division.
std::vector<BivarPoly> bernoulli_polys_via_series(unsigned n_max, unsigned order) {
    if (order < n_max)
        throw std::out_of_range("degen_bernoulli_via_series: order < n");
    TruncSeries q = degenerate_exp_series(BivarPoly::x(), order).div(shifted_exp_divisor(order));
    std::vector<BivarPoly> betas(n_max + 1);
    BigInt fact = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= n;
        betas[n] = q.coeff(n).scale(Rational(fact));
    }
    return betas;
}

} // namespace

std::vector<BivarPoly> degen_bernoulli_table(unsigned n_max, unsigned order) {
    return bernoulli_polys_via_series(n_max, order);
}

BivarPoly degen_bernoulli_via_series(unsigned n, unsigned order) {
    return bernoulli_polys_via_series(n, order).back();
}

BivarPoly degen_bernoulli_via_classic_recurrence(unsigned n) {
    // beta numbers beta_{k,lambda} = beta_{k,lambda}(0), call-local cache.
    std::vector<BivarPoly> numbers = bernoulli_polys_via_series(n, n);
    for (auto& b : numbers) b = b.substitute(std::nullopt, Rational(0));
    BivarPoly r;
    for (unsigned k = 0; k <= n; ++k)
        r += Rational(binomial(n, k)) * (gff(BivarPoly::x(), n - k) * numbers[k]);
    return r;
}

BivarPoly degen_bernoulli_via_theorem1(unsigned n) {
    BivarPoly x_plus_1 = BivarPoly::x() + BivarPoly(1);
    std::vector<BivarPoly> betas(n + 1);
    betas[0] = BivarPoly(1);
    for (unsigned m = 1; m <= n; ++m) {
        BivarPoly r = gff(x_plus_1, m);
        for (unsigned l = 0; l < m; ++l) {
            Rational coef = Rational(binomial(m, l)) * Rational(BigInt(1), BigInt(m - l + 1));
            r -= coef * (betas[l] * dimorphic_mersenne(m - l + 1));
        }
        betas[m] = r;
    }
    return betas[n];
}

Rational classical_bernoulli(unsigned n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / Rational(binomial(m + 1, m));
    }
    return b[n];
}

BigInt mersenne(unsigned n) {
    return (BigInt(1) << n) - 1;
}

std::vector<BigInt> mersenne_gf_coeffs(unsigned order) {
    TruncSeries num(order), den(order);
    if (order >= 1) num.set_coeff(1, BivarPoly(1));
    den.set_coeff(0, BivarPoly(1));
    if (order >= 1) den.set_coeff(1, BivarPoly(-3));
    if (order >= 2) den.set_coeff(2, BivarPoly(2));
    TruncSeries q = num.div(den);
    std::vector<BigInt> out(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        Rational c = q.coeff(n).as_rational();
        if (!c.is_integer())
            throw std::logic_error("mersenne_gf_coeffs: non-integer coefficient");
        out[n] = c.num();
    }
    return out;
}

BivarPoly dimorphic_mersenne(unsigned n) {
    return gff(BivarPoly(2), n) - gff(BivarPoly(1), n);
}

TruncSeries dimorphic_mersenne_egf(unsigned order) {
    return degenerate_exp_series(BivarPoly(2), order) - degenerate_exp_series(BivarPoly(1), order);
}

DegenSequenceTable build_table(SequenceFamily family, unsigned n_max, unsigned order) {
    DegenSequenceTable t;
    t.family = family;
    t.from = 0;
    t.to = n_max;
    t.values.reserve(n_max + 1);
    switch (family) {
    case SequenceFamily::FallingFactorial:
        t.method = "product";
        for (unsigned n = 0; n <= n_max; ++n) t.values.push_back(gff(BivarPoly::x(), n));
        break;
    case SequenceFamily::DegenBernoulli: {
        t.method = "series";
        if (order < n_max)
            throw std::out_of_range("build_table: truncation order < n_max");
        for (unsigned n = 0; n <= n_max; ++n)
            t.values.push_back(degen_bernoulli_via_series(n, order));
        break;
    }
    case SequenceFamily::DimorphicMersenne:
        t.method = "product";
        for (unsigned n = 0; n <= n_max; ++n) t.values.push_back(dimorphic_mersenne(n));
        break;
    case SequenceFamily::Mersenne:
        t.method = "power";
        for (unsigned n = 0; n <= n_max; ++n) t.values.push_back(BivarPoly(Rational(mersenne(n))));
        break;
    case SequenceFamily::Stirling2:
        throw std::invalid_argument("build_table: Stirling2 is a triangle, use the bell module dump");
    }
    return t;
}

} // namespace degenseq
