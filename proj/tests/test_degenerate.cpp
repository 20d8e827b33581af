#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degenseq/degenerate.hpp"

#include <vector>

using namespace degenseq;

namespace {

BivarPoly lam() { return BivarPoly::lambda(); }
BivarPoly x() { return BivarPoly::x(); }

// Independent oracle: beta_{n,lambda}(x) at a fixed rational point (l0, x0),
// computed with scalar-only long division of the generating function
// t/(e_l0(t)-1) * e_l0^{x0}(t). Shares no code with the polynomial path.
Rational beta_point_oracle(unsigned n, const Rational& l0, const Rational& x0) {
    unsigned order = n + 2;
    auto falling = [&](const Rational& base, unsigned m) {
        Rational r(1);
        for (unsigned i = 0; i < m; ++i) r *= base - Rational(i) * l0;
        return r;
    };
    // numerator coefficients: (x0)_{m,l0}/m!; divisor: (1)_{m+1,l0}/(m+1)!
    std::vector<Rational> num(order + 1), den(order + 1), q(order + 1);
    for (unsigned m = 0; m <= order; ++m) {
        num[m] = falling(x0, m) / Rational(factorial(m));
        den[m] = falling(Rational(1), m + 1) / Rational(factorial(m + 1));
    }
    for (unsigned m = 0; m <= order; ++m) {
        Rational acc = num[m];
        for (unsigned i = 0; i < m; ++i) acc -= q[i] * den[m - i];
        q[m] = acc / den[0];
    }
    return q[n] * Rational(factorial(n));
}

} // namespace

TEST_CASE("generalized falling factorial") {
    CHECK(gff(x(), 0) == BivarPoly(1));
    CHECK(gff(BivarPoly(2), 2) == BivarPoly(4) - lam().scale(Rational(2)));
    CHECK(gff(x(), 2).substitute(Rational(0), std::nullopt) == x() * x());
}

TEST_CASE("gff at lambda=0 is x^n") {
    BivarPoly xn(1);
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(gff(x(), n).substitute(Rational(0), std::nullopt) == xn);
        xn *= x();
    }
}

TEST_CASE("degenerate exponential series") {
    TruncSeries e1 = degenerate_exp_series(BivarPoly(1), 3);
    CHECK(e1.coeff(0) == BivarPoly(1));
    // t^3 coefficient times 3! is (1)(1-lambda)(1-2lambda).
    BivarPoly expected = (BivarPoly(1) - lam()) * (BivarPoly(1) - lam().scale(Rational(2)));
    CHECK(e1.coeff(3).scale(Rational(6)) == expected);
}

TEST_CASE("degenerate exponential reduces to exp at lambda=0") {
    TruncSeries ex = degenerate_exp_series(x(), 8);
    BivarPoly xn(1);
    for (unsigned n = 0; n <= 8; ++n) {
        BivarPoly c = ex.coeff(n).substitute(Rational(0), std::nullopt);
        CHECK(c == xn.scale(Rational(BigInt(1), factorial(n))));
        xn *= x();
    }
}

TEST_CASE("Bernoulli polynomials via series") {
    CHECK(degen_bernoulli_via_series(0, 2) == BivarPoly(1));
    BivarPoly beta1 = x() + lam().scale(Rational(1, 2)) - BivarPoly(Rational(1, 2));
    CHECK(degen_bernoulli_via_series(1, 2) == beta1);
    BivarPoly beta2_at0 =
        degen_bernoulli_via_series(2, 4).substitute(std::nullopt, Rational(0));
    CHECK(beta2_at0 == BivarPoly(Rational(1, 6)) - lam() * lam() * BivarPoly(Rational(1, 6)));
    CHECK_THROWS_AS(degen_bernoulli_via_series(5, 4), std::out_of_range);
}

TEST_CASE("Bernoulli polynomials against the point oracle") {
    Rational l0(3, 7), x0(-2, 5);
    for (unsigned n = 0; n <= 10; ++n) {
        BivarPoly b = degen_bernoulli_via_series(n, 12);
        CHECK(b.substitute(l0, x0).as_rational() == beta_point_oracle(n, l0, x0));
    }
}

TEST_CASE("Bernoulli construction paths agree") {
    BivarPoly beta1 = x() + lam().scale(Rational(1, 2)) - BivarPoly(Rational(1, 2));
    CHECK(degen_bernoulli_via_classic_recurrence(0) == BivarPoly(1));
    CHECK(degen_bernoulli_via_classic_recurrence(1) == beta1);
    CHECK(degen_bernoulli_via_theorem1(0) == BivarPoly(1));
    CHECK(degen_bernoulli_via_theorem1(1) == beta1);
    for (unsigned n = 0; n <= 8; ++n) {
        BivarPoly via_series = degen_bernoulli_via_series(n, 10);
        CHECK(via_series == degen_bernoulli_via_classic_recurrence(n));
        CHECK(via_series == degen_bernoulli_via_theorem1(n));
    }
}

TEST_CASE("classical Bernoulli numbers") {
    CHECK(classical_bernoulli(0) == Rational(1));
    CHECK(classical_bernoulli(1) == Rational(-1, 2));
    CHECK(classical_bernoulli(2) == Rational(1, 6));
    CHECK(classical_bernoulli(3) == Rational(0));
    CHECK(classical_bernoulli(4) == Rational(-1, 30));
    CHECK(classical_bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("Bernoulli lambda=0 limit") {
    for (unsigned n = 0; n <= 14; ++n) {
        BivarPoly at0 =
            degen_bernoulli_via_series(n, 16).substitute(Rational(0), Rational(0));
        CHECK(at0 == BivarPoly(classical_bernoulli(n)));
    }
}

TEST_CASE("Mersenne numbers") {
    CHECK(mersenne(0) == 0);
    CHECK(mersenne(3) == 7);
    CHECK(mersenne(61) == BigInt("2305843009213693951"));
}

TEST_CASE("Mersenne OGF coefficients") {
    std::vector<BigInt> c = mersenne_gf_coeffs(30);
    CHECK(c[0] == 0);
    CHECK(c[1] == 1);
    CHECK(c[2] == 3);
    CHECK(c[3] == 7);
    CHECK(c[4] == 15);
    for (unsigned n = 0; n <= 30; ++n) CHECK(c[n] == mersenne(n));
}

TEST_CASE("dimorphic Mersenne numbers") {
    CHECK(dimorphic_mersenne(0).is_zero());
    CHECK(dimorphic_mersenne(2) == BivarPoly(3) - lam());
    BivarPoly m3 = BivarPoly(7) - lam().scale(Rational(9)) + (lam() * lam()).scale(Rational(2));
    CHECK(dimorphic_mersenne(3) == m3);
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(dimorphic_mersenne(n).substitute(Rational(0), std::nullopt) ==
              BivarPoly(Rational(mersenne(n))));
}

TEST_CASE("dimorphic Mersenne EGF") {
    TruncSeries egf = dimorphic_mersenne_egf(12);
    CHECK(egf.coeff(0).is_zero());
    CHECK(egf.coeff(2).scale(Rational(2)) == BivarPoly(3) - lam());
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(egf.coeff(n).scale(Rational(factorial(n))) == dimorphic_mersenne(n));
}

TEST_CASE("down-shifted EGF carries M_{n+1,lambda}/(n+1)") {
    TruncSeries egf = dimorphic_mersenne_egf(13);
    for (unsigned n = 0; n <= 12; ++n) {
        BivarPoly shifted = egf.coeff(n + 1); // t^{n+1} coefficient = t^n after the shift
        Rational scale(BigInt(n + 1) * factorial(n), BigInt(1));
        CHECK(shifted.scale(scale) == dimorphic_mersenne(n + 1));
    }
}

TEST_CASE("EGF product recovers the shifted falling factorial") {
    // The Bernoulli EGF times the shifted dimorphic EGF is e_lambda^{x+1}(t).
    unsigned order = 3;
    TruncSeries beta_egf(order), shifted(order);
    for (unsigned n = 0; n <= order; ++n) {
        beta_egf.set_coeff(n, degen_bernoulli_via_series(n, order)
                                  .scale(Rational(BigInt(1), factorial(n))));
        shifted.set_coeff(n, dimorphic_mersenne(n + 1)
                                 .scale(Rational(BigInt(1), BigInt(n + 1) * factorial(n))));
    }
    TruncSeries prod = beta_egf * shifted;
    CHECK(prod.coeff(1) == gff(x() + BivarPoly(1), 1));
}

TEST_CASE("sequence tables") {
    DegenSequenceTable t = build_table(SequenceFamily::DimorphicMersenne, 3, 24);
    REQUIRE(t.values.size() == 4);
    CHECK(t.values[0].is_zero());
    CHECK(t.values[2] == BivarPoly(3) - lam());
    DegenSequenceTable m = build_table(SequenceFamily::Mersenne, 4, 24);
    CHECK(m.values[4] == BivarPoly(15));
    DegenSequenceTable b = build_table(SequenceFamily::DegenBernoulli, 0, 24);
    CHECK(b.values[0] == BivarPoly(1));
    CHECK_THROWS_AS(build_table(SequenceFamily::DegenBernoulli, 30, 24), std::out_of_range);
}
