#pragma once

#include "degenseq/bivar_poly.hpp"

#include <stdexcept>
#include <vector>

namespace degenseq {

// Truncated formal power series in t with BivarPoly coefficients, kept for
// t^0..t^order. Coefficients are raw t^n coefficients; EGF factorial scaling
// is applied by callers at the sequence-API boundary. Arithmetic on two
// series of different orders truncates to the smaller one.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1) {}

    TruncSeries(unsigned order, std::vector<BivarPoly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<size_t>(order) + 1)
            throw std::invalid_argument("TruncSeries: coefficient count must be order+1");
    }

    static TruncSeries constant(const BivarPoly& c, unsigned order) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const BivarPoly& coeff(unsigned n) const {
        if (n >= coeffs_.size())
            throw std::out_of_range("TruncSeries: coefficient index beyond truncation order");
        return coeffs_[n];
    }

    void set_coeff(unsigned n, const BivarPoly& c) {
        if (n >= coeffs_.size())
            throw std::out_of_range("TruncSeries: coefficient index beyond truncation order");
        coeffs_[n] = c;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries r(std::min(order(), o.order()));
        for (unsigned n = 0; n <= r.order(); ++n) r.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
        return r;
    }

    TruncSeries operator-(const TruncSeries& o) const {
        TruncSeries r(std::min(order(), o.order()));
        for (unsigned n = 0; n <= r.order(); ++n) r.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
        return r;
    }

    // Cauchy product, truncated to min order.
    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries r(std::min(order(), o.order()));
        for (unsigned n = 0; n <= r.order(); ++n) {
            BivarPoly acc;
            for (unsigned i = 0; i <= n; ++i) acc += coeffs_[i] * o.coeffs_[n - i];
            r.coeffs_[n] = acc;
        }
        return r;
    }

    // Long division: returns h with h * divisor = *this up to truncation.
    // The divisor's constant term must be a nonzero constant polynomial
    // (a unit in the coefficient ring); anything else signals a mis-shifted
    // generating function, e.g. dividing by e_lambda(t)-1 without first
    // cancelling t.
    TruncSeries div(const TruncSeries& divisor) const {
        const BivarPoly& c0 = divisor.coeff(0);
        if (!c0.is_constant() || c0.is_zero())
            throw std::domain_error("TruncSeries: divisor constant term is not a nonzero constant");
        Rational inv = c0.constant_term().inv();
        TruncSeries q(std::min(order(), divisor.order()));
        for (unsigned n = 0; n <= q.order(); ++n) {
            BivarPoly acc = coeffs_[n];
            for (unsigned i = 0; i < n; ++i) acc -= q.coeffs_[i] * divisor.coeffs_[n - i];
            q.coeffs_[n] = acc.scale(inv);
        }
        return q;
    }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<BivarPoly> coeffs_;
};

} // namespace degenseq
