#pragma once

#include "degenseq/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace degenseq {

// Exponent pair (degree in lambda, degree in x).
using ExpPair = std::pair<unsigned, unsigned>;

// Sparse bivariate polynomial in the formal variables lambda and x over
// Rational. Canonical: no stored zero coefficients, so two polynomials are
// equal iff their term maps are identical. Constants live at exponent (0,0).
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(const Rational& c) { add_term(0, 0, c); }
    BivarPoly(long long c) : BivarPoly(Rational(c)) {}

    static BivarPoly lambda() { BivarPoly p; p.add_term(1, 0, Rational(1)); return p; }
    static BivarPoly x() { BivarPoly p; p.add_term(0, 1, Rational(1)); return p; }

    const std::map<ExpPair, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // True when the polynomial is a constant (possibly zero).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
    }

    Rational constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned degree_x() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    unsigned degree_lambda() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }

    void add_term(unsigned deg_lambda, unsigned deg_x, const Rational& c) {
        if (c.is_zero()) return;
        auto key = ExpPair{deg_lambda, deg_x};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    BivarPoly operator+(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
        return r;
    }

    BivarPoly operator-(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
        return r;
    }

    BivarPoly operator*(const BivarPoly& o) const {
        BivarPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

    BivarPoly scale(const Rational& s) const {
        BivarPoly r;
        for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c * s);
        return r;
    }

    // Replaces each supplied variable by its rational value; the result is a
    // polynomial in whatever variables remain.
    BivarPoly substitute(const std::optional<Rational>& lambda_val,
                         const std::optional<Rational>& x_val) const {
        BivarPoly r;
        for (const auto& [e, c] : terms_) {
            Rational coeff = c;
            unsigned dl = e.first, dx = e.second;
            if (lambda_val) {
                coeff = coeff * pow_rat(*lambda_val, dl);
                dl = 0;
            }
            if (x_val) {
                coeff = coeff * pow_rat(*x_val, dx);
                dx = 0;
            }
            r.add_term(dl, dx, coeff);
        }
        return r;
    }

    // Fully-substituted polynomials collapse to a scalar.
    Rational as_rational() const {
        if (!is_constant()) throw std::domain_error("BivarPoly: not a constant");
        return constant_term();
    }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return terms_ != o.terms_; }

    // Human rendering, terms ordered by (deg_x desc, deg_lambda asc):
    // "x + (-1/2) + (1/2)λ". Machine format is the JSON term map.
    std::string str() const;

private:
    static Rational pow_rat(const Rational& b, unsigned e) {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i) r *= b;
        return r;
    }

    std::map<ExpPair, Rational> terms_;
};

inline BivarPoly operator*(const Rational& s, const BivarPoly& p) { return p.scale(s); }

} // namespace degenseq
