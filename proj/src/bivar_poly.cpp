#include "degenseq/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace degenseq {

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<ExpPair, Rational>> ordered(terms_.begin(), terms_.end());
    // (deg_x desc, deg_lambda asc)
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        if (!first) out << " + ";
        first = false;
        std::string vars;
        if (e.second == 1) vars += "x";
        else if (e.second > 1) vars += "x^" + std::to_string(e.second);
        if (e.first == 1) vars += "λ";
        else if (e.first > 1) vars += "λ^" + std::to_string(e.first);
        if (vars.empty()) {
            bool plain = c.is_integer() && !(c < Rational(0));
            out << (plain ? c.str() : "(" + c.str() + ")");
        } else if (c == Rational(1)) {
            out << vars;
        } else {
            out << "(" << c.str() << ")" << vars;
        }
    }
    return out.str();
}

} // namespace degenseq
