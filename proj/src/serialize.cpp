#include "degenseq/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace degenseq {

using nlohmann::json;

nlohmann::json poly_to_json(const BivarPoly& p) {
    json terms = json::array();
    // std::map iteration is already lexicographic in (dl, dx).
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"dl", e.first},
                         {"dx", e.second},
                         {"num", c.num().str()},
                         {"den", c.den().str()}});
    }
    return json{{"terms", terms}};
}

BivarPoly poly_from_json(const nlohmann::json& j) {
    BivarPoly p;
    for (const auto& t : j.at("terms")) {
        Rational c(BigInt(t.at("num").get<std::string>()),
                   BigInt(t.at("den").get<std::string>()));
        p.add_term(t.at("dl").get<unsigned>(), t.at("dx").get<unsigned>(), c);
    }
    return p;
}

std::string family_name(SequenceFamily f) {
    switch (f) {
    case SequenceFamily::FallingFactorial: return "gff";
    case SequenceFamily::DegenBernoulli: return "beta";
    case SequenceFamily::DimorphicMersenne: return "dimorphic";
    case SequenceFamily::Mersenne: return "mersenne";
    case SequenceFamily::Stirling2: return "stirling2";
    }
    throw std::logic_error("family_name: unknown family");
}

namespace {

SequenceFamily family_from_name(const std::string& s) {
    if (s == "gff") return SequenceFamily::FallingFactorial;
    if (s == "beta") return SequenceFamily::DegenBernoulli;
    if (s == "dimorphic") return SequenceFamily::DimorphicMersenne;
    if (s == "mersenne") return SequenceFamily::Mersenne;
    if (s == "stirling2") return SequenceFamily::Stirling2;
    throw std::invalid_argument("unknown sequence family '" + s + "'");
}

bool integer_valued(SequenceFamily f) {
    return f == SequenceFamily::Mersenne || f == SequenceFamily::Stirling2;
}

} // namespace

nlohmann::json table_to_json(const DegenSequenceTable& t) {
    json values = json::array();
    for (const auto& v : t.values) {
        if (integer_valued(t.family))
            values.push_back(v.as_rational().num().str());
        else
            values.push_back(poly_to_json(v));
    }
    return json{{"family", family_name(t.family)},
                {"method", t.method},
                {"from", t.from},
                {"to", t.to},
                {"values", values}};
}

DegenSequenceTable table_from_json(const nlohmann::json& j) {
    DegenSequenceTable t;
    t.family = family_from_name(j.at("family").get<std::string>());
    t.method = j.at("method").get<std::string>();
    t.from = j.at("from").get<unsigned>();
    t.to = j.at("to").get<unsigned>();
    for (const auto& v : j.at("values")) {
        if (v.is_string())
            t.values.push_back(BivarPoly(Rational(BigInt(v.get<std::string>()))));
        else
            t.values.push_back(poly_from_json(v));
    }
    return t;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    json results = json::array();
    for (const auto& ir : r.per_index) {
        json row{{"n", ir.n}, {"pass", ir.pass}};
        row["residual"] = ir.pass ? json(nullptr) : poly_to_json(ir.residual);
        results.push_back(row);
    }
    json rep{{"identity", identity_name(r.id)},
             {"results", results},
             {"allPass", r.all_pass}};
    if (!r.error.empty()) rep["error"] = r.error;
    return rep;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

std::string table_to_csv(const DegenSequenceTable& t) {
    std::ostringstream out;
    out << "n,value\n";
    for (unsigned n = t.from; n <= t.to; ++n) {
        const BivarPoly& v = t.values[n - t.from];
        if (integer_valued(t.family))
            out << n << "," << v.as_rational().num().str() << "\n";
        else
            out << n << ",\"" << v.str() << "\"\n";
    }
    return out.str();
}

std::string triangle_to_csv(const std::string& corner, unsigned n_max,
                            const std::function<BigInt(unsigned, unsigned)>& entry) {
    std::ostringstream out;
    out << corner;
    for (unsigned k = 0; k <= n_max; ++k) out << "," << k;
    out << "\n";
    for (unsigned n = 0; n <= n_max; ++n) {
        out << n;
        for (unsigned k = 0; k <= n_max; ++k) out << "," << entry(n, k).str();
        out << "\n";
    }
    return out.str();
}

} // namespace degenseq
