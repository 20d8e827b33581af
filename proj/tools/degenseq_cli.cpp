#include "degenseq/bell.hpp"
#include "degenseq/degenerate.hpp"
#include "degenseq/identities.hpp"
#include "degenseq/lucas_lehmer.hpp"
#include "degenseq/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace degenseq;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

// DEGENSEQ_CONFIG may point to a JSON file carrying default "order" and
// "format" values; explicit flags win.
void apply_config_file(unsigned& order, std::string& format) {
    const char* path = std::getenv("DEGENSEQ_CONFIG");
    if (!path) return;
    std::ifstream f(path);
    if (!f) throw std::runtime_error(std::string("cannot read config file '") + path + "'");
    json cfg = json::parse(f);
    if (cfg.contains("order")) order = cfg["order"].get<unsigned>();
    if (cfg.contains("format")) format = cfg["format"].get<std::string>();
}

int run_table(const std::string& family, unsigned n_max, unsigned order,
              const std::string& format, const std::string& out_path) {
    std::string text;
    if (family == "stirling2" || family == "bell-triangle") {
        auto entry = [&](unsigned n, unsigned k) -> BigInt {
            if (family == "stirling2") return stirling2(n, k);
            BellArgs ones = BellArgs::all_equal(BivarPoly(1), std::max(n, 1u));
            return incomplete_bell_partition(n, k, ones).as_rational().num();
        };
        if (format == "csv") {
            text = triangle_to_csv("n\\k", n_max, entry);
        } else {
            json rows = json::array();
            for (unsigned n = 0; n <= n_max; ++n) {
                json row = json::array();
                for (unsigned k = 0; k <= n; ++k) row.push_back(entry(n, k).str());
                rows.push_back(row);
            }
            text = json{{"family", family}, {"from", 0}, {"to", n_max}, {"rows", rows}}.dump(2);
            text += "\n";
        }
    } else if (family == "phi") {
        DegenSequenceTable t;
        t.family = SequenceFamily::FallingFactorial; // placeholder, serialized ad hoc
        json values = json::array();
        std::ostringstream csv;
        csv << "n,value\n";
        for (unsigned n = 0; n <= n_max; ++n) {
            BivarPoly p = bell_polynomial(n);
            values.push_back(poly_to_json(p));
            csv << n << ",\"" << p.str() << "\"\n";
        }
        if (format == "csv")
            text = csv.str();
        else
            text = json{{"family", "phi"}, {"method", "stirling-sum"},
                        {"from", 0}, {"to", n_max}, {"values", values}}.dump(2) + "\n";
    } else {
        SequenceFamily f;
        if (family == "gff") f = SequenceFamily::FallingFactorial;
        else if (family == "beta") f = SequenceFamily::DegenBernoulli;
        else if (family == "dimorphic") f = SequenceFamily::DimorphicMersenne;
        else if (family == "mersenne") f = SequenceFamily::Mersenne;
        else {
            std::cerr << "unknown family '" << family << "'\n";
            return kExitUsage;
        }
        DegenSequenceTable t = build_table(f, n_max, order);
        if (format == "csv")
            text = table_to_csv(t);
        else
            text = table_to_json(t).dump(2) + "\n";
    }
    write_output(text, out_path);
    return kExitOk;
}

int run_verify(const std::vector<std::string>& names, bool all,
               std::optional<unsigned> n_max, unsigned order, bool inject_fault,
               const std::string& out_path) {
    std::vector<IdentityCheck> config;
    if (all || names.empty()) {
        config = default_config(n_max);
    } else {
        std::vector<IdentityCheck> defaults = default_config(n_max);
        for (const std::string& name : names) {
            auto id = identity_from_name(name);
            if (!id) {
                std::cerr << "unknown identity '" << name << "'\n";
                return kExitUsage;
            }
            for (const IdentityCheck& c : defaults)
                if (c.id == *id) config.push_back(c);
        }
    }
    VerifyOptions opt;
    opt.order = order;
    opt.fault_injection = inject_fault;
    std::vector<VerificationReport> reports = run_all(config, opt);
    write_output(reports_to_json(reports).dump(2) + "\n", out_path);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.all_pass;
        if (!r.all_pass) {
            std::cerr << identity_name(r.id) << ": FAIL";
            if (!r.error.empty()) std::cerr << " (" << r.error << ")";
            for (const auto& ir : r.per_index)
                if (!ir.pass)
                    std::cerr << "\n  n=" << ir.n << " residual " << ir.residual.str();
            std::cerr << "\n";
        }
    }
    return ok ? kExitOk : kExitVerifyFail;
}

int run_eval(const std::string& family, unsigned index, const std::string& lambda_lit,
             const std::string& x_lit, unsigned order) {
    std::optional<Rational> lambda_val, x_val;
    try {
        if (!lambda_lit.empty()) lambda_val = Rational::parse(lambda_lit);
        if (!x_lit.empty()) x_val = Rational::parse(x_lit);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    BivarPoly p;
    if (family == "gff") p = gff(BivarPoly::x(), index);
    else if (family == "beta") p = degen_bernoulli_via_series(index, std::max(index, order));
    else if (family == "dimorphic") p = dimorphic_mersenne(index);
    else if (family == "mersenne") p = BivarPoly(Rational(mersenne(index)));
    else if (family == "phi") p = bell_polynomial(index);
    else {
        std::cerr << "unknown family '" << family << "'\n";
        return kExitUsage;
    }
    BivarPoly r = p.substitute(lambda_val, x_val);
    if (r.is_constant())
        std::cout << r.constant_term().str() << "\n";
    else
        std::cout << r.str() << "\n";
    return kExitOk;
}

int run_mersenne_prime(int p, unsigned list_up_to) {
    if (list_up_to > 0) {
        for (unsigned q = 2; q <= list_up_to; ++q)
            if (is_prime_small(q) && lucas_lehmer(q)) std::cout << q << "\n";
        return kExitOk;
    }
    if (p < 2) {
        std::cerr << "mersenne-prime: requires p >= 2\n";
        return kExitUsage;
    }
    bool prime = lucas_lehmer(static_cast<unsigned>(p));
    std::cout << (prime ? "true" : "false") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables and identity checks for degenerate special-number families"};
    app.require_subcommand(1);

    unsigned order = 24;
    std::string format = "json";
    std::string out_path;
    try {
        apply_config_file(order, format);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    auto* table = app.add_subcommand("table", "Print a sequence table or triangle");
    std::string table_family;
    unsigned table_n_max = 10;
    table->add_option("family", table_family,
                      "gff|beta|dimorphic|mersenne|stirling2|bell-triangle|phi")->required();
    table->add_option("--n-max", table_n_max, "largest index n");
    table->add_option("--order", order, "series truncation order");
    table->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Verify identities as exact polynomial equalities");
    std::vector<std::string> verify_names;
    bool verify_all = false;
    bool inject_fault = false;
    std::optional<unsigned> verify_n_max;
    unsigned verify_n_max_raw = 0;
    verify->add_option("identities", verify_names, "identity names (e.g. theorem1 eq19_recurrence)");
    verify->add_flag("--all", verify_all, "run every identity at its default range");
    auto* nmax_opt = verify->add_option("--n-max", verify_n_max_raw, "clip every range to this n");
    verify->add_option("--order", order, "series truncation order");
    verify->add_option("--out", out_path, "report path (default stdout)");
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test-only, hidden

    auto* eval = app.add_subcommand("eval", "Evaluate one family member at rational lambda/x");
    std::string eval_family, eval_lambda, eval_x;
    unsigned eval_index = 0;
    eval->add_option("family", eval_family, "gff|beta|dimorphic|mersenne|phi")->required();
    eval->add_option("index", eval_index, "sequence index n")->required();
    eval->add_option("--lambda", eval_lambda, "rational literal a/b or integer");
    eval->add_option("--x", eval_x, "rational literal a/b or integer");
    eval->add_option("--order", order, "series truncation order");

    auto* mp = app.add_subcommand("mersenne-prime", "Lucas-Lehmer test for M_p");
    int mp_p = -1;
    unsigned mp_list = 0;
    mp->add_option("p", mp_p, "exponent p >= 2");
    mp->add_option("--list-up-to", mp_list, "list all prime exponents p <= bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (nmax_opt->count() > 0) verify_n_max = verify_n_max_raw;

    try {
        if (table->parsed())
            return run_table(table_family, table_n_max, order, format, out_path);
        if (verify->parsed())
            return run_verify(verify_names, verify_all, verify_n_max, order, inject_fault,
                              out_path);
        if (eval->parsed())
            return run_eval(eval_family, eval_index, eval_lambda, eval_x, order);
        if (mp->parsed())
            return run_mersenne_prime(mp_p, mp_list);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
