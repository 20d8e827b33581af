// Acceptance suite: every criterion is an exact (tolerance-zero) check over
// rational arithmetic. One pass/fail line per criterion; nonzero exit when
// any criterion fails.

#include "degenseq/bell.hpp"
#include "degenseq/degenerate.hpp"
#include "degenseq/identities.hpp"
#include "degenseq/lucas_lehmer.hpp"
#include "degenseq/serialize.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

using namespace degenseq;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(DEGENSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) { exit_code = -1; return {}; }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    exit_code = pclose(pipe);
    return out;
}

void criterion1_three_way_bernoulli() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned n = 0; n <= 12; ++n) {
        BivarPoly a = degen_bernoulli_via_series(n, 12);
        ok = ok && a == degen_bernoulli_via_classic_recurrence(n);
        ok = ok && a == degen_bernoulli_via_theorem1(n);
    }
    double secs = seconds_since(start);
    report("1 three-way Bernoulli agreement, n <= 12", ok && secs < 5.0,
           std::to_string(secs) + " s, target < 5 s");
}

void criterion2_classical_limit() {
    bool ok = true;
    std::vector<BivarPoly> b = degen_bernoulli_table(20, 20);
    for (unsigned n = 0; n <= 20; ++n)
        ok = ok && b[n].substitute(Rational(0), Rational(0)) ==
                       BivarPoly(classical_bernoulli(n));
    report("2 classical Bernoulli limit at lambda=0, n <= 20", ok);
}

void criterion3_dimorphic_limit() {
    bool ok = true;
    std::vector<BigInt> gf = mersenne_gf_coeffs(30);
    for (unsigned n = 0; n <= 30; ++n) {
        BigInt m = mersenne(n);
        ok = ok && dimorphic_mersenne(n).substitute(Rational(0), std::nullopt) ==
                       BivarPoly(Rational(m));
        ok = ok && gf[n] == m;
    }
    report("3 dimorphic limit and Mersenne OGF, n <= 30", ok);
}

void criterion4_egf_identity() {
    TruncSeries egf = dimorphic_mersenne_egf(24);
    bool ok = true;
    for (unsigned n = 0; n <= 24; ++n)
        ok = ok && egf.coeff(n).scale(Rational(factorial(n))) == dimorphic_mersenne(n);
    report("4 dimorphic EGF coefficient identity, n <= 24", ok);
}

void criterion5_eq19() {
    report("5 falling-factorial expansion identity, n <= 12", verify_eq19(12).all_pass);
}

void criterion6_theorem2() {
    bool ok = verify_theorem2(10).all_pass;
    ok = ok && verify_theorem2(10, {}, Rational(0)).all_pass;
    ok = ok && verify_theorem2(10, {}, Rational(5, 7)).all_pass;
    report("6 theorem 2 symbolic + x=0 and x=5/7, n <= 10", ok);
}

void criterion7_theorem3() {
    report("7 theorem 3, n <= 10", verify_theorem3(10).all_pass);
}

void criterion8_bell_cross_method() {
    bool ok = true;
    for (unsigned seed = 1; seed <= 10; ++seed) {
        std::mt19937 rng(seed);
        BellArgs a;
        for (unsigned i = 0; i < 12; ++i) a.args.push_back(testutil::random_poly(rng, 2, 3));
        for (unsigned n = 1; n <= 12 && ok; ++n)
            for (unsigned k = 1; k <= n && ok; ++k)
                ok = incomplete_bell_partition(n, k, a) ==
                     incomplete_bell_series(n, k, a, 12);
    }
    report("8 Bell cross-method with random arguments, 10 seeds, n <= 12", ok);
}

void criterion9_specializations() {
    bool ok = true;
    for (unsigned n = 0; n <= 12 && ok; ++n) {
        BellArgs ones = BellArgs::all_equal(BivarPoly(1), std::max(n, 1u));
        for (unsigned k = 0; k <= n; ++k)
            ok = ok && incomplete_bell_partition(n, k, ones) ==
                           BivarPoly(Rational(stirling2(n, k)));
        BellArgs xs = BellArgs::all_equal(BivarPoly::x(), std::max(n, 1u));
        ok = ok && complete_bell(n, xs) == bell_polynomial(n);
    }
    // completeness sum against the exp expansion, and the Eq. (5) expansion
    ok = ok && run_check({IdentityId::EQ11_COMPLETE, 0, 12}).all_pass;
    ok = ok && run_check({IdentityId::EQ5_STIRLING, 0, 12}).all_pass;
    report("9 Bell/Stirling specializations, n <= 12", ok);
}

void criterion10_lucas_lehmer() {
    auto start = std::chrono::steady_clock::now();
    const std::set<unsigned> expected{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521};
    bool ok = true;
    unsigned found = 0;
    for (unsigned p = 2; p <= 521; ++p) {
        if (!is_prime_small(p)) continue;
        bool prime = lucas_lehmer(p);
        ok = ok && prime == (expected.count(p) > 0);
        if (prime) ++found;
    }
    double secs = seconds_since(start);
    report("10 Lucas-Lehmer prime list, p <= 521",
           ok && found == 13 && secs < 30.0,
           std::to_string(found) + " primes, " + std::to_string(secs) + " s, target < 30 s");
}

void criterion11_determinism() {
    int rc1 = 0, rc2 = 0;
    std::string a = run_cli("verify --all", rc1);
    std::string b = run_cli("verify --all", rc2);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report("11 verify --all is byte-identical across runs", ok);
}

} // namespace

int main() {
    criterion1_three_way_bernoulli();
    criterion2_classical_limit();
    criterion3_dimorphic_limit();
    criterion4_egf_identity();
    criterion5_eq19();
    criterion6_theorem2();
    criterion7_theorem3();
    criterion8_bell_cross_method();
    criterion9_specializations();
    criterion10_lucas_lehmer();
    criterion11_determinism();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
