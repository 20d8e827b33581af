#pragma once

#include "degenseq/bivar_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degenseq {

enum class IdentityId {
    EQ1_GF,
    EQ5_STIRLING,
    EQ11_COMPLETE,
    EQ14_EGF,
    EQ19_RECURRENCE,
    EQ20_SERIES,
    EQ22_BELL_K1,
    THEOREM1,
    THEOREM2,
    THEOREM3,
    SPEC_STIRLING,
    SPEC_PHI,
    LIMIT_LAMBDA0,
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
std::vector<IdentityId> all_identities();

struct IdentityCheck {
    IdentityId id;
    unsigned n_min = 0;
    unsigned n_max = 0;
};

struct IndexResult {
    unsigned n;
    bool pass;
    BivarPoly residual; // canonical zero on pass; no tolerance anywhere
};

struct VerificationReport {
    IdentityId id;
    std::vector<IndexResult> per_index;
    bool all_pass = true;
    std::string error; // set when the check itself failed to run
};

// Options threaded through the per-identity checks. fault_injection is
// test-only: it corrupts one cached Bernoulli value so the pipeline's
// failure path can be exercised end to end.
struct VerifyOptions {
    unsigned order = 24;
    bool fault_injection = false;
};

VerificationReport verify_theorem1(unsigned n_max, const VerifyOptions& opt = {});
// x_val, when set, runs the substitution instance instead of the symbolic one.
VerificationReport verify_theorem2(unsigned n_max, const VerifyOptions& opt = {},
                                   const std::optional<Rational>& x_val = std::nullopt);
VerificationReport verify_theorem3(unsigned n_max, const VerifyOptions& opt = {});
VerificationReport verify_eq19(unsigned n_max, const VerifyOptions& opt = {});
VerificationReport verify_eq20(unsigned n_max, unsigned order_n, const VerifyOptions& opt = {});

VerificationReport run_check(const IdentityCheck& check, const VerifyOptions& opt = {});

// Executes every configured check, deterministic ordering by id then n.
// Per-check errors are captured in the report, never aborting the batch.
std::vector<VerificationReport> run_all(std::vector<IdentityCheck> config,
                                        const VerifyOptions& opt = {});

// Every identity at its default range, clipped to n_max when given.
std::vector<IdentityCheck> default_config(std::optional<unsigned> n_max = std::nullopt);

} // namespace degenseq
