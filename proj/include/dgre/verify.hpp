#ifndef DGRE_VERIFY_HPP
#define DGRE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dgre/sopf.hpp"

namespace dgre {

// Differential harness: random models and scripts run through the model
// operators and through the oracle, compared after every step.
struct VerifyOptions {
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::size_t max_nodes = 10;
    std::size_t max_script = 6;
    // Test-only: corrupts the implementation result before comparison.
    std::function<void(SopfRe& re, std::size_t step)> fault_hook;
};

struct TrialOutcome {
    std::uint64_t seed = 0;
    bool ok = true;
    std::string graph;  // rendered initial graph
    std::string script;
    std::size_t steps = 0;
    std::size_t rejected_steps = 0; // operators both sides rejected
    std::size_t divergent_step = 0; // 1-based; 0 when ok
    std::string detail;
    // Arc-level term-count checks performed and failed.
    std::size_t count_checks = 0;
    std::size_t count_violations = 0;
    // Acyclicity, repeated-symbol and alphabet checks failed.
    std::size_t invariant_violations = 0;

    friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct VerifyReport {
    std::vector<TrialOutcome> trials;

    std::size_t passed() const;
    std::size_t count_checks() const;
    std::size_t count_violations() const;
    std::size_t invariant_violations() const;
    const TrialOutcome* first_failure() const;
};

TrialOutcome run_trial(std::uint64_t seed, const VerifyOptions& opts);
// Trials run in parallel; results are ordered by seed.
VerifyReport run_verify(const VerifyOptions& opts);
// Serial reference for run_verify.
VerifyReport run_verify_serial(const VerifyOptions& opts);

struct RoundTripReport {
    std::size_t qualifying = 0; // trials meeting A != C and B != C
    std::size_t identity = 0;   // of those, omit(insert(st)) == st
    std::size_t attempts = 0;
    std::vector<std::uint64_t> failing_seeds;
};

// Inserts a random new arc into a fresh random model, then omits it again,
// until `wanted` trials satisfy the side condition at omission time.
RoundTripReport run_roundtrip(std::size_t wanted, std::uint64_t seed, std::size_t max_nodes);

} // namespace dgre

#endif
