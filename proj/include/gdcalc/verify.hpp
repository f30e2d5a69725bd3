#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdcalc/diagram.hpp"

namespace gdcalc {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 100;
    int max_arrows = 12;  // arrow budget for random walks and diagrams
    int threads = 0;      // 0 = resolve_threads() default
    // Collect up to ten failing cases (beyond the first) with their traces.
    bool collect_failures = false;
    // Corrupt the state-sum Conway values consumed by the suites; every
    // cross-check against an independent computation must then fail. A
    // self-test that the harness can actually catch a broken engine.
    bool inject_fault = false;
};

struct Counterexample {
    long long index = -1;            // case position within the suite run
    std::string context;             // e.g. "corpus trefoil" or "trial 17"
    std::string detail;              // the identity that failed
    std::string diagram;             // serialized ambient diagram
    std::vector<std::string> trace;  // encoded moves that built it, if any
};

struct SuiteReport {
    std::string suite;
    long long passed = 0;
    long long failed = 0;
    std::optional<Counterexample> first;   // smallest-index failure
    std::vector<Counterexample> failures;  // extra failures when collected
};

// The available suites, in canonical order: skein, moves, basepoint, oracle,
// factorization, irreducible, structural, sums.
const std::vector<std::string>& suite_names();

// Runs one suite: a deterministic corpus phase, then opt.trials seeded random
// trials (parallel across trials; results independent of thread count).
// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

// Runs one suite by name, or every suite for "all".
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opt);

}  // namespace gdcalc
