#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gdcalc/diagram.hpp"
#include "gdcalc/moves.hpp"
#include "gdcalc/random_walk.hpp"
#include "gdcalc/trace.hpp"
#include "gdcalc/verify.hpp"
#include "helpers.hpp"

using namespace gdcalc;
using testutil::dia;

TEST_CASE("rng is deterministic and below() stays in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 64; ++i) CHECK(a.next() == b.next());

    Rng c(7);
    for (int i = 0; i < 256; ++i) {
        const std::uint64_t x = c.below(13);
        CHECK(x < 13);
    }
    Rng d(7);
    for (int i = 0; i < 64; ++i) {
        const int s = d.sign();
        CHECK((s == 1 || s == -1));
    }
}

TEST_CASE("rng shuffle permutes") {
    std::vector<int> v(20);
    for (int i = 0; i < 20; ++i) v[static_cast<std::size_t>(i)] = i;
    std::vector<int> w = v;
    Rng r(99);
    r.shuffle(w);
    CHECK(w != v);  // 20! makes a fixed point astronomically unlikely
    std::vector<int> ws = w;
    std::sort(ws.begin(), ws.end());
    CHECK(ws == v);

    Rng r2(99);
    std::vector<int> w2 = v;
    r2.shuffle(w2);
    CHECK(w2 == w);
}

TEST_CASE("random_diagram shape contract") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const Diagram d = random_diagram(seed, 2, 5);
        CHECK(d.circle_count() == 2);
        CHECK(d.arrow_count() == 5);
        CHECK_FALSE(d.classical);
        CHECK(d.name == "rand-" + std::to_string(seed));
        for (const Circle& c : d.circles) CHECK_FALSE(c.empty());
        const Diagram again = random_diagram(seed, 2, 5);
        CHECK(serialize(again) == serialize(d));
    }
    const Diagram k0 = random_diagram(4, 1, 0);
    CHECK(k0.arrow_count() == 0);
    CHECK(k0.circle_count() == 1);
    CHECK_THROWS_AS(random_diagram(1, 4, 1), PreconditionError);
    CHECK_THROWS_AS(random_diagram(1, 2, 0), PreconditionError);
}

TEST_CASE("random_classical walks stay classical, planar, and replayable") {
    const Diagram base = dia("trefoil");
    const WalkResult walk = random_classical(5, base, 6);
    CHECK(walk.diagram.classical);
    CHECK(is_planar(walk.diagram));
    CHECK(walk.trace.size() == 6);
    CHECK(walk.diagram.arrow_count() <= 12);

    Diagram replay = base;
    for (const MoveSite& s : walk.trace) replay = apply_move(replay, s);
    CHECK(serialize(replay) == serialize(walk.diagram));

    const WalkResult again = random_classical(5, base, 6);
    CHECK(serialize(again.diagram) == serialize(walk.diagram));
    CHECK(again.trace.size() == walk.trace.size());
    for (std::size_t i = 0; i < walk.trace.size(); ++i)
        CHECK(encode_site(again.trace[i]) == encode_site(walk.trace[i]));

    // The budget gates insertions at max_arrows; the no-candidate fallback can
    // overshoot by at most one double-point insertion.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const WalkResult w = random_classical(seed, base, 6, 8);
        CHECK(w.diagram.classical);
        CHECK(is_planar(w.diagram));
        CHECK(w.diagram.arrow_count() <= 10);
    }

    CHECK_THROWS_AS(random_classical(1, dia("virtual-trefoil"), 2), PreconditionError);
}

TEST_CASE("suite names are canonical") {
    const std::vector<std::string> want{"skein",   "moves",      "basepoint",  "oracle",
                                        "factorization", "irreducible", "structural", "sums"};
    CHECK(suite_names() == want);
}

TEST_CASE("every suite passes a short seeded run") {
    VerifyOptions opt;
    opt.seed = 3;
    opt.trials = 4;
    opt.max_arrows = 8;
    const auto reports = run_suites("all", opt);
    REQUIRE(reports.size() == suite_names().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].suite);
        CHECK(reports[i].suite == suite_names()[i]);
        CHECK(reports[i].failed == 0);
        CHECK(reports[i].passed > 0);
        CHECK_FALSE(reports[i].first.has_value());
    }
}

TEST_CASE("suite results do not depend on the worker count") {
    VerifyOptions one;
    one.seed = 11;
    one.trials = 6;
    one.max_arrows = 7;
    one.threads = 1;
    VerifyOptions four = one;
    four.threads = 4;
    for (const std::string& name : {std::string("skein"), std::string("structural")}) {
        const SuiteReport a = run_suite(name, one);
        const SuiteReport b = run_suite(name, four);
        CHECK(a.passed == b.passed);
        CHECK(a.failed == b.failed);
    }
}

TEST_CASE("fault injection trips every output-sensitive suite") {
    VerifyOptions opt;
    opt.seed = 1;
    opt.trials = 2;
    opt.max_arrows = 6;
    opt.inject_fault = true;
    for (const std::string& name :
         {std::string("skein"), std::string("moves"), std::string("basepoint"),
          std::string("oracle"), std::string("sums")}) {
        CAPTURE(name);
        const SuiteReport rep = run_suite(name, opt);
        CHECK(rep.failed > 0);
        REQUIRE(rep.first.has_value());
        CHECK_FALSE(rep.first->context.empty());
        CHECK_FALSE(rep.first->detail.empty());
    }
}

TEST_CASE("failure collection returns extra counterexamples") {
    VerifyOptions opt;
    opt.seed = 1;
    opt.trials = 2;
    opt.max_arrows = 6;
    opt.inject_fault = true;
    opt.collect_failures = true;
    const SuiteReport rep = run_suite("skein", opt);
    CHECK(rep.failed > 0);
    REQUIRE(rep.first.has_value());
    REQUIRE_FALSE(rep.failures.empty());
    // failures holds the extras after the first counterexample, still sorted.
    std::vector<long long> idx{rep.first->index};
    for (const Counterexample& ce : rep.failures) idx.push_back(ce.index);
    CHECK(std::is_sorted(idx.begin(), idx.end()));
    CHECK(rep.first->index < rep.failures.front().index);
    CHECK(rep.failures.size() <= 10);
}

TEST_CASE("unknown suite names are rejected") {
    VerifyOptions opt;
    CHECK_THROWS_AS(run_suite("nope", opt), PreconditionError);
    CHECK_THROWS_AS(run_suites("nope", opt), PreconditionError);
}
