// gdcalc: evaluate Gauss-diagram state-sum invariants and run the
// property-based verification suites.
//
// Exit codes: 0 success, 2 input parse error, 3 precondition violation
// (bad arguments included), 4 verification failure.

#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdcalc/diagram.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gdcalc::PreconditionError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string default_name(const std::string& path) {
    if (path == "-") return "stdin";
    return std::filesystem::path(path).stem().string();
}

struct ComputeArgs {
    std::string input;
    std::string invariant;
    std::string mode = "asc";
    std::optional<int> degree;
    bool explain = false;
    bool timing = false;
};

int run_compute(const ComputeArgs& args) {
    const std::string text = read_input(args.input);
    const gdcalc::Diagram d = gdcalc::parse(text);
    const gdcalc::Mode mode =
        args.mode == "desc" ? gdcalc::Mode::Desc : gdcalc::Mode::Asc;
    const gdcalc::Kind kind = gdcalc::kind_from_string(args.invariant, mode);

    const auto t0 = std::chrono::steady_clock::now();
    const gdcalc::ComputeOutcome outcome =
        gdcalc::compute_invariant(d, kind, args.degree);
    const auto t1 = std::chrono::steady_clock::now();

    nlohmann::ordered_json out;
    out["name"] = d.name.empty() ? default_name(args.input) : d.name;
    out["invariant"] = gdcalc::kind_name(kind);
    if (outcome.is_polynomial) {
        nlohmann::ordered_json value(nlohmann::json::value_t::object);
        for (const auto& [deg, coeff] : outcome.poly)
            if (coeff != 0) value[std::to_string(deg)] = coeff;
        out["value"] = std::move(value);
    } else {
        out["value"] = outcome.scalar;
    }
    if (args.explain) {
        const std::vector<gdcalc::StateTerm> terms =
            gdcalc::contributing_states(d, kind, args.degree.value_or(0));
        nlohmann::ordered_json explain = nlohmann::json::array();
        for (const gdcalc::StateTerm& term : terms) {
            nlohmann::ordered_json entry;
            nlohmann::ordered_json arrows = nlohmann::json::array();
            for (int a = 0; a < 32; ++a)
                if ((term.mask >> a) & 1u) arrows.push_back(a);
            entry["arrows"] = std::move(arrows);
            entry["sign"] = term.sign;
            explain.push_back(std::move(entry));
        }
        out["explain"] = std::move(explain);
    }
    if (args.timing) {
        const double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        out["timing_ms"] = ms;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    int trials = 100;
    int max_arrows = 12;
    bool trace = false;
    bool inject_fault = false;
};

void print_counterexample(const gdcalc::Counterexample& ce, const char* label) {
    std::cout << "  " << label << ": " << ce.context << "\n";
    std::cout << "    detail: " << ce.detail << "\n";
    if (!ce.diagram.empty()) {
        std::istringstream lines(ce.diagram);
        std::string line;
        std::cout << "    diagram:\n";
        while (std::getline(lines, line)) std::cout << "      " << line << "\n";
    }
    if (ce.trace.empty()) {
        std::cout << "    trace: (none)\n";
    } else {
        std::cout << "    trace:\n";
        for (const std::string& mv : ce.trace) std::cout << "      " << mv << "\n";
    }
}

int run_verify(const VerifyArgs& args) {
    gdcalc::VerifyOptions opt;
    opt.seed = args.seed;
    opt.trials = args.trials;
    opt.max_arrows = args.max_arrows;
    opt.collect_failures = args.trace;
    opt.inject_fault = args.inject_fault;

    const std::vector<gdcalc::SuiteReport> reports =
        gdcalc::run_suites(args.suite, opt);
    bool any_failed = false;
    for (const gdcalc::SuiteReport& rep : reports) {
        std::cout << "suite " << rep.suite << ": passed=" << rep.passed
                  << " failed=" << rep.failed << "\n";
        if (rep.failed > 0) any_failed = true;
        if (rep.first) print_counterexample(*rep.first, "first counterexample");
        if (args.trace)
            for (const gdcalc::Counterexample& ce : rep.failures)
                print_counterexample(ce, "counterexample");
    }
    return any_failed ? kExitVerification : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-diagram state-sum invariants of classical and virtual links"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    CLI::App* comp =
        app.add_subcommand("compute", "Evaluate one invariant of a diagram file");
    comp->add_option("--input", cargs.input,
                     "Path to a Gauss diagram file ('-' reads stdin)")
        ->required();
    comp->add_option("--invariant", cargs.invariant,
                     "Invariant kind (e.g. conway, nabla-ad, a, d2, ad, i, p)")
        ->required();
    comp->add_option("--degree", cargs.degree,
                     "Degree for coefficient kinds (rejected for polynomials)");
    comp->add_option("--mode", cargs.mode, "State order: asc or desc")
        ->check(CLI::IsMember({"asc", "desc"}));
    comp->add_flag("--explain", cargs.explain,
                   "List the contributing states (direct state-sum kinds only)");
    comp->add_flag("--timing", cargs.timing, "Report the evaluation time in ms");

    VerifyArgs vargs;
    CLI::App* ver = app.add_subcommand("verify", "Run a property-based suite");
    ver->add_option("--suite", vargs.suite,
                    "skein, moves, basepoint, oracle, factorization, irreducible, "
                    "structural, sums, or all")
        ->required();
    ver->add_option("--seed", vargs.seed, "Base seed for the random trials");
    ver->add_option("--trials", vargs.trials, "Number of random trials per suite");
    ver->add_option("--max-arrows", vargs.max_arrows,
                    "Arrow budget for random diagrams and walks");
    ver->add_flag("--trace", vargs.trace,
                  "Collect up to ten extra counterexamples with move traces");
    ver->add_flag("--inject-fault", vargs.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (comp->parsed()) return run_compute(cargs);
        if (ver->parsed()) return run_verify(vargs);
    } catch (const gdcalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gdcalc::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
