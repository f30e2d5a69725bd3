// Acceptance gate: evaluates every shipped guarantee end to end and prints
// one PASS/FAIL line per criterion. The process exit code is the number of
// failed criteria, so a zero exit means the whole contract holds.

#include <chrono>
#include <initializer_list>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "gdcalc/corpus.hpp"
#include "gdcalc/diagram.hpp"
#include "gdcalc/family.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/moves.hpp"
#include "gdcalc/verify.hpp"

namespace {

int g_failures = 0;

void criterion(bool ok, const std::string& text) {
    std::cout << (ok ? "PASS: " : "FAIL: ") << text << "\n";
    if (!ok) ++g_failures;
}

gdcalc::Poly P(std::initializer_list<std::pair<int, long long>> terms) {
    gdcalc::Poly p;
    for (const auto& [d, v] : terms) gdcalc::poly_add_term(p, d, v);
    return p;
}

}  // namespace

int main() {
    using namespace gdcalc;
    const auto t0 = std::chrono::steady_clock::now();

    const Diagram kishino = corpus_diagram("kishino");
    const Diagram kishino_hat = corpus_diagram("kishino-hat");
    const Diagram h2 = corpus_diagram("h2");
    const Diagram trefoil = corpus_diagram("trefoil");
    const Diagram vhopf = corpus_diagram("virtual-hopf");
    const Diagram vtref = corpus_diagram("virtual-trefoil");

    criterion(conway(kishino, Mode::Asc) == P({{0, 1}, {2, -2}, {4, 1}}) &&
                  conway(kishino, Mode::Desc) == P({{0, 1}}),
              "kishino diagram: ascending polynomial 1-2z^2+z^4, descending 1");
    criterion(conway(kishino_hat, Mode::Asc) == P({{0, 1}}) &&
                  conway(kishino_hat, Mode::Desc) == P({{0, 1}, {2, -2}, {4, 1}}),
              "rebased kishino diagram: the two polynomials trade places");
    criterion(serialize(move_base_point(kishino, 0, 4)) ==
                  serialize(make_diagram(kishino_hat.circles, kishino_hat.signs,
                                         kishino_hat.classical, kishino.name)),
              "moving the kishino base point four gaps yields the rebased diagram");

    criterion(ad_coeff(h2, 2) == 4 && c_coeff(h2, 0) == 2 && i_coeff(h2, 2) == -4,
              "two-component torus link: AD_2=4, C_0=2, I_2=-4");
    criterion(p_coeff(h2, 0) == 2 && p_coeff(h2, 2) == -4,
              "two-component torus link: p_0=2, p_2=-4");

    criterion(two_boundary_coeff(trefoil, 3, Mode::Asc) == 0 &&
                  two_boundary_coeff(trefoil, 3, Mode::Desc) == 1,
              "trefoil at the shipped base point: (A2_3, D2_3) = (0, 1)");
    {
        const Diagram moved = move_base_point(trefoil, 0, 1);
        criterion(two_boundary_coeff(moved, 3, Mode::Asc) == 1 &&
                      two_boundary_coeff(moved, 3, Mode::Desc) == 0,
                  "trefoil base point moved one gap: (A2_3, D2_3) = (1, 0)");
    }
    criterion(i_coeff(trefoil, 3) == -2, "trefoil: I_3 = -2");

    criterion(conway(vhopf, Mode::Asc) == P({{1, 1}}) &&
                  conway(vhopf, Mode::Desc).empty(),
              "virtual hopf link: ascending polynomial z, descending 0");
    criterion(one_boundary_coeff(vtref, 2, Mode::Asc) == 1 &&
                  one_boundary_coeff(vtref, 2, Mode::Desc) == 0,
              "virtual trefoil at the shipped base point: (A_2, D_2) = (1, 0)");
    {
        const Diagram moved = move_base_point(vtref, 0, 2);
        criterion(one_boundary_coeff(moved, 2, Mode::Asc) == 0 &&
                      one_boundary_coeff(moved, 2, Mode::Desc) == 1,
                  "virtual trefoil base point moved two gaps: (A_2, D_2) = (0, 1)");
    }

    criterion(conway(corpus_diagram("chain-three"), Mode::Asc) == P({{2, 1}}),
              "three-component chain: polynomial z^2");
    {
        const Diagram a = corpus_diagram("base-pair-a");
        const Diagram b = corpus_diagram("base-pair-b");
        criterion(conway(a, Mode::Asc) == P({{0, 1}, {2, 1}}) &&
                      conway(a, Mode::Desc) == P({{0, 1}, {2, 1}}),
                  "first base-pair diagram: both polynomials 1+z^2");
        criterion(conway(b, Mode::Asc) == P({{0, 1}, {2, 2}, {4, 1}}) &&
                      conway(b, Mode::Desc) == P({{0, 1}}),
                  "second base-pair diagram: ascending (1+z^2)^2, descending 1");
    }
    {
        const Diagram mk = corpus_diagram("mirror-k");
        const Diagram ms = corpus_diagram("mirror-kstar");
        criterion(conway(mk, Mode::Asc) == P({{0, 1}, {2, 1}}) &&
                      conway(mk, Mode::Desc) == P({{0, 1}}) &&
                      conway(ms, Mode::Asc) == P({{0, 1}}) &&
                      conway(ms, Mode::Desc) == P({{0, 1}, {2, 1}}),
                  "mirror pair: ascending and descending polynomials swap");
    }

    criterion(two_boundary_coeff(corpus_diagram("kink-plus"), 1, Mode::Desc) == 1 &&
                  two_boundary_coeff(corpus_diagram("kink-minus"), 1, Mode::Asc) == -1 &&
                  two_boundary_coeff(corpus_diagram("unknot"), 1, Mode::Asc) == 0 &&
                  two_boundary_coeff(corpus_diagram("unknot"), 1, Mode::Desc) == 0,
              "kinks: D2_1(positive kink)=1, A2_1(negative kink)=-1, unknot both 0");

    criterion(enumerate_family(1, 1, 1, Mode::Asc).empty() &&
                  enumerate_family(2, 1, 1, Mode::Asc).size() == 1 &&
                  enumerate_family(2, 2, 2, Mode::Asc).size() == 5,
              "arrow-diagram families: sizes 0, 1, 5 for (n,m,b) = (1,1,1), (2,1,1), (2,2,2)");

    {
        VerifyOptions opt;
        opt.seed = 20260815;
        opt.trials = 100;
        opt.max_arrows = 12;
        for (const std::string& name : suite_names()) {
            const SuiteReport rep = run_suite(name, opt);
            criterion(rep.failed == 0,
                      "property suite '" + name + "': " + std::to_string(rep.passed) +
                          " checks, 100 random trials, zero failures");
        }
    }

    {
        const Diagram vpa = corpus_diagram("virt-pair-a");
        const Diagram vpb = corpus_diagram("virt-pair-b");
        const Diagram flipped = virtualize(vpa, 1);
        criterion(conway(vpa, Mode::Asc) != conway(flipped, Mode::Asc) &&
                      conway(flipped, Mode::Asc) == conway(vpb, Mode::Asc),
                  "witness: virtualizing one crossing changes the ascending polynomial");
    }
    criterion(conway(kishino, Mode::Asc) != conway(kishino_hat, Mode::Asc),
              "witness: base point motion changes the ascending polynomial of kishino");
    {
        bool classical_zero = true;
        for (const std::string& name : classical_corpus_names())
            if (!nabla_ad(corpus_diagram(name)).empty()) classical_zero = false;
        criterion(!nabla_ad(kishino).empty() && classical_zero,
                  "witness: the ascending-descending difference detects kishino and "
                  "vanishes on every classical corpus diagram");
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    criterion(secs < 60.0, "acceptance run finishes in under 60 seconds");

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << g_failures << " failures)\n";
    return g_failures;
}
