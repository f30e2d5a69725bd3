#include "doctest.h"

#include <algorithm>

#include "gdcalc/family.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/skein.hpp"
#include "helpers.hpp"

using gdcalc::conway;
using gdcalc::conway_skein;
using gdcalc::Diagram;
using gdcalc::enumerate_family;
using gdcalc::Mode;
using gdcalc::pairing;
using gdcalc::Poly;
using gdcalc::PreconditionError;
using testutil::dia;
using testutil::P;

TEST_CASE("skein recursion agrees with both state sums on classical entries") {
    for (const std::string& name : gdcalc::classical_corpus_names()) {
        CAPTURE(name);
        const Poly sk = conway_skein(dia(name));
        CHECK(sk == conway(dia(name), Mode::Asc));
        CHECK(sk == conway(dia(name), Mode::Desc));
    }
    CHECK(conway_skein(dia("trefoil")) == P({{0, 1}, {2, 1}}));
    CHECK(conway_skein(dia("chain-three")) == P({{2, 1}}));
    CHECK(conway_skein(dia("h2")) == P({{1, 2}}));
}

TEST_CASE("skein recursion requires the classical flag") {
    CHECK_THROWS_AS(conway_skein(dia("kishino")), PreconditionError);
    CHECK_THROWS_AS(conway_skein(dia("virtual-trefoil")), PreconditionError);
}

TEST_CASE("skein recursion is multiplicative under connected sum") {
    const Diagram cs = gdcalc::connected_sum(dia("trefoil"), dia("figure-eight"));
    CHECK(conway_skein(cs) ==
          gdcalc::poly_mul(conway_skein(dia("trefoil")),
                           conway_skein(dia("figure-eight"))));
}

TEST_CASE("family enumeration sizes") {
    CHECK(enumerate_family(1, 1, 1, Mode::Asc).empty());
    CHECK(enumerate_family(2, 1, 1, Mode::Asc).size() == 1);
    CHECK(enumerate_family(2, 1, 1, Mode::Desc).size() == 1);
    CHECK(enumerate_family(2, 2, 2, Mode::Asc).size() == 5);
    CHECK(enumerate_family(2, 1, 2, Mode::Asc).empty());
    CHECK(enumerate_family(1, 1, 2, Mode::Asc).size() == 1);
    CHECK(enumerate_family(3, 1, 1, Mode::Asc).empty());
    CHECK(enumerate_family(3, 1, 1, Mode::Desc).empty());
    CHECK(enumerate_family(3, 2, 2, Mode::Asc).empty());
}

TEST_CASE("family enumeration bounds") {
    CHECK_THROWS_AS(enumerate_family(5, 1, 1, Mode::Asc), PreconditionError);
    CHECK_THROWS_AS(enumerate_family(2, 3, 1, Mode::Asc), PreconditionError);
    CHECK_THROWS_AS(enumerate_family(-1, 1, 1, Mode::Asc), PreconditionError);
    CHECK_THROWS_AS(enumerate_family(2, 0, 1, Mode::Asc), PreconditionError);
}

TEST_CASE("embedding counts of the smallest patterns") {
    using gdcalc::Circle;
    using gdcalc::End;
    const Diagram empty1 = gdcalc::make_diagram({Circle{}}, {});
    CHECK(pairing(empty1, dia("trefoil")) == 1);
    CHECK(pairing(empty1, dia("kishino")) == 1);

    const Diagram tail_head =
        gdcalc::make_diagram({Circle{{0, End::Tail}, {0, End::Head}}}, {1});
    const Diagram head_tail =
        gdcalc::make_diagram({Circle{{0, End::Head}, {0, End::Tail}}}, {1});
    CHECK(pairing(tail_head, dia("kink-plus")) == 1);
    CHECK(pairing(head_tail, dia("kink-plus")) == 0);

    const auto a21 = enumerate_family(2, 1, 1, Mode::Asc);
    REQUIRE(a21.size() == 1);
    CHECK(pairing(a21[0], dia("virtual-trefoil")) == 1);

    // Mismatched circle counts embed nowhere.
    CHECK(pairing(empty1, dia("hopf-plus")) == 0);
}

TEST_CASE("family pairing sums reproduce the state-sum coefficients") {
    using gdcalc::family_pairing_sum;
    for (const gdcalc::CorpusEntry& e : gdcalc::corpus()) {
        const Diagram& d = dia(e.name);
        if (d.circle_count() > 2) continue;
        CAPTURE(e.name);
        for (int n = 0; n <= 3; ++n)
            for (int b : {1, 2})
                for (Mode mo : {Mode::Asc, Mode::Desc}) {
                    const long long fam =
                        family_pairing_sum(d, n, d.circle_count(), b, mo);
                    const long long direct =
                        b == 1 ? gdcalc::one_boundary_coeff(d, n, mo)
                               : gdcalc::two_boundary_coeff(d, n, mo);
                    CHECK(fam == direct);
                }
    }
}

TEST_CASE("two-boundary family sums against the two-circle entries") {
    using gdcalc::family_pairing_sum;
    CHECK(family_pairing_sum(dia("hopf-plus"), 2, 2, 2, Mode::Asc) == 0);
    CHECK(family_pairing_sum(dia("h2"), 2, 2, 2, Mode::Asc) == 3);
}

TEST_CASE("canonical arrow codes identify equal patterns") {
    using gdcalc::canonical_arrow_code;
    // The code sees only circles, never signs.
    CHECK(canonical_arrow_code(gdcalc::mirror(dia("trefoil")).circles) ==
          canonical_arrow_code(dia("trefoil").circles));
    // The based circle is read as written: the two kinks differ.
    CHECK(canonical_arrow_code(dia("kink-plus").circles) !=
          canonical_arrow_code(dia("kink-minus").circles));
    // Rotating a non-based circle must not change the code.
    const Diagram& hopf = dia("hopf-plus");
    Diagram rot = hopf;
    std::rotate(rot.circles[1].begin(), rot.circles[1].begin() + 1,
                rot.circles[1].end());
    CHECK(canonical_arrow_code(rot.circles) ==
          canonical_arrow_code(hopf.circles));
    // Rotating the based circle generally does.
    const Diagram& vt = dia("virtual-trefoil");
    Diagram vrot = vt;
    std::rotate(vrot.circles[0].begin(), vrot.circles[0].begin() + 1,
                vrot.circles[0].end());
    CHECK(canonical_arrow_code(vrot.circles) !=
          canonical_arrow_code(vt.circles));
}
