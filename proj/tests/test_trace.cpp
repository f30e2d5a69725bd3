#include "doctest.h"

#include <bit>
#include <vector>

#include "gdcalc/trace.hpp"
#include "helpers.hpp"

using gdcalc::classify_asc;
using gdcalc::classify_desc;
using gdcalc::Diagram;
using gdcalc::StateMask;
using gdcalc::trace;
using gdcalc::TraceResult;
using testutil::dia;

namespace {
StateMask full(const Diagram& d) {
    return (StateMask{1} << d.arrow_count()) - 1;
}
}  // namespace

TEST_CASE("trefoil full state: twice-punctured torus, descending only") {
    const Diagram& d = dia("trefoil");
    const TraceResult tr = trace(d, full(d));
    CHECK(tr.b == 2);
    CHECK(tr.euler == -2);
    CHECK(tr.genus == 1);
    CHECK(tr.connected);
    CHECK_FALSE(classify_asc(tr, full(d)));
    CHECK(classify_desc(tr, full(d)));
    CHECK(tr.first_approach ==
          std::vector<std::int8_t>{0, 0, 0});  // every arrow met tail-first
    CHECK(tr.separating == 0b111);
    CHECK(tr.has_labels);
    REQUIRE(tr.labels.size() == 1);
    CHECK(tr.labels[0].size() == 6);
    for (std::int8_t v : tr.labels[0]) CHECK((v == 1 || v == 2));
}

TEST_CASE("virtual trefoil full state: one boundary cycle, ascending") {
    const Diagram& d = dia("virtual-trefoil");
    const TraceResult tr = trace(d, full(d));
    CHECK(tr.b == 1);
    CHECK(tr.euler == -1);
    CHECK(tr.genus == 1);
    CHECK(tr.connected);
    CHECK(classify_asc(tr, full(d)));
    CHECK_FALSE(classify_desc(tr, full(d)));
    CHECK(tr.first_approach ==
          std::vector<std::int8_t>{1, 1});  // every arrow met head-first
    CHECK(tr.separating == 0);
    CHECK_FALSE(tr.has_labels);
}

TEST_CASE("hopf full state: annulus with both arrows separating") {
    const Diagram& d = dia("hopf-plus");
    const TraceResult tr = trace(d, full(d));
    CHECK(tr.b == 2);
    CHECK(tr.euler == 0);
    CHECK(tr.genus == 0);
    CHECK(tr.connected);
    CHECK_FALSE(classify_asc(tr, full(d)));
    CHECK(classify_desc(tr, full(d)));
    CHECK(tr.separating == 0b11);
}

TEST_CASE("h2 full state has four boundary cycles") {
    const Diagram& d = dia("h2");
    const TraceResult tr = trace(d, full(d));
    CHECK(tr.b == 4);
    CHECK(tr.euler == -2);
    CHECK(tr.connected);
    CHECK_FALSE(classify_asc(tr, full(d)));
    CHECK_FALSE(classify_desc(tr, full(d)));
    CHECK(tr.first_approach == std::vector<std::int8_t>{1, 0, 1, 1});
}

TEST_CASE("empty state of the unknot is a disk") {
    const Diagram& d = dia("unknot");
    const TraceResult tr = trace(d, 0);
    CHECK(tr.b == 1);
    CHECK(tr.euler == 1);
    CHECK(tr.genus == 0);
    CHECK(tr.connected);
    CHECK(classify_asc(tr, 0));
    CHECK(classify_desc(tr, 0));
}

TEST_CASE("sigma is the product of the member signs") {
    CHECK(gdcalc::sigma(dia("trefoil"), 0b111) == 1);
    CHECK(gdcalc::sigma(dia("kink-minus"), 0b1) == -1);
    CHECK(gdcalc::sigma(dia("figure-eight"), 0b0110) == 1);
    CHECK(gdcalc::sigma(dia("figure-eight"), 0b0010) == -1);
    CHECK(gdcalc::sigma(dia("kishino"), 0) == 1);
}

TEST_CASE("smooth_all mirrors the boundary cycles of the trace") {
    for (const char* name : {"trefoil", "h2", "kishino", "chain-three"}) {
        const Diagram& d = dia(name);
        for (StateMask s = 0; s < (StateMask{1} << d.arrow_count()); ++s) {
            const TraceResult tr = trace(d, s);
            const auto sm = gdcalc::smooth_all(d, s);
            CHECK(sm.diagram.circle_count() == tr.b);
            CHECK(sm.diagram.arrow_count() ==
                  d.arrow_count() - std::popcount(s));
        }
    }
}

TEST_CASE("bridge_arrows finds arrows that disconnect the state graph") {
    CHECK(gdcalc::bridge_arrows(dia("hopf-plus"), 0b01) ==
          std::vector<int>{0});
    CHECK(gdcalc::bridge_arrows(dia("hopf-plus"), 0b11).empty());
    CHECK(gdcalc::bridge_arrows(dia("trefoil"), 0b111).empty());
    CHECK(gdcalc::bridge_arrows(dia("h2"), 0b1111).empty());
    CHECK(gdcalc::bridge_arrows(dia("chain-three"), 0b0001) ==
          std::vector<int>{0});
}

TEST_CASE("planarity matches the realizability of each corpus entry") {
    for (const char* name : {"unknot", "two-component-unlink", "kink-plus",
                             "kink-minus", "hopf-plus", "trefoil",
                             "figure-eight", "chain-three", "h2"})
        CHECK(gdcalc::is_planar(dia(name)));
    for (const char* name :
         {"virtual-trefoil", "virtual-hopf", "kishino", "kishino-hat",
          "mirror-k", "mirror-kstar", "base-pair-a", "base-pair-b",
          "virt-pair-a", "virt-pair-b"})
        CHECK_FALSE(gdcalc::is_planar(dia(name)));
}
