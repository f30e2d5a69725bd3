#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "gdcalc/corpus.hpp"
#include "gdcalc/diagram.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/moves.hpp"
#include "helpers.hpp"

using namespace gdcalc;
using testutil::dia;
using testutil::same_shape;

namespace {

// Trefoil with no link name, so frozen serializations below stay short.
Diagram bare_trefoil() { return parse("classical: true\ncircle: O1+ U2+ O3+ U1+ O2+ U3+\n"); }

std::vector<long long> two_boundary_vec(const Diagram& d, Mode mode, int upto) {
    std::vector<long long> v;
    for (int n = 0; n <= upto; ++n) v.push_back(two_boundary_coeff(d, n, mode));
    return v;
}

}  // namespace

TEST_CASE("slot lists cover the based walk and wrap elsewhere") {
    const Diagram tre = dia("trefoil");
    CHECK(slot_list(tre, 0) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(slot_list(dia("unknot"), 0) == std::vector<int>{0});
    const Diagram hop = dia("hopf-plus");
    CHECK(slot_list(hop, 0) == std::vector<int>{0, 1, 2});
    CHECK(slot_list(hop, 1) == std::vector<int>{0, 1});
}

TEST_CASE("adjacent pairs wrap only off the based circle") {
    const Diagram tre = dia("trefoil");
    const std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CHECK(adjacent_pairs(tre, 0) == want);
    const Diagram hop = dia("hopf-plus");
    CHECK(adjacent_pairs(hop, 1) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("kink insertion and deletion") {
    const Diagram unk = dia("unknot");
    CHECK(same_shape(om1_insert(unk, 0, 0, 1, false), dia("kink-plus")));
    CHECK(serialize(om1_insert(parse("classical: true\ncircle:\n"), 0, 0, 1, true)) ==
          "classical: true\ncircle: U1+ O1+\n");

    CHECK(om1_delete_sites(dia("kink-plus")) == std::vector<int>{0});
    CHECK(om1_delete_sites(dia("trefoil")).empty());
    CHECK(om1_delete_sites(dia("kishino")).empty());
    CHECK(same_shape(om1_delete(dia("kink-plus"), 0), unk));

    const Diagram tre = bare_trefoil();
    const Diagram ins = om1_insert(tre, 0, 3, -1, true);
    CHECK(ins.arrow_count() == 4);
    const auto sites = om1_delete_sites(ins);
    CHECK(std::find(sites.begin(), sites.end(), 3) != sites.end());
    CHECK(serialize(om1_delete(ins, 3)) == serialize(tre));
    CHECK(conway(ins, Mode::Asc) == conway(tre, Mode::Asc));
    CHECK(conway(ins, Mode::Desc) == conway(tre, Mode::Desc));
}

TEST_CASE("framed kink pair insertion and deletion") {
    const Diagram tre = dia("trefoil");
    const Diagram f = om1f_insert(tre, 0, 2, 1, false);
    CHECK(serialize(f) ==
          "link \"trefoil\"\nclassical: true\n"
          "circle: O1+ U2+ O3+ U3+ O4- U4- O5+ U1+ O2+ U5+\n");
    const auto sites = om1f_delete_sites(f);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].circle == 0);
    CHECK(sites[0].start == 2);
    CHECK(sites[0].arrow_a == 3);
    CHECK(sites[0].arrow_b == 4);
    CHECK(serialize(om1f_delete(f, 3, 4)) == serialize(tre));
    CHECK(conway(f, Mode::Asc) == conway(tre, Mode::Asc));
    CHECK(two_boundary_vec(f, Mode::Desc, 4) == two_boundary_vec(tre, Mode::Desc, 4));

    for (const CorpusEntry& e : corpus()) CHECK(om1f_delete_sites(dia(e.name)).empty());
}

TEST_CASE("double point pair insertion and deletion") {
    const Diagram hop = dia("hopf-plus");
    const Diagram g = om2_insert(hop, 0, 1, 1, 0, true, true, -1);
    CHECK(serialize(g) ==
          "link \"hopf-plus\"\nclassical: true\n"
          "circle: O1+ O2- O3+ U4+\ncircle: U2- U3+ U1+ O4+\n");
    CHECK(om2_delete_sites(g) == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(serialize(om2_delete(g, 2, 3)) == serialize(hop));
    CHECK(conway(g, Mode::Asc) == conway(hop, Mode::Asc));
    CHECK(conway(g, Mode::Desc) == conway(hop, Mode::Desc));

    CHECK(om2_delete_sites(dia("virt-pair-b")) ==
          std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(om2_delete_sites(dia("trefoil")).empty());
}

TEST_CASE("triangle sites on a constructed diagram") {
    const Diagram tre = bare_trefoil();
    const Diagram dd = om2_insert(tre, 0, 0, 0, 2, true, false, 1);
    CHECK(serialize(dd) ==
          "classical: true\ncircle: O1+ O2- O3+ U4+ U2- U1+ O5+ U3+ O4+ U5+\n");

    const auto sites = om3_sites(dd);
    REQUIRE(sites.size() == 1);
    const MoveSite site = sites[0];
    CHECK(encode_site(site) == "om3-forward arrows=0,1,4 strands=0:7:8,0:1:2,0:3:4");

    const Diagram ee = om3_apply(dd, site);
    CHECK(serialize(ee) ==
          "classical: true\ncircle: O1+ O2+ O3- U3- U4+ U1+ O5+ O4+ U2+ U5+\n");
    CHECK(is_planar(ee));
    CHECK(serialize(om3_apply(ee, site)) == serialize(dd));

    CHECK(conway(ee, Mode::Asc) == conway(dd, Mode::Asc));
    CHECK(conway(ee, Mode::Desc) == conway(dd, Mode::Desc));
    CHECK(two_boundary_vec(ee, Mode::Asc, 5) == two_boundary_vec(dd, Mode::Asc, 5));
    CHECK(two_boundary_vec(ee, Mode::Desc, 5) == two_boundary_vec(dd, Mode::Desc, 5));

    MoveSite back = site;
    back.kind = MoveKind::Om3Backward;
    CHECK(serialize(apply_move(ee, back)) == serialize(dd));

    for (const CorpusEntry& e : corpus()) CHECK(om3_sites(dia(e.name)).empty());
}

TEST_CASE("virtualization reverses one arrow and drops the classical flag") {
    const Diagram v = virtualize(dia("virt-pair-a"), 1);
    CHECK(same_shape(v, dia("virt-pair-b")));
    CHECK_FALSE(v.classical);
    CHECK(same_shape(virtualize(v, 1), dia("virt-pair-a")));

    const Diagram tre = dia("trefoil");
    const Diagram w = virtualize(tre, 0);
    CHECK_FALSE(w.classical);
    CHECK(w.signs == tre.signs);
}

TEST_CASE("site enumeration sizes") {
    const Diagram kp = dia("kink-plus");
    CHECK(list_insert_sites(kp).size() == 72);
    CHECK(list_insert_sites(kp, false).size() == 24);
    CHECK(list_insert_sites(dia("hopf-plus")).size() == 200);

    const auto dels = list_delete_sites(kp);
    REQUIRE(dels.size() == 1);
    CHECK(dels[0].kind == MoveKind::Om1Delete);
    CHECK(dels[0].arrow_a == 0);

    const Diagram tre = dia("trefoil");
    CHECK(list_insert_sites(tre).size() == 392);
    CHECK(list_delete_sites(tre).empty());
    CHECK(list_moves(tre).size() == 392 + 0 + 0 + 3);
}

TEST_CASE("apply_move accepts every listed site") {
    const Diagram kp = dia("kink-plus");
    for (const MoveSite& s : list_moves(kp)) {
        const Diagram out = apply_move(kp, s);
        CHECK(out.circle_count() == kp.circle_count());
    }
}

TEST_CASE("apply_move rejects stale or malformed sites") {
    const Diagram tre = dia("trefoil");

    MoveSite s1;
    s1.kind = MoveKind::Om1Delete;
    s1.arrow_a = 2;
    CHECK_THROWS_AS(apply_move(tre, s1), PreconditionError);
    CHECK_THROWS_WITH_AS(apply_move(tre, s1),
                         "stale or invalid move site: om1-delete arrow=2",
                         PreconditionError);

    MoveSite s2;
    s2.kind = MoveKind::Om1Insert;
    s2.circle = 0;
    s2.slot = 3;
    s2.eps = 0;
    CHECK_THROWS_AS(apply_move(tre, s2), PreconditionError);

    MoveSite s3;
    s3.kind = MoveKind::Om1Insert;
    s3.circle = 0;
    s3.slot = 99;
    s3.eps = 1;
    CHECK_THROWS_AS(apply_move(tre, s3), PreconditionError);

    MoveSite s4;
    s4.kind = MoveKind::Om2Insert;
    s4.circle = 0;
    s4.slot = 1;
    s4.circle2 = 0;
    s4.slot2 = 1;
    s4.eps = 1;
    CHECK_THROWS_AS(apply_move(tre, s4), PreconditionError);

    MoveSite s5;
    s5.kind = MoveKind::Virtualize;
    s5.arrow_a = 7;
    CHECK_THROWS_AS(apply_move(tre, s5), PreconditionError);

    MoveSite s6;
    s6.kind = MoveKind::Om3Forward;
    s6.arrows = {0, 1, 2};
    s6.strands = {StrandSite{0, 0, 1}, StrandSite{0, 2, 3}, StrandSite{0, 4, 5}};
    CHECK_THROWS_AS(apply_move(tre, s6), PreconditionError);
}

TEST_CASE("site encoding is stable") {
    MoveSite a;
    a.kind = MoveKind::Om1Insert;
    a.circle = 0;
    a.slot = 3;
    a.eps = 1;
    a.head_first = true;
    CHECK(encode_site(a) == "om1-insert circle=0 slot=3 eps=+1 head_first=1");

    a.kind = MoveKind::Om1fInsert;
    a.circle = 1;
    a.slot = 0;
    a.eps = -1;
    a.head_first = false;
    CHECK(encode_site(a) == "om1f-insert circle=1 slot=0 eps=-1 head_first=0");

    MoveSite b;
    b.kind = MoveKind::Om1Delete;
    b.arrow_a = 2;
    CHECK(encode_site(b) == "om1-delete arrow=2");

    b.kind = MoveKind::Virtualize;
    b.arrow_a = 4;
    CHECK(encode_site(b) == "virtualize arrow=4");

    MoveSite c;
    c.kind = MoveKind::Om1fDelete;
    c.arrow_a = 2;
    c.arrow_b = 3;
    CHECK(encode_site(c) == "om1f-delete arrows=2,3");

    c.kind = MoveKind::Om2Delete;
    CHECK(encode_site(c) == "om2-delete arrows=2,3");

    MoveSite e;
    e.kind = MoveKind::Om2Insert;
    e.circle = 0;
    e.slot = 3;
    e.circle2 = 1;
    e.slot2 = 0;
    e.over_first = true;
    e.parallel = false;
    e.eps = 1;
    CHECK(encode_site(e) == "om2-insert first=0:3 second=1:0 over_first=1 parallel=0 eps=+1");
}
