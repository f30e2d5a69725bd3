#pragma once

#include <array>
#include <string>
#include <vector>

#include "gdcalc/diagram.hpp"

namespace gdcalc {

// The move generating set: kink insertion/deletion (om1), framed kink-pair
// insertion/deletion (om1f), cancelling double-point insertion/deletion
// (om2), triangle slide (om3, an involution: forward and backward apply the
// same token swap), and virtualization (reverse one arrow, keep its sign,
// clear the classical flag).
enum class MoveKind {
    Om1Insert,
    Om1Delete,
    Om1fInsert,
    Om1fDelete,
    Om2Insert,
    Om2Delete,
    Om3Forward,
    Om3Backward,
    Virtualize,
};

// One strand of a triangle site: the adjacent endpoint positions i, j on a
// circle whose tokens get swapped.
struct StrandSite {
    int circle = -1;
    int i = -1;
    int j = -1;
    friend bool operator==(const StrandSite&, const StrandSite&) = default;
};

// A move location. Slots address gaps: on the based circle slots 0..L sit
// inside the walk (both sides of the base point stay untouched); on other
// circles slot i is the gap before position i, wrapping, so an empty circle
// has the single slot 0.
struct MoveSite {
    MoveKind kind{};
    int circle = -1, slot = -1;    // inserts: first insertion gap
    int circle2 = -1, slot2 = -1;  // om2 insert: second strand gap
    int eps = 0;                   // sign of the (first) inserted arrow
    bool head_first = false;       // kink shape for om1/om1f inserts
    bool over_first = false;       // om2 insert: tails strand inserted first
    bool parallel = false;         // om2 insert: strand orientation variant
    int arrow_a = -1, arrow_b = -1;         // deletes and virtualize
    std::array<int, 3> arrows{-1, -1, -1};  // om3 arrows (al, be, ga)
    std::array<StrandSite, 3> strands{};    // om3 strands (P, Q, R)
    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Stable one-line ASCII encoding, e.g.
//   "om2-insert first=0:3 second=1:0 over_first=1 parallel=0 eps=-1".
std::string encode_site(const MoveSite& s);

// Valid insertion gaps on a circle (see MoveSite).
std::vector<int> slot_list(const Diagram& d, int c);

// Ordered adjacent endpoint index pairs on circle c; the wrap pair (L-1, 0)
// is included only off the based circle (it would straddle the base point).
std::vector<std::pair<int, int>> adjacent_pairs(const Diagram& d, int c);

Diagram om1_insert(const Diagram& d, int c, int slot, int eps, bool head_first);
// Arrows whose two endpoints are adjacent with no endpoint between them.
std::vector<int> om1_delete_sites(const Diagram& d);
Diagram om1_delete(const Diagram& d, int a);

Diagram om1f_insert(const Diagram& d, int c, int slot, int eps, bool head_first);
// Adjacent same-shape, opposite-sign kink pairs as (circle, start, a, b).
struct Om1fSite {
    int circle = 0, start = 0;
    int arrow_a = 0, arrow_b = 0;
};
std::vector<Om1fSite> om1f_delete_sites(const Diagram& d);
Diagram om1f_delete(const Diagram& d, int a, int b);

Diagram om2_insert(const Diagram& d, int c1, int s1, int c2, int s2,
                   bool over_first, bool parallel, int eps);
// Opposite-sign arrow pairs whose tails are adjacent in order (a, b) and
// whose heads are adjacent in either order.
std::vector<std::pair<int, int>> om2_delete_sites(const Diagram& d);
Diagram om2_delete(const Diagram& d, int a, int b);

// Triangle sites: one representative per geometric triangle (deduplicated by
// the strand set), each already validated against the realizable pattern.
std::vector<MoveSite> om3_sites(const Diagram& d);
Diagram om3_apply(const Diagram& d, const MoveSite& site);

Diagram virtualize(const Diagram& d, int arrow);

// Every insertion site (om1, om1f, om2 across all slot pairs and variants).
std::vector<MoveSite> list_insert_sites(const Diagram& d, bool with_om2 = true);
// Every deletion site currently present (om1, om1f, om2).
std::vector<MoveSite> list_delete_sites(const Diagram& d);
// All of the above plus om3 sites and one virtualize site per arrow.
std::vector<MoveSite> list_moves(const Diagram& d);

// Applies any site after re-validating it against the current diagram;
// throws PreconditionError on a stale or malformed site.
Diagram apply_move(const Diagram& d, const MoveSite& site);

}  // namespace gdcalc
