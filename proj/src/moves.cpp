#include "gdcalc/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace gdcalc {

namespace {

const char* kind_text(MoveKind k) {
    switch (k) {
        case MoveKind::Om1Insert: return "om1-insert";
        case MoveKind::Om1Delete: return "om1-delete";
        case MoveKind::Om1fInsert: return "om1f-insert";
        case MoveKind::Om1fDelete: return "om1f-delete";
        case MoveKind::Om2Insert: return "om2-insert";
        case MoveKind::Om2Delete: return "om2-delete";
        case MoveKind::Om3Forward: return "om3-forward";
        case MoveKind::Om3Backward: return "om3-backward";
        case MoveKind::Virtualize: return "virtualize";
    }
    return "?";
}

const char* sign_text(int eps) { return eps > 0 ? "+1" : "-1"; }

}  // namespace

std::string encode_site(const MoveSite& s) {
    std::ostringstream out;
    out << kind_text(s.kind);
    switch (s.kind) {
        case MoveKind::Om1Insert:
        case MoveKind::Om1fInsert:
            out << " circle=" << s.circle << " slot=" << s.slot
                << " eps=" << sign_text(s.eps) << " head_first=" << (s.head_first ? 1 : 0);
            break;
        case MoveKind::Om1Delete:
        case MoveKind::Virtualize:
            out << " arrow=" << s.arrow_a;
            break;
        case MoveKind::Om1fDelete:
        case MoveKind::Om2Delete:
            out << " arrows=" << s.arrow_a << "," << s.arrow_b;
            break;
        case MoveKind::Om2Insert:
            out << " first=" << s.circle << ":" << s.slot
                << " second=" << s.circle2 << ":" << s.slot2
                << " over_first=" << (s.over_first ? 1 : 0)
                << " parallel=" << (s.parallel ? 1 : 0)
                << " eps=" << sign_text(s.eps);
            break;
        case MoveKind::Om3Forward:
        case MoveKind::Om3Backward:
            out << " arrows=" << s.arrows[0] << "," << s.arrows[1] << "," << s.arrows[2]
                << " strands=";
            for (int t = 0; t < 3; ++t) {
                if (t) out << ",";
                out << s.strands[static_cast<std::size_t>(t)].circle << ":"
                    << s.strands[static_cast<std::size_t>(t)].i << ":"
                    << s.strands[static_cast<std::size_t>(t)].j;
            }
            break;
    }
    return out.str();
}

std::vector<int> slot_list(const Diagram& d, int c) {
    const int L = static_cast<int>(d.circles[static_cast<std::size_t>(c)].size());
    std::vector<int> out;
    const int hi = c == 0 ? L + 1 : std::max(L, 1);
    out.reserve(static_cast<std::size_t>(hi));
    for (int s = 0; s < hi; ++s) out.push_back(s);
    return out;
}

std::vector<std::pair<int, int>> adjacent_pairs(const Diagram& d, int c) {
    const int L = static_cast<int>(d.circles[static_cast<std::size_t>(c)].size());
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i + 1 < L; ++i) out.emplace_back(i, i + 1);
    if (c != 0 && L >= 2) out.emplace_back(L - 1, 0);
    return out;
}

Diagram om1_insert(const Diagram& d, int c, int slot, int eps, bool head_first) {
    const int k = d.arrow_count();
    const Tok t1{k, head_first ? End::Head : End::Tail};
    const Tok t2{k, head_first ? End::Tail : End::Head};
    std::vector<Circle> circles = d.circles;
    Circle& circ = circles[static_cast<std::size_t>(c)];
    circ.insert(circ.begin() + slot, {t1, t2});
    std::vector<int> signs = d.signs;
    signs.push_back(eps);
    return make_diagram(std::move(circles), std::move(signs), d.classical, d.name);
}

std::vector<int> om1_delete_sites(const Diagram& d) {
    std::vector<int> out;
    const EndpointMap pos = endpoint_map(d);
    for (int a = 0; a < d.arrow_count(); ++a) {
        const EndpointPos t = at(pos, a, End::Tail);
        const EndpointPos h = at(pos, a, End::Head);
        if (t.circle != h.circle) continue;
        const int L = static_cast<int>(d.circles[static_cast<std::size_t>(t.circle)].size());
        const int i = std::min(t.index, h.index);
        const int j = std::max(t.index, h.index);
        if (j == i + 1 || (i == 0 && j == L - 1 && t.circle != 0)) out.push_back(a);
    }
    return out;
}

Diagram om1_delete(const Diagram& d, int a) {
    const EndpointMap pos = endpoint_map(d);
    const int c = at(pos, a, End::Tail).circle;
    std::vector<Circle> circles = d.circles;
    Circle& circ = circles[static_cast<std::size_t>(c)];
    circ.erase(std::remove_if(circ.begin(), circ.end(),
                              [a](const Tok& t) { return t.arrow == a; }),
               circ.end());
    return renumber_arrows(std::move(circles), d.signs, d.classical, d.name);
}

Diagram om1f_insert(const Diagram& d, int c, int slot, int eps, bool head_first) {
    const int k = d.arrow_count();
    Circle frag;
    if (head_first)
        frag = {{k, End::Head}, {k, End::Tail}, {k + 1, End::Head}, {k + 1, End::Tail}};
    else
        frag = {{k, End::Tail}, {k, End::Head}, {k + 1, End::Tail}, {k + 1, End::Head}};
    std::vector<Circle> circles = d.circles;
    Circle& circ = circles[static_cast<std::size_t>(c)];
    circ.insert(circ.begin() + slot, frag.begin(), frag.end());
    std::vector<int> signs = d.signs;
    signs.push_back(eps);
    signs.push_back(-eps);
    return make_diagram(std::move(circles), std::move(signs), d.classical, d.name);
}

std::vector<Om1fSite> om1f_delete_sites(const Diagram& d) {
    std::vector<Om1fSite> out;
    for (int c = 0; c < d.circle_count(); ++c) {
        const Circle& circ = d.circles[static_cast<std::size_t>(c)];
        const int L = static_cast<int>(circ.size());
        if (L < 4) continue;
        const int hi = c == 0 ? L - 3 : L;
        for (int i = 0; i < hi; ++i) {
            const Tok q0 = circ[static_cast<std::size_t>(i % L)];
            const Tok q1 = circ[static_cast<std::size_t>((i + 1) % L)];
            const Tok q2 = circ[static_cast<std::size_t>((i + 2) % L)];
            const Tok q3 = circ[static_cast<std::size_t>((i + 3) % L)];
            if (q0.arrow != q1.arrow || q2.arrow != q3.arrow || q0.arrow == q2.arrow)
                continue;
            if (d.signs[static_cast<std::size_t>(q0.arrow)] !=
                -d.signs[static_cast<std::size_t>(q2.arrow)])
                continue;
            const bool tail_shape = q0.end == End::Tail && q1.end == End::Head &&
                                    q2.end == End::Tail && q3.end == End::Head;
            const bool head_shape = q0.end == End::Head && q1.end == End::Tail &&
                                    q2.end == End::Head && q3.end == End::Tail;
            if (tail_shape || head_shape) out.push_back({c, i, q0.arrow, q2.arrow});
        }
    }
    return out;
}

Diagram om1f_delete(const Diagram& d, int a, int b) {
    std::vector<Circle> circles = d.circles;
    for (Circle& circ : circles)
        circ.erase(std::remove_if(circ.begin(), circ.end(),
                                  [&](const Tok& t) { return t.arrow == a || t.arrow == b; }),
                   circ.end());
    return renumber_arrows(std::move(circles), d.signs, d.classical, d.name);
}

Diagram om2_insert(const Diagram& d, int c1, int s1, int c2, int s2,
                   bool over_first, bool parallel, int eps) {
    const int k = d.arrow_count();
    const int a = k, b = k + 1;  // signs eps, -eps
    Circle x, y;
    if (over_first) {
        x = {{a, End::Tail}, {b, End::Tail}};
        y = parallel ? Circle{{a, End::Head}, {b, End::Head}}
                     : Circle{{b, End::Head}, {a, End::Head}};
    } else {
        x = {{a, End::Head}, {b, End::Head}};
        y = parallel ? Circle{{a, End::Tail}, {b, End::Tail}}
                     : Circle{{b, End::Tail}, {a, End::Tail}};
    }
    std::vector<Circle> circles = d.circles;
    if (c1 == c2) {
        auto insert_frag = [&](int slot, const Circle& frag) {
            Circle& circ = circles[static_cast<std::size_t>(c1)];
            circ.insert(circ.begin() + slot, frag.begin(), frag.end());
        };
        // Larger slot first so the smaller one keeps its meaning.
        if (s1 < s2) {
            insert_frag(s2, y);
            insert_frag(s1, x);
        } else {
            insert_frag(s1, x);
            insert_frag(s2, y);
        }
    } else {
        Circle& p = circles[static_cast<std::size_t>(c1)];
        p.insert(p.begin() + s1, x.begin(), x.end());
        Circle& q = circles[static_cast<std::size_t>(c2)];
        q.insert(q.begin() + s2, y.begin(), y.end());
    }
    std::vector<int> signs = d.signs;
    signs.push_back(eps);
    signs.push_back(-eps);
    return make_diagram(std::move(circles), std::move(signs), d.classical, d.name);
}

std::vector<std::pair<int, int>> om2_delete_sites(const Diagram& d) {
    std::vector<std::pair<int, int>> out;
    const EndpointMap pos = endpoint_map(d);
    const int k = d.arrow_count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b ||
                d.signs[static_cast<std::size_t>(a)] != -d.signs[static_cast<std::size_t>(b)])
                continue;
            const EndpointPos ta = at(pos, a, End::Tail);
            const EndpointPos tb = at(pos, b, End::Tail);
            const EndpointPos ha = at(pos, a, End::Head);
            const EndpointPos hb = at(pos, b, End::Head);
            if (ta.circle != tb.circle) continue;
            const auto tails = adjacent_pairs(d, ta.circle);
            if (std::find(tails.begin(), tails.end(),
                          std::make_pair(ta.index, tb.index)) == tails.end())
                continue;
            if (ha.circle != hb.circle) continue;
            const auto heads = adjacent_pairs(d, ha.circle);
            const bool ok =
                std::find(heads.begin(), heads.end(),
                          std::make_pair(hb.index, ha.index)) != heads.end() ||
                std::find(heads.begin(), heads.end(),
                          std::make_pair(ha.index, hb.index)) != heads.end();
            if (ok) out.emplace_back(a, b);
        }
    return out;
}

Diagram om2_delete(const Diagram& d, int a, int b) {
    std::vector<Circle> circles = d.circles;
    for (Circle& circ : circles)
        circ.erase(std::remove_if(circ.begin(), circ.end(),
                                  [&](const Tok& t) { return t.arrow == a || t.arrow == b; }),
                   circ.end());
    return renumber_arrows(std::move(circles), d.signs, d.classical, d.name);
}

namespace {

using StrandKey = std::tuple<int, int, int>;

std::array<StrandKey, 3> strand_set_key(const std::array<StrandSite, 3>& strands) {
    std::array<StrandKey, 3> key{
        StrandKey{strands[0].circle, strands[0].i, strands[0].j},
        StrandKey{strands[1].circle, strands[1].i, strands[1].j},
        StrandKey{strands[2].circle, strands[2].i, strands[2].j},
    };
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::vector<MoveSite> om3_sites(const Diagram& d) {
    const int k = d.arrow_count();
    // Strand segments: adjacent endpoint pairs carrying two distinct arrows.
    std::map<std::pair<int, int>, std::vector<StrandSite>> adj;
    for (int c = 0; c < d.circle_count(); ++c)
        for (const auto& [i, j] : adjacent_pairs(d, c)) {
            const int a1 = d.circles[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)].arrow;
            const int a2 = d.circles[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)].arrow;
            if (a1 == a2) continue;
            adj[{std::min(a1, a2), std::max(a1, a2)}].push_back({c, i, j});
        }
    auto strands_between = [&](int x, int y) -> const std::vector<StrandSite>* {
        const auto it = adj.find({std::min(x, y), std::max(x, y)});
        return it == adj.end() ? nullptr : &it->second;
    };
    // End of arrow x, then of arrow y, on this strand, plus whether x comes
    // first along the orientation; nullopt when the strand holds other arrows.
    auto endinfo = [&](const StrandSite& s, int x,
                       int y) -> std::optional<std::tuple<End, End, int>> {
        const Circle& circ = d.circles[static_cast<std::size_t>(s.circle)];
        const Tok t1 = circ[static_cast<std::size_t>(s.i)];
        const Tok t2 = circ[static_cast<std::size_t>(s.j)];
        if (t1.arrow == x && t2.arrow == y) return std::tuple{t1.end, t2.end, 1};
        if (t1.arrow == y && t2.arrow == x) return std::tuple{t2.end, t1.end, 0};
        return std::nullopt;
    };

    std::map<std::array<StrandKey, 3>, MoveSite> reps;
    std::vector<std::array<StrandKey, 3>> order;
    for (int al = 0; al < k; ++al)
        for (int be = 0; be < k; ++be)
            for (int ga = 0; ga < k; ++ga) {
                if (al == be || al == ga || be == ga) continue;
                const auto* P = strands_between(al, be);
                const auto* Q = strands_between(al, ga);
                const auto* R = strands_between(be, ga);
                if (!P || !Q || !R) continue;
                for (const StrandSite& sp : *P)
                    for (const StrandSite& sq : *Q)
                        for (const StrandSite& sr : *R) {
                            std::set<std::pair<int, int>> eps6{
                                {sp.circle, sp.i}, {sp.circle, sp.j},
                                {sq.circle, sq.i}, {sq.circle, sq.j},
                                {sr.circle, sr.i}, {sr.circle, sr.j}};
                            if (eps6.size() != 6) continue;
                            const auto pa = endinfo(sp, al, be);
                            const auto qa = endinfo(sq, al, ga);
                            const auto ra = endinfo(sr, be, ga);
                            if (!pa || !qa || !ra) continue;
                            const auto [p0, p1, rP] = *pa;
                            const auto [q0, q1, rQ] = *qa;
                            const auto [r0, r1, rR] = *ra;
                            if (p0 == q0) continue;  // al needs one head, one tail
                            if (p1 == r0) continue;
                            if (q1 == r1) continue;
                            const int o_al = p0 == End::Tail ? 1 : -1;  // P over Q
                            const int o_be = p1 == End::Tail ? 1 : -1;  // P over R
                            const int o_ga = q1 == End::Tail ? 1 : -1;  // Q over R
                            const int t_al = d.signs[static_cast<std::size_t>(al)] * o_al;
                            const int t_be = d.signs[static_cast<std::size_t>(be)] * o_be;
                            const int t_ga = d.signs[static_cast<std::size_t>(ga)] * o_ga;
                            const bool cyclic =
                                !((o_al == 1 && o_be == -1 && o_ga == 1) ||
                                  (o_al == -1 && o_be == 1 && o_ga == -1));
                            const bool valid = cyclic &&
                                               t_al * t_be == (rQ == rR ? 1 : -1) &&
                                               t_al * t_ga == (rP == rR ? 1 : -1);
                            if (!valid) continue;
                            MoveSite site;
                            site.kind = MoveKind::Om3Forward;
                            site.arrows = {al, be, ga};
                            site.strands = {sp, sq, sr};
                            const auto key = strand_set_key(site.strands);
                            if (reps.emplace(key, site).second) order.push_back(key);
                        }
            }
    std::vector<MoveSite> out;
    out.reserve(order.size());
    for (const auto& key : order) out.push_back(reps.at(key));
    return out;
}

Diagram om3_apply(const Diagram& d, const MoveSite& site) {
    std::vector<Circle> circles = d.circles;
    for (const StrandSite& s : site.strands) {
        Circle& circ = circles[static_cast<std::size_t>(s.circle)];
        std::swap(circ[static_cast<std::size_t>(s.i)], circ[static_cast<std::size_t>(s.j)]);
    }
    return make_diagram(std::move(circles), d.signs, d.classical, d.name);
}

Diagram virtualize(const Diagram& d, int arrow) {
    Diagram out = reverse_arrow(d, arrow);
    out.classical = false;
    return out;
}

std::vector<MoveSite> list_insert_sites(const Diagram& d, bool with_om2) {
    std::vector<MoveSite> sites;
    const int m = d.circle_count();
    for (int c = 0; c < m; ++c)
        for (int s : slot_list(d, c))
            for (int eps : {1, -1})
                for (bool hf : {false, true}) {
                    MoveSite s1;
                    s1.kind = MoveKind::Om1Insert;
                    s1.circle = c;
                    s1.slot = s;
                    s1.eps = eps;
                    s1.head_first = hf;
                    sites.push_back(s1);
                    s1.kind = MoveKind::Om1fInsert;
                    sites.push_back(s1);
                }
    if (with_om2) {
        std::vector<std::pair<int, int>> allslots;
        for (int c = 0; c < m; ++c)
            for (int s : slot_list(d, c)) allslots.emplace_back(c, s);
        for (const auto& [c1, s1] : allslots)
            for (const auto& [c2, s2] : allslots) {
                if (c1 == c2 && s1 == s2) continue;
                for (bool of : {true, false})
                    for (bool par : {true, false})
                        for (int eps : {1, -1}) {
                            MoveSite site;
                            site.kind = MoveKind::Om2Insert;
                            site.circle = c1;
                            site.slot = s1;
                            site.circle2 = c2;
                            site.slot2 = s2;
                            site.over_first = of;
                            site.parallel = par;
                            site.eps = eps;
                            sites.push_back(site);
                        }
            }
    }
    return sites;
}

std::vector<MoveSite> list_delete_sites(const Diagram& d) {
    std::vector<MoveSite> sites;
    for (int a : om1_delete_sites(d)) {
        MoveSite s;
        s.kind = MoveKind::Om1Delete;
        s.arrow_a = a;
        sites.push_back(s);
    }
    for (const Om1fSite& x : om1f_delete_sites(d)) {
        MoveSite s;
        s.kind = MoveKind::Om1fDelete;
        s.arrow_a = x.arrow_a;
        s.arrow_b = x.arrow_b;
        sites.push_back(s);
    }
    for (const auto& [a, b] : om2_delete_sites(d)) {
        MoveSite s;
        s.kind = MoveKind::Om2Delete;
        s.arrow_a = a;
        s.arrow_b = b;
        sites.push_back(s);
    }
    return sites;
}

std::vector<MoveSite> list_moves(const Diagram& d) {
    std::vector<MoveSite> sites = list_insert_sites(d);
    for (MoveSite& s : list_delete_sites(d)) sites.push_back(s);
    for (MoveSite& s : om3_sites(d)) sites.push_back(s);
    for (int a = 0; a < d.arrow_count(); ++a) {
        MoveSite s;
        s.kind = MoveKind::Virtualize;
        s.arrow_a = a;
        sites.push_back(s);
    }
    return sites;
}

namespace {

[[noreturn]] void stale(const MoveSite& site) {
    throw PreconditionError("stale or invalid move site: " + encode_site(site));
}

void require_slot(const Diagram& d, const MoveSite& site, int c, int s) {
    if (c < 0 || c >= d.circle_count()) stale(site);
    const auto valid = slot_list(d, c);
    if (std::find(valid.begin(), valid.end(), s) == valid.end()) stale(site);
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
    switch (site.kind) {
        case MoveKind::Om1Insert:
            require_slot(d, site, site.circle, site.slot);
            if (site.eps != 1 && site.eps != -1) stale(site);
            return om1_insert(d, site.circle, site.slot, site.eps, site.head_first);
        case MoveKind::Om1fInsert:
            require_slot(d, site, site.circle, site.slot);
            if (site.eps != 1 && site.eps != -1) stale(site);
            return om1f_insert(d, site.circle, site.slot, site.eps, site.head_first);
        case MoveKind::Om2Insert:
            require_slot(d, site, site.circle, site.slot);
            require_slot(d, site, site.circle2, site.slot2);
            if (site.circle == site.circle2 && site.slot == site.slot2) stale(site);
            if (site.eps != 1 && site.eps != -1) stale(site);
            return om2_insert(d, site.circle, site.slot, site.circle2, site.slot2,
                              site.over_first, site.parallel, site.eps);
        case MoveKind::Om1Delete: {
            const auto sites = om1_delete_sites(d);
            if (std::find(sites.begin(), sites.end(), site.arrow_a) == sites.end())
                stale(site);
            return om1_delete(d, site.arrow_a);
        }
        case MoveKind::Om1fDelete: {
            bool found = false;
            for (const Om1fSite& x : om1f_delete_sites(d))
                if (x.arrow_a == site.arrow_a && x.arrow_b == site.arrow_b) found = true;
            if (!found) stale(site);
            return om1f_delete(d, site.arrow_a, site.arrow_b);
        }
        case MoveKind::Om2Delete: {
            const auto sites = om2_delete_sites(d);
            if (std::find(sites.begin(), sites.end(),
                          std::make_pair(site.arrow_a, site.arrow_b)) == sites.end())
                stale(site);
            return om2_delete(d, site.arrow_a, site.arrow_b);
        }
        case MoveKind::Om3Forward:
        case MoveKind::Om3Backward: {
            const auto key = strand_set_key(site.strands);
            bool found = false;
            for (const MoveSite& s : om3_sites(d))
                if (strand_set_key(s.strands) == key) found = true;
            if (!found) stale(site);
            return om3_apply(d, site);
        }
        case MoveKind::Virtualize:
            if (site.arrow_a < 0 || site.arrow_a >= d.arrow_count()) stale(site);
            return virtualize(d, site.arrow_a);
    }
    throw PreconditionError("unknown move kind");
}

}  // namespace gdcalc
