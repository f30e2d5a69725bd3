#include "gdcalc/trace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace gdcalc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline bool member(StateMask s, int arrow) { return (s >> arrow) & 1u; }

}  // namespace

TraceResult trace(const Diagram& d, StateMask state) {
    const int m = d.circle_count();
    const int k = d.arrow_count();
    if (k > 31) throw PreconditionError("trace: arrow count exceeds state mask width");

    // Member endpoint positions per circle, and each position's rank there.
    std::vector<std::vector<int>> mem(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> rank(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        const Circle& circ = d.circles[static_cast<std::size_t>(c)];
        rank[static_cast<std::size_t>(c)].assign(circ.size(), -1);
        for (int i = 0; i < static_cast<int>(circ.size()); ++i)
            if (member(state, circ[static_cast<std::size_t>(i)].arrow)) {
                rank[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] =
                    static_cast<int>(mem[static_cast<std::size_t>(c)].size());
                mem[static_cast<std::size_t>(c)].push_back(i);
            }
    }
    const EndpointMap pos = endpoint_map(d);

    // Connectivity of the circle/arrow multigraph restricted to the state.
    UnionFind uf(m);
    for (int a = 0; a < k; ++a)
        if (member(state, a))
            uf.unite(at(pos, a, End::Head).circle, at(pos, a, End::Tail).circle);
    bool connected = true;
    if (m > 1) {
        for (int c = 0; c < m && connected; ++c)
            if (mem[static_cast<std::size_t>(c)].empty()) connected = false;
        std::set<int> roots;
        for (int c = 0; c < m; ++c) roots.insert(uf.find(c));
        if (roots.size() != 1) connected = false;
    }

    // Arc table: one arc per member endpoint (the arc starting there), then
    // one closed loop per empty circle. Arc ids are ordered by (circle, rank).
    std::vector<int> offset(static_cast<std::size_t>(m) + 1, 0);
    for (int c = 0; c < m; ++c)
        offset[static_cast<std::size_t>(c) + 1] =
            offset[static_cast<std::size_t>(c)] +
            static_cast<int>(mem[static_cast<std::size_t>(c)].size());
    const int member_arcs = offset[static_cast<std::size_t>(m)];
    std::vector<int> loop_circle;  // arc id member_arcs + i -> circle
    std::vector<int> loop_of_circle(static_cast<std::size_t>(m), -1);
    for (int c = 0; c < m; ++c)
        if (mem[static_cast<std::size_t>(c)].empty()) {
            loop_of_circle[static_cast<std::size_t>(c)] =
                member_arcs + static_cast<int>(loop_circle.size());
            loop_circle.push_back(c);
        }
    const int total_arcs = member_arcs + static_cast<int>(loop_circle.size());

    auto arc_circle = [&](int arc) {
        if (arc >= member_arcs)
            return loop_circle[static_cast<std::size_t>(arc - member_arcs)];
        const auto it = std::upper_bound(offset.begin(), offset.end(), arc);
        return static_cast<int>(it - offset.begin()) - 1;
    };
    // Crossing reached at the end of a member arc, and the arc that follows.
    auto step = [&](int arc, Tok* crossing) {
        const int c = arc_circle(arc);
        const auto& mc = mem[static_cast<std::size_t>(c)];
        const int j = arc - offset[static_cast<std::size_t>(c)];
        const int p = mc[static_cast<std::size_t>((j + 1) % static_cast<int>(mc.size()))];
        const Tok t = d.circles[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
        *crossing = t;
        const EndpointPos o = at(pos, t.arrow, other_end(t.end));
        return offset[static_cast<std::size_t>(o.circle)] +
               rank[static_cast<std::size_t>(o.circle)][static_cast<std::size_t>(o.index)];
    };

    std::vector<char> visited(static_cast<std::size_t>(total_arcs), 0);
    auto orbit = [&](int start) {
        TraceCycle cyc;
        int cur = start;
        while (true) {
            cyc.arcs.push_back(cur);
            visited[static_cast<std::size_t>(cur)] = 1;
            if (cur >= member_arcs) break;  // closed loop on an empty circle
            Tok crossing;
            const int nxt = step(cur, &crossing);
            cyc.crossings.push_back(crossing);
            if (nxt == start) break;
            cur = nxt;
        }
        return cyc;
    };

    TraceResult tr;
    const int base_arc = !mem[0].empty()
                             ? offset[0] + static_cast<int>(mem[0].size()) - 1
                             : loop_of_circle[0];
    tr.cycles.push_back(orbit(base_arc));

    // Count first-cycle passages per arrow to find separating arrows.
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (const Tok& t : tr.cycles[0].crossings)
        ++counts[static_cast<std::size_t>(t.arrow)];
    for (int a = 0; a < k; ++a)
        if (counts[static_cast<std::size_t>(a)] == 1) tr.separating |= (1u << a);

    // Second cycle starts at the arc beginning at the arrival endpoint of the
    // first separating arrow met in the first cycle.
    for (const Tok& t : tr.cycles[0].crossings) {
        if (counts[static_cast<std::size_t>(t.arrow)] != 1) continue;
        const EndpointPos p = at(pos, t.arrow, t.end);
        const int second = offset[static_cast<std::size_t>(p.circle)] +
                           rank[static_cast<std::size_t>(p.circle)][static_cast<std::size_t>(p.index)];
        if (!visited[static_cast<std::size_t>(second)])
            tr.cycles.push_back(orbit(second));
        break;
    }
    for (int arc = 0; arc < total_arcs; ++arc)
        if (!visited[static_cast<std::size_t>(arc)]) tr.cycles.push_back(orbit(arc));

    tr.b = static_cast<int>(tr.cycles.size());
    tr.connected = connected;
    const int n = std::popcount(state);
    tr.euler = m - n;
    tr.genus = connected ? (2 - tr.b - tr.euler) / 2 : 0;

    tr.first_approach.assign(static_cast<std::size_t>(k), -1);
    for (const TraceCycle& cyc : tr.cycles)
        for (const Tok& t : cyc.crossings)
            if (tr.first_approach[static_cast<std::size_t>(t.arrow)] == -1)
                tr.first_approach[static_cast<std::size_t>(t.arrow)] =
                    static_cast<std::int8_t>(t.end);

    if (tr.b == 2 && connected) {
        // Label every circle position by the cycle owning its covering arc.
        std::vector<std::int8_t> arc_label(static_cast<std::size_t>(total_arcs), 0);
        for (int li = 0; li < 2; ++li)
            for (int arc : tr.cycles[static_cast<std::size_t>(li)].arcs)
                arc_label[static_cast<std::size_t>(arc)] =
                    static_cast<std::int8_t>(li + 1);
        tr.has_labels = true;
        tr.labels.resize(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) {
            const auto& mc = mem[static_cast<std::size_t>(c)];
            const int len = static_cast<int>(d.circles[static_cast<std::size_t>(c)].size());
            auto& lab = tr.labels[static_cast<std::size_t>(c)];
            lab.assign(static_cast<std::size_t>(len), 0);
            for (int i = 0; i < len; ++i) {
                int j = -1;
                for (int jj = 0; jj < static_cast<int>(mc.size()); ++jj)
                    if (mc[static_cast<std::size_t>(jj)] <= i) j = jj;
                if (j < 0) j = static_cast<int>(mc.size()) - 1;  // wrap
                lab[static_cast<std::size_t>(i)] =
                    arc_label[static_cast<std::size_t>(offset[static_cast<std::size_t>(c)] + j)];
            }
        }
    }
    return tr;
}

bool classify_asc(const TraceResult& tr, StateMask state) {
    for (StateMask s = state; s; s &= s - 1) {
        const int a = std::countr_zero(s);
        if (tr.first_approach[static_cast<std::size_t>(a)] !=
            static_cast<std::int8_t>(End::Head))
            return false;
    }
    return true;
}

bool classify_desc(const TraceResult& tr, StateMask state) {
    for (StateMask s = state; s; s &= s - 1) {
        const int a = std::countr_zero(s);
        if (tr.first_approach[static_cast<std::size_t>(a)] !=
            static_cast<std::int8_t>(End::Tail))
            return false;
    }
    return true;
}

int sigma(const Diagram& d, StateMask state) {
    int s = 1;
    for (StateMask bits = state; bits; bits &= bits - 1)
        s *= d.signs[static_cast<std::size_t>(std::countr_zero(bits))];
    return s;
}

SmoothAllResult smooth_all(const Diagram& d, StateMask state,
                           const std::vector<std::vector<std::int8_t>>* labels) {
    const TraceResult tr = trace(d, state);
    const int m = d.circle_count();
    std::vector<std::vector<int>> mem(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        const Circle& circ = d.circles[static_cast<std::size_t>(c)];
        for (int i = 0; i < static_cast<int>(circ.size()); ++i)
            if ((state >> circ[static_cast<std::size_t>(i)].arrow) & 1u)
                mem[static_cast<std::size_t>(c)].push_back(i);
    }
    std::vector<int> offset(static_cast<std::size_t>(m) + 1, 0);
    for (int c = 0; c < m; ++c)
        offset[static_cast<std::size_t>(c) + 1] =
            offset[static_cast<std::size_t>(c)] +
            static_cast<int>(mem[static_cast<std::size_t>(c)].size());
    const int member_arcs = offset[static_cast<std::size_t>(m)];
    std::vector<int> loop_circle;
    for (int c = 0; c < m; ++c)
        if (mem[static_cast<std::size_t>(c)].empty()) loop_circle.push_back(c);
    auto arc_circle = [&](int arc) {
        if (arc >= member_arcs)
            return loop_circle[static_cast<std::size_t>(arc - member_arcs)];
        const auto it = std::upper_bound(offset.begin(), offset.end(), arc);
        return static_cast<int>(it - offset.begin()) - 1;
    };

    std::vector<Circle> circles_out;
    std::vector<int> labs;
    for (const TraceCycle& cyc : tr.cycles) {
        Circle seq;
        int lab = 0;
        for (int arc : cyc.arcs) {
            const int c = arc_circle(arc);
            const Circle& circ = d.circles[static_cast<std::size_t>(c)];
            if (arc >= member_arcs) {
                seq.insert(seq.end(), circ.begin(), circ.end());
                if (labels && !(*labels)[static_cast<std::size_t>(c)].empty())
                    lab = (*labels)[static_cast<std::size_t>(c)][0];
                continue;
            }
            const auto& mc = mem[static_cast<std::size_t>(c)];
            const int j = arc - offset[static_cast<std::size_t>(c)];
            const int start = mc[static_cast<std::size_t>(j)];
            const int end = mc[static_cast<std::size_t>((j + 1) % static_cast<int>(mc.size()))];
            const int len = static_cast<int>(circ.size());
            for (int i = (start + 1) % len; i != end; i = (i + 1) % len)
                seq.push_back(circ[static_cast<std::size_t>(i)]);
            if (labels)
                lab = (*labels)[static_cast<std::size_t>(c)][static_cast<std::size_t>(start)];
        }
        circles_out.push_back(std::move(seq));
        labs.push_back(lab);
    }

    std::set<int> used;
    for (const Circle& c : circles_out)
        for (const Tok& t : c) used.insert(t.arrow);
    std::map<int, int> remap;
    std::vector<int> signs;
    for (int a : used) {
        remap[a] = static_cast<int>(signs.size());
        signs.push_back(d.signs[static_cast<std::size_t>(a)]);
    }
    for (Circle& c : circles_out)
        for (Tok& t : c) t.arrow = remap[t.arrow];
    SmoothAllResult out{make_diagram(std::move(circles_out), std::move(signs),
                                     d.classical, d.name),
                        std::move(labs)};
    if (!labels) out.labels.assign(out.labels.size(), 0);
    return out;
}

std::vector<int> bridge_arrows(const Diagram& d, StateMask state) {
    const EndpointMap pos = endpoint_map(d);
    const int m = d.circle_count();
    const int k = d.arrow_count();
    std::vector<int> out;
    for (int a = 0; a < k; ++a) {
        if (!((state >> a) & 1u)) continue;
        const int c1 = at(pos, a, End::Head).circle;
        const int c2 = at(pos, a, End::Tail).circle;
        if (c1 == c2) continue;
        UnionFind uf(m);
        for (int b2 = 0; b2 < k; ++b2) {
            if (b2 == a || !((state >> b2) & 1u)) continue;
            uf.unite(at(pos, b2, End::Head).circle, at(pos, b2, End::Tail).circle);
        }
        if (uf.find(c1) != uf.find(c2)) out.push_back(a);
    }
    return out;
}

bool is_planar(const Diagram& d) {
    const int k = d.arrow_count();
    if (k == 0) return true;
    const EndpointMap pos = endpoint_map(d);
    const int m = d.circle_count();

    // Arcs between consecutive endpoints of each non-empty circle. Each arc
    // has a start slot and an end slot at the crossings it joins.
    std::vector<std::pair<EndpointPos, EndpointPos>> arcs;
    std::map<std::pair<int, int>, int> arc_start, arc_end;
    for (int c = 0; c < m; ++c) {
        const int len = static_cast<int>(d.circles[static_cast<std::size_t>(c)].size());
        for (int i = 0; i < len; ++i) {
            const int j = (i + 1) % len;
            const int id = static_cast<int>(arcs.size());
            arcs.push_back({{c, i}, {c, j}});
            arc_start[{c, i}] = id;
            arc_end[{c, j}] = id;
        }
    }
    auto vertex_of = [&](const EndpointPos& ep) {
        return d.circles[static_cast<std::size_t>(ep.circle)][static_cast<std::size_t>(ep.index)]
            .arrow;
    };

    // Counterclockwise rotation per crossing; slot = (arc id, is_start).
    // Positive sign: over-out, under-out, over-in, under-in; a negative sign
    // swaps the two under slots.
    struct Slot {
        int arc;
        bool start;
        bool operator==(const Slot& o) const { return arc == o.arc && start == o.start; }
    };
    std::vector<std::array<Slot, 4>> rot(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        const EndpointPos tl = at(pos, a, End::Tail);
        const EndpointPos hd = at(pos, a, End::Head);
        const Slot o_out{arc_start[{tl.circle, tl.index}], true};
        const Slot o_in{arc_end[{tl.circle, tl.index}], false};
        const Slot u_out{arc_start[{hd.circle, hd.index}], true};
        const Slot u_in{arc_end[{hd.circle, hd.index}], false};
        if (d.signs[static_cast<std::size_t>(a)] > 0)
            rot[static_cast<std::size_t>(a)] = {o_out, u_out, o_in, u_in};
        else
            rot[static_cast<std::size_t>(a)] = {o_out, u_in, o_in, u_out};
    }

    // Face tracing: a directed arc-side arrives at a crossing slot; the next
    // side leaves from the rotation successor of that slot.
    auto next_edge = [&](std::pair<int, int> e) {
        const auto& [arc, dir] = e;
        const EndpointPos ep = dir == 1 ? arcs[static_cast<std::size_t>(arc)].second
                                        : arcs[static_cast<std::size_t>(arc)].first;
        const int v = vertex_of(ep);
        const Slot slot{arc, dir != 1};
        const auto& r = rot[static_cast<std::size_t>(v)];
        int idx = 0;
        while (!(r[static_cast<std::size_t>(idx)] == slot)) ++idx;
        const Slot nxt = r[static_cast<std::size_t>((idx + 1) % 4)];
        return std::pair<int, int>{nxt.arc, nxt.start ? 1 : -1};
    };

    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        for (int s : {1, -1}) {
            const std::pair<int, int> e0{i, s};
            if (seen.count(e0)) continue;
            ++faces;
            std::pair<int, int> e = e0;
            while (true) {
                seen.insert(e);
                e = next_edge(e);
                if (e == e0) break;
            }
        }
    }

    UnionFind uf(k);
    for (const auto& [s, t] : arcs) uf.unite(vertex_of(s), vertex_of(t));
    std::set<int> comps;
    for (int v = 0; v < k; ++v) comps.insert(uf.find(v));
    return k - static_cast<int>(arcs.size()) + faces ==
           2 * static_cast<int>(comps.size());
}

}  // namespace gdcalc
