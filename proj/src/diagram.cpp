#include "gdcalc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gdcalc {

EndpointMap endpoint_map(const Diagram& d) {
    EndpointMap pos(d.signs.size());
    for (int c = 0; c < d.circle_count(); ++c) {
        const Circle& circ = d.circles[static_cast<std::size_t>(c)];
        for (int i = 0; i < static_cast<int>(circ.size()); ++i) {
            const Tok& t = circ[static_cast<std::size_t>(i)];
            pos[static_cast<std::size_t>(t.arrow)][static_cast<int>(t.end)] = {c, i};
        }
    }
    return pos;
}

void validate(const Diagram& d) {
    const int k = d.arrow_count();
    std::vector<std::array<int, 2>> seen(static_cast<std::size_t>(k), {0, 0});
    for (const Circle& circ : d.circles) {
        for (const Tok& t : circ) {
            if (t.arrow < 0 || t.arrow >= k)
                throw PreconditionError("malformed diagram: arrow index out of range");
            if (++seen[static_cast<std::size_t>(t.arrow)][static_cast<int>(t.end)] > 1)
                throw PreconditionError("malformed diagram: duplicate arrow endpoint");
        }
    }
    for (int a = 0; a < k; ++a) {
        if (seen[static_cast<std::size_t>(a)][0] != 1 || seen[static_cast<std::size_t>(a)][1] != 1)
            throw PreconditionError("malformed diagram: arrow missing an endpoint");
        if (d.signs[static_cast<std::size_t>(a)] != 1 && d.signs[static_cast<std::size_t>(a)] != -1)
            throw PreconditionError("malformed diagram: sign must be +1 or -1");
    }
    if (d.circles.empty())
        throw PreconditionError("malformed diagram: no circles");
}

Diagram make_diagram(std::vector<Circle> circles, std::vector<int> signs,
                     bool classical, std::string name) {
    Diagram d{std::move(circles), std::move(signs), classical, std::move(name)};
    validate(d);
    return d;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Diagram parse(const std::string& text) {
    std::vector<std::vector<std::pair<long, End>>> raw_circles;
    std::map<long, int> sign_by_id;
    std::set<std::pair<long, End>> ends_seen;
    std::string name;
    bool classical = false;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("link", 0) == 0) {
            std::size_t q1 = line.find('"');
            if (q1 != std::string::npos) {
                std::size_t q2 = line.find('"', q1 + 1);
                if (q2 == std::string::npos)
                    throw ParseError("unterminated link name");
                name = line.substr(q1 + 1, q2 - q1 - 1);
            } else {
                name = strip(line.substr(4));
            }
            continue;
        }
        if (line.rfind("classical:", 0) == 0) {
            std::string v = strip(line.substr(10));
            if (v == "true") classical = true;
            else if (v == "false") classical = false;
            else throw ParseError("classical flag must be true or false, got '" + v + "'");
            continue;
        }
        if (line.rfind("circle:", 0) != 0)
            throw ParseError("unrecognized line: '" + line + "'");
        std::istringstream toks(line.substr(7));
        std::vector<std::pair<long, End>> circ;
        std::string t;
        while (toks >> t) {
            if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') ||
                (t.back() != '+' && t.back() != '-'))
                throw ParseError("bad token '" + t + "'");
            const std::string digits = t.substr(1, t.size() - 2);
            if (digits.empty() || digits[0] == '0' ||
                !std::all_of(digits.begin(), digits.end(),
                             [](unsigned char ch) { return std::isdigit(ch); }))
                throw ParseError("bad arrow identifier in token '" + t + "'");
            const long id = std::stol(digits);
            const End e = (t[0] == 'O') ? End::Tail : End::Head;
            const int sign = (t.back() == '+') ? 1 : -1;
            auto it = sign_by_id.find(id);
            if (it != sign_by_id.end() && it->second != sign)
                throw ParseError("sign mismatch for identifier " + std::to_string(id));
            sign_by_id[id] = sign;
            if (!ends_seen.insert({id, e}).second)
                throw ParseError("duplicate endpoint token '" + t + "'");
            circ.emplace_back(id, e);
        }
        raw_circles.push_back(std::move(circ));
    }

    if (raw_circles.empty())
        throw ParseError("document contains no circle lines");
    for (const auto& [id, sign] : sign_by_id) {
        (void)sign;
        if (!ends_seen.count({id, End::Tail}) || !ends_seen.count({id, End::Head}))
            throw ParseError("identifier " + std::to_string(id) +
                             " does not appear exactly once as O and once as U");
    }

    std::map<long, int> remap;
    std::vector<int> signs;
    for (const auto& [id, sign] : sign_by_id) {
        remap[id] = static_cast<int>(signs.size());
        signs.push_back(sign);
    }
    std::vector<Circle> circles;
    circles.reserve(raw_circles.size());
    for (const auto& rc : raw_circles) {
        Circle c;
        c.reserve(rc.size());
        for (const auto& [id, e] : rc) c.push_back(Tok{remap[id], e});
        circles.push_back(std::move(c));
    }
    return make_diagram(std::move(circles), std::move(signs), classical, name);
}

std::string serialize(const Diagram& d) {
    std::map<int, int> order;
    for (const Circle& circ : d.circles)
        for (const Tok& t : circ)
            if (!order.count(t.arrow)) {
                const int next = static_cast<int>(order.size()) + 1;
                order[t.arrow] = next;
            }
    std::ostringstream out;
    if (!d.name.empty()) out << "link \"" << d.name << "\"\n";
    out << "classical: " << (d.classical ? "true" : "false") << "\n";
    for (const Circle& circ : d.circles) {
        out << "circle:";
        for (const Tok& t : circ)
            out << ' ' << (t.end == End::Head ? 'U' : 'O') << order[t.arrow]
                << (d.signs[static_cast<std::size_t>(t.arrow)] > 0 ? '+' : '-');
        out << "\n";
    }
    return out.str();
}

int writhe(const Diagram& d) {
    int w = 0;
    for (int s : d.signs) w += s;
    return w;
}

WritheProfile writhe_profile(const Diagram& d) {
    WritheProfile p;
    p.w = writhe(d);
    if (d.circle_count() != 1) return p;
    p.split_defined = true;
    std::vector<char> seen(d.signs.size(), 0);
    for (const Tok& t : d.circles[0]) {
        if (seen[static_cast<std::size_t>(t.arrow)]) continue;
        seen[static_cast<std::size_t>(t.arrow)] = 1;
        if (t.end == End::Head) p.wA += d.signs[static_cast<std::size_t>(t.arrow)];
        else p.wD += d.signs[static_cast<std::size_t>(t.arrow)];
    }
    return p;
}

Diagram mirror(const Diagram& d) {
    std::vector<int> signs = d.signs;
    for (int& s : signs) s = -s;
    return make_diagram(d.circles, std::move(signs), d.classical, d.name);
}

Diagram switch_crossing(const Diagram& d, int arrow) {
    if (arrow < 0 || arrow >= d.arrow_count())
        throw PreconditionError("switch_crossing: arrow index out of range");
    std::vector<Circle> circles = d.circles;
    for (Circle& circ : circles)
        for (Tok& t : circ)
            if (t.arrow == arrow) t.end = other_end(t.end);
    std::vector<int> signs = d.signs;
    signs[static_cast<std::size_t>(arrow)] = -signs[static_cast<std::size_t>(arrow)];
    return make_diagram(std::move(circles), std::move(signs), d.classical, d.name);
}

Diagram reverse_arrow(const Diagram& d, int arrow) {
    if (arrow < 0 || arrow >= d.arrow_count())
        throw PreconditionError("reverse_arrow: arrow index out of range");
    std::vector<Circle> circles = d.circles;
    for (Circle& circ : circles)
        for (Tok& t : circ)
            if (t.arrow == arrow) t.end = other_end(t.end);
    return make_diagram(std::move(circles), d.signs, d.classical, d.name);
}

// Drops unused arrows and renumbers the rest, preserving order.
Diagram renumber_arrows(std::vector<Circle> circles, const std::vector<int>& signs,
                        bool classical, std::string name) {
    std::set<int> used;
    for (const Circle& c : circles)
        for (const Tok& t : c) used.insert(t.arrow);
    std::map<int, int> remap;
    std::vector<int> new_signs;
    for (int a : used) {
        remap[a] = static_cast<int>(new_signs.size());
        new_signs.push_back(signs[static_cast<std::size_t>(a)]);
    }
    for (Circle& c : circles)
        for (Tok& t : c) t.arrow = remap[t.arrow];
    return make_diagram(std::move(circles), std::move(new_signs), classical,
                        std::move(name));
}

Diagram smooth_arrow(const Diagram& d, int arrow) {
    if (arrow < 0 || arrow >= d.arrow_count())
        throw PreconditionError("smooth_arrow: arrow index out of range");
    const EndpointMap pos = endpoint_map(d);
    const EndpointPos t = at(pos, arrow, End::Tail);
    const EndpointPos h = at(pos, arrow, End::Head);
    std::vector<Circle> circles = d.circles;
    if (t.circle == h.circle) {
        const Circle& c = circles[static_cast<std::size_t>(t.circle)];
        const int i = std::min(t.index, h.index);
        const int j = std::max(t.index, h.index);
        Circle outer(c.begin(), c.begin() + i);
        outer.insert(outer.end(), c.begin() + j + 1, c.end());
        Circle inner(c.begin() + i + 1, c.begin() + j);
        std::vector<Circle> next(circles.begin(), circles.begin() + t.circle);
        next.push_back(std::move(outer));
        next.push_back(std::move(inner));
        next.insert(next.end(), circles.begin() + t.circle + 1, circles.end());
        circles = std::move(next);
    } else {
        // Merge: splice the later circle into the earlier one at the endpoint.
        EndpointPos early = t, late = h;
        if (late.circle < early.circle) std::swap(early, late);
        const Circle& ce = circles[static_cast<std::size_t>(early.circle)];
        const Circle& cl = circles[static_cast<std::size_t>(late.circle)];
        Circle merged(ce.begin(), ce.begin() + early.index);
        merged.insert(merged.end(), cl.begin() + late.index + 1, cl.end());
        merged.insert(merged.end(), cl.begin(), cl.begin() + late.index);
        merged.insert(merged.end(), ce.begin() + early.index + 1, ce.end());
        std::vector<Circle> next(circles.begin(), circles.begin() + early.circle);
        next.push_back(std::move(merged));
        next.insert(next.end(), circles.begin() + early.circle + 1,
                    circles.begin() + late.circle);
        next.insert(next.end(), circles.begin() + late.circle + 1, circles.end());
        circles = std::move(next);
    }
    return renumber_arrows(std::move(circles), d.signs, d.classical, d.name);
}

Diagram sublink(const Diagram& d, const std::vector<int>& keep) {
    std::set<int> kept(keep.begin(), keep.end());
    for (int c : kept)
        if (c < 0 || c >= d.circle_count())
            throw PreconditionError("sublink: circle index out of range");
    const EndpointMap pos = endpoint_map(d);
    std::set<int> good;
    for (int a = 0; a < d.arrow_count(); ++a)
        if (kept.count(at(pos, a, End::Head).circle) &&
            kept.count(at(pos, a, End::Tail).circle))
            good.insert(a);
    std::vector<Circle> circles;
    for (int c : kept) {
        Circle out;
        for (const Tok& t : d.circles[static_cast<std::size_t>(c)])
            if (good.count(t.arrow)) out.push_back(t);
        circles.push_back(std::move(out));
    }
    return renumber_arrows(std::move(circles), d.signs, d.classical, d.name);
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    const int off = a.arrow_count();
    std::vector<Circle> circles = a.circles;
    for (const Circle& c : b.circles) {
        Circle shifted = c;
        for (Tok& t : shifted) t.arrow += off;
        circles.push_back(std::move(shifted));
    }
    std::vector<int> signs = a.signs;
    signs.insert(signs.end(), b.signs.begin(), b.signs.end());
    return make_diagram(std::move(circles), std::move(signs),
                        a.classical && b.classical, a.name);
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
    const int off = a.arrow_count();
    Circle c0 = a.circles[0];
    for (const Tok& t : b.circles[0]) c0.push_back(Tok{t.arrow + off, t.end});
    std::vector<Circle> circles{std::move(c0)};
    circles.insert(circles.end(), a.circles.begin() + 1, a.circles.end());
    for (std::size_t i = 1; i < b.circles.size(); ++i) {
        Circle shifted = b.circles[i];
        for (Tok& t : shifted) t.arrow += off;
        circles.push_back(std::move(shifted));
    }
    std::vector<int> signs = a.signs;
    signs.insert(signs.end(), b.signs.begin(), b.signs.end());
    return make_diagram(std::move(circles), std::move(signs),
                        a.classical && b.classical, a.name);
}

Diagram move_base_point(const Diagram& d, int circle, int gap) {
    if (circle < 0 || circle >= d.circle_count())
        throw PreconditionError("move_base_point: circle index out of range");
    const int len = static_cast<int>(d.circles[static_cast<std::size_t>(circle)].size());
    if (gap < 0 || gap >= std::max(len, 1))
        throw PreconditionError("move_base_point: gap out of range");
    std::vector<Circle> circles = d.circles;
    Circle& c = circles[static_cast<std::size_t>(circle)];
    std::rotate(c.begin(), c.begin() + gap, c.end());
    std::swap(circles[0], circles[static_cast<std::size_t>(circle)]);
    return make_diagram(std::move(circles), d.signs, d.classical, d.name);
}

int lk2(const Diagram& d) {
    if (d.circle_count() != 2)
        throw PreconditionError("lk2: needs exactly two circles");
    const EndpointMap pos = endpoint_map(d);
    int tot = 0;
    for (int a = 0; a < d.arrow_count(); ++a)
        if (at(pos, a, End::Head).circle != at(pos, a, End::Tail).circle)
            tot += d.signs[static_cast<std::size_t>(a)];
    return tot / 2;
}

}  // namespace gdcalc
