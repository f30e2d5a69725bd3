#include "gdcalc/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gdcalc {

namespace {

ArrowCode encode_circles(const std::vector<Circle>& circ_seqs) {
    std::map<int, int> remap;
    ArrowCode code;
    code.reserve(circ_seqs.size());
    for (const Circle& seq : circ_seqs) {
        std::vector<std::pair<int, int>> part;
        part.reserve(seq.size());
        for (const Tok& t : seq) {
            auto [it, inserted] = remap.try_emplace(t.arrow, static_cast<int>(remap.size()));
            part.emplace_back(it->second, t.end == End::Head ? 0 : 1);
        }
        code.push_back(std::move(part));
    }
    return code;
}

std::vector<Circle> rotations_of(const Circle& c) {
    std::vector<Circle> rots;
    const int L = std::max<int>(1, static_cast<int>(c.size()));
    rots.reserve(static_cast<std::size_t>(L));
    for (int r = 0; r < L; ++r) {
        Circle rot(c.begin() + std::min<std::size_t>(static_cast<std::size_t>(r), c.size()),
                   c.end());
        rot.insert(rot.end(), c.begin(),
                   c.begin() + std::min<std::size_t>(static_cast<std::size_t>(r), c.size()));
        rots.push_back(std::move(rot));
    }
    return rots;
}

}  // namespace

ArrowCode canonical_arrow_code(const std::vector<Circle>& circles) {
    std::vector<Circle> others(circles.begin() + 1, circles.end());
    bool have_best = false;
    ArrowCode best;

    std::vector<int> perm(others.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<std::vector<Circle>> rots;
        rots.reserve(perm.size());
        for (int idx : perm) rots.push_back(rotations_of(others[static_cast<std::size_t>(idx)]));

        std::vector<Circle> acc{circles[0]};
        auto go = [&](auto&& self, std::size_t i) -> void {
            if (i == rots.size()) {
                ArrowCode cand = encode_circles(acc);
                if (!have_best || cand < best) {
                    best = std::move(cand);
                    have_best = true;
                }
                return;
            }
            for (const Circle& rot : rots[i]) {
                acc.push_back(rot);
                self(self, i + 1);
                acc.pop_back();
            }
        };
        go(go, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

void compositions(int total, int parts, std::vector<int>& acc,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        acc.push_back(first);
        compositions(total - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}

using Position = std::pair<int, int>;  // (circle, index)

void pairings(std::vector<Position> items, std::vector<std::pair<Position, Position>>& acc,
              const std::function<void(const std::vector<std::pair<Position, Position>>&)>& emit) {
    if (items.empty()) {
        emit(acc);
        return;
    }
    const Position a = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) {
        const Position b = items[i];
        std::vector<Position> rest;
        rest.reserve(items.size() - 2);
        for (std::size_t j = 1; j < items.size(); ++j)
            if (j != i) rest.push_back(items[j]);
        acc.emplace_back(a, b);
        pairings(std::move(rest), acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Diagram> enumerate_family(int n, int m, int boundary, Mode mode) {
    if (n > 4 || m > 2 || n < 0 || m < 1)
        throw PreconditionError("family enumeration is limited to n <= 4, m <= 2");
    std::map<ArrowCode, Diagram> out;
    const int slots = 2 * n;
    const StateMask full = (StateMask{1} << n) - 1;

    std::vector<int> comp_acc;
    compositions(slots, m, comp_acc, [&](const std::vector<int>& comp) {
        if (m > 1 && std::find(comp.begin(), comp.end(), 0) != comp.end())
            return;  // a bare circle cannot meet the rest
        std::vector<Position> positions;
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < comp[static_cast<std::size_t>(c)]; ++i)
                positions.emplace_back(c, i);
        std::vector<std::pair<Position, Position>> pr_acc;
        pairings(positions, pr_acc,
                 [&](const std::vector<std::pair<Position, Position>>& pr) {
            for (unsigned dirbits = 0; dirbits < (1u << n); ++dirbits) {
                std::vector<Circle> circles;
                circles.reserve(static_cast<std::size_t>(m));
                for (int c = 0; c < m; ++c)
                    circles.emplace_back(
                        static_cast<std::size_t>(comp[static_cast<std::size_t>(c)]),
                        Tok{-1, End::Tail});
                for (int a = 0; a < n; ++a) {
                    const auto& [p1, p2] = pr[static_cast<std::size_t>(a)];
                    const End e1 = (dirbits >> a & 1u) ? End::Tail : End::Head;
                    const End e2 = other_end(e1);
                    circles[static_cast<std::size_t>(p1.first)]
                           [static_cast<std::size_t>(p1.second)] = Tok{a, e1};
                    circles[static_cast<std::size_t>(p2.first)]
                           [static_cast<std::size_t>(p2.second)] = Tok{a, e2};
                }
                Diagram dd = make_diagram(circles, std::vector<int>(
                                              static_cast<std::size_t>(n), 1));
                const TraceResult tr = trace(dd, full);
                if (!tr.connected || tr.b != boundary) continue;
                const bool match = mode == Mode::Asc ? classify_asc(tr, full)
                                                     : classify_desc(tr, full);
                if (!match) continue;
                out.insert_or_assign(canonical_arrow_code(dd.circles), std::move(dd));
            }
        });
    });

    std::vector<Diagram> fam;
    fam.reserve(out.size());
    for (auto& [code, dd] : out) fam.push_back(std::move(dd));
    return fam;
}

long long pairing(const Diagram& a, const Diagram& g) {
    const int mm = a.circle_count();
    if (mm != g.circle_count()) return 0;
    const EndpointMap pos_g = endpoint_map(g);
    const int na = a.arrow_count();
    const int ng = g.arrow_count();
    long long total = 0;

    std::vector<int> circperm;
    for (int c = 1; c < mm; ++c) circperm.push_back(c);
    std::sort(circperm.begin(), circperm.end());
    do {
        std::vector<int> cmap(static_cast<std::size_t>(mm));
        cmap[0] = 0;
        for (std::size_t i = 0; i < circperm.size(); ++i) cmap[i + 1] = circperm[i];

        std::vector<int> assign(static_cast<std::size_t>(na), -1);
        auto ok = [&]() -> bool {
            for (int c = 0; c < mm; ++c) {
                const Circle& circ = a.circles[static_cast<std::size_t>(c)];
                std::vector<int> imgs;
                imgs.reserve(circ.size());
                for (const Tok& t : circ) {
                    const EndpointPos& p = at(pos_g, assign[static_cast<std::size_t>(t.arrow)],
                                              t.end);
                    if (p.circle != cmap[static_cast<std::size_t>(c)]) return false;
                    imgs.push_back(p.index);
                }
                if (c == 0) {
                    for (std::size_t i = 0; i + 1 < imgs.size(); ++i)
                        if (imgs[i] >= imgs[i + 1]) return false;
                } else if (imgs.size() > 1) {
                    int drops = 0;
                    for (std::size_t i = 0; i < imgs.size(); ++i)
                        if (imgs[i] > imgs[(i + 1) % imgs.size()]) ++drops;
                    if (drops != 1) return false;
                }
            }
            return true;
        };

        std::vector<char> used(static_cast<std::size_t>(ng), 0);
        auto go = [&](auto&& self, int arrow, long long prod) -> void {
            if (arrow == na) {
                if (ok()) total += prod;
                return;
            }
            for (int gi = 0; gi < ng; ++gi) {
                if (used[static_cast<std::size_t>(gi)]) continue;
                used[static_cast<std::size_t>(gi)] = 1;
                assign[static_cast<std::size_t>(arrow)] = gi;
                self(self, arrow + 1, prod * g.signs[static_cast<std::size_t>(gi)]);
                assign[static_cast<std::size_t>(arrow)] = -1;
                used[static_cast<std::size_t>(gi)] = 0;
            }
        };
        go(go, 0, 1);
    } while (std::next_permutation(circperm.begin(), circperm.end()));
    return total;
}

long long family_pairing_sum(const Diagram& d, int n, int m, int boundary,
                             Mode mode) {
    long long total = 0;
    for (const Diagram& a : enumerate_family(n, m, boundary, mode))
        total += pairing(a, d);
    return total;
}

}  // namespace gdcalc
