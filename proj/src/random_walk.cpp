#include "gdcalc/random_walk.hpp"

#include <string>

#include "gdcalc/trace.hpp"

namespace gdcalc {

Diagram random_diagram(std::uint64_t seed, int m, int k) {
    if (m < 1 || k < 0) throw PreconditionError("random_diagram: need m >= 1, k >= 0");
    Rng rng(seed);
    const std::string name = "rand-" + std::to_string(seed);
    if (k == 0) {
        if (m != 1)
            throw PreconditionError("random_diagram: zero arrows cannot populate " +
                                    std::to_string(m) + " circles");
        return make_diagram({Circle{}}, {}, false, name);
    }
    if (m > 2 * k + 1)
        throw PreconditionError("random_diagram: not enough endpoints for " +
                                std::to_string(m) + " nonempty circles");
    std::vector<int> owner;
    for (int c = 1; c < m; ++c) owner.push_back(c);
    if (2 * k - static_cast<int>(owner.size()) >= 1 && m <= 2 * k) owner.push_back(0);
    while (static_cast<int>(owner.size()) < 2 * k)
        owner.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
    rng.shuffle(owner);

    std::vector<Tok> toks;
    for (int a = 0; a < k; ++a) {
        toks.push_back({a, End::Head});
        toks.push_back({a, End::Tail});
    }
    rng.shuffle(toks);

    std::vector<Circle> circles(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < toks.size(); ++i) {
        Circle& circ = circles[static_cast<std::size_t>(owner[i])];
        const std::size_t slot =
            static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(circ.size() + 1)));
        circ.insert(circ.begin() + static_cast<std::ptrdiff_t>(slot), toks[i]);
    }
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) signs.push_back(rng.sign());
    return make_diagram(std::move(circles), std::move(signs), false, name);
}

WalkResult random_classical(std::uint64_t seed, const Diagram& base, int move_count,
                            int max_arrows) {
    if (!base.classical)
        throw PreconditionError("random_classical: base must carry the classical flag");
    if (!is_planar(base))
        throw PreconditionError("random_classical: base must be realizable");
    Rng rng(seed);
    WalkResult walk{base, {}};
    for (int step = 0; step < move_count; ++step) {
        std::vector<MoveSite> cand = list_delete_sites(walk.diagram);
        for (const MoveSite& s : om3_sites(walk.diagram)) cand.push_back(s);
        if (walk.diagram.arrow_count() + 2 <= max_arrows)
            for (const MoveSite& s : list_insert_sites(walk.diagram)) cand.push_back(s);
        if (cand.empty()) cand = list_insert_sites(walk.diagram);
        rng.shuffle(cand);
        bool moved = false;
        for (const MoveSite& s : cand) {
            Diagram next = apply_move(walk.diagram, s);
            if (is_planar(next)) {
                walk.diagram = std::move(next);
                walk.trace.push_back(s);
                moved = true;
                break;
            }
        }
        if (!moved)
            throw PreconditionError("random_classical: no realizability-preserving move");
    }
    return walk;
}

}  // namespace gdcalc
