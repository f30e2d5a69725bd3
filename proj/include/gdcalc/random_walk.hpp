#pragma once

#include <cstdint>
#include <vector>

#include "gdcalc/diagram.hpp"
#include "gdcalc/moves.hpp"

namespace gdcalc {

// Deterministic splitmix64 generator so seeded runs agree across platforms
// and standard-library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    int sign() { return below(2) ? 1 : -1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }
};

// Seeded diagram with k arrows spread over m circles: every circle beyond the
// first receives an endpoint up front (and the based circle too, when the
// counts allow), the rest land uniformly. Marked non-classical and named
// "rand-<seed>". Throws PreconditionError when m circles cannot all be
// populated (m > 2k + 1, or k = 0 with m > 1).
Diagram random_diagram(std::uint64_t seed, int m, int k);

struct WalkResult {
    Diagram diagram;
    std::vector<MoveSite> trace;  // moves applied, in order
};

// Seeded walk from a classical, realizable base diagram over om1/om1f/om2/om3
// moves. Insertions between arbitrary strands can leave the realizable
// category, so shuffled candidates are tried until one keeps the diagram
// planar. Deletions and om3 sites are always candidates; insertions join when
// the arrow budget allows (and as a fallback when nothing else exists).
WalkResult random_classical(std::uint64_t seed, const Diagram& base, int move_count,
                            int max_arrows = 12);

}  // namespace gdcalc
