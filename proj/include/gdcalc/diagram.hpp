#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdcalc {

// Thrown when a diagram document cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's preconditions are violated (wrong flag, wrong
// circle count, out-of-range degree, stale move site, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One endpoint of an arrow. Tail = overpass ('O' token), Head = underpass
// ('U' token); the arrow points from its tail to its head.
enum class End : std::uint8_t { Tail = 0, Head = 1 };

inline End other_end(End e) { return e == End::Tail ? End::Head : End::Tail; }

struct Tok {
    int arrow = 0;
    End end = End::Tail;
    friend bool operator==(const Tok&, const Tok&) = default;
};

using Circle = std::vector<Tok>;

// A Gauss diagram: oriented circles carrying the two endpoints of each
// signed, directed arrow. Circle 0 carries the base point, which sits in the
// gap just before position 0. The classical flag is trusted metadata.
struct Diagram {
    std::vector<Circle> circles;
    std::vector<int> signs;  // +1 / -1, indexed by arrow
    bool classical = false;
    std::string name;

    int arrow_count() const { return static_cast<int>(signs.size()); }
    int circle_count() const { return static_cast<int>(circles.size()); }
};

// Position of an endpoint: circle index and position within the circle.
struct EndpointPos {
    int circle = -1;
    int index = -1;
};

// endpoint_map()[arrow][end] -> position (end indexed by static_cast<int>).
using EndpointMap = std::vector<std::array<EndpointPos, 2>>;

EndpointMap endpoint_map(const Diagram& d);

inline const EndpointPos& at(const EndpointMap& pos, int arrow, End e) {
    return pos[static_cast<std::size_t>(arrow)][static_cast<int>(e)];
}

// Throws PreconditionError if the structure is malformed (an arrow without
// exactly one tail and one head endpoint, or an index out of range).
void validate(const Diagram& d);

// Construct and validate.
Diagram make_diagram(std::vector<Circle> circles, std::vector<int> signs,
                     bool classical = false, std::string name = "");

// Rebuilds a diagram from raw circles whose tokens may reference a sparse
// subset of the given signs: surviving arrows are renumbered densely in
// increasing old-id order.
Diagram renumber_arrows(std::vector<Circle> circles, const std::vector<int>& signs,
                        bool classical = false, std::string name = "");

// Parses the text format: optional `link "<name>"` header, optional
// `classical: true|false` line (default false), one `circle:` line per
// circle with whitespace-separated tokens [OU]<id>[+-], and `#` comments.
// Arrows are renumbered 0..k-1 by increasing identifier.
Diagram parse(const std::string& text);

// Emits the canonical text: link header (when named), classical line, one
// circle line per circle with arrows renumbered by first appearance.
std::string serialize(const Diagram& d);

int writhe(const Diagram& d);

struct WritheProfile {
    int w = 0;
    // Split by the end met first on the based circle walk; only defined for
    // one-circle diagrams (false otherwise).
    bool split_defined = false;
    int wA = 0;  // arrows met head-first
    int wD = 0;  // arrows met tail-first
};
WritheProfile writhe_profile(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram switch_crossing(const Diagram& d, int arrow);
// Reverses one arrow's direction, keeping its sign.
Diagram reverse_arrow(const Diagram& d, int arrow);
// Oriented smoothing of one arrow: merges two circles or splits one.
Diagram smooth_arrow(const Diagram& d, int arrow);
// Keeps the listed circles and the arrows entirely inside them.
Diagram sublink(const Diagram& d, const std::vector<int>& keep);
Diagram disjoint_union(const Diagram& a, const Diagram& b);
// Joins the based circles end-to-end (b's tokens appended after a's).
Diagram connected_sum(const Diagram& a, const Diagram& b);
// Moves the base point to the gap before `gap` on `circle`, then swaps that
// circle into slot 0.
Diagram move_base_point(const Diagram& d, int circle, int gap);
// Linking number of an ordered 2-circle diagram.
int lk2(const Diagram& d);

}  // namespace gdcalc
