#include "gdcalc/skein.hpp"

#include <vector>

namespace gdcalc {

namespace {

// First endpoint of each arrow in reading order (circle 0 from the base point,
// then the remaining circles); the recursion descends at the first arrow whose
// first-met endpoint is a head.
int first_head_first_arrow(const Diagram& d) {
    std::vector<char> seen(static_cast<std::size_t>(d.arrow_count()), 0);
    for (const Circle& circ : d.circles)
        for (const Tok& t : circ) {
            if (seen[static_cast<std::size_t>(t.arrow)]) continue;
            seen[static_cast<std::size_t>(t.arrow)] = 1;
            if (t.end == End::Head) return t.arrow;
        }
    return -1;
}

Poly rec(const Diagram& d) {
    const int bad = first_head_first_arrow(d);
    if (bad < 0) {
        Poly p;
        if (d.circle_count() == 1) p[0] = 1;
        return p;
    }
    const Poly psw = rec(switch_crossing(d, bad));
    const Poly psm = rec(smooth_arrow(d, bad));
    Poly out = psw;
    const int s = d.signs[static_cast<std::size_t>(bad)];
    for (const auto& [n, v] : psm) poly_add_term(out, n + 1, s > 0 ? v : -v);
    return out;
}

}  // namespace

Poly conway_skein(const Diagram& d) {
    if (!d.classical)
        throw PreconditionError("skein recursion requires the classical flag");
    return rec(d);
}

}  // namespace gdcalc
