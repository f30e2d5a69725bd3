#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdcalc/diagram.hpp"

namespace gdcalc {

// A state is a subset of arrows, encoded as a bitmask (bit a = arrow a).
using StateMask = std::uint32_t;

enum class Mode { Asc, Desc };

inline const char* mode_name(Mode m) { return m == Mode::Asc ? "asc" : "desc"; }

// One boundary cycle of the surface made of circle disks joined by a band
// for each member arrow. `arcs` are indices into an internal arc table and
// kept only for size accounting; `crossings` records, in walk order, the
// endpoint at which each band is entered (arrow id + end type met there).
struct TraceCycle {
    std::vector<int> arcs;
    std::vector<Tok> crossings;
};

struct TraceResult {
    std::vector<TraceCycle> cycles;
    int b = 0;             // number of boundary cycles
    bool connected = false;
    int euler = 0;         // circles minus member arrows
    int genus = 0;         // (2 - b - euler) / 2, meaningful when connected
    // First end met per arrow over the walk order (cycle 0, then the
    // designated second cycle, then the rest). -1 when never met.
    std::vector<std::int8_t> first_approach;
    // Arrows crossed exactly once during the first cycle.
    StateMask separating = 0;
    // Filled for connected two-cycle states: for every circle position, the
    // cycle (1 or 2) owning the arc that covers it.
    bool has_labels = false;
    std::vector<std::vector<std::int8_t>> labels;
};

// Walks the boundary of the state's surface. The first cycle starts at the
// arc holding the base point; for two-cycle states the second start is the
// arc beginning at the arrival endpoint of the first separating arrow met.
TraceResult trace(const Diagram& d, StateMask state);

bool classify_asc(const TraceResult& tr, StateMask state);
bool classify_desc(const TraceResult& tr, StateMask state);

// Product of the member arrows' signs.
int sigma(const Diagram& d, StateMask state);

// Smooths every member arrow at once; the resulting circles are the boundary
// cycles of trace(d, state), in that order. When `labels` is given (per the
// TraceResult format) the per-circle labels are carried over.
struct SmoothAllResult {
    Diagram diagram;
    std::vector<int> labels;  // per new circle; 0 when no labels were given
};
SmoothAllResult smooth_all(const Diagram& d, StateMask state,
                           const std::vector<std::vector<std::int8_t>>* labels = nullptr);

// Member arrows (restricted to `state`) that join two distinct circles and
// disconnect the circle/arrow multigraph when removed.
std::vector<int> bridge_arrows(const Diagram& d, StateMask state);

// True iff the diagram is realizable in the plane: the 4-valent graph with
// the crossing-sign-forced vertex rotations embeds in a sphere per connected
// component (checked via V - E + F). Circles without endpoints are ignored.
bool is_planar(const Diagram& d);

}  // namespace gdcalc
