#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdcalc/diagram.hpp"
#include "gdcalc/poly.hpp"
#include "gdcalc/trace.hpp"

namespace gdcalc {

// Number of worker threads: GDCALC_THREADS when set (>= 1), else the
// hardware concurrency, at least 1.
int resolve_threads(int requested = 0);

// Key of a separating-state group: the set of arrows crossed once by the
// first boundary cycle plus the arc labeling by cycle ownership.
struct GroupKey {
    StateMask separating = 0;
    std::vector<std::vector<std::int8_t>> labels;
    friend bool operator<(const GroupKey& a, const GroupKey& b) {
        if (a.separating != b.separating) return a.separating < b.separating;
        return a.labels < b.labels;
    }
    friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

using GroupedSums = std::map<int, std::map<GroupKey, long long>>;

// One pass over all 2^k states: signed sums per degree for connected
// one-boundary (A/D) and two-boundary (A2/D2) states, plus the two-boundary
// sums grouped by separating-state key.
struct ScanResult {
    std::vector<long long> A, D, A2, D2;  // indexed by degree 0..k
    GroupedSums grouped_asc, grouped_desc;
};
ScanResult state_scan(const Diagram& d, bool with_groups = true, int threads = 0);

long long one_boundary_coeff(const Diagram& d, int n, Mode mode);
long long two_boundary_coeff(const Diagram& d, int n, Mode mode);
Poly conway(const Diagram& d, Mode mode);
Poly nabla_ad(const Diagram& d);
long long ad_coeff(const Diagram& d, int n);
// ad_coeff minus writhe times the (n-1)-th ascending Conway coefficient.
long long i_coeff(const Diagram& d, int n);
// One-circle refinement: two_boundary_coeff minus the mode's writhe part
// times the (n-1)-th Conway coefficient. Requires one circle.
long long knot_i_coeff(const Diagram& d, int n, Mode mode);
// Sum over ordered pairs (proper sublink, complement) of Conway-coefficient
// convolutions. Requires the classical flag; one circle gives 0.
long long c_coeff(const Diagram& d, int n);
// i_coeff + c_coeff. Requires the classical flag.
long long p_coeff(const Diagram& d, int n);
// Like one_boundary_coeff, restricted to states without bridge arrows.
long long irreducible_coeff(const Diagram& d, int n, Mode mode);
GroupedSums grouped_two_boundary(const Diagram& d, Mode mode);

// --- invariant requests shared by the CLI and the Python bindings ---

enum class Kind { A, D, NablaA, NablaD, NablaAD, A2, D2, AD, I, IA, ID, AIr, DIr, C, P };

// Accepts the canonical kind names (case-insensitive) plus the command-line
// spellings "conway" (mode-selected), "nabla-a", "nabla-d", "nabla-ad".
// Throws PreconditionError for unknown names.
Kind kind_from_string(const std::string& s, Mode mode);
const char* kind_name(Kind k);
bool kind_is_polynomial(Kind k);

struct ComputeOutcome {
    bool is_polynomial = false;
    Poly poly;
    long long scalar = 0;
};
// Computes any invariant kind; degree is required for coefficient kinds and
// rejected for polynomial kinds.
ComputeOutcome compute_invariant(const Diagram& d, Kind kind,
                                 std::optional<int> degree);

// A state contributing to a direct state-sum kind, for explanation output.
struct StateTerm {
    StateMask mask = 0;
    int sign = 1;
};
// Contributing states of A/D/A2/D2/AD/AIr/DIr at the given degree, ordered
// by increasing popcount then increasing bitmask. Other kinds are rejected.
std::vector<StateTerm> contributing_states(const Diagram& d, Kind kind, int degree);

}  // namespace gdcalc
