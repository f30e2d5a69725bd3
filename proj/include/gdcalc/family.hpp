#pragma once

#include <utility>
#include <vector>

#include "gdcalc/diagram.hpp"
#include "gdcalc/trace.hpp"

namespace gdcalc {

// Canonical encoding of a based arrow diagram (circles of (arrow, end)
// tokens). Circle 0 is pinned by the base point; the remaining circles range
// over every ordering and rotation, and arrows are relabeled by first
// appearance. The lexicographically smallest encoding is the key.
using ArrowCode = std::vector<std::vector<std::pair<int, int>>>;

ArrowCode canonical_arrow_code(const std::vector<Circle>& circles);

// Every based connected arrow diagram (all signs +1) with n arrows on m
// circles whose full state has `boundary` cycles and matches `mode`,
// deduplicated up to rotation of non-based circles and circle reordering.
// Guards n <= 4, m <= 2 (the enumeration is factorial in both).
std::vector<Diagram> enumerate_family(int n, int m, int boundary, Mode mode);

// Signed count of the embeddings of arrow diagram `a` into diagram `g`:
// injective arrow assignments that preserve arrow directions, map circle 0 to
// circle 0 respecting the base point (strictly increasing positions), and map
// the remaining circles bijectively respecting cyclic order. Each embedding
// contributes the product of the image signs.
long long pairing(const Diagram& a, const Diagram& g);

// Sum of pairing(A, d) over the whole family: a brute-force oracle for the
// state-sum coefficients.
long long family_pairing_sum(const Diagram& d, int n, int m, int boundary,
                             Mode mode);

}  // namespace gdcalc
