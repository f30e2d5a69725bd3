#pragma once

#include "gdcalc/diagram.hpp"
#include "gdcalc/poly.hpp"

namespace gdcalc {

// Independent Conway-polynomial oracle: unknotting recursion that switches
// the first crossing reached at its underpass and resolves via the skein
// relation. Requires the classical flag; throws PreconditionError otherwise.
Poly conway_skein(const Diagram& d);

}  // namespace gdcalc
