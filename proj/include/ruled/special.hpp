#pragma once

#include "ruled/equiv.hpp"

namespace ruled {

// Equivalences between two conical surfaces.  Both inputs must classify as
// Conical; vertices are moved to the origin, the ruling equation
// A q1 = k (gamma t + delta)^n q2(psi) is solved on its own (the base part is
// forced: b = v2 - A v1), and every candidate is verified on the original
// surfaces after recomposing the vertex translations.
//
// Without metric constraints A is only determined up to scale, so the result
// is an InfiniteFamily whose samples are normalized so that the first nonzero
// entry of A in row-major order is 1.  With norm conditions in opt.extra the
// scale is pinned and the result is finite.
EquivalenceSet conical_equivalences(const RuledSurface& s1,
                                    const RuledSurface& s2,
                                    const PipelineOptions& opt = {});

// For a cylindrical surface (all rulings parallel) the geometry is the
// directrix in a section plane through the origin orthogonal to the common
// direction.  Solves <x(t,s), q> = 0 for s and returns the section curve;
// e.g. (t, t^2, t) + s (0,0,1) sections to (t, t^2, 0).
CylindricalReduction cylindrical_reduce(const RuledSurface& s);

}  // namespace ruled
