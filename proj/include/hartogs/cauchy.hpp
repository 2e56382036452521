#pragma once

#include "hartogs/grid_function.hpp"

namespace hartogs {

// Particular solution g0 of d g0 / d zbar = beta on the grid's region, by
// convolution with the Cauchy kernel 1/(pi z).  Cell contributions use exact
// kernel integrals (squares via closed-form corner antiderivatives, clipped
// boundary cells via polygon edge integrals) with a piecewise-linear density
// model, so the result is exact for affine beta up to boundary curvature.
// Values at partial cells are carried at the clipped-cell centroid.
GridFunction cauchy_particular(const GridFunction& beta);

// Exact integral of 1/(pi (z - zeta)) dA(zeta) over a polygon (CCW).
complexd polygon_cauchy_kernel(complexd z, const std::vector<complexd>& poly);

}  // namespace hartogs
