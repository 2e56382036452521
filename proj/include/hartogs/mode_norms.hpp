#pragma once

#include "hartogs/annulus.hpp"
#include "hartogs/domain.hpp"
#include "hartogs/grid_function.hpp"

namespace hartogs {

// ||g(z) w^n||^2 over the Hartogs domain: the fiber integral reduces to the
// annulus radial moment per base point, so the square norm is
//   sum_z |g(z)|^2 * radial_moment(fiber(z), n) * cell weight.
// Accumulated in log space; the returned double may be large for big |n|.
double mode_l2_norm(const HartogsDomain& d, const GridFunction& g, int n);

// ratio || d_z . (g w^n) || / || g w^n || with the fiber boundary distance
// d_z as the weight in the numerator (distance moments in the fibers).
double sobolev_surrogate_ratio(const HartogsDomain& d, const GridFunction& g,
                               int n);

}  // namespace hartogs
