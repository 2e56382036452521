#pragma once

#include <vector>

#include "hartogs/log_value.hpp"

namespace hartogs {

// A(a,b) = { a < |w| < b }, 0 < a < b.
struct Annulus {
    double a;
    double b;

    Annulus(double a_, double b_);
    double center_radius() const { return 0.5 * (a + b); }
    // distance from radius r to the annulus boundary, min(r-a, b-r)
    double boundary_distance(double r) const;
};

// integral of |w|^(2n) over A(a,b).
// Closed form pi/(n+1) (b^(2n+2) - a^(2n+2)) for n != -1, and 2 pi log(b/a)
// at n = -1.  Always positive.
LogValue radial_moment(const Annulus& A, int n);

// integral of d(w)^2 |w|^(2n) over A(a,b), d = distance to the boundary.
// Closed form for n not in {-1,-2}; adaptive radial quadrature otherwise.
LogValue distance_moment(const Annulus& A, int n);

// n^2 * distance_moment / radial_moment, n != 0.
double moment_ratio(const Annulus& A, int n);

// sup of moment_ratio over a list of nonzero n.
double lemma1_constant(const Annulus& A, const std::vector<int>& n_range);

}  // namespace hartogs
