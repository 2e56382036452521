#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hartogs/grid.hpp"

namespace hartogs {

// Complex scalar field sampled at the grid's quadrature points (cell centers
// for full cells, clipped-cell centroids for partial cells).  Values are
// zero on cells with no region coverage.
class GridFunction {
  public:
    explicit GridFunction(GridPtr grid);
    GridFunction(GridPtr grid, const std::function<complexd(complexd)>& f);

    const PlanarGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }

    complexd& operator[](int p) { return vals_[p]; }
    complexd operator[](int p) const { return vals_[p]; }
    complexd at(int i, int j) const { return vals_[grid_->index(i, j)]; }
    std::vector<complexd>& values() { return vals_; }
    const std::vector<complexd>& values() const { return vals_; }

    bool all_finite() const;
    bool is_identically_zero() const;

    // integral over the region (coverage-weighted midpoint/centroid rule)
    complexd integrate() const;
    // unweighted L2 inner product <*this, g> = sum f conj(g) w
    complexd inner(const GridFunction& g) const;
    double norm2() const;  // integral of |f|^2
    double sup_abs() const;

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(complexd s);

  private:
    GridPtr grid_;
    std::vector<complexd> vals_;
};

// Support-aware first derivatives of f (support = cells with coverage > 0).
// Uses 4th-order central stencils where the neighborhood allows, degrading
// to 2nd-order central / one-sided near the support edge.  Returns arrays
// over all cells (zero outside support).
void support_gradient(const GridFunction& f, std::vector<complexd>& fx,
                      std::vector<complexd>& fy);

// d/dzbar by 4th-order central differences; only cells whose 2-ring is fully
// covered get a value, others are flagged by `valid`.
void dzbar_interior(const GridFunction& f, std::vector<complexd>& out,
                    std::vector<char>& valid);

}  // namespace hartogs
