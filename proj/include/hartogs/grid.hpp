#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "hartogs/region.hpp"

namespace hartogs {

// Uniform cell grid over the region's bounding box.  Cells whose center is
// inside the region form the mask; cells cut by the boundary carry a
// coverage fraction and a quadrature point at the centroid of the clipped
// cell (boundary linearized within the cell).
class PlanarGrid {
  public:
    PlanarGrid(const Region& region, int resolution);

    int resolution() const { return res_; }
    double spacing() const { return h_; }
    const Region& region() const { return region_; }
    int num_cells() const { return res_ * res_; }

    int index(int i, int j) const { return i * res_ + j; }
    std::complex<double> cell_center(int i, int j) const {
        return {x0_ + (i + 0.5) * h_, y0_ + (j + 0.5) * h_};
    }

    // arrays over all res*res cells
    const std::vector<double>& signed_distances() const { return sd_; }
    const std::vector<double>& coverage() const { return cov_; }
    const std::vector<std::complex<double>>& quad_points() const { return qp_; }

    bool in_mask(int i, int j) const { return sd_[index(i, j)] < 0.0; }
    bool is_full(int i, int j) const { return cov_[index(i, j)] >= 1.0; }
    double cell_weight(int i, int j) const { return cov_[index(i, j)] * h_ * h_; }

    double mask_fraction() const { return mask_fraction_; }
    int mask_count() const { return mask_count_; }

    // clipped polygon of a partial cell (empty for full/outside cells)
    const std::vector<std::complex<double>>& cell_polygon(int i, int j) const;
    const std::vector<int>& partial_cells() const { return partial_; }

  private:
    Region region_;
    int res_;
    double h_, x0_, y0_;
    std::vector<double> sd_, cov_;
    std::vector<std::complex<double>> qp_;
    std::vector<int> partial_;
    std::vector<std::vector<std::complex<double>>> polys_;  // per partial cell
    std::vector<int> poly_slot_;                            // cell -> slot or -1
    double mask_fraction_ = 0.0;
    int mask_count_ = 0;
};

using GridPtr = std::shared_ptr<const PlanarGrid>;

GridPtr make_grid(const Region& region, int resolution);

}  // namespace hartogs
