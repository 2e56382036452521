#pragma once

#include <complex>

namespace hartogs {

using complexd = std::complex<double>;

// Planar base region: disc or annulus, described by a signed distance.
class Region {
  public:
    static Region disc(complexd center, double radius);
    static Region annulus(complexd center, double r_inner, double r_outer);

    // negative inside, positive outside
    double signed_distance(complexd z) const;
    complexd sd_gradient(complexd z) const;  // unit outward gradient of sd
    bool contains(complexd z, double tol = 0.0) const {
        return signed_distance(z) < tol;
    }

    // fraction t in (0,1] such that z + t*step crosses the boundary, or 1 if
    // no crossing within the step.  step is a full lattice step (h * dir).
    double boundary_fraction(complexd z, complexd step) const;

    complexd center() const { return center_; }
    double outer_radius() const { return r1_; }
    double inner_radius() const { return r0_; }
    bool is_disc() const { return r0_ == 0.0; }
    double area() const;

    // bounding box: [cx-r1, cx+r1] x [cy-r1, cy+r1]
    double box_min_x() const { return center_.real() - r1_; }
    double box_min_y() const { return center_.imag() - r1_; }
    double box_size() const { return 2.0 * r1_; }

  private:
    Region(complexd c, double r0, double r1);
    complexd center_;
    double r0_;  // 0 for disc
    double r1_;
};

}  // namespace hartogs
