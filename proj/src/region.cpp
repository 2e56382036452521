#include "hartogs/region.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hartogs {

Region::Region(complexd c, double r0, double r1) : center_(c), r0_(r0), r1_(r1) {
    if (!(r1_ > 0.0) || r0_ < 0.0 || r0_ >= r1_)
        throw std::invalid_argument("degenerate region");
}

Region Region::disc(complexd center, double radius) {
    return Region(center, 0.0, radius);
}

Region Region::annulus(complexd center, double r_inner, double r_outer) {
    if (!(r_inner > 0.0))
        throw std::invalid_argument("annulus region requires r_inner > 0");
    return Region(center, r_inner, r_outer);
}

double Region::signed_distance(complexd z) const {
    double r = std::abs(z - center_);
    if (r0_ == 0.0) return r - r1_;
    return std::max(r0_ - r, r - r1_);
}

complexd Region::sd_gradient(complexd z) const {
    complexd d = z - center_;
    double r = std::abs(d);
    if (r < 1e-300) return {1.0, 0.0};
    complexd u = d / r;
    if (r0_ == 0.0) return u;
    return (r - r1_ >= r0_ - r) ? u : -u;
}

double Region::area() const {
    return std::numbers::pi * (r1_ * r1_ - r0_ * r0_);
}

double Region::boundary_fraction(complexd z, complexd step) const {
    // smallest t in (0,1] with |z + t*step - center| == r for r in {r0, r1}
    complexd d = z - center_;
    double a = std::norm(step);
    double b = 2.0 * (d.real() * step.real() + d.imag() * step.imag());
    double best = 1.0;
    for (double r : {r0_, r1_}) {
        if (r <= 0.0) continue;
        double c = std::norm(d) - r * r;
        double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) continue;
        double sq = std::sqrt(disc);
        for (double t : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
            if (t > 1e-12 && t < best) best = t;
        }
    }
    return best;
}

}  // namespace hartogs
