#include "hartogs/mode_norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hartogs {

namespace {

// log of sum_j exp(terms_j), terms may be -inf
double log_sum_exp(const std::vector<double>& terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (double t : terms) m = std::max(m, t);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - m);
    return m + std::log(s);
}

enum class FiberMoment { Radial, Distance };

double log_mode_sum(const HartogsDomain& d, const GridFunction& g, int n,
                    FiberMoment kind) {
    const PlanarGrid& grid = g.grid();
    const auto& cov = grid.coverage();
    const auto& qp = grid.quad_points();
    double h2 = grid.spacing() * grid.spacing();
    std::vector<double> terms;
    terms.reserve(grid.num_cells());
    for (int p = 0; p < grid.num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        double a2 = std::norm(g[p]);
        if (a2 == 0.0) continue;
        Annulus fiber(std::exp(d.log_inner_radius(qp[p])),
                      std::exp(d.log_outer_radius(qp[p])));
        LogValue m = kind == FiberMoment::Radial ? radial_moment(fiber, n)
                                                 : distance_moment(fiber, n);
        terms.push_back(std::log(a2) + m.logmag + std::log(cov[p] * h2));
    }
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    return log_sum_exp(terms);
}

}  // namespace

double mode_l2_norm(const HartogsDomain& d, const GridFunction& g, int n) {
    double ls = log_mode_sum(d, g, n, FiberMoment::Radial);
    if (!std::isfinite(ls)) return 0.0;
    return std::exp(ls);
}

double sobolev_surrogate_ratio(const HartogsDomain& d, const GridFunction& g,
                               int n) {
    double lr = log_mode_sum(d, g, n, FiberMoment::Radial);
    if (!std::isfinite(lr))
        throw std::invalid_argument("sobolev_surrogate_ratio: zero denominator");
    double ld = log_mode_sum(d, g, n, FiberMoment::Distance);
    return std::exp(0.5 * (ld - lr));
}

}  // namespace hartogs
