#include "hartogs/domain.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hartogs {

double HartogsDomain::phi(complexd z) const {
    return case_ == CaseTag::Case1 ? -log_inner_radius(z) : -log_outer_radius(z);
}

complexd HartogsDomain::phi_dz(complexd z) const {
    return case_ == CaseTag::Case1 ? -inner_.log_radius_dz(z)
                                   : -outer_.log_radius_dz(z);
}

double HartogsDomain::phi_lap(complexd z) const {
    return case_ == CaseTag::Case1 ? -inner_.log_radius_lap(z)
                                   : -outer_.log_radius_lap(z);
}

double HartogsDomain::alpha(complexd z) const {
    return case_ == CaseTag::Case1 ? -log_outer_radius(z) : -log_inner_radius(z);
}

HartogsDomain make_domain(const Region& base, const RadialProfile& inner,
                          const RadialProfile& outer, CaseTag tag,
                          int sample_resolution) {
    HartogsDomain d(base, inner, outer, tag);
    // sample cell centers of a validation grid plus boundary ring points
    double h = base.box_size() / sample_resolution;
    double min_inner = std::numeric_limits<double>::infinity();
    double max_outer = -std::numeric_limits<double>::infinity();
    auto visit = [&](complexd z) {
        double li = inner.log_radius(z);
        double lo = outer.log_radius(z);
        if (!(li < lo)) {
            std::ostringstream os;
            os << "profile crossing: inner log-radius " << li
               << " >= outer log-radius " << lo << " at z = (" << z.real() << ", "
               << z.imag() << ")";
            throw std::invalid_argument(os.str());
        }
        min_inner = std::min(min_inner, li);
        max_outer = std::max(max_outer, lo);
    };
    for (int i = 0; i < sample_resolution; ++i)
        for (int j = 0; j < sample_resolution; ++j) {
            complexd z{base.box_min_x() + (i + 0.5) * h,
                       base.box_min_y() + (j + 0.5) * h};
            if (base.signed_distance(z) < 0.0) visit(z);
        }
    int nring = 4 * sample_resolution;
    for (int k = 0; k < nring; ++k) {
        double th = 2.0 * M_PI * k / nring;
        visit(base.center() +
              base.outer_radius() * complexd(std::cos(th), std::sin(th)));
        if (!base.is_disc())
            visit(base.center() +
                  base.inner_radius() * complexd(std::cos(th), std::sin(th)));
    }
    d.min_inner_log_ = min_inner;
    d.max_outer_log_ = max_outer;
    if (tag == CaseTag::Case1) {
        d.log_scale_ = min_inner < 0.0 ? -min_inner : 0.0;
    } else {
        d.log_scale_ = max_outer > 0.0 ? -max_outer : 0.0;
    }
    return d;
}

std::pair<double, double> fiber_interval(const HartogsDomain& d, complexd z) {
    if (d.base().signed_distance(z) > 1e-9 * d.base().outer_radius())
        throw std::invalid_argument("fiber_interval: z outside base closure");
    return {std::exp(d.log_inner_radius(z)), std::exp(d.log_outer_radius(z))};
}

double fiber_distance(const HartogsDomain& d, complexd z, double absw) {
    auto [rin, rout] = fiber_interval(d, z);
    double tol = 1e-9 * rout;
    if (absw < rin - tol || absw > rout + tol)
        throw std::invalid_argument("fiber_distance: |w| outside fiber interval");
    return std::max(0.0, std::min(absw - rin, rout - absw));
}

std::vector<StratumSample> classify_strata(
    const HartogsDomain& d, const std::vector<std::pair<complexd, double>>& samples,
    int k_max, const std::function<double(complexd, double)>* user_rho,
    double fd_step, double boundary_tol, double rho_w_tol) {
    if (k_max < 1) throw std::invalid_argument("classify_strata: k_max < 1");
    std::vector<StratumSample> out;
    out.reserve(samples.size());
    for (const auto& [z, absw] : samples) {
        double rho_w;
        if (user_rho) {
            if (std::abs((*user_rho)(z, absw)) > boundary_tol)
                throw std::invalid_argument("classify_strata: sample not on the boundary surface");
            // 4th-order centered difference in |w| with half step
            double s = 0.5 * fd_step;
            auto f = [&](double r) { return (*user_rho)(z, r); };
            rho_w = (-f(absw + 2 * s) + 8 * f(absw + s) - 8 * f(absw - s) +
                     f(absw - 2 * s)) /
                    (12 * s);
        } else {
            auto [rin, rout] = fiber_interval(d, z);
            double tol = boundary_tol * std::max(1.0, rout);
            bool on_inner = std::abs(absw - rin) <= tol;
            bool on_outer = std::abs(absw - rout) <= tol;
            if (!on_inner && !on_outer)
                throw std::invalid_argument("classify_strata: sample not on the fiber boundary");
            // rho = r_in(z) - |w| on the inner side, |w| - r_out(z) on the outer
            rho_w = on_outer ? 1.0 : -1.0;
        }
        StratumSample s;
        s.z = z;
        s.absw = absw;
        s.rho_w = rho_w;
        double m = std::abs(rho_w);
        if (m < rho_w_tol) {
            s.stratum_index = 0;
        } else {
            double kk = std::ceil(1.0 / m - 1e-12);
            s.stratum_index = (kk > double(k_max)) ? 0 : std::max(1, int(kk));
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace hartogs
