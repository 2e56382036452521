#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/profile.hpp"
#include "hartogs/region.hpp"

namespace hartogs {

enum class CaseTag { Case1, Case2 };  // Case1: inner boundary active, |w|>1
                                      // Case2: outer boundary active, |w|<1

// Rotation-invariant domain over a planar base: z in base,
// r_in(z) < |w| < r_out(z).  After construction the fibers are normalized
// (w scaled by fiber_scale) so that case-1 fibers sit in {|w| >= 1} and
// case-2 fibers in {|w| <= 1}.
class HartogsDomain {
  public:
    const Region& base() const { return base_; }
    CaseTag case_tag() const { return case_; }
    double fiber_scale() const { return std::exp(log_scale_); }
    double log_fiber_scale() const { return log_scale_; }
    const RadialProfile& inner_profile() const { return inner_; }
    const RadialProfile& outer_profile() const { return outer_; }

    double log_inner_radius(complexd z) const { return inner_.log_radius(z) + log_scale_; }
    double log_outer_radius(complexd z) const { return outer_.log_radius(z) + log_scale_; }

    // active exponent phi and cap exponent alpha of the normalized domain:
    // case 1: boundary |w| = e^{-phi} at the inner side, cap e^{-alpha} outer;
    // case 2: boundary |w| = e^{-phi} at the outer side, cap e^{-alpha} inner.
    double phi(complexd z) const;
    complexd phi_dz(complexd z) const;
    double phi_lap(complexd z) const;
    double alpha(complexd z) const;

    // extremes of the normalized radii over the base sample used at
    // construction time (reported for the normalization invariant)
    double min_inner_radius() const { return std::exp(min_inner_log_ + log_scale_); }
    double max_outer_radius() const { return std::exp(max_outer_log_ + log_scale_); }

  private:
    friend HartogsDomain make_domain(const Region&, const RadialProfile&,
                                     const RadialProfile&, CaseTag, int);
    HartogsDomain(Region base, RadialProfile inner, RadialProfile outer,
                  CaseTag tag)
        : base_(base), inner_(std::move(inner)), outer_(std::move(outer)),
          case_(tag) {}

    Region base_;
    RadialProfile inner_, outer_;
    CaseTag case_;
    double log_scale_ = 0.0;
    double min_inner_log_ = 0.0, max_outer_log_ = 0.0;
};

// Validates inner < outer on a sample grid over the base closure and applies
// the per-case fiber normalization.  Throws on profile crossing, naming the
// offending sample point.
HartogsDomain make_domain(const Region& base, const RadialProfile& inner,
                          const RadialProfile& outer, CaseTag tag,
                          int sample_resolution = 64);

// (r_in, r_out) of the fiber annulus over z; z must lie in the base closure.
std::pair<double, double> fiber_interval(const HartogsDomain& d, complexd z);

// distance from |w| to the fiber annulus boundary
double fiber_distance(const HartogsDomain& d, complexd z, double absw);

struct StratumSample {
    complexd z;
    double absw = 0.0;
    double rho_w = 0.0;      // d rho / d|w| at the sample
    int stratum_index = 0;   // 0 = degenerate bucket, else smallest k with 1/k <= |rho_w|
};

// Classify fiber-boundary samples (z, |w|) into strata by |rho_{|w|}|.
// With no user rho, rho is the signed fiber-radial distance derived from the
// active profile (rho_w = +-1 on the respective side).  A user-supplied
// rho(z, |w|) is differentiated numerically (4th-order, step derived from
// fd_step).
std::vector<StratumSample> classify_strata(
    const HartogsDomain& d, const std::vector<std::pair<complexd, double>>& samples,
    int k_max,
    const std::function<double(complexd, double)>* user_rho = nullptr,
    double fd_step = 1e-3, double boundary_tol = 1e-6, double rho_w_tol = 1e-10);

}  // namespace hartogs
