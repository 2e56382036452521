#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hartogs/domain.hpp"
#include "hartogs/grid.hpp"
#include "hartogs/grid_function.hpp"

namespace hartogs {

// Effective weight exponent sigma with its derivative data.
// case 1: sigma = (1-n) phi; case 2: sigma = (n+1) phi.  In both cases the
// Laplacian of sigma is nonnegative where the case's profile sign class
// holds, which is the convention used by the diagnostics.
struct WeightExponent {
    int n = 0;
    CaseTag case_tag = CaseTag::Case1;
    std::function<double(complexd)> sigma;
    std::function<complexd(complexd)> sigma_dz;
    std::function<double(complexd)> sigma_lap;
};

WeightExponent weight_exponent(const HartogsDomain& d, int n);
WeightExponent zero_exponent();

struct GroundStateResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double h = 0.0;
};

// Smallest eigenvalue of the gauged magnetic form
//   inf over Dirichlet v of  int |v_z - v sigma_z|^2 / int |v|^2,
// discretized as the Schrodinger operator
//   -(1/4) Lap + (i/2)(sigma_x d_y - sigma_y d_x) + |sigma_z|^2 + (1/4) Lap sigma
// with Shortley-Weller boundary arms.
GroundStateResult magnetic_ground_state(const GridPtr& grid,
                                        const WeightExponent& w,
                                        double rel_residual = 1e-9,
                                        int max_iterations = 10000);

// Smallest Dirichlet eigenvalue of -Lap + V (Shortley-Weller 5-point).
GroundStateResult electric_ground_state(const GridPtr& grid,
                                        const std::function<double(complexd)>& V,
                                        double rel_residual = 1e-9,
                                        int max_iterations = 10000);

enum class TrendVerdict { Divergent, Bounded, Inconclusive };
const char* to_string(TrendVerdict v);

struct CompactnessReport {
    std::vector<int> modes;
    std::vector<double> lambda_m, lambda_e;
    std::vector<double> residual_m, residual_e;
    std::vector<double> epsilon;  // 1/(2 sqrt(lambda_m))
    TrendVerdict verdict = TrendVerdict::Inconclusive;
};

// Ground-state trends over a mode list on D(z0, a) (the grid's region).
// divergent: last >= 4x the first-quartile value for both energies;
// bounded: total variation over the last half <= 10% of the tail max for both;
// else inconclusive.
CompactnessReport divergence_diagnostic(const HartogsDomain& d, const GridPtr& grid,
                                        const std::vector<int>& modes,
                                        int jobs = 1);

// ||grad f||^2 / ||f||^2 for f supported in the patch disc, after checking
// Lap sigma == 0 on the patch (to tolerance) for every listed mode.
double harmonic_patch_bound(const HartogsDomain& d, const GridPtr& patch_grid,
                            const std::vector<int>& modes, const GridFunction& f,
                            double tol = 1e-8);

}  // namespace hartogs
