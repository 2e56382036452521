#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hartogs/domain.hpp"

namespace hartogs {

// Certificate data: target Hessian bound M, scale M1, and the bounded
// auxiliary function b_M with |b_M| <= 1/2.
struct CertificateSpec {
    double M = 1.0;
    double M1 = 1.0;
    std::function<double(complexd)> b_M;
    std::vector<StratumSample> samples;

    CertificateSpec(double M_, double M1_, std::function<double(complexd)> bM,
                    std::vector<StratumSample> samples_);
};

// b_M candidates: zero, and a scaled smoothstep bump on D(center, radius)
std::function<double(complexd)> zero_b_m();
std::function<double(complexd)> bump_b_m(complexd center, double radius,
                                         double height);

// g(z,w) = M1 (|w|^2 e^{phi(z)} - 1) + b_M(z)
double certificate_function(double M1, const std::function<double(complexd)>& b_M,
                            const std::function<double(complexd)>& phi, complexd z,
                            complexd w);

struct SampleHessian {
    complexd z;
    double absw = 0.0;
    double hessian = 0.0;  // complex Hessian of g on the unit tangential direction
    double g_value = 0.0;
    bool rejected = false;  // degenerate gradient (near the |rho_w|=0 stratum)
};

struct PropertyPCheck {
    double max_abs_g = 0.0;
    double min_hessian = 0.0;
    bool pass = false;
    int accepted = 0;
    int rejected = 0;
    std::vector<SampleHessian> details;
};

// Evaluates the certificate's complex Hessian on unit complex tangential
// directions at the stratum samples (4th-order finite differences of the
// side's defining function and of g), and checks |g| <= 1, H >= M.
PropertyPCheck tangential_hessian_check(const HartogsDomain& d,
                                        const CertificateSpec& spec,
                                        double fd_step = 1e-3, double tol = 1e-6);

struct CertificateSweep {
    std::vector<double> m1_grid;
    std::vector<PropertyPCheck> checks;
    int best_index = -1;  // largest min Hessian among passes of the |g|<=1 gate
};

// Sweeps M1 over a log grid and reports the best achieved bound.
CertificateSweep sweep_certificate(const HartogsDomain& d, double M,
                                   const std::function<double(complexd)>& b_M,
                                   const std::vector<StratumSample>& samples,
                                   const std::vector<double>& m1_grid,
                                   double fd_step = 1e-3, double tol = 1e-6);

}  // namespace hartogs
