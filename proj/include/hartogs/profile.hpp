#pragma once

#include <complex>
#include <string>
#include <vector>

namespace hartogs {

using complexd = std::complex<double>;

enum class LaplacianClass { Subharmonic, Superharmonic, Harmonic, Mixed };

const char* to_string(LaplacianClass c);

// Log-radius profile z -> log r(z) of a fiber boundary, from a closed
// registry of named families.  Analytic first derivative (in z) and
// Laplacian are provided per family; they feed the weight exponents and
// the certificate checks.
class RadialProfile {
  public:
    // family: one of "constant", "quadratic-radial", "ellipsoid-cap",
    // "paraboloid-cap", "mollified-plateau"
    //   constant(c):            log r = c
    //   quadratic-radial(c):    log r = c |z-z0|^2
    //   ellipsoid-cap(a1,b1):   log r = log(b1/a1) + (1/2) log(a1^2 - |z-z0|^2)
    //   paraboloid-cap(a1,b1):  log r = log(b1 |z-z0|^2 + a1)
    //   mollified-plateau(t0,k): log r = k * max(|z-z0|^2 - t0, 0)^3
    RadialProfile(std::string family, std::vector<double> params,
                  complexd center = {0.0, 0.0});

    double log_radius(complexd z) const;
    complexd log_radius_dz(complexd z) const;   // d/dz of log r
    double log_radius_lap(complexd z) const;    // Laplacian of log r
    LaplacianClass laplacian_class() const;

    const std::string& family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    complexd center() const { return center_; }

  private:
    std::string family_;
    std::vector<double> params_;
    complexd center_;
    int kind_;
};

}  // namespace hartogs
