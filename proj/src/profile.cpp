#include "hartogs/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

namespace {
enum Kind { kConstant, kQuadratic, kEllipsoid, kParaboloid, kPlateau };

int kind_of(const std::string& family, size_t nparams) {
    auto need = [&](size_t n) {
        if (nparams != n)
            throw std::invalid_argument("profile family '" + family + "' expects " +
                                        std::to_string(n) + " parameter(s)");
    };
    if (family == "constant") { need(1); return kConstant; }
    if (family == "quadratic-radial") { need(1); return kQuadratic; }
    if (family == "ellipsoid-cap") { need(2); return kEllipsoid; }
    if (family == "paraboloid-cap") { need(2); return kParaboloid; }
    if (family == "mollified-plateau") { need(2); return kPlateau; }
    throw std::invalid_argument("unknown profile family '" + family + "'");
}
}  // namespace

const char* to_string(LaplacianClass c) {
    switch (c) {
        case LaplacianClass::Subharmonic: return "subharmonic";
        case LaplacianClass::Superharmonic: return "superharmonic";
        case LaplacianClass::Harmonic: return "harmonic";
        default: return "mixed";
    }
}

RadialProfile::RadialProfile(std::string family, std::vector<double> params,
                             complexd center)
    : family_(std::move(family)), params_(std::move(params)), center_(center),
      kind_(kind_of(family_, params_.size())) {
    if (kind_ == kEllipsoid && !(params_[0] > 0.0 && params_[1] > 0.0))
        throw std::invalid_argument("ellipsoid-cap requires a1, b1 > 0");
    if (kind_ == kParaboloid && !(params_[0] > 0.0 && params_[1] >= 0.0))
        throw std::invalid_argument("paraboloid-cap requires a1 > 0, b1 >= 0");
}

double RadialProfile::log_radius(complexd z) const {
    double t = std::norm(z - center_);
    switch (kind_) {
        case kConstant: return params_[0];
        case kQuadratic: return params_[0] * t;
        case kEllipsoid: {
            double a1 = params_[0], b1 = params_[1];
            double s = a1 * a1 - t;
            if (!(s > 0.0))
                throw std::domain_error("ellipsoid-cap profile evaluated at |z-z0| >= a1");
            return std::log(b1 / a1) + 0.5 * std::log(s);
        }
        case kParaboloid: return std::log(params_[1] * t + params_[0]);
        default: {  // plateau
            double H = std::max(t - params_[0], 0.0);
            return params_[1] * H * H * H;
        }
    }
}

complexd RadialProfile::log_radius_dz(complexd z) const {
    complexd zb = std::conj(z - center_);
    double t = std::norm(z - center_);
    switch (kind_) {
        case kConstant: return {0.0, 0.0};
        case kQuadratic: return params_[0] * zb;
        case kEllipsoid: {
            double s = params_[0] * params_[0] - t;
            return -0.5 * zb / s;
        }
        case kParaboloid: {
            double a1 = params_[0], b1 = params_[1];
            return b1 * zb / (b1 * t + a1);
        }
        default: {
            double H = std::max(t - params_[0], 0.0);
            return 3.0 * params_[1] * H * H * zb;
        }
    }
}

double RadialProfile::log_radius_lap(complexd z) const {
    double t = std::norm(z - center_);
    switch (kind_) {
        case kConstant: return 0.0;
        case kQuadratic: return 4.0 * params_[0];
        case kEllipsoid: {
            double a1 = params_[0];
            double s = a1 * a1 - t;
            return -2.0 * a1 * a1 / (s * s);
        }
        case kParaboloid: {
            double a1 = params_[0], b1 = params_[1];
            double d = b1 * t + a1;
            return 4.0 * a1 * b1 / (d * d);
        }
        default: {
            double H = std::max(t - params_[0], 0.0);
            return 12.0 * params_[1] * H * (2.0 * t + H);
        }
    }
}

LaplacianClass RadialProfile::laplacian_class() const {
    switch (kind_) {
        case kConstant: return LaplacianClass::Harmonic;
        case kQuadratic:
            if (params_[0] > 0.0) return LaplacianClass::Subharmonic;
            if (params_[0] < 0.0) return LaplacianClass::Superharmonic;
            return LaplacianClass::Harmonic;
        case kEllipsoid: return LaplacianClass::Superharmonic;
        case kParaboloid:
            return params_[1] == 0.0 ? LaplacianClass::Harmonic
                                     : LaplacianClass::Subharmonic;
        default:
            return params_[1] >= 0.0 ? LaplacianClass::Subharmonic
                                     : LaplacianClass::Superharmonic;
    }
}

}  // namespace hartogs
