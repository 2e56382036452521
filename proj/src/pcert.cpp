#include "hartogs/pcert.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

namespace {

// 4th-order centered first derivative of a 1D slice
template <typename F>
double fd1(F f, double s) {
    return (-f(2.0 * s) + 8.0 * f(s) - 8.0 * f(-s) + f(-2.0 * s)) / (12.0 * s);
}

// 4th-order centered second derivative (same variable)
template <typename F>
double fd2(F f, double s) {
    return (-f(2.0 * s) + 16.0 * f(s) - 30.0 * f(0.0) + 16.0 * f(-s) - f(-2.0 * s)) /
           (12.0 * s * s);
}

struct Phi4 {
    // scalar function of (z, w) as four real coordinates
    std::function<double(complexd, complexd)> f;
    complexd z, w;
    double operator()(double dx, double dy, double du, double dv) const {
        return f(z + complexd(dx, dy), w + complexd(du, dv));
    }
};

}  // namespace

CertificateSpec::CertificateSpec(double M_, double M1_,
                                 std::function<double(complexd)> bM,
                                 std::vector<StratumSample> samples_)
    : M(M_), M1(M1_), b_M(std::move(bM)), samples(std::move(samples_)) {
    if (!(M > 0.0) || !(M1 > 0.0))
        throw std::invalid_argument("CertificateSpec: M and M1 must be positive");
    for (const auto& s : samples)
        if (std::abs(b_M(s.z)) > 0.5 + 1e-12)
            throw std::invalid_argument("CertificateSpec: |b_M| <= 1/2 violated");
}

std::function<double(complexd)> zero_b_m() {
    return [](complexd) { return 0.0; };
}

std::function<double(complexd)> bump_b_m(complexd center, double radius,
                                         double height) {
    if (std::abs(height) > 0.5)
        throw std::invalid_argument("bump_b_m: |height| must be <= 1/2");
    return [=](complexd z) {
        double r = std::abs(z - center) / radius;
        if (r >= 1.0) return 0.0;
        double x = 1.0 - r;
        return height * x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
    };
}

double certificate_function(double M1, const std::function<double(complexd)>& b_M,
                            const std::function<double(complexd)>& phi, complexd z,
                            complexd w) {
    return M1 * (std::norm(w) * std::exp(phi(z)) - 1.0) + b_M(z);
}

PropertyPCheck tangential_hessian_check(const HartogsDomain& d,
                                        const CertificateSpec& spec,
                                        double fd_step, double tol) {
    PropertyPCheck out;
    out.min_hessian = std::numeric_limits<double>::infinity();
    for (const auto& sample : spec.samples) {
        SampleHessian sh;
        sh.z = sample.z;
        sh.absw = sample.absw;
        complexd w = complexd(sample.absw, 0.0);

        // side of the fiber boundary the sample lies on
        auto [rin, rout] = fiber_interval(d, sample.z);
        bool outer = std::abs(sample.absw - rout) <= std::abs(sample.absw - rin);
        auto log_r = [&](complexd z) {
            return outer ? d.log_outer_radius(z) : d.log_inner_radius(z);
        };
        auto rho = [&](complexd z, complexd ww) {
            double r = std::exp(log_r(z));
            return outer ? std::abs(ww) - r : r - std::abs(ww);
        };
        // the active exponent of this side: boundary is |w| = e^{-phi_side}
        auto phi_side = [&](complexd z) { return -log_r(z); };
        auto g = [&](complexd z, complexd ww) {
            return certificate_function(spec.M1, spec.b_M, phi_side, z, ww);
        };

        double s = fd_step * std::max(1.0, sample.absw);
        Phi4 R{rho, sample.z, w};
        double rx = fd1([&](double t) { return R(t, 0, 0, 0); }, s);
        double ry = fd1([&](double t) { return R(0, t, 0, 0); }, s);
        double ru = fd1([&](double t) { return R(0, 0, t, 0); }, s);
        double rv = fd1([&](double t) { return R(0, 0, 0, t); }, s);
        complexd rho_z = 0.5 * complexd(rx, -ry);
        complexd rho_w = 0.5 * complexd(ru, -rv);
        double gn = std::sqrt(std::norm(rho_z) + std::norm(rho_w));
        if (gn < 1e-8) {
            sh.rejected = true;
            ++out.rejected;
            out.details.push_back(sh);
            continue;
        }
        complexd W1 = -rho_w / gn, W2 = rho_z / gn;

        Phi4 G{g, sample.z, w};
        double gxx = fd2([&](double t) { return G(t, 0, 0, 0); }, s);
        double gyy = fd2([&](double t) { return G(0, t, 0, 0); }, s);
        double guu = fd2([&](double t) { return G(0, 0, t, 0); }, s);
        double gvv = fd2([&](double t) { return G(0, 0, 0, t); }, s);
        auto mixed = [&](auto slice) {
            return fd1([&](double t1) {
                return fd1([&](double t2) { return slice(t1, t2); }, s);
            }, s);
        };
        double gxu = mixed([&](double t1, double t2) { return G(t1, 0, t2, 0); });
        double gyv = mixed([&](double t1, double t2) { return G(0, t1, 0, t2); });
        double gxv = mixed([&](double t1, double t2) { return G(t1, 0, 0, t2); });
        double gyu = mixed([&](double t1, double t2) { return G(0, t1, t2, 0); });

        double g_zzb = 0.25 * (gxx + gyy);
        double g_wwb = 0.25 * (guu + gvv);
        complexd g_zwb = 0.25 * complexd(gxu + gyv, gxv - gyu);

        double H = g_zzb * std::norm(W1) + g_wwb * std::norm(W2) +
                   2.0 * (g_zwb * W1 * std::conj(W2)).real();
        sh.hessian = H;
        sh.g_value = g(sample.z, w);
        out.max_abs_g = std::max(out.max_abs_g, std::abs(sh.g_value));
        out.min_hessian = std::min(out.min_hessian, H);
        ++out.accepted;
        out.details.push_back(sh);
    }
    if (out.accepted == 0) out.min_hessian = 0.0;
    out.pass = out.max_abs_g <= 1.0 + tol && out.min_hessian >= spec.M - tol;
    return out;
}

CertificateSweep sweep_certificate(const HartogsDomain& d, double M,
                                   const std::function<double(complexd)>& b_M,
                                   const std::vector<StratumSample>& samples,
                                   const std::vector<double>& m1_grid,
                                   double fd_step, double tol) {
    CertificateSweep sw;
    sw.m1_grid = m1_grid;
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m1_grid.size(); ++i) {
        CertificateSpec spec(M, m1_grid[i], b_M, samples);
        PropertyPCheck chk = tangential_hessian_check(d, spec, fd_step, tol);
        if (chk.max_abs_g <= 1.0 + tol && chk.min_hessian > best) {
            best = chk.min_hessian;
            sw.best_index = int(i);
        }
        sw.checks.push_back(std::move(chk));
    }
    return sw;
}

}  // namespace hartogs
