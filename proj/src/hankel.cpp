#include "hartogs/hankel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hartogs/annulus.hpp"
#include "hartogs/cauchy.hpp"
#include "hartogs/mode_norms.hpp"

namespace hartogs {

namespace {
constexpr double kPi = std::numbers::pi;

double quintic_smoothstep(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

// 24-point Gauss-Legendre nodes/weights on [-1,1] (radial fiber quadrature)
void gauss24(std::vector<double>& x, std::vector<double>& w) {
    static const double nodes[12] = {
        0.0640568928626056, 0.1911188674736163, 0.3150426796961634,
        0.4337935076260451, 0.5454214713888396, 0.6480936519369755,
        0.7401241915785544, 0.8200019859739029, 0.8864155270044011,
        0.9382745520027328, 0.9747285559713095, 0.9951872199970213};
    static const double wts[12] = {
        0.1279381953467522, 0.1258374563468283, 0.1216704729278034,
        0.1155056680537256, 0.1074442701159656, 0.0976186521041139,
        0.0861901615319533, 0.0733464814110803, 0.0592985849154368,
        0.0442774388174198, 0.0285313886289337, 0.0123412297999872};
    x.resize(24);
    w.resize(24);
    for (int i = 0; i < 12; ++i) {
        x[11 - i] = -nodes[i];
        x[12 + i] = nodes[i];
        w[11 - i] = wts[i];
        w[12 + i] = wts[i];
    }
}

// fiber integral of r^(2m) over the annulus by Gauss quadrature (times 2*pi r dr)
double fiber_radial_quad(double rin, double rout, int m,
                         const std::vector<double>& gx,
                         const std::vector<double>& gw) {
    double mid = 0.5 * (rin + rout), half = 0.5 * (rout - rin);
    double s = 0.0;
    for (size_t i = 0; i < gx.size(); ++i) {
        double r = mid + half * gx[i];
        s += gw[i] * std::pow(r, 2.0 * m + 1.0);
    }
    return 2.0 * kPi * half * s;
}

}  // namespace

SymbolSpec::SymbolSpec(std::string name_, GridFunction beta_, complexd z0, double a)
    : name(std::move(name_)), beta(std::move(beta_)), center(z0), support_radius(a) {
    if (!beta.all_finite())
        throw std::invalid_argument("SymbolSpec: beta must be bounded");
    const PlanarGrid& g = beta.grid();
    const auto& cov = g.coverage();
    const auto& qp = g.quad_points();
    for (int p = 0; p < g.num_cells(); ++p) {
        if (cov[p] <= 0.0 || beta[p] == complexd{0.0, 0.0}) continue;
        if (std::abs(qp[p] - z0) >= a)
            throw std::invalid_argument(
                "SymbolSpec: beta support must lie strictly inside D(z0, a)");
    }
}

SymbolSpec default_bump_symbol(const GridPtr& grid, complexd z0, double a) {
    GridFunction beta(grid, [&](complexd z) -> complexd {
        double r = std::abs(z - z0);
        if (r >= 0.9 * a) return {0.0, 0.0};
        if (r <= 0.6 * a) return {1.0, 0.0};
        return {quintic_smoothstep((0.9 * a - r) / (0.3 * a)), 0.0};
    });
    return SymbolSpec("bump", std::move(beta), z0, a);
}

ModeFunction hankel_mode(const HartogsDomain& d, const SymbolSpec& s, int n,
                         int degree) {
    FiberWeight fw = fiber_weight(d, n, s.beta.grid_ptr());
    CanonicalSolution sol = canonical_solution(fw.w, s.beta, degree);
    return {std::move(sol.g), mode_exponent(d.case_tag(), n), d.case_tag()};
}

double hankel_mode_norm_ratio(const HartogsDomain& d, const SymbolSpec& s, int n,
                              int degree) {
    ModeFunction mf = hankel_mode(d, s, n, degree);
    double qn = mode_l2_norm(d, mf.coeff, mf.mode);
    GridFunction one(s.beta.grid_ptr(), [](complexd) { return complexd{1.0, 0.0}; });
    double on = mode_l2_norm(d, one, mf.mode);
    return std::sqrt(qn / on);
}

const char* to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::ConsistentWithCompact: return "consistent-with-compact";
        case ProbeVerdict::ViolatesEstimate: return "violates-estimate";
        default: return "inconclusive";
    }
}

CompactnessProbe compactness_probe(const std::vector<int>& modes,
                                   const std::vector<double>& q,
                                   const std::vector<double>& s,
                                   const std::vector<double>& t,
                                   const std::vector<double>& eps_grid) {
    size_t k = modes.size();
    if (q.size() != k || s.size() != k || t.size() != k)
        throw std::invalid_argument("compactness_probe: mismatched sequence lengths");
    if (k < 8)
        throw std::invalid_argument("compactness_probe: need at least 8 modes");
    for (double v : s)
        if (!(v > 0.0))
            throw std::invalid_argument("compactness_probe: s must be positive");
    CompactnessProbe probe;
    probe.modes = modes;
    probe.q = q;
    probe.s = s;
    probe.t = t;
    probe.eps_grid = eps_grid;
    for (double eps : eps_grid) {
        std::vector<double> c(k);
        for (size_t i = 0; i < k; ++i)
            c[i] = std::max(0.0, (q[i] - eps * s[i]) / std::max(t[i], 1e-300));
        probe.C_eps.push_back(*std::max_element(c.begin(), c.end()));
        probe.c_eps.push_back(std::move(c));
    }
    // violates-estimate: some eps needs a constant that keeps growing along
    // the tail (monotone over the last half, overall factor > 4)
    size_t start = k - k / 2;
    bool violates = false;
    for (const auto& c : probe.c_eps) {
        bool monotone = c[start] > 0.0;
        for (size_t i = start + 1; i < k && monotone; ++i)
            if (c[i] < c[i - 1] * (1.0 - 1e-9)) monotone = false;
        if (monotone && c[k - 1] > 4.0 * c[start]) violates = true;
    }
    if (violates) {
        probe.verdict = ProbeVerdict::ViolatesEstimate;
        return probe;
    }
    double qs_max = 0.0;
    for (size_t i = 0; i < k; ++i) qs_max = std::max(qs_max, q[i] / s[i]);
    if (q[k - 1] / s[k - 1] <= 0.25 * qs_max)
        probe.verdict = ProbeVerdict::ConsistentWithCompact;
    else
        probe.verdict = ProbeVerdict::Inconclusive;
    return probe;
}

ProbeSequences probe_sequences(const HartogsDomain& d, const SymbolSpec& sym,
                               const std::vector<int>& modes, int degree,
                               int jobs) {
    ProbeSequences out;
    out.modes = modes;
    size_t k = modes.size();
    out.q.resize(k);
    out.s.resize(k);
    out.t.resize(k);
    out.ratio.resize(k);
    // the particular solution is mode independent; compute it once
    GridFunction g0 = cauchy_particular(sym.beta);
    GridFunction one(sym.beta.grid_ptr(), [](complexd) { return complexd{1.0, 0.0}; });
    const Region& reg = sym.beta.grid().region();

    auto work = [&](size_t i) {
        int n = modes[i];
        FiberWeight fw = fiber_weight(d, n, sym.beta.grid_ptr());
        WeightedBasis basis(sym.beta.grid_ptr(), fw.w, degree, reg.center(),
                            reg.outer_radius());
        GridFunction g = g0;
        g -= basis.project(g0);
        int mode = mode_exponent(d.case_tag(), n);
        double qn = mode_l2_norm(d, g, mode);
        double bn = mode_l2_norm(d, sym.beta, mode);
        double onn = mode_l2_norm(d, one, mode);
        out.q[i] = qn;
        out.s[i] = std::sqrt(bn) * std::sqrt(onn);
        out.t[i] = std::sqrt(bn) * sobolev_surrogate_ratio(d, sym.beta, mode) *
                   std::sqrt(onn);
        out.ratio[i] = std::sqrt(qn / onn);
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < k; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (size_t i = next++; i < k; i = next++) work(i);
            });
        for (auto& t : pool) t.join();
    }
    return out;
}

ModeReductionReport verify_mode_reduction(const HartogsDomain& d,
                                          const SymbolSpec& sym, int n,
                                          int z_degree, int m_window) {
    ModeReductionReport rep;
    const GridPtr grid = sym.beta.grid_ptr();
    const PlanarGrid& g = *grid;
    const Region& reg = g.region();
    const auto& cov = g.coverage();
    const auto& qp = g.quad_points();
    double h2 = g.spacing() * g.spacing();
    int mode = mode_exponent(d.case_tag(), n);

    std::vector<double> gx, gw;
    gauss24(gx, gw);

    // 1D route: canonical solution with the closed-form weight
    FiberWeight fw = fiber_weight(d, n, grid);
    CanonicalSolution sol = canonical_solution(fw.w, sym.beta, z_degree);
    const GridFunction& gn = sol.g;
    const GridFunction& psi = sol.particular;  // psi_zbar = beta

    // (i) cross-mode pairings: the angular factor of <g_n w^mode, z^k w^m>
    // over a 128-point trapezoid rule, m != mode in the window
    const int nth = 128;
    for (int m = mode - m_window; m <= mode + m_window; ++m) {
        if (m == mode) continue;
        complexd acc{0.0, 0.0};
        for (int l = 0; l < nth; ++l) {
            double th = 2.0 * kPi * l / nth;
            acc += std::polar(1.0, (mode - m) * th);
        }
        acc /= double(nth);
        rep.cross_mode_max = std::max(rep.cross_mode_max, std::abs(acc));
    }

    // (ii) weighted 1D pairing vs 2D quadrature pairing at m = mode
    // and (iii) direct truncated-Gram Hankel application
    int mdim = z_degree + 1;
    Eigen::MatrixXcd G2 = Eigen::MatrixXcd::Zero(mdim, mdim);
    Eigen::VectorXcd b2 = Eigen::VectorXcd::Zero(mdim);
    double pairing_worst = 0.0;
    std::vector<complexd> mono(mdim);
    std::vector<complexd> p1(mdim, complexd{0, 0}), p2(mdim, complexd{0, 0});
    for (int p = 0; p < g.num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        auto [rin, rout] = fiber_interval(d, qp[p]);
        double rq = fiber_radial_quad(rin, rout, mode, gx, gw);
        double rcf = fw.w[p].value();  // closed-form fiber moment
        complexd zb = (qp[p] - reg.center()) / reg.outer_radius();
        mono[0] = {1.0, 0.0};
        for (int k = 1; k < mdim; ++k) mono[k] = mono[k - 1] * zb;
        double wq = rq * cov[p] * h2, wc = rcf * cov[p] * h2;
        for (int k = 0; k < mdim; ++k) {
            p1[k] += gn[p] * std::conj(mono[k]) * wc;
            p2[k] += gn[p] * std::conj(mono[k]) * wq;
            b2[k] += psi[p] * std::conj(mono[k]) * wq;
            for (int j = k; j < mdim; ++j)
                G2(k, j) += std::conj(mono[k]) * mono[j] * wq;
        }
    }
    G2 = G2.selfadjointView<Eigen::Upper>();
    for (int k = 0; k < mdim; ++k) {
        double scale = std::max({std::abs(p1[k]), std::abs(p2[k]), 1e-300});
        pairing_worst = std::max(pairing_worst, std::abs(p1[k] - p2[k]) / scale);
    }
    rep.pairing_rel_err = pairing_worst;

    Eigen::VectorXcd c2 = G2.ldlt().solve(b2);
    // residual field of the 2D route vs the 1D coefficient, in the 2D norm
    double num = 0.0, den = 0.0;
    for (int p = 0; p < g.num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        auto [rin, rout] = fiber_interval(d, qp[p]);
        double rq = fiber_radial_quad(rin, rout, mode, gx, gw);
        complexd zb = (qp[p] - reg.center()) / reg.outer_radius();
        complexd acc{0.0, 0.0}, zk{1.0, 0.0};
        for (int k = 0; k < mdim; ++k) {
            acc += c2[k] * zk;
            zk *= zb;
        }
        complexd h2d = psi[p] - acc;  // truncated (I-B)(psi w^mode) coefficient
        num += std::norm(h2d - gn[p]) * rq * cov[p] * h2;
        den += std::norm(gn[p]) * rq * cov[p] * h2;
    }
    rep.field_rel_dev = std::sqrt(num / std::max(den, 1e-300));
    return rep;
}

}  // namespace hartogs
