#include "hartogs/spectral.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hartogs {

namespace {

using SpMatC = Eigen::SparseMatrix<complexd>;
using TripC = Eigen::Triplet<complexd>;

struct MaskIndex {
    std::vector<int> cell_of;   // unknown -> cell
    std::vector<int> unknown;   // cell -> unknown or -1
    int count = 0;
};

MaskIndex build_mask(const PlanarGrid& g) {
    MaskIndex m;
    m.unknown.assign(g.num_cells(), -1);
    const auto& sd = g.signed_distances();
    for (int p = 0; p < g.num_cells(); ++p) {
        if (sd[p] < 0.0) {
            m.unknown[p] = m.count++;
            m.cell_of.push_back(p);
        }
    }
    return m;
}

// Shortley-Weller arm data for one cell: neighbor unknowns (or -1 for a
// boundary-cut arm) and arm fractions theta in (0,1].
struct Arms {
    int nbr[4];
    double th[4];
};

Arms cell_arms(const PlanarGrid& g, const MaskIndex& m, int i, int j) {
    Arms a;
    const int res = g.resolution();
    const double h = g.spacing();
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    complexd c = g.cell_center(i, j);
    for (int k = 0; k < 4; ++k) {
        int ii = i + di[k], jj = j + dj[k];
        bool in = ii >= 0 && ii < res && jj >= 0 && jj < res &&
                  g.signed_distances()[g.index(ii, jj)] < 0.0;
        if (in) {
            a.nbr[k] = m.unknown[g.index(ii, jj)];
            a.th[k] = 1.0;
        } else {
            a.nbr[k] = -1;
            complexd step{di[k] * h, dj[k] * h};
            double t = g.region().boundary_fraction(c, step);
            a.th[k] = std::clamp(t, 1e-6, 1.0);
        }
    }
    return a;
}

// Inverse iteration with Rayleigh-quotient re-shifting; targets the smallest
// eigenvalue starting from the all-ones vector.
struct EigResult {
    double value;
    double residual;
    int iterations;
};

EigResult smallest_eigenvalue(const SpMatC& A, double rel_residual,
                              int max_iterations) {
    const int n = int(A.rows());
    Eigen::SparseLU<SpMatC> lu;
    double shift = 0.0;
    SpMatC I(n, n);
    I.setIdentity();
    auto factor = [&](double mu) {
        SpMatC As = A - mu * I;
        lu.compute(As);
        return lu.info() == Eigen::Success;
    };
    if (!factor(0.0))
        throw std::runtime_error("eigensolver: factorization failed at shift 0");

    Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n);
    x.normalize();
    double lam = 0.0, res = 1.0;
    int refactors = 0;
    double last_res = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iterations; ++it) {
        Eigen::VectorXcd y = lu.solve(x);
        y.normalize();
        Eigen::VectorXcd Ay = A * y;
        lam = (y.adjoint() * Ay)(0).real();
        res = (Ay - lam * y).norm() / std::max(std::abs(lam), 1e-300);
        x = y;
        if (res < rel_residual) return {lam, res, it};
        if (it % 10 == 0) {
            bool stalled = res > 0.3 * last_res;
            last_res = res;
            if (stalled && refactors < 8) {
                double delta = std::max(2.0 * res * std::abs(lam), 1e-10 * std::abs(lam));
                double mu = lam - delta;
                if (factor(mu)) {
                    shift = mu;
                    ++refactors;
                } else {
                    factor(shift);  // restore
                }
            }
        }
    }
    return {lam, res, max_iterations};
}

}  // namespace

WeightExponent weight_exponent(const HartogsDomain& d, int n) {
    WeightExponent w;
    w.n = n;
    w.case_tag = d.case_tag();
    double c = d.case_tag() == CaseTag::Case1 ? (1.0 - n) : (n + 1.0);
    w.sigma = [c, d](complexd z) { return c * d.phi(z); };
    w.sigma_dz = [c, d](complexd z) { return c * d.phi_dz(z); };
    w.sigma_lap = [c, d](complexd z) { return c * d.phi_lap(z); };
    return w;
}

WeightExponent zero_exponent() {
    WeightExponent w;
    w.sigma = [](complexd) { return 0.0; };
    w.sigma_dz = [](complexd) { return complexd{0.0, 0.0}; };
    w.sigma_lap = [](complexd) { return 0.0; };
    return w;
}

GroundStateResult magnetic_ground_state(const GridPtr& grid,
                                        const WeightExponent& w,
                                        double rel_residual, int max_iterations) {
    const PlanarGrid& g = *grid;
    MaskIndex m = build_mask(g);
    if (m.count == 0) throw std::invalid_argument("magnetic_ground_state: empty mask");
    const double h = g.spacing();
    const int res = g.resolution();
    std::vector<TripC> trips;
    trips.reserve(size_t(m.count) * 9);
    for (int u = 0; u < m.count; ++u) {
        int p = m.cell_of[u];
        int i = p / res, j = p % res;
        Arms a = cell_arms(g, m, i, j);
        complexd c = g.cell_center(i, j);
        complexd sz = w.sigma_dz(c);
        double sx = 2.0 * sz.real(), sy = -2.0 * sz.imag();  // sigma_x, sigma_y
        complexd diag{0.0, 0.0};
        // -(1/4) Lap with Shortley-Weller arms; pairs (x+,x-), (y+,y-)
        for (int pair = 0; pair < 2; ++pair) {
            int kp = 2 * pair, km = 2 * pair + 1;
            double tp = a.th[kp], tm = a.th[km];
            diag += 0.25 * 2.0 / (tp * tm * h * h);
            if (a.nbr[kp] >= 0)
                trips.emplace_back(u, a.nbr[kp],
                                   complexd{-0.25 * 2.0 / (tp * (tp + tm) * h * h), 0.0});
            if (a.nbr[km] >= 0)
                trips.emplace_back(u, a.nbr[km],
                                   complexd{-0.25 * 2.0 / (tm * (tp + tm) * h * h), 0.0});
        }
        // (i/2)(sigma_x d_y - sigma_y d_x), generalized central differences
        struct {
            complexd coef;
            int kp, km;
        } first[2] = {{complexd{0.0, 0.5} * sx, 2, 3}, {complexd{0.0, -0.5} * sy, 0, 1}};
        for (auto& f : first) {
            double tp = a.th[f.kp], tm = a.th[f.km];
            double den = tp * tm * (tp + tm) * h;
            if (a.nbr[f.kp] >= 0) trips.emplace_back(u, a.nbr[f.kp], f.coef * (tm * tm / den));
            if (a.nbr[f.km] >= 0) trips.emplace_back(u, a.nbr[f.km], -f.coef * (tp * tp / den));
            diag += f.coef * ((tp * tp - tm * tm) / den);
        }
        diag += std::norm(sz) + 0.25 * w.sigma_lap(c);
        trips.emplace_back(u, u, diag);
    }
    SpMatC A(m.count, m.count);
    A.setFromTriplets(trips.begin(), trips.end());
    EigResult e = smallest_eigenvalue(A, rel_residual, max_iterations);
    if (e.residual > 1e-8)
        throw std::runtime_error("magnetic_ground_state: eigensolver did not reach "
                                 "the residual target; residual " +
                                 std::to_string(e.residual));
    return {e.value, e.residual, e.iterations, h};
}

GroundStateResult electric_ground_state(const GridPtr& grid,
                                        const std::function<double(complexd)>& V,
                                        double rel_residual, int max_iterations) {
    const PlanarGrid& g = *grid;
    MaskIndex m = build_mask(g);
    if (m.count == 0) throw std::invalid_argument("electric_ground_state: empty mask");
    const double h = g.spacing();
    const int res = g.resolution();
    std::vector<TripC> trips;
    trips.reserve(size_t(m.count) * 5);
    for (int u = 0; u < m.count; ++u) {
        int p = m.cell_of[u];
        int i = p / res, j = p % res;
        Arms a = cell_arms(g, m, i, j);
        double diag = V(g.cell_center(i, j));
        for (int pair = 0; pair < 2; ++pair) {
            int kp = 2 * pair, km = 2 * pair + 1;
            double tp = a.th[kp], tm = a.th[km];
            diag += 2.0 / (tp * tm * h * h);
            if (a.nbr[kp] >= 0)
                trips.emplace_back(u, a.nbr[kp],
                                   complexd{-2.0 / (tp * (tp + tm) * h * h), 0.0});
            if (a.nbr[km] >= 0)
                trips.emplace_back(u, a.nbr[km],
                                   complexd{-2.0 / (tm * (tp + tm) * h * h), 0.0});
        }
        trips.emplace_back(u, u, complexd{diag, 0.0});
    }
    SpMatC A(m.count, m.count);
    A.setFromTriplets(trips.begin(), trips.end());
    EigResult e = smallest_eigenvalue(A, rel_residual, max_iterations);
    if (e.residual > 1e-8)
        throw std::runtime_error("electric_ground_state: eigensolver did not reach "
                                 "the residual target; residual " +
                                 std::to_string(e.residual));
    return {e.value, e.residual, e.iterations, h};
}

const char* to_string(TrendVerdict v) {
    switch (v) {
        case TrendVerdict::Divergent: return "divergent";
        case TrendVerdict::Bounded: return "bounded";
        default: return "inconclusive";
    }
}

CompactnessReport divergence_diagnostic(const HartogsDomain& d, const GridPtr& grid,
                                        const std::vector<int>& modes, int jobs) {
    if (modes.size() < 6)
        throw std::invalid_argument("divergence_diagnostic: need at least 6 modes");
    CompactnessReport rep;
    rep.modes = modes;
    size_t k = modes.size();
    rep.lambda_m.resize(k);
    rep.lambda_e.resize(k);
    rep.residual_m.resize(k);
    rep.residual_e.resize(k);
    rep.epsilon.resize(k);

    auto work = [&](size_t idx) {
        WeightExponent w = weight_exponent(d, modes[idx]);
        auto gm = magnetic_ground_state(grid, w);
        auto ge = electric_ground_state(grid, [&](complexd z) { return w.sigma_lap(z); });
        rep.lambda_m[idx] = gm.value;
        rep.residual_m[idx] = gm.residual;
        rep.lambda_e[idx] = ge.value;
        rep.residual_e[idx] = ge.residual;
        rep.epsilon[idx] = 1.0 / (2.0 * std::sqrt(std::max(gm.value, 1e-300)));
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

    auto quartile_ratio = [&](const std::vector<double>& v) {
        size_t q = k / 4;
        return v.back() / std::max(v[q], 1e-300);
    };
    auto tail_variation = [&](const std::vector<double>& v) {
        size_t start = k - k / 2;
        double tv = 0.0, mx = 0.0;
        for (size_t i = start; i < k; ++i) {
            if (i > start) tv += std::abs(v[i] - v[i - 1]);
            mx = std::max(mx, std::abs(v[i]));
        }
        return tv / std::max(mx, 1e-300);
    };
    bool divergent = quartile_ratio(rep.lambda_m) >= 4.0 &&
                     quartile_ratio(rep.lambda_e) >= 4.0;
    bool bounded = tail_variation(rep.lambda_m) <= 0.10 &&
                   tail_variation(rep.lambda_e) <= 0.10;
    rep.verdict = divergent ? TrendVerdict::Divergent
                            : (bounded ? TrendVerdict::Bounded
                                       : TrendVerdict::Inconclusive);
    return rep;
}

double harmonic_patch_bound(const HartogsDomain& d, const GridPtr& patch_grid,
                            const std::vector<int>& modes, const GridFunction& f,
                            double tol) {
    const PlanarGrid& g = *patch_grid;
    const auto& cov = g.coverage();
    const auto& qp = g.quad_points();
    for (int n : modes) {
        WeightExponent w = weight_exponent(d, n);
        for (int p = 0; p < g.num_cells(); ++p) {
            if (cov[p] <= 0.0) continue;
            if (std::abs(w.sigma_lap(qp[p])) > tol * std::max(1.0, std::abs(double(n))))
                throw std::invalid_argument(
                    "harmonic_patch_bound: Lap sigma != 0 on the patch");
        }
    }
    // forward-difference Dirichlet energy over the patch (f = 0 outside mask)
    const int res = g.resolution();
    const double h = g.spacing();
    const auto& sd = g.signed_distances();
    auto val = [&](int i, int j) -> complexd {
        if (i < 0 || i >= res || j < 0 || j >= res) return {0.0, 0.0};
        int p = g.index(i, j);
        return sd[p] < 0.0 ? f[p] : complexd{0.0, 0.0};
    };
    double num = 0.0, den = 0.0;
    for (int i = -1; i < res; ++i)
        for (int j = -1; j < res; ++j) {
            complexd v = val(i, j);
            num += std::norm(val(i + 1, j) - v) + std::norm(val(i, j + 1) - v);
            den += std::norm(v);
        }
    if (den == 0.0)
        throw std::invalid_argument("harmonic_patch_bound: f vanishes on the patch");
    return num / (den * h * h);
}

}  // namespace hartogs
