#include "hartogs/bergman.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hartogs/annulus.hpp"
#include "hartogs/cauchy.hpp"

namespace hartogs {

namespace {
constexpr double kPi = std::numbers::pi;
}

FiberWeight fiber_weight(const HartogsDomain& d, int n, GridPtr grid) {
    if (d.case_tag() == CaseTag::Case1 && n < 2)
        throw std::invalid_argument("fiber_weight: case-1 weights need n >= 2");
    if (d.case_tag() == CaseTag::Case2 && n < 0)
        throw std::invalid_argument("fiber_weight: case-2 weights need n >= 0");
    FiberWeight fw;
    fw.n = n;
    fw.case_tag = d.case_tag();
    fw.grid = grid;
    fw.w.assign(grid->num_cells(), LogValue::zero());
    const auto& cov = grid->coverage();
    const auto& qp = grid->quad_points();
    for (int p = 0; p < grid->num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        double phi = d.phi(qp[p]);
        double alpha = d.alpha(qp[p]);
        double lg;
        if (d.case_tag() == CaseTag::Case1) {
            double X = (2.0 * n - 2.0) * phi, Y = (2.0 * n - 2.0) * alpha;
            lg = std::log(kPi / (n - 1.0)) + log_diff_exp(X, Y);
        } else {
            double X = -(2.0 * n + 2.0) * phi, Y = -(2.0 * n + 2.0) * alpha;
            lg = std::log(kPi / (n + 1.0)) + log_diff_exp(X, Y);
        }
        fw.w[p] = LogValue::from_log(lg, +1);
    }
    return fw;
}

double FiberWeight::min_scaled_lambda_laplacian() const {
    const PlanarGrid& g = *grid;
    int res = g.resolution();
    const auto& cov = g.coverage();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i < res - 1; ++i) {
        for (int j = 1; j < res - 1; ++j) {
            int p = g.index(i, j);
            bool interior = cov[p] >= 1.0 && cov[g.index(i - 1, j)] >= 1.0 &&
                            cov[g.index(i + 1, j)] >= 1.0 &&
                            cov[g.index(i, j - 1)] >= 1.0 &&
                            cov[g.index(i, j + 1)] >= 1.0;
            if (!interior) continue;
            double lc = -w[p].logmag;
            double lap = (-w[g.index(i + 1, j)].logmag - w[g.index(i - 1, j)].logmag -
                          w[g.index(i, j + 1)].logmag - w[g.index(i, j - 1)].logmag) -
                         4.0 * lc;
            best = std::min(best, lap);  // = h^2 * discrete Laplacian
        }
    }
    return best;
}

double fiber_weight_moment_rel_err(const HartogsDomain& d, const FiberWeight& fw) {
    const PlanarGrid& g = *fw.grid;
    const auto& cov = g.coverage();
    const auto& qp = g.quad_points();
    int n = fw.case_tag == CaseTag::Case1 ? -fw.n : fw.n;
    double worst = 0.0;
    for (int p = 0; p < g.num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        auto [rin, rout] = fiber_interval(d, qp[p]);
        LogValue rm = radial_moment(Annulus(rin, rout), n);
        worst = std::max(worst, std::abs(std::expm1(fw.w[p].logmag - rm.logmag)));
    }
    return worst;
}

std::vector<LogValue> unit_weight(const GridPtr& grid) {
    return std::vector<LogValue>(grid->num_cells(), LogValue::from_value(1.0));
}

SandwichReport weight_sandwich_check(const HartogsDomain& d, const GridPtr& grid,
                                     double c) {
    if (!(c < 1.0) || !(c > 0.0))
        throw std::invalid_argument("weight_sandwich_check: c must be in (0,1)");
    const auto& cov = grid->coverage();
    const auto& qp = grid->quad_points();
    double cmax = 0.0;
    for (int p = 0; p < grid->num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        double r = std::exp(d.alpha(qp[p]) - d.phi(qp[p]));  // e^{-phi}/e^{-alpha}
        cmax = std::max(cmax, r);
    }
    if (cmax > c)
        throw std::invalid_argument("weight_sandwich_check: certification failed, "
                                    "sup e^{-phi}/e^{-alpha} exceeds c");
    SandwichReport rep;
    rep.c_certified = cmax;
    // lower bound holds once c^(2n-2) <= 1/2
    int n0 = 2;
    if (cmax > 0.0)
        n0 = std::max(2, int(std::ceil(1.0 + std::log(2.0) / (-2.0 * std::log(cmax)) -
                                       1e-12)));
    rep.n0 = n0;
    double worst = 0.0;
    for (int p = 0; p < grid->num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        double r = std::exp(d.alpha(qp[p]) - d.phi(qp[p]));
        worst = std::max(worst, std::pow(r, 2.0 * n0 - 2.0));
    }
    rep.holds_at_n0 = worst <= 0.5 + 1e-12;
    return rep;
}

// ---------------- WeightedBasis ----------------

WeightedBasis::WeightedBasis(GridPtr grid, const std::vector<LogValue>& weight,
                             int degree, complexd center, double scale,
                             double cond_cap)
    : grid_(std::move(grid)), degree_(degree), center_(center), scale_(scale) {
    if (degree < 0) throw std::invalid_argument("weighted_gram: degree < 0");
    const PlanarGrid& g = *grid_;
    const auto& cov = g.coverage();
    const auto& qp = g.quad_points();
    double h2 = g.spacing() * g.spacing();
    // rescale the weight by its grid maximum (projections are invariant)
    double lmax = -std::numeric_limits<double>::infinity();
    for (int p = 0; p < g.num_cells(); ++p)
        if (cov[p] > 0.0 && !weight[p].is_zero())
            lmax = std::max(lmax, weight[p].logmag);
    if (!std::isfinite(lmax))
        throw std::invalid_argument("weighted_gram: weight vanishes on the mask");
    wts_.assign(g.num_cells(), 0.0);
    for (int p = 0; p < g.num_cells(); ++p)
        if (cov[p] > 0.0 && !weight[p].is_zero())
            wts_[p] = std::exp(weight[p].logmag - lmax) * cov[p] * h2;

    int m = degree + 1;
    gram_.setZero(m, m);
    std::vector<complexd> mono(m);
    for (int p = 0; p < g.num_cells(); ++p) {
        if (wts_[p] == 0.0) continue;
        complexd zb = (qp[p] - center_) / scale_;
        mono[0] = {1.0, 0.0};
        for (int k = 1; k < m; ++k) mono[k] = mono[k - 1] * zb;
        for (int j = 0; j < m; ++j)
            for (int k = j; k < m; ++k)
                gram_(j, k) += std::conj(mono[j]) * mono[k] * wts_[p];
    }
    gram_ = gram_.selfadjointView<Eigen::Upper>();
    basis_sqnorm_.resize(m);
    for (int k = 0; k < m; ++k) basis_sqnorm_[k] = gram_(k, k).real();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram_);
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
    double emax = evals_.maxCoeff();
    if (evals_.minCoeff() < -1e-10 * emax)
        throw std::runtime_error(
            "weighted_gram: Gram matrix indefinite (discretization failure); "
            "condition estimate " +
            std::to_string(emax / std::max(std::abs(evals_.minCoeff()), 1e-300)));
    double cut = emax / cond_cap;
    retained_ = 0;
    for (int k = 0; k < evals_.size(); ++k)
        if (evals_[k] > cut) ++retained_;
    if (retained_ == 0)
        throw std::runtime_error("weighted_gram: no numerically independent basis "
                                 "directions; reduce the degree");
    double emin_kept = std::numeric_limits<double>::infinity();
    for (int k = 0; k < evals_.size(); ++k)
        if (evals_[k] > cut) emin_kept = std::min(emin_kept, evals_[k]);
    cond_ = emax / emin_kept;
}

complexd WeightedBasis::basis_value(int k, complexd z) const {
    return std::pow((z - center_) / scale_, k);
}

Eigen::VectorXcd WeightedBasis::pair(const GridFunction& f) const {
    const PlanarGrid& g = *grid_;
    const auto& qp = g.quad_points();
    int m = degree_ + 1;
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m);
    std::vector<complexd> mono(m);
    for (int p = 0; p < g.num_cells(); ++p) {
        if (wts_[p] == 0.0) continue;
        complexd zb = (qp[p] - center_) / scale_;
        mono[0] = {1.0, 0.0};
        for (int k = 1; k < m; ++k) mono[k] = mono[k - 1] * zb;
        complexd fv = f[p] * wts_[p];
        for (int k = 0; k < m; ++k) b[k] += fv * std::conj(mono[k]);
    }
    return b;
}

GridFunction WeightedBasis::project(const GridFunction& f,
                                    Eigen::VectorXcd* coeffs) const {
    Eigen::VectorXcd b = pair(f);
    // solve G c = b on the retained spectral subspace (evals_ ascending)
    Eigen::VectorXcd y = evecs_.adjoint() * b;
    int m = int(evals_.size());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(m);
    for (int k = m - retained_; k < m; ++k) c[k] = y[k] / evals_[k];
    Eigen::VectorXcd coef = evecs_ * c;
    if (coeffs) *coeffs = coef;
    GridFunction out(grid_);
    const auto& qp = grid_->quad_points();
    const auto& cov = grid_->coverage();
    std::vector<complexd> mono(m);
    for (int p = 0; p < grid_->num_cells(); ++p) {
        if (cov[p] <= 0.0) continue;
        complexd zb = (qp[p] - center_) / scale_;
        complexd acc{0.0, 0.0}, zk{1.0, 0.0};
        for (int k = 0; k < m; ++k) {
            acc += coef[k] * zk;
            zk *= zb;
        }
        out[p] = acc;
    }
    return out;
}

double WeightedBasis::weighted_norm2(const GridFunction& f) const {
    double s = 0.0;
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (wts_[p] != 0.0) s += std::norm(f[p]) * wts_[p];
    return s;
}

WeightedBasis weighted_gram(GridPtr grid, const std::vector<LogValue>& weight,
                            int degree, complexd center, double scale,
                            double cond_cap) {
    return WeightedBasis(std::move(grid), weight, degree, center, scale, cond_cap);
}

CanonicalSolution canonical_solution(const std::vector<LogValue>& weight,
                                     const GridFunction& beta, int degree) {
    GridFunction g0 = cauchy_particular(beta);
    const Region& reg = beta.grid().region();
    WeightedBasis basis(beta.grid_ptr(), weight, degree, reg.center(),
                        reg.outer_radius());
    CanonicalSolution out{g0, g0, {}};
    GridFunction proj = basis.project(g0, &out.coeffs);
    out.g -= proj;
    return out;
}

double orthogonality_residual(const GridFunction& g,
                              const std::vector<LogValue>& weight, int degree,
                              complexd center, double scale) {
    WeightedBasis basis(g.grid_ptr(), weight, degree, center, scale);
    Eigen::VectorXcd b = basis.pair(g);
    double gn = std::sqrt(basis.weighted_norm2(g));
    if (gn == 0.0) return 0.0;
    double worst = 0.0;
    for (int k = 0; k <= degree; ++k) {
        double bn = std::sqrt(basis.basis_norm2(k));
        worst = std::max(worst, std::abs(b[k]) / (gn * bn));
    }
    return worst;
}

OneNormReport one_norm_bound_check(const HartogsDomain& d, const GridPtr& grid,
                                   const std::vector<int>& ns, double a1) {
    if (d.case_tag() != CaseTag::Case1)
        throw std::invalid_argument("one_norm_bound_check: case-1 domains only");
    const auto& cov = grid->coverage();
    const auto& qp = grid->quad_points();
    for (int p = 0; p < grid->num_cells(); ++p)
        if (cov[p] > 0.0 && d.phi(qp[p]) > 1e-9)
            throw std::invalid_argument(
                "one_norm_bound_check: certification phi <= 0 fails on the grid");
    OneNormReport rep;
    double h2 = grid->spacing() * grid->spacing();
    double prev = std::numeric_limits<double>::infinity();
    for (int n : ns) {
        FiberWeight fw = fiber_weight(d, n, grid);
        double s = 0.0;
        for (int p = 0; p < grid->num_cells(); ++p)
            if (cov[p] > 0.0) s += fw.w[p].value() * cov[p] * h2;
        OneNormBound row;
        row.n = n;
        row.norm2 = s;
        row.bound2 = kPi * kPi * a1 * a1 / (n - 1.0);
        row.margin = row.bound2 - row.norm2;
        rep.all_hold = rep.all_hold && row.margin >= 0.0;
        rep.monotone_decreasing = rep.monotone_decreasing && s <= prev * (1.0 + 1e-12);
        prev = s;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hartogs
