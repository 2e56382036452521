#include "hartogs/grid_function.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

GridFunction::GridFunction(GridPtr grid)
    : grid_(std::move(grid)), vals_(grid_->num_cells(), complexd{0.0, 0.0}) {}

GridFunction::GridFunction(GridPtr grid, const std::function<complexd(complexd)>& f)
    : GridFunction(std::move(grid)) {
    const auto& cov = grid_->coverage();
    const auto& qp = grid_->quad_points();
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (cov[p] > 0.0) vals_[p] = f(qp[p]);
}

bool GridFunction::all_finite() const {
    for (const auto& v : vals_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool GridFunction::is_identically_zero() const {
    for (const auto& v : vals_)
        if (v != complexd{0.0, 0.0}) return false;
    return true;
}

complexd GridFunction::integrate() const {
    const auto& cov = grid_->coverage();
    double h2 = grid_->spacing() * grid_->spacing();
    complexd s{0.0, 0.0};
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (cov[p] > 0.0) s += vals_[p] * (cov[p] * h2);
    return s;
}

complexd GridFunction::inner(const GridFunction& g) const {
    const auto& cov = grid_->coverage();
    double h2 = grid_->spacing() * grid_->spacing();
    complexd s{0.0, 0.0};
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (cov[p] > 0.0) s += vals_[p] * std::conj(g.vals_[p]) * (cov[p] * h2);
    return s;
}

double GridFunction::norm2() const {
    const auto& cov = grid_->coverage();
    double h2 = grid_->spacing() * grid_->spacing();
    double s = 0.0;
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (cov[p] > 0.0) s += std::norm(vals_[p]) * cov[p] * h2;
    return s;
}

double GridFunction::sup_abs() const {
    double m = 0.0;
    const auto& cov = grid_->coverage();
    for (int p = 0; p < grid_->num_cells(); ++p)
        if (cov[p] > 0.0) m = std::max(m, std::abs(vals_[p]));
    return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    for (size_t p = 0; p < vals_.size(); ++p) vals_[p] += o.vals_[p];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    for (size_t p = 0; p < vals_.size(); ++p) vals_[p] -= o.vals_[p];
    return *this;
}

GridFunction& GridFunction::operator*=(complexd s) {
    for (auto& v : vals_) v *= s;
    return *this;
}

namespace {

// one axis of the support-aware derivative; di/dj select the axis
complexd axis_deriv(const GridFunction& f, int i, int j, int di, int dj,
                    double h) {
    const PlanarGrid& g = f.grid();
    int res = g.resolution();
    const auto& cov = g.coverage();
    auto has = [&](int s) {
        int ii = i + s * di, jj = j + s * dj;
        return ii >= 0 && ii < res && jj >= 0 && jj < res &&
               cov[g.index(ii, jj)] > 0.0;
    };
    auto v = [&](int s) { return f.at(i + s * di, j + s * dj); };
    if (has(1) && has(-1)) {
        if (has(2) && has(-2))
            return (-v(2) + 8.0 * v(1) - 8.0 * v(-1) + v(-2)) / (12.0 * h);
        return (v(1) - v(-1)) / (2.0 * h);
    }
    if (has(1) && has(2))
        return (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
    if (has(-1) && has(-2))
        return (3.0 * v(0) - 4.0 * v(-1) + v(-2)) / (2.0 * h);
    if (has(1)) return (v(1) - v(0)) / h;
    if (has(-1)) return (v(0) - v(-1)) / h;
    return {0.0, 0.0};
}

}  // namespace

void support_gradient(const GridFunction& f, std::vector<complexd>& fx,
                      std::vector<complexd>& fy) {
    const PlanarGrid& g = f.grid();
    int res = g.resolution();
    double h = g.spacing();
    fx.assign(g.num_cells(), {0.0, 0.0});
    fy.assign(g.num_cells(), {0.0, 0.0});
    const auto& cov = g.coverage();
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            int p = g.index(i, j);
            if (cov[p] <= 0.0) continue;
            fx[p] = axis_deriv(f, i, j, 1, 0, h);
            fy[p] = axis_deriv(f, i, j, 0, 1, h);
        }
    }
}

void dzbar_interior(const GridFunction& f, std::vector<complexd>& out,
                    std::vector<char>& valid) {
    const PlanarGrid& g = f.grid();
    int res = g.resolution();
    double h = g.spacing();
    out.assign(g.num_cells(), {0.0, 0.0});
    valid.assign(g.num_cells(), 0);
    const auto& cov = g.coverage();
    auto full = [&](int i, int j) {
        return i >= 0 && i < res && j >= 0 && j < res && cov[g.index(i, j)] >= 1.0;
    };
    for (int i = 2; i < res - 2; ++i) {
        for (int j = 2; j < res - 2; ++j) {
            bool ok = true;
            for (int a = -2; a <= 2 && ok; ++a)
                for (int b = -2; b <= 2 && ok; ++b)
                    if (!full(i + a, j + b)) ok = false;
            if (!ok) continue;
            auto vx = (-f.at(i + 2, j) + 8.0 * f.at(i + 1, j) - 8.0 * f.at(i - 1, j) +
                       f.at(i - 2, j)) /
                      (12.0 * h);
            auto vy = (-f.at(i, j + 2) + 8.0 * f.at(i, j + 1) - 8.0 * f.at(i, j - 1) +
                       f.at(i, j - 2)) /
                      (12.0 * h);
            int p = g.index(i, j);
            out[p] = 0.5 * (vx + complexd(0.0, 1.0) * vy);
            valid[p] = 1;
        }
    }
}

}  // namespace hartogs
