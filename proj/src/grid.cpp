#include "hartogs/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

namespace {

// Clip the square cell against the halfplane {sd + g.(p - c) <= 0}.
// Returns polygon vertices (CCW) of the kept part.
std::vector<complexd> clip_cell(complexd c, double h, double sd, complexd g) {
    const double hx = 0.5 * h;
    complexd corners[4] = {c + complexd(-hx, -hx), c + complexd(hx, -hx),
                           c + complexd(hx, hx), c + complexd(-hx, hx)};
    std::vector<complexd> out;
    out.reserve(5);
    auto lev = [&](complexd p) {
        complexd d = p - c;
        return sd + g.real() * d.real() + g.imag() * d.imag();
    };
    for (int k = 0; k < 4; ++k) {
        complexd p = corners[k], q = corners[(k + 1) % 4];
        double fp = lev(p), fq = lev(q);
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0) != (fq < 0.0)) {
            double t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

void polygon_area_centroid(const std::vector<complexd>& poly, double& area,
                           complexd& centroid) {
    double A = 0.0, cx = 0.0, cy = 0.0;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        complexd p = poly[i], q = poly[(i + 1) % m];
        double cr = p.real() * q.imag() - q.real() * p.imag();
        A += cr;
        cx += (p.real() + q.real()) * cr;
        cy += (p.imag() + q.imag()) * cr;
    }
    A *= 0.5;
    area = A;
    if (std::abs(A) > 1e-300)
        centroid = {cx / (6.0 * A), cy / (6.0 * A)};
}

}  // namespace

PlanarGrid::PlanarGrid(const Region& region, int resolution)
    : region_(region), res_(resolution) {
    if (resolution < 8)
        throw std::invalid_argument("make_grid requires resolution >= 8");
    h_ = region.box_size() / res_;
    x0_ = region.box_min_x();
    y0_ = region.box_min_y();
    int n = res_ * res_;
    sd_.resize(n);
    cov_.assign(n, 0.0);
    qp_.resize(n);
    poly_slot_.assign(n, -1);
    for (int i = 0; i < res_; ++i) {
        for (int j = 0; j < res_; ++j) {
            int p = index(i, j);
            complexd c = cell_center(i, j);
            double sd = region.signed_distance(c);
            sd_[p] = sd;
            qp_[p] = c;
            if (sd < -h_) {
                cov_[p] = 1.0;
            } else if (sd < h_) {
                complexd g = region.sd_gradient(c);
                auto poly = clip_cell(c, h_, sd, g);
                if (poly.size() >= 3) {
                    double area;
                    complexd ctr = c;
                    polygon_area_centroid(poly, area, ctr);
                    double cv = area / (h_ * h_);
                    if (cv >= 1.0 - 1e-12) {
                        cov_[p] = 1.0;
                    } else if (cv > 1e-12) {
                        cov_[p] = cv;
                        qp_[p] = ctr;
                        poly_slot_[p] = static_cast<int>(polys_.size());
                        partial_.push_back(p);
                        polys_.push_back(std::move(poly));
                    }
                }
            }
            if (sd < 0.0) ++mask_count_;
        }
    }
    mask_fraction_ = double(mask_count_) / double(n);
    if (mask_count_ == 0) throw std::invalid_argument("grid mask is empty");
}

const std::vector<complexd>& PlanarGrid::cell_polygon(int i, int j) const {
    static const std::vector<complexd> kEmpty;
    int s = poly_slot_[index(i, j)];
    return s < 0 ? kEmpty : polys_[s];
}

GridPtr make_grid(const Region& region, int resolution) {
    return std::make_shared<const PlanarGrid>(region, resolution);
}

}  // namespace hartogs
