#include "hartogs/cauchy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hartogs {

namespace {

constexpr double kPi = std::numbers::pi;
using cvec = std::vector<complexd>;

// ---- tiny radix-2 FFT (in place, power-of-two length) ----

void fft1(complexd* a, int n, bool inverse) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * kPi / len * (inverse ? 1 : -1);
        complexd wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            complexd w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                complexd u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (int i = 0; i < n; ++i) a[i] /= n;
}

void fft2(cvec& a, int m, bool inverse) {
    std::vector<complexd> col(m);
    for (int r = 0; r < m; ++r) fft1(a.data() + r * m, m, inverse);
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) col[r] = a[r * m + c];
        fft1(col.data(), m, inverse);
        for (int r = 0; r < m; ++r) a[r * m + c] = col[r];
    }
}

// ---- closed-form integrals of 1/w, w_x/w, w_y/w over rectangles ----

double antiderivF1(double x, double y) {  // for x / (x^2+y^2)
    double r2 = x * x + y * y;
    return 0.5 * y * std::log(r2) - y + x * std::atan(y / x);
}
double antiderivF2(double x, double y) {  // for y / (x^2+y^2)
    double r2 = x * x + y * y;
    return 0.5 * x * std::log(r2) - x + y * std::atan(x / y);
}
double antiderivF3(double x, double y) {  // for x^2 / (x^2+y^2)
    return 0.5 * (x * y + x * x * std::atan(y / x) - y * y * std::atan(x / y));
}
double antiderivF4(double x, double y) {  // for x*y / (x^2+y^2)
    double r2 = x * x + y * y;
    return 0.25 * r2 * (std::log(r2) - 1.0);
}

template <typename F>
double rect_int(F f, double x1, double x2, double y1, double y2) {
    return f(x2, y2) - f(x1, y2) - f(x2, y1) + f(x1, y1);
}

// T0, T1x, T1y at lattice offset delta: integrals over the square cell
// [-h/2,h/2]^2 of K, (zeta_x) K, (zeta_y) K with K = 1/(pi (delta - zeta)).
void square_kernels(double dx, double dy, double h, complexd& T0, complexd& T1x,
                    complexd& T1y) {
    double x1 = dx - 0.5 * h, x2 = dx + 0.5 * h;
    double y1 = dy - 0.5 * h, y2 = dy + 0.5 * h;
    double ix = rect_int(antiderivF1, x1, x2, y1, y2);
    double iy = rect_int(antiderivF2, x1, x2, y1, y2);
    T0 = complexd(ix, -iy) / kPi;
    double ixx = rect_int(antiderivF3, x1, x2, y1, y2);
    double ixy = rect_int(antiderivF4, x1, x2, y1, y2);
    double iyy = (x2 - x1) * (y2 - y1) - ixx;
    complexd Wx = complexd(ixx, -ixy) / kPi;
    complexd Wy = complexd(ixy, -iyy) / kPi;
    T1x = dx * T0 - Wx;
    T1y = dy * T0 - Wy;
}

// Polygon moments: Jc = iint 1/(z-zeta), Jx = iint (zeta_x - p_x)/(z-zeta),
// Jy = iint (zeta_y - p_y)/(z-zeta) over the polygon, via edge integrals.
// Result already divided by 2i (so J/pi is the kernel integral).
void polygon_moments(complexd z, complexd p, const cvec& poly, complexd& Jc,
                     complexd& Jx, complexd& Jy) {
    Jc = Jx = Jy = complexd{0.0, 0.0};
    const complexd zb = std::conj(z);
    const size_t m = poly.size();
    for (size_t k = 0; k < m; ++k) {
        complexd z1 = poly[k], z2 = poly[(k + 1) % m];
        complexd e = z2 - z1, eb = std::conj(e), z1b = std::conj(z1);
        complexd tau = (z - z1) / e;
        complexd L = std::log((tau - 1.0) / tau);
        // density 1: F = (z1b - zb) + t eb
        {
            complexd f0 = z1b - zb, f1 = eb;
            Jc -= f1 + (f0 + f1 * tau) * L;
        }
        // density zeta_x - p_x: F = (zeta/2 - p_x)(zetab - zb) + (zetab^2 - zb^2)/4
        {
            double px = p.real();
            complexd f0 = (z1 * 0.5 - px) * (z1b - zb) + (z1b * z1b - zb * zb) * 0.25;
            complexd f1 = (z1 * 0.5 - px) * eb + (e * 0.5) * (z1b - zb) + z1b * eb * 0.5;
            complexd f2 = e * eb * 0.5 + eb * eb * 0.25;
            Jx -= f2 * (0.5 + tau) + f1 + (f0 + f1 * tau + f2 * tau * tau) * L;
        }
        // density zeta_y - p_y: F = (zeta/(2i) - p_y)(zetab - zb) - (zetab^2 - zb^2)/(4i)
        {
            double py = p.imag();
            const complexd i2(0.0, 2.0), i4(0.0, 4.0);
            complexd f0 = (z1 / i2 - py) * (z1b - zb) - (z1b * z1b - zb * zb) / i4;
            complexd f1 = (z1 / i2 - py) * eb + (e / i2) * (z1b - zb) - z1b * eb / i2;
            complexd f2 = e * eb / i2 - eb * eb / i4;
            Jy -= f2 * (0.5 + tau) + f1 + (f0 + f1 * tau + f2 * tau * tau) * L;
        }
    }
    const complexd inv2i(0.0, -0.5);  // 1/(2i)
    Jc *= inv2i;
    Jx *= inv2i;
    Jy *= inv2i;
}

}  // namespace

complexd polygon_cauchy_kernel(complexd z, const std::vector<complexd>& poly) {
    complexd Jc, Jx, Jy;
    polygon_moments(z, z, poly, Jc, Jx, Jy);
    return Jc / kPi;
}

GridFunction cauchy_particular(const GridFunction& beta) {
    if (!beta.all_finite())
        throw std::invalid_argument("cauchy_particular: beta has non-finite values");
    const PlanarGrid& g = beta.grid();
    const int res = g.resolution();
    const double h = g.spacing();
    const auto& cov = g.coverage();
    const auto& sd = g.signed_distances();
    const auto& qp = g.quad_points();

    std::vector<complexd> gx, gy;
    support_gradient(beta, gx, gy);

    // densities on the lattice: full cells carry the linear model, partial
    // cells a monopole+dipole stand-in matched to the clipped geometry
    std::vector<complexd> a(g.num_cells()), bx(g.num_cells()), by(g.num_cells());
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            int p = g.index(i, j);
            if (cov[p] <= 0.0) continue;
            if (cov[p] >= 1.0) {
                a[p] = beta[p];
                bx[p] = gx[p];
                by[p] = gy[p];
            } else {
                complexd c = g.cell_center(i, j);
                a[p] = beta[p] * cov[p];
                bx[p] = 12.0 * beta[p] * cov[p] * (qp[p].real() - c.real()) / (h * h);
                by[p] = 12.0 * beta[p] * cov[p] * (qp[p].imag() - c.imag()) / (h * h);
            }
        }
    }

    int M = 1;
    while (M < 2 * res) M <<= 1;

    // kernel tables at signed lattice offsets
    cvec T0t(M * M), T1xt(M * M), T1yt(M * M);
    for (int r = 0; r < M; ++r) {
        int oi = r < M / 2 ? r : r - M;
        for (int c = 0; c < M; ++c) {
            int oj = c < M / 2 ? c : c - M;
            square_kernels(oi * h, oj * h, h, T0t[r * M + c], T1xt[r * M + c],
                           T1yt[r * M + c]);
        }
    }

    auto convolve_add = [&](const std::vector<complexd>& dens, const cvec& ker,
                            cvec& acc) {
        cvec D(M * M, complexd{0.0, 0.0});
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j) D[i * M + j] = dens[g.index(i, j)];
        cvec K = ker;
        fft2(D, M, false);
        fft2(K, M, false);
        for (int k = 0; k < M * M; ++k) D[k] *= K[k];
        fft2(D, M, true);
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j) acc[g.index(i, j)] += D[i * M + j];
    };

    cvec U(g.num_cells(), complexd{0.0, 0.0});
    convolve_add(a, T0t, U);
    convolve_add(bx, T1xt, U);
    convolve_add(by, T1yt, U);
    auto kernel_at = [&](int di, int dj, complexd& T0, complexd& T1x, complexd& T1y) {
        int r = ((di % M) + M) % M, c = ((dj % M) + M) % M;
        T0 = T0t[r * M + c];
        T1x = T1xt[r * M + c];
        T1y = T1yt[r * M + c];
    };

    // near-field: replace the lattice stand-in of partial sources by exact
    // clipped-polygon integrals with the linear density
    const int nearband = 16;
    std::vector<int> band;
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j)
            if (std::abs(sd[g.index(i, j)]) < nearband * h)
                band.push_back(g.index(i, j));

    for (int p : g.partial_cells()) {
        complexd b0 = beta[p];
        complexd bgx = gx[p], bgy = gy[p];
        if (b0 == complexd{0.0, 0.0} && bgx == complexd{0.0, 0.0} &&
            bgy == complexd{0.0, 0.0})
            continue;
        int si = p / res, sj = p % res;
        const auto& poly = g.cell_polygon(si, sj);
        for (int t : band) {
            int ti = t / res, tj = t % res;
            complexd T0, T1x, T1y;
            kernel_at(ti - si, tj - sj, T0, T1x, T1y);
            complexd standin = a[p] * T0 + bx[p] * T1x + by[p] * T1y;
            complexd Jc, Jx, Jy;
            complexd zt = g.cell_center(ti, tj);
            polygon_moments(zt, qp[p], poly, Jc, Jx, Jy);
            complexd exact = (b0 * Jc + bgx * Jx + bgy * Jy) / kPi;
            U[t] += exact - standin;
        }
    }

    // values at partial-cell centroids: second-order Taylor step from the
    // deepest nearby full cell, with inward one-sided derivative stencils
    // (u_z and u_zbar jump across the region edge)
    GridFunction out(beta.grid_ptr());
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
            int p = g.index(i, j);
            if (cov[p] > 0.0) out[p] = U[p];
        }

    auto lattice = [&](int i, int j) -> complexd {
        i = std::clamp(i, 0, res - 1);
        j = std::clamp(j, 0, res - 1);
        return U[g.index(i, j)];
    };
    for (int p : g.partial_cells()) {
        int si = p / res, sj = p % res;
        // pick expansion cell: deepest full cell in the 5x5 neighborhood
        int qi = -1, qj = -1;
        double best = 1e300;
        for (int di = -2; di <= 2; ++di)
            for (int dj = -2; dj <= 2; ++dj) {
                int ii = si + di, jj = sj + dj;
                if (ii < 0 || ii >= res || jj < 0 || jj >= res) continue;
                int q = g.index(ii, jj);
                if (cov[q] >= 1.0 && sd[q] < best) {
                    best = sd[q];
                    qi = ii;
                    qj = jj;
                }
            }
        if (qi < 0) continue;  // isolated sliver: keep lattice value
        complexd grad = g.region().sd_gradient(g.cell_center(qi, qj));
        int sx = grad.real() >= 0.0 ? -1 : 1;  // inward steps
        int sy = grad.imag() >= 0.0 ? -1 : 1;
        auto uz_at = [&](int ii, int jj) {
            complexd ux = double(sx) *
                          (-3.0 * lattice(ii, jj) + 4.0 * lattice(ii + sx, jj) -
                           lattice(ii + 2 * sx, jj)) /
                          (2.0 * h);
            complexd uy = double(sy) *
                          (-3.0 * lattice(ii, jj) + 4.0 * lattice(ii, jj + sy) -
                           lattice(ii, jj + 2 * sy)) /
                          (2.0 * h);
            return 0.5 * (ux - complexd(0.0, 1.0) * uy);
        };
        complexd uz = uz_at(qi, qj);
        complexd uzx = double(sx) * (uz_at(qi + sx, qj) - uz) / h;
        complexd uzy = double(sy) * (uz_at(qi, qj + sy) - uz) / h;
        complexd uzz = 0.5 * (uzx - complexd(0.0, 1.0) * uzy);
        int q = g.index(qi, qj);
        complexd bq = beta[q];
        complexd bz = 0.5 * (gx[q] - complexd(0.0, 1.0) * gy[q]);
        complexd bzb = 0.5 * (gx[q] + complexd(0.0, 1.0) * gy[q]);
        complexd dz = qp[p] - g.cell_center(qi, qj);
        complexd dzb = std::conj(dz);
        out[p] = U[q] + dz * uz + dzb * bq + 0.5 * dz * dz * uzz + dz * dzb * bz +
                 0.5 * dzb * dzb * bzb;
    }
    return out;
}

}  // namespace hartogs
