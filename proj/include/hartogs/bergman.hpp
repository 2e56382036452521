#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hartogs/domain.hpp"
#include "hartogs/grid_function.hpp"
#include "hartogs/log_value.hpp"

namespace hartogs {

// Per-mode fiber weight e^{-lambda_n(z)} on a base grid, in log space.
// case 1 (n >= 2): e^{-lambda_n} = pi/(n-1) (e^{(2n-2)phi} - e^{(2n-2)alpha})
// case 2 (n >= 0): e^{-lambda_n} = pi/(n+1) (e^{-(2n+2)phi} - e^{-(2n+2)alpha})
struct FiberWeight {
    int n = 0;
    CaseTag case_tag = CaseTag::Case1;
    GridPtr grid;
    std::vector<LogValue> w;  // e^{-lambda_n} per cell; zero outside coverage

    double lambda(int p) const { return -w[p].logmag; }
    // min over interior cells of h^2 * (discrete Laplacian of lambda_n)
    double min_scaled_lambda_laplacian() const;
};

FiberWeight fiber_weight(const HartogsDomain& d, int n, GridPtr grid);

// max over grid nodes of |e^{-lambda_n} - radial_moment(fiber, +-n)| relative
double fiber_weight_moment_rel_err(const HartogsDomain& d, const FiberWeight& fw);

// weight with lambda == 0 (for unweighted projections)
std::vector<LogValue> unit_weight(const GridPtr& grid);

struct SandwichReport {
    double c_certified = 0.0;  // sup over grid of r_in/r_out  (= e^{alpha-phi})
    int n0 = 0;                // smallest n >= 2 with the two-sided bound on all nodes
    bool holds_at_n0 = true;   // grid verification at n0
};

// Two-sided bound pi/(2(n-1)) e^{(2n-2)phi} < e^{-lambda_n} < pi/(n-1) e^{(2n-2)phi}
// under the certification e^{-phi} < c e^{-alpha}.  Throws if c >= 1 or the
// certification fails on the grid.
SandwichReport weight_sandwich_check(const HartogsDomain& d, const GridPtr& grid,
                                     double c);

// Monomial basis ((z - center)/scale)^k, k = 0..degree, with the Gram matrix
// in the weighted inner product and its pivoted spectral factorization.
class WeightedBasis {
  public:
    WeightedBasis(GridPtr grid, const std::vector<LogValue>& weight, int degree,
                  complexd center, double scale, double cond_cap = 1e12);

    int degree() const { return degree_; }
    int retained() const { return retained_; }
    double condition_estimate() const { return cond_; }
    const Eigen::MatrixXcd& gram() const { return gram_; }
    complexd center() const { return center_; }
    double scale() const { return scale_; }

    complexd basis_value(int k, complexd z) const;
    // weighted inner products <f, e_k> for all k
    Eigen::VectorXcd pair(const GridFunction& f) const;
    // projection of f onto the retained span
    GridFunction project(const GridFunction& f, Eigen::VectorXcd* coeffs = nullptr) const;
    double weighted_norm2(const GridFunction& f) const;
    double basis_norm2(int k) const { return basis_sqnorm_[k]; }

  private:
    GridPtr grid_;
    int degree_;
    complexd center_;
    double scale_;
    std::vector<double> wts_;  // rescaled weight * cell weight, per cell
    Eigen::MatrixXcd gram_;
    Eigen::MatrixXcd evecs_;
    Eigen::VectorXd evals_;
    std::vector<double> basis_sqnorm_;
    int retained_ = 0;
    double cond_ = 0.0;
};

WeightedBasis weighted_gram(GridPtr grid, const std::vector<LogValue>& weight,
                            int degree, complexd center, double scale,
                            double cond_cap = 1e12);

struct CanonicalSolution {
    GridFunction g;           // minimal-norm solution, orthogonal to the basis span
    GridFunction particular;  // Cauchy-transform particular solution
    Eigen::VectorXcd coeffs;  // projection coefficients removed from particular
};

// g = g0 - P_lambda g0 with g0 the Cauchy particular solution of
// d g / d zbar = beta.
CanonicalSolution canonical_solution(const std::vector<LogValue>& weight,
                                     const GridFunction& beta, int degree = 24);

// max_k |<g, e_k>_lambda| / (||g||_lambda ||e_k||_lambda) over k <= degree
double orthogonality_residual(const GridFunction& g,
                              const std::vector<LogValue>& weight, int degree,
                              complexd center, double scale);

struct OneNormBound {
    int n;
    double norm2;    // ||1||^2 in L^2(V1, lambda_n)
    double bound2;   // (pi a1 / sqrt(n-1))^2
    double margin;   // bound2 - norm2
};

struct OneNormReport {
    std::vector<OneNormBound> rows;
    bool all_hold = true;
    bool monotone_decreasing = true;
};

// ||1||_{lambda_n} <= pi a1 / sqrt(n-1) for case-1 weights with phi <= 0.
// Throws if the certification phi <= 0 fails on the grid.
OneNormReport one_norm_bound_check(const HartogsDomain& d, const GridPtr& grid,
                                   const std::vector<int>& ns, double a1);

}  // namespace hartogs
