#pragma once

#include <string>
#include <vector>

#include "hartogs/bergman.hpp"
#include "hartogs/domain.hpp"
#include "hartogs/grid_function.hpp"

namespace hartogs {

// dbar-data of a symbol: beta = psi_zbar, compactly supported in D(z0, a).
struct SymbolSpec {
    std::string name;
    GridFunction beta;
    complexd center{0.0, 0.0};
    double support_radius = 0.0;  // a

    SymbolSpec(std::string name_, GridFunction beta_, complexd z0, double a);
};

// radially symmetric bump: 1 on |z-z0| <= 0.6 a, 0 off 0.9 a, quintic
// smoothstep in between
SymbolSpec default_bump_symbol(const GridPtr& grid, complexd z0, double a);

// g(z) w^mode with the coefficient on the base grid
struct ModeFunction {
    GridFunction coeff;
    int mode = 0;  // signed fiber exponent: -n in case 1, +n in case 2
    CaseTag case_tag = CaseTag::Case1;
};

// signed fiber exponent probed at index n for the domain's case
inline int mode_exponent(CaseTag tag, int n) {
    return tag == CaseTag::Case1 ? -n : n;
}

// H_psi applied to the pure fiber mode: the coefficient is the canonical
// weighted dbar solution g_n = S_{lambda_n}(beta).
ModeFunction hankel_mode(const HartogsDomain& d, const SymbolSpec& s, int n,
                         int degree = 24);

// ||g_n||_{lambda_n} / ||1||_{lambda_n} on the symbol grid
double hankel_mode_norm_ratio(const HartogsDomain& d, const SymbolSpec& s, int n,
                              int degree = 24);

struct ModeReductionReport {
    double cross_mode_max = 0.0;   // normalized cross-mode pairings, m != -n
    double pairing_rel_err = 0.0;  // 1D weighted pairing vs 2D quadrature, m = -n
    double field_rel_dev = 0.0;    // direct truncated-Gram Hankel vs g_n w^mode
};

// Checks the fiber-mode reduction against a direct 2D computation with
// quadrature fiber integrals and a truncated monomial family z^k w^m,
// k <= z_degree, |m - mode| <= m_window.
ModeReductionReport verify_mode_reduction(const HartogsDomain& d,
                                          const SymbolSpec& s, int n,
                                          int z_degree = 6, int m_window = 3);

enum class ProbeVerdict { ConsistentWithCompact, ViolatesEstimate, Inconclusive };
const char* to_string(ProbeVerdict v);

struct CompactnessProbe {
    std::vector<int> modes;
    std::vector<double> q, s, t;
    std::vector<double> eps_grid;
    std::vector<std::vector<double>> c_eps;  // [eps][mode]: max(0, (q - eps s)/t)
    std::vector<double> C_eps;               // per eps: max over modes
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
};

// Fits the compactness-estimate constants: for each eps, the smallest C
// making q_n <= eps s_n + C t_n, and classifies the trend.
CompactnessProbe compactness_probe(const std::vector<int>& modes,
                                   const std::vector<double>& q,
                                   const std::vector<double>& s,
                                   const std::vector<double>& t,
                                   const std::vector<double>& eps_grid);

struct ProbeSequences {
    std::vector<int> modes;
    std::vector<double> q, s, t, ratio;  // ratio = hankel_mode_norm_ratio
};

// q_n = ||H_psi e_n||^2, s_n = ||e_n dbar psi|| ||e_n||, t_n the
// distance-weighted surrogate; e_n the pure fiber modes.
ProbeSequences probe_sequences(const HartogsDomain& d, const SymbolSpec& s,
                               const std::vector<int>& modes, int degree = 24,
                               int jobs = 1);

}  // namespace hartogs
