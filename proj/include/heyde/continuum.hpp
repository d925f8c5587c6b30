#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"

namespace heyde {

using RealMatrix = std::vector<std::vector<double>>;
using RealVector = std::vector<double>;

double quadratic_form(const RealMatrix& a, const RealVector& s);
RealMatrix transpose(const RealMatrix& a);
RealVector mat_vec(const RealMatrix& a, const RealVector& s);
double determinant(RealMatrix a);
/// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(RealMatrix a);

/// Cartesian-product grid over the base points {-2.0, -1.5, ..., 2.0}.
std::vector<RealVector> default_grid(std::size_t dim);

/// Parameters of a Gaussian characteristic function on R^n:
/// exp{-<A s, s> + i<b, s>} with A symmetric positive semidefinite.
struct GaussianParams {
    RealMatrix a;
    RealVector b;

    GaussianParams(RealMatrix a_, RealVector b_);
    std::size_t dim() const { return b.size(); }
};

/// Max residual of phi(u+v) + phi(u-v) - 2 phi(u) - 2 phi(v) over all grid
/// pairs, for an arbitrary sampled phi.
double parallelogram_residual(const std::function<double(const RealVector&)>& phi,
                              const std::vector<RealVector>& grid);

/// The same residual for phi(s) = <A s, s>. Identically zero (up to
/// roundoff) for symmetric A.
double gaussian_phi_check(const RealMatrix& a, const std::vector<RealVector>& grid);

// ---- class Theta on R x Z(2) --------------------------------------------

/// Five-parameter family of characteristic functions on R x Z(2):
///   (s, 0) -> exp{-sigma s^2 + i beta s}
///   (s, 1) -> kappa exp{-sigma' s^2 + i beta' s}
struct ThetaParams {
    double sigma;
    double sigma_p;
    double beta;
    double beta_p;
    double kappa;
};

/// Membership bound for the first branch:
/// sqrt(sigma'/sigma) * exp{-(beta-beta')^2 / (4(sigma-sigma'))}.
double theta_kappa_bound(const ThetaParams& p);

/// True iff one of the two membership branches holds:
///   (1) 0 < sigma' < sigma and 0 < |kappa| <= bound, or
///   (2) sigma = sigma' > 0, beta = beta', |kappa| <= 1.
/// The bound comparisons get `slack` toward acceptance so exact-boundary
/// inputs survive roundoff.
bool theta_validate(const ThetaParams& p, double slack = 1e-12);

/// Componentwise convolution parameters
/// (sigma+sigma, sigma'+sigma', beta+beta, beta'+beta', kappa*kappa) — the
/// pointwise product of the two characteristic functions. Inputs must
/// validate; the result's membership is for the caller to decide.
ThetaParams theta_convolve(const ThetaParams& p, const ThetaParams& q);

/// Characteristic function value at (s, n); n is a dual coordinate of Z(2)
/// and is reduced mod 2.
std::complex<double> theta_cf_eval(const ThetaParams& p, double s, int n);

/// Quadrature ranges for the positivity probe.
struct ProbeGrid {
    double s_max = 40.0;
    double s_step = 0.01;
    double t_max = 10.0;
    double t_step = 0.05;
};

struct ProbeResult {
    bool nonnegative;
    double min_density;
    double arg_t;
    int arg_m;
};

/// Numerically inverts the characteristic function to the density on
/// R x Z(2): density(t, m) = (1/2)[f_0(t) + (-1)^m f_1(t)] with f_n the
/// inverse transform of the n-branch (trapezoid rule). Reports whether the
/// minimum over the grid stays above -cutoff. Requires sigma, sigma' > 0 so
/// the transforms are integrable; membership itself is NOT assumed — the
/// probe is an independent check of it.
ProbeResult theta_pd_probe(const ThetaParams& p, const ProbeGrid& grid = {},
                           double cutoff = 1e-6);

// ---- structured Gaussian x finite-group distributions --------------------

/// Product-form distribution on R^n x G: a Gaussian factor on R^n, an exact
/// distribution on the finite group G, and a shift (t, g). Its
/// characteristic function factorizes as
///   exp{-<A s, s>} exp{i<b + t, s>} (g, h) finite^(h).
struct StructuredDistribution {
    GaussianParams gaussian;
    GroupDistribution finite;
    RealVector shift_t;
    GroupElement shift_g;

    StructuredDistribution(GaussianParams gaussian_, GroupDistribution finite_,
                           RealVector shift_t_, GroupElement shift_g_);
};

std::complex<double> structured_cf_eval(const StructuredDistribution& sd,
                                        const RealVector& s, const GroupElement& h);

struct GridCheckResult {
    double max_residual;
    RealVector worst_s1;
    RealVector worst_s2;
    GroupElement worst_h1;
    GroupElement worst_h2;
};

/// Sweeps the product-group symmetry equation
///   mu1^(s1+s2, h1+h2) mu2^(s1+At s2, h1+ag~ h2)
///     = mu1^(s1-s2, h1-h2) mu2^(s1-At s2, h1-ag~ h2)
/// over all grid pairs (s1, s2) and all dual pairs (h1, h2) of G, where
/// At is the transpose of the real coefficient matrix and ag~ the adjoint
/// of the finite-group automorphism. Returns the max |LHS - RHS|.
GridCheckResult check_heyde_equation_grid(const StructuredDistribution& sd1,
                                          const StructuredDistribution& sd2,
                                          const RealMatrix& alpha_real,
                                          const Endomorphism& alpha_g,
                                          const std::vector<RealVector>& grid);

}  // namespace heyde
