#pragma once

#include <optional>
#include <vector>

#include "modlab/analytic.hpp"
#include "modlab/schrodinger.hpp"
#include "modlab/subspace.hpp"

namespace modlab::freefield {

enum class WedgeSide { r, r_prime };

// Discretized wedge subspace generated from Gaussian-Hermite seeds g:
//   r       : f(kappa) = g(kappa) + e^{-pi kappa} conj(g(-kappa))
//   r_prime : f(kappa) = g(kappa) + e^{+pi kappa} conj(g(-kappa))
// Vectors are fixed points of j delta^{1/2} (resp. j delta^{-1/2}).
struct WedgeBasis {
  WedgeSide side = WedgeSide::r;
  GridSpec grid;
  std::vector<AnalyticVector> seeds;
  std::vector<StateVector> vectors;
  double max_fix_residual = 0.0;

  subspace::RealSubspace as_subspace(double rank_tol = 1e-8) const;
};

WedgeBasis build_wedge_basis(WedgeSide side, const std::vector<AnalyticVector>& seeds,
                             const GridSpec& g, double edge_decay_tol = 1e-9);

// The generator pair h_{lambda,rho} = lambda e^nu + rho e^{-nu}.
struct LRGenerator {
  double lambda = 0.0;
  double rho = 0.0;
};

LRGenerator make_lr(double lambda, double rho);

// e^{i a h_{lambda,rho}} with the aliasing guard.
StateVector lr_apply(const LRGenerator& gen, double a, const StateVector& v,
                     const schrodinger::AliasGuard& guard = {});

// Minimum of the symbol over the grid's nu range, refined by ternary
// search between neighbouring grid points.
double symbol_min(const LRGenerator& gen, const GridSpec& g);

struct Classification {
  bool positive = false;
  bool endo_m = false;
  bool endo_m_prime = false;
};

// The (i)/(iii)/(iv) truth table entry for one generator, decided by the
// refined symbol minimum and the bilinear pairing residuals.
Classification classify(const LRGenerator& gen, const WedgeBasis& r_basis,
                        const WedgeBasis& rprime_basis, const std::vector<double>& a_samples,
                        double pos_tol = 1e-9, double endo_tol = 1e-6,
                        const schrodinger::AliasGuard& guard = {});

struct CovarianceReport {
  double boost_residual = 0.0;  // Delta^{it} e^{iah} Delta^{-it} vs e^{iah'}
  double j_residual = 0.0;      // J e^{iah} J vs e^{iah''}, (l,r) -> (-l,-r)
};

CovarianceReport check_modular_covariance_ii(const LRGenerator& gen, double t,
                                             const std::vector<double>& a_samples,
                                             const std::vector<AnalyticVector>& probes,
                                             const GridSpec& g,
                                             const schrodinger::AliasGuard& guard = {});

// Smooth bump supported on [x0, x1] (standard mollifier profile).
struct BumpProfile {
  double x0 = 1.0;
  double x1 = 2.0;
  double amplitude = 1.0;

  double eval(double x) const;
  // (2 pi)^{-1/2} \int b(x) e^{+i p x} dx by trapezoid quadrature; the
  // kernel sign makes transforms of [1,inf)-supported profiles analytic
  // in the upper half plane, which is the side the wedge strip needs.
  cplx fourier(double p, int quad_points = 4096) const;
};

// Element of the r_1 family: nu-space profile
//   ghat(sinh nu) + i cosh(nu) hhat(sinh nu)
// for real g, h supported in [1, infinity).
struct R1Vector {
  std::optional<BumpProfile> g_profile;
  std::optional<BumpProfile> h_profile;
  StateVector realized;
};

R1Vector build_r1_vector(const std::optional<BumpProfile>& g_profile,
                         const std::optional<BumpProfile>& h_profile, const GridSpec& g,
                         int quad_points = 4096, double p_cut = 200.0);

struct EpsilonScan {
  double eps = 0.0;
  std::vector<std::pair<double, double>> profile;  // (a, bilinear residual)
  double max_residual = 0.0;
};

// Bilinear r-membership residual of e^{i a h} f along a in (0, eps],
// 32 log-spaced points by default; the subspace surrogate for membership
// of the evolved vector in R_epsilon.
EpsilonScan epsilon_invariance_scan(const R1Vector& v, const LRGenerator& gen, double eps,
                                    int steps, const WedgeBasis& rprime_basis,
                                    const schrodinger::AliasGuard& guard = {});

}  // namespace modlab::freefield
