#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "modlab/errors.hpp"

namespace modlab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Uniform grid on the symmetric window [-kappa_max, kappa_max), together
// with the induced DFT frequency grid for nu = -i d/dkappa.
//
//   kappa_j = -kappa_max + j*step,            j = 0..n-1
//   nu_k    = (k - n/2) * pi/kappa_max,       k = 0..n-1
//
// The reflection kappa -> -kappa is the index map j -> (n-j) mod n; the
// single aliased point is j = 0 (kappa = -kappa_max is identified with
// +kappa_max).
struct GridSpec {
  int n = 0;
  double kappa_max = 0.0;

  double step() const { return 2.0 * kappa_max / n; }
  double nu_step() const { return M_PI / kappa_max; }
  double kappa(int j) const { return -kappa_max + j * step(); }
  double nu(int k) const { return (k - n / 2) * nu_step(); }
  double nu_max() const { return (n / 2) * nu_step(); }
  int flip(int j) const { return j == 0 ? 0 : n - j; }

  bool operator==(const GridSpec& o) const {
    return n == o.n && kappa_max == o.kappa_max;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

GridSpec make_grid(int n_points, double kappa_max);

enum class Rep { kappa, nu };

// Discretized vector of L^2(R, dkappa). Samples carry the quadrature
// weight: samples[j] = f(kappa_j) * sqrt(step) in the kappa
// representation, and fhat(nu_k) * sqrt(nu_step) in the nu
// representation, where
//
//   fhat(nu) = (2*pi)^{-1/2} \int f(kappa) e^{-i nu kappa} dkappa.
//
// With the weight absorbed, inner products and norms are the plain
// complex dot products of the sample vectors and the rep change below is
// exactly unitary.
struct StateVector {
  GridSpec grid;
  Rep rep = Rep::kappa;
  Vec samples;

  double norm() const { return samples.norm(); }
  int size() const { return grid.n; }
};

StateVector from_kappa_function(const GridSpec& g, const std::function<cplx(double)>& f);
StateVector from_nu_function(const GridSpec& g, const std::function<cplx(double)>& f);

// Exactly unitary rep changes. to_nu requires a kappa-rep input (and
// vice versa); passing the wrong rep is a GridMismatchError.
StateVector to_nu(const StateVector& v);
StateVector to_kappa(const StateVector& v);
StateVector to_rep(const StateVector& v, Rep target);

// <a|b>, conjugate-linear in the first slot. Grid and rep must agree.
cplx inner(const StateVector& a, const StateVector& b);

// max_j |v_j| over indices whose |x_j| >= x (used by decay checks).
double edge_amplitude(const StateVector& v, double x);

// Largest |nu| whose amplitude exceeds rel_floor * max|vhat|; the
// effective spectral support used by the aliasing guards.
double effective_nu_support(const StateVector& v, double rel_floor = 1e-13);

void check_finite(const StateVector& v, const char* what);

}  // namespace modlab
