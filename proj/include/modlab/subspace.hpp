#pragma once

#include <vector>

#include "modlab/antilinear.hpp"
#include "modlab/grid.hpp"

namespace modlab::subspace {

// Finitely spanned real-linear subspace of C^n (real scalar coefficients;
// v and iv are distinct directions). The cached orthonormal basis lives
// in the realified picture R^{2n}.
struct RealSubspace {
  int ambient_dim = 0;
  std::vector<Vec> spanning;
  Eigen::MatrixXd basis;  // 2n x k, orthonormal w.r.t. Re<.|.>

  int real_rank() const { return static_cast<int>(basis.cols()); }
};

RealSubspace make_real_subspace(std::vector<Vec> spanning, double rank_tol = 1e-8);
RealSubspace make_real_subspace(const std::vector<StateVector>& spanning, double rank_tol = 1e-8);

struct StandardnessReport {
  bool cyclic = false;      // R + iR is everything
  bool separating = false;  // R intersect iR = {0}
  int real_rank = 0;
  int complex_rank = 0;
};

StandardnessReport standardness(const RealSubspace& r, double rank_tol = 1e-8);

// Symplectic complement {psi : Im<psi|phi> = 0 for all phi in R}.
RealSubspace complement(const RealSubspace& r, double rank_tol = 1e-8);

// Modular data of the standard subspace spanned inside its own complex
// span W = span_C(R): S(psi + i phi) = psi - i phi on R + iR = W, then
// S = J Delta^{1/2}. All matrices are in coordinates of span_basis;
// antilinear ones use conjugate-first storage.
struct ModularData {
  Mat span_basis;  // n x k, complex orthonormal columns
  Mat s;
  Mat j;
  Mat delta;
  Mat delta_sqrt;
  Mat delta_inv_sqrt;
  double fix_residual = 0.0;  // max over spanning of ||J D^{1/2} psi - psi|| / ||psi||
};

ModularData tomita_from_span(const RealSubspace& r, double rank_tol = 1e-8);

// Action of the reconstructed Delta on a full-space vector (which should
// lie in the span for the result to mean anything).
Vec modular_delta_apply(const ModularData& md, const Vec& v);
Vec modular_op_apply(const ModularData& md, const Mat& coord_op, const Vec& v);

struct MembershipReport {
  double projection_residual = 0.0;  // distance to the finite real span
  double bilinear_residual = 0.0;    // max |Im<f|g'>| / (|f| |g'|) over the R' basis
};

MembershipReport membership_residual(const Vec& f, const RealSubspace& r,
                                     const RealSubspace& r_prime);
MembershipReport membership_residual(const StateVector& f, const RealSubspace& r,
                                     const RealSubspace& r_prime);

// Spectral-norm distance of orthogonal projectors.
double projector_gap(const RealSubspace& a, const RealSubspace& b);

// ||(1 - P_b) P_a||: how far a sticks out of b.
double containment_gap(const RealSubspace& a, const RealSubspace& b);

}  // namespace modlab::subspace
