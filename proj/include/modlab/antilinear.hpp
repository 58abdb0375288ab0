#pragma once

#include "modlab/grid.hpp"

namespace modlab {

// Real 2n x 2n pictures of complex-linear and antilinear maps, acting on
// (Re v; Im v). Antilinear maps are stored as (matrix, conjugate-first)
// pairs throughout: action v -> M * conj(v).
Eigen::MatrixXd realify_linear(const Mat& m);       // [[A, -B], [B,  A]]
Eigen::MatrixXd realify_antilinear(const Mat& m);   // [[A,  B], [B, -A]]
Mat derealify_linear(const Eigen::MatrixXd& r);
Mat derealify_antilinear(const Eigen::MatrixXd& r);

Eigen::VectorXd realify_vec(const Vec& v);
Vec derealify_vec(const Eigen::VectorXd& r);

// Adjoint of the antilinear map v -> M conj(v) is v -> M^T conj(v).
Mat antilinear_adjoint(const Mat& m);

struct AntilinearPolar {
  Mat j;           // antiunitary factor, conjugate-first storage
  Mat delta;       // positive factor Delta = S* S (complex linear)
  Mat delta_sqrt;
  Mat delta_inv_sqrt;
};

// Polar decomposition S = J Delta^{1/2} of an invertible antilinear map,
// computed through the real SVD of the realified matrix. Throws
// ModelError when S is singular as a real-linear map (smallest singular
// value below rel_sing_tol * largest).
AntilinearPolar polar_decompose_antilinear(const Mat& s, double rel_sing_tol = 1e-13);

}  // namespace modlab
