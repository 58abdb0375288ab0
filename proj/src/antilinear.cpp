#include "modlab/antilinear.hpp"

#include <Eigen/SVD>

namespace modlab {

Eigen::MatrixXd realify_linear(const Mat& m) {
  const auto n = m.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

Eigen::MatrixXd realify_antilinear(const Mat& m) {
  const auto n = m.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = -m.real();
  return r;
}

Mat derealify_linear(const Eigen::MatrixXd& r) {
  const auto n = r.rows() / 2;
  Eigen::MatrixXd a = 0.5 * (r.topLeftCorner(n, n) + r.bottomRightCorner(n, n));
  Eigen::MatrixXd b = 0.5 * (r.bottomLeftCorner(n, n) - r.topRightCorner(n, n));
  return a.cast<cplx>() + cplx(0, 1) * b.cast<cplx>();
}

Mat derealify_antilinear(const Eigen::MatrixXd& r) {
  const auto n = r.rows() / 2;
  Eigen::MatrixXd a = 0.5 * (r.topLeftCorner(n, n) - r.bottomRightCorner(n, n));
  Eigen::MatrixXd b = 0.5 * (r.bottomLeftCorner(n, n) + r.topRightCorner(n, n));
  return a.cast<cplx>() + cplx(0, 1) * b.cast<cplx>();
}

Eigen::VectorXd realify_vec(const Vec& v) {
  Eigen::VectorXd r(2 * v.size());
  r.head(v.size()) = v.real();
  r.tail(v.size()) = v.imag();
  return r;
}

Vec derealify_vec(const Eigen::VectorXd& r) {
  const auto n = r.size() / 2;
  return r.head(n).cast<cplx>() + cplx(0, 1) * r.tail(n).cast<cplx>();
}

Mat antilinear_adjoint(const Mat& m) { return m.transpose(); }

AntilinearPolar polar_decompose_antilinear(const Mat& s, double rel_sing_tol) {
  Eigen::MatrixXd sr = realify_antilinear(s);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sr, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sig = svd.singularValues();
  if (sig.size() == 0 || sig(sig.size() - 1) <= rel_sing_tol * sig(0))
    throw ModelError("polar_decompose_antilinear: singular as a real-linear map");

  Eigen::MatrixXd o = svd.matrixU() * svd.matrixV().transpose();
  Eigen::MatrixXd p = svd.matrixV() * sig.asDiagonal() * svd.matrixV().transpose();
  Eigen::MatrixXd p_inv =
      svd.matrixV() * sig.cwiseInverse().asDiagonal() * svd.matrixV().transpose();

  AntilinearPolar out;
  out.j = derealify_antilinear(o);
  out.delta_sqrt = derealify_linear(p);
  out.delta_inv_sqrt = derealify_linear(p_inv);
  out.delta = out.delta_sqrt * out.delta_sqrt;
  return out;
}

}  // namespace modlab
