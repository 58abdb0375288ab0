#include "modlab/subspace.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

namespace modlab::subspace {

namespace {

// Realified multiplication by i: [x; y] -> [-y; x].
Eigen::VectorXd times_i(const Eigen::VectorXd& r) {
  const auto n = r.size() / 2;
  Eigen::VectorXd out(2 * n);
  out.head(n) = -r.tail(n);
  out.tail(n) = r.head(n);
  return out;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& cols, double rank_tol) {
  if (cols.cols() == 0) return Eigen::MatrixXd(cols.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto& sig = svd.singularValues();
  int rank = 0;
  while (rank < sig.size() && sig(rank) > rank_tol * sig(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

RealSubspace make_real_subspace(std::vector<Vec> spanning, double rank_tol) {
  if (spanning.empty()) throw ConfigError("real subspace: empty spanning set");
  const auto n = spanning.front().size();
  Eigen::MatrixXd cols(2 * n, spanning.size());
  for (size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != n) throw GridMismatchError("real subspace: mixed dimensions");
    if (!spanning[i].allFinite()) throw DomainError("real subspace: non-finite spanning vector");
    cols.col(i) = realify_vec(spanning[i]);
  }
  RealSubspace r;
  r.ambient_dim = static_cast<int>(n);
  r.spanning = std::move(spanning);
  r.basis = orthonormalize(cols, rank_tol);
  return r;
}

RealSubspace make_real_subspace(const std::vector<StateVector>& spanning, double rank_tol) {
  std::vector<Vec> vs;
  vs.reserve(spanning.size());
  for (const auto& s : spanning) vs.push_back(to_rep(s, Rep::kappa).samples);
  return make_real_subspace(std::move(vs), rank_tol);
}

StandardnessReport standardness(const RealSubspace& r, double rank_tol) {
  const int k = r.real_rank();
  Eigen::MatrixXd both(r.basis.rows(), 2 * k);
  both.leftCols(k) = r.basis;
  for (int i = 0; i < k; ++i) both.col(k + i) = times_i(r.basis.col(i));
  Eigen::MatrixXd q = orthonormalize(both, rank_tol);

  StandardnessReport rep;
  rep.real_rank = k;
  rep.complex_rank = static_cast<int>(q.cols()) / 2;
  rep.cyclic = q.cols() == r.basis.rows();
  // dim(R intersect iR) = 2k - rank([B, iB])
  rep.separating = (2 * k - q.cols()) == 0;
  return rep;
}

RealSubspace complement(const RealSubspace& r, double rank_tol) {
  const auto n2 = r.basis.rows();
  const auto n = n2 / 2;
  const int k = r.real_rank();
  // Im<psi|phi> = x1.y2 - x2.y1 for psi = x1+ix2, phi = y1+iy2.
  Eigen::MatrixXd a(k, n2);
  for (int i = 0; i < k; ++i) {
    a.row(i).head(n) = r.basis.col(i).tail(n).transpose();
    a.row(i).tail(n) = -r.basis.col(i).head(n).transpose();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
  qr.setThreshold(rank_tol);
  const auto rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd kernel = q.rightCols(n2 - rank);

  std::vector<Vec> spanning;
  spanning.reserve(kernel.cols());
  for (int i = 0; i < kernel.cols(); ++i) spanning.push_back(derealify_vec(kernel.col(i)));
  return make_real_subspace(std::move(spanning), rank_tol);
}

ModularData tomita_from_span(const RealSubspace& r, double rank_tol) {
  const int k = r.real_rank();
  const auto n = r.basis.rows() / 2;

  Mat span(n, k);
  for (int i = 0; i < k; ++i) span.col(i) = derealify_vec(r.basis.col(i));
  Eigen::JacobiSVD<Mat> svd(span, Eigen::ComputeThinU);
  int m = 0;
  while (m < svd.singularValues().size() &&
         svd.singularValues()(m) > rank_tol * svd.singularValues()(0))
    ++m;
  if (m < k)
    throw ModelError(
        "tomita_from_span: subspace is not standard on its span (R intersect iR is nontrivial: "
        "complex rank " +
        std::to_string(m) + " < real rank " + std::to_string(k) + ")");
  Mat q = svd.matrixU().leftCols(m);

  // Coordinates of the real basis; S c = c, S (i c) = -i c.
  Eigen::MatrixXd x(2 * k, 2 * k), y(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    Vec c = q.adjoint() * span.col(i);
    Eigen::VectorXd cr = realify_vec(c);
    x.col(i) = cr;
    x.col(k + i) = times_i(cr);
    y.col(i) = cr;
    y.col(k + i) = -times_i(cr);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(x);
  if (!lu.isInvertible())
    throw ModelError("tomita_from_span: spanning set does not split R + iR (not standard)");
  Eigen::MatrixXd s_real = y * lu.inverse();

  ModularData md;
  md.span_basis = q;
  md.s = derealify_antilinear(s_real);
  AntilinearPolar polar = polar_decompose_antilinear(md.s);
  md.j = polar.j;
  md.delta = polar.delta;
  md.delta_sqrt = polar.delta_sqrt;
  md.delta_inv_sqrt = polar.delta_inv_sqrt;

  double worst = 0.0;
  for (int i = 0; i < k; ++i) {
    Vec c = q.adjoint() * span.col(i);
    Vec fixed = md.j * (md.delta_sqrt * c).conjugate();
    worst = std::max(worst, (fixed - c).norm() / c.norm());
  }
  md.fix_residual = worst;
  return md;
}

Vec modular_delta_apply(const ModularData& md, const Vec& v) {
  return modular_op_apply(md, md.delta, v);
}

Vec modular_op_apply(const ModularData& md, const Mat& coord_op, const Vec& v) {
  Vec c = md.span_basis.adjoint() * v;
  return md.span_basis * (coord_op * c);
}

MembershipReport membership_residual(const Vec& f, const RealSubspace& r,
                                     const RealSubspace& r_prime) {
  MembershipReport rep;
  Eigen::VectorXd x = realify_vec(f);
  Eigen::VectorXd proj = r.basis * (r.basis.transpose() * x);
  rep.projection_residual = (x - proj).norm() / x.norm();

  double worst = 0.0;
  for (const auto& g : r_prime.spanning) {
    double im = std::abs(std::imag(f.dot(g)));
    worst = std::max(worst, im / (f.norm() * g.norm()));
  }
  rep.bilinear_residual = worst;
  return rep;
}

MembershipReport membership_residual(const StateVector& f, const RealSubspace& r,
                                     const RealSubspace& r_prime) {
  return membership_residual(to_rep(f, Rep::kappa).samples, r, r_prime);
}

double projector_gap(const RealSubspace& a, const RealSubspace& b) {
  Eigen::MatrixXd pa = a.basis * a.basis.transpose();
  Eigen::MatrixXd pb = b.basis * b.basis.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pa - pb, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double containment_gap(const RealSubspace& a, const RealSubspace& b) {
  // ||(1 - P_b) Q_a|| = sqrt(lmax(Q_a^T (1 - P_b) Q_a))
  Eigen::MatrixXd cross = b.basis.transpose() * a.basis;
  Eigen::MatrixXd gram =
      Eigen::MatrixXd::Identity(a.real_rank(), a.real_rank()) - cross.transpose() * cross;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace modlab::subspace
