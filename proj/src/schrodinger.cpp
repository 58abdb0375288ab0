#include "modlab/schrodinger.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace modlab::schrodinger {

void require_resolved(const StateVector& v, const std::function<double(double)>& sweep,
                      const AliasGuard& guard, const char* what) {
  StateVector vn = to_rep(v, Rep::nu);
  double peak = vn.samples.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  const double budget = guard.budget_fraction * v.grid.kappa_max;
  for (int k = 0; k < vn.grid.n; ++k) {
    if (std::abs(vn.samples[k]) <= guard.amplitude_floor * peak) continue;
    double s = sweep(vn.grid.nu(k));
    if (s > budget) {
      std::ostringstream msg;
      msg << what << ": symbol sweep " << s << " at nu=" << vn.grid.nu(k)
          << " exceeds the aliasing budget " << budget << " (= " << guard.budget_fraction
          << " * kappa_max); refine the grid or shrink the parameter";
      throw ResolutionError(msg.str());
    }
  }
}

OpPtr ModularModel::delta_power(cplx z) const {
  return kappa_mult(
      [z](double k) { return std::exp(cplx(0.0, 2.0 * M_PI * k) * z); },
      "exp(2 pi i z kappa)");
}

OpPtr ModularModel::lightlike(double a) const {
  return nu_mult([a](double nu) { return std::exp(cplx(0.0, a * std::exp(nu))); },
                 "exp(i a e^nu)");
}

OpPtr ModularModel::conj_j() const { return conj_flip(); }

OpPtr ModularModel::weyl_v(double lambda) const {
  return kappa_mult([lambda](double k) { return std::exp(cplx(0.0, lambda * k)); },
                    "exp(i lambda kappa)");
}

OpPtr ModularModel::weyl_t(double x) const {
  return nu_mult([x](double nu) { return std::exp(cplx(0.0, -x * nu)); }, "exp(-i x nu)");
}

ModularModel make_model(const GridSpec& g) { return ModularModel{g}; }

StateVector delta_power_apply(cplx z, const StateVector& v, double decay_tol) {
  if (v.rep != Rep::kappa)
    throw GridMismatchError("delta_power_apply: input must be in the kappa representation");
  if (z.imag() != 0.0) require_edge_decay(v, "delta_power_apply", decay_tol);
  StateVector w = v;
  for (int j = 0; j < w.grid.n; ++j)
    w.samples[j] *= std::exp(cplx(0.0, 2.0 * M_PI * w.grid.kappa(j)) * z);
  check_finite(w, "delta_power_apply");
  return w;
}

StateVector lightlike_apply(double a, const StateVector& v, const AliasGuard& guard) {
  require_resolved(
      v, [a](double nu) { return std::abs(a) * std::exp(nu); }, guard, "lightlike_apply");
  ModularModel m{v.grid};
  return apply_op(m.lightlike(a), v);
}

double check_weyl_ccr(double lambda, double x, const std::vector<AnalyticVector>& probes,
                      const GridSpec& g) {
  ModularModel m{g};
  OpPtr v_op = m.weyl_v(lambda);
  OpPtr t_op = m.weyl_t(x);
  const cplx phase = std::exp(cplx(0.0, lambda * x));
  double worst = 0.0;
  for (const auto& av : probes) {
    StateVector p = av.realize(g);
    StateVector lhs = apply_op(v_op, apply_op(t_op, p));
    StateVector rhs = apply_op(t_op, apply_op(v_op, p));
    rhs.samples *= phase;
    worst = std::max(worst, (lhs.samples - rhs.samples).norm() / p.norm());
  }
  return worst;
}

SvnReport svn_decompose(const std::vector<UnitarySample>& v_samples,
                        const std::vector<UnitarySample>& u_samples,
                        const std::vector<double>& x_samples, const std::vector<Vec>& probes,
                        double tol) {
  if (u_samples.empty()) throw ConfigError("svn_decompose: need at least one U sample");
  const auto dim = u_samples.front().matrix.rows();

  Mat defect = Mat::Zero(dim, dim);
  for (const auto& s : u_samples)
    defect += 2.0 * Mat::Identity(dim, dim) - s.matrix - s.matrix.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(defect);

  int trivial = 0;
  while (trivial < dim && es.eigenvalues()(trivial) < tol) ++trivial;
  SvnReport rep;
  rep.trivial_dim = trivial;
  rep.nontrivial_dim = static_cast<int>(dim) - trivial;
  if (rep.nontrivial_dim == 0) return rep;

  Mat qc = es.eigenvectors().rightCols(rep.nontrivial_dim);

  // Generator from the smallest-parameter U sample, via the Schur form of
  // the compressed unitary (normal to numerical precision).
  const UnitarySample* smallest = nullptr;
  for (const auto& s : u_samples)
    if (s.parameter != 0.0 && (!smallest || std::abs(s.parameter) < std::abs(smallest->parameter)))
      smallest = &s;
  if (!smallest) throw ConfigError("svn_decompose: need a U sample with nonzero parameter");

  Mat uc = qc.adjoint() * smallest->matrix * qc;
  Eigen::ComplexSchur<Mat> schur(uc);
  const Mat& q = schur.matrixU();
  Eigen::VectorXd gen_eigs(rep.nontrivial_dim);
  for (int i = 0; i < rep.nontrivial_dim; ++i)
    gen_eigs(i) = std::arg(schur.matrixT()(i, i)) / smallest->parameter;
  rep.generator_min = gen_eigs.minCoeff();
  if (rep.generator_min < -tol)
    throw ModelError("svn_decompose: generator not positive semidefinite on the complement");

  Eigen::VectorXd p_eigs(rep.nontrivial_dim);
  for (int i = 0; i < rep.nontrivial_dim; ++i) p_eigs(i) = std::log(std::max(gen_eigs(i), tol));

  auto t_of = [&](double x) {
    Vec phases(rep.nontrivial_dim);
    for (int i = 0; i < rep.nontrivial_dim; ++i) phases(i) = std::exp(cplx(0.0, -x * p_eigs(i)));
    return Mat(q * phases.asDiagonal() * q.adjoint());
  };

  double worst = 0.0;
  for (const auto& vs : v_samples) {
    Mat vc = qc.adjoint() * vs.matrix * qc;
    for (double x : x_samples) {
      Mat tx = t_of(x);
      Mat comm = vc * tx - std::exp(cplx(0.0, vs.parameter * x)) * tx * vc;
      for (const auto& p : probes) {
        Vec pc = qc.adjoint() * p;
        double nn = pc.norm();
        if (nn < 1e-12 * p.norm()) continue;
        worst = std::max(worst, (comm * pc).norm() / nn);
      }
    }
  }
  rep.weyl_residual = worst;
  return rep;
}

}  // namespace modlab::schrodinger
