#include "modlab/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace modlab {

GridSpec make_grid(int n_points, double kappa_max) {
  if (n_points < 8 || n_points % 2 != 0)
    throw ConfigError("grid: n_points must be even and >= 8");
  if (!(kappa_max > 0.0)) throw ConfigError("grid: kappa_max must be positive");
  return GridSpec{n_points, kappa_max};
}

StateVector from_kappa_function(const GridSpec& g, const std::function<cplx(double)>& f) {
  StateVector v{g, Rep::kappa, Vec(g.n)};
  const double w = std::sqrt(g.step());
  for (int j = 0; j < g.n; ++j) v.samples[j] = f(g.kappa(j)) * w;
  return v;
}

StateVector from_nu_function(const GridSpec& g, const std::function<cplx(double)>& f) {
  StateVector v{g, Rep::nu, Vec(g.n)};
  const double w = std::sqrt(g.nu_step());
  for (int k = 0; k < g.n; ++k) v.samples[k] = f(g.nu(k)) * w;
  return v;
}

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

// samples'_k = n^{-1/2} (-1)^{k-n/2} sum_j (-1)^j samples_j e^{-2 pi i jk/n}
StateVector to_nu(const StateVector& v) {
  if (v.rep != Rep::kappa)
    throw GridMismatchError("to_nu: input is not in the kappa representation");
  const int n = v.grid.n;
  Vec t(n);
  for (int j = 0; j < n; ++j) t[j] = (j % 2 == 0) ? v.samples[j] : -v.samples[j];
  Vec f(n);
  fft_engine().fwd(f, t);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  const double half_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  StateVector out{v.grid, Rep::nu, Vec(n)};
  for (int k = 0; k < n; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    out.samples[k] = s * half_sign * sgn * f[k];
  }
  return out;
}

StateVector to_kappa(const StateVector& v) {
  if (v.rep != Rep::nu)
    throw GridMismatchError("to_kappa: input is not in the nu representation");
  const int n = v.grid.n;
  const double half_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  Vec u(n);
  for (int k = 0; k < n; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    u[k] = half_sign * sgn * v.samples[k];
  }
  Vec t(n);
  fft_engine().inv(t, u);
  const double s = std::sqrt(static_cast<double>(n));
  StateVector out{v.grid, Rep::kappa, Vec(n)};
  for (int j = 0; j < n; ++j) {
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    out.samples[j] = s * sgn * t[j];
  }
  return out;
}

StateVector to_rep(const StateVector& v, Rep target) {
  if (v.rep == target) return v;
  return target == Rep::nu ? to_nu(v) : to_kappa(v);
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.grid != b.grid) throw GridMismatchError("inner: grids differ");
  if (a.rep != b.rep) throw GridMismatchError("inner: representations differ");
  return a.samples.dot(b.samples);
}

double edge_amplitude(const StateVector& v, double x) {
  double m = 0.0;
  for (int j = 0; j < v.grid.n; ++j) {
    double c = v.rep == Rep::kappa ? v.grid.kappa(j) : v.grid.nu(j);
    if (std::abs(c) >= x) m = std::max(m, std::abs(v.samples[j]));
  }
  return m;
}

double effective_nu_support(const StateVector& v, double rel_floor) {
  StateVector vn = to_rep(v, Rep::nu);
  double peak = vn.samples.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 0.0;
  double support = 0.0;
  for (int k = 0; k < vn.grid.n; ++k)
    if (std::abs(vn.samples[k]) > rel_floor * peak)
      support = std::max(support, std::abs(vn.grid.nu(k)));
  return support;
}

void check_finite(const StateVector& v, const char* what) {
  if (!v.samples.allFinite())
    throw DomainError(std::string(what) + ": non-finite samples (domain violation)");
}

}  // namespace modlab
