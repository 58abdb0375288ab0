#include "modlab/analytic.hpp"

#include <cmath>

namespace modlab {

double hermite_poly(int degree, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (degree == 0) return h0;
  if (degree == 1) return h1;
  for (int k = 1; k < degree; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

cplx AnalyticVector::eval(double kappa) const {
  double u = (kappa - center) / width;
  return phase * hermite_poly(hermite_degree, u) * std::exp(-0.5 * u * u);
}

StateVector AnalyticVector::realize(const GridSpec& g) const {
  StateVector v = from_kappa_function(g, [this](double kappa) { return eval(kappa); });
  v.samples /= v.norm();
  return v;
}

StateVector AnalyticVector::realize_nu(const GridSpec& g) const {
  // F[H_d((k-c)/w) e^{-(k-c)^2/(2w^2)}](nu) =
  //   w (-i)^d e^{-i c nu} H_d(w nu) e^{-w^2 nu^2 / 2}
  cplx mi_pow(1.0, 0.0);
  for (int k = 0; k < hermite_degree; ++k) mi_pow *= cplx(0.0, -1.0);
  StateVector v = from_nu_function(g, [this, mi_pow](double nu) {
    double u = width * nu;
    return phase * width * mi_pow * std::exp(cplx(0.0, -center * nu)) *
           hermite_poly(hermite_degree, u) * std::exp(-0.5 * u * u);
  });
  v.samples /= v.norm();
  return v;
}

bool decays_at_edge(const StateVector& v, double tol, double edge_fraction) {
  double peak = v.samples.cwiseAbs().maxCoeff();
  if (peak == 0.0) return true;
  return edge_amplitude(v, edge_fraction * v.grid.kappa_max) <= tol * peak;
}

void require_edge_decay(const StateVector& v, const char* what, double tol) {
  if (!decays_at_edge(v, tol))
    throw DomainError(std::string(what) +
                      ": vector does not decay at the window edge (analytic-domain violation)");
}

std::vector<AnalyticVector> default_probe_family(int count, std::uint64_t seed) {
  return probe_family(count, seed, -2.0, 2.0, 0.5, 2.0, 4);
}

std::vector<AnalyticVector> probe_family(int count, std::uint64_t seed, double c_lo, double c_hi,
                                         double w_lo, double w_hi, int max_degree) {
  Rng rng(seed);
  std::vector<AnalyticVector> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    AnalyticVector av;
    av.center = rng.uniform(c_lo, c_hi);
    av.width = rng.uniform(w_lo, w_hi);
    av.hermite_degree = rng.uniform_int(0, max_degree);
    double th = rng.uniform(0.0, 2.0 * M_PI);
    av.phase = cplx(std::cos(th), std::sin(th));
    out.push_back(av);
  }
  return out;
}

}  // namespace modlab
