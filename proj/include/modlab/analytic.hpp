#pragma once

#include <vector>

#include "modlab/grid.hpp"
#include "modlab/rng.hpp"

namespace modlab {

// Gaussian-Hermite vector: phase * H_d((kappa-c)/w) exp(-(kappa-c)^2/(2w^2)),
// normalized on the grid it is realized on. These are the entire analytic
// vectors all unbounded-operator tests are restricted to.
struct AnalyticVector {
  double center = 0.0;
  double width = 1.0;
  int hermite_degree = 0;
  cplx phase = cplx(1.0, 0.0);

  cplx eval(double kappa) const;  // unnormalized closed form

  StateVector realize(const GridSpec& g) const;

  // Closed-form nu representation (oracle for the DFT path).
  StateVector realize_nu(const GridSpec& g) const;
};

double hermite_poly(int degree, double x);

// Relative amplitude of v at the window edge, |kappa| >= edge_fraction *
// kappa_max. The analytic-vector contract requires this below tol.
bool decays_at_edge(const StateVector& v, double tol = 1e-13, double edge_fraction = 0.95);
void require_edge_decay(const StateVector& v, const char* what, double tol = 1e-13);

// Deterministic probe family: centers in [-2, 2], widths in [0.5, 2],
// degrees <= 4, random unit phases.
std::vector<AnalyticVector> default_probe_family(int count, std::uint64_t seed);

// Same family with caller-set parameter ranges.
std::vector<AnalyticVector> probe_family(int count, std::uint64_t seed, double c_lo, double c_hi,
                                         double w_lo, double w_hi, int max_degree);

}  // namespace modlab
