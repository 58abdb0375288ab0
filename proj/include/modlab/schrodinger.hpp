#pragma once

#include <optional>
#include <vector>

#include "modlab/analytic.hpp"
#include "modlab/operator_expr.hpp"

namespace modlab::schrodinger {

// Aliasing guard for multiplication groups with unbounded frequency
// sweep (e^{i a e^nu} and friends). A state may be acted on when, at
// every nu carrying amplitude above amplitude_floor * peak, the local
// kappa-sweep |d phase/d nu| stays below budget_fraction * kappa_max.
struct AliasGuard {
  double budget_fraction = 0.25;
  double amplitude_floor = 1e-9;
};

void require_resolved(const StateVector& v, const std::function<double(double)>& sweep,
                      const AliasGuard& guard, const char* what);

// The multiplication-operator model of the Theorem 1/3 relations:
//   Delta^{iz} = e^{2 pi i z kappa},  U(a) = e^{i a e^nu},
//   J = conj-flip,  V(lambda) = e^{i lambda kappa},  T(x) = e^{-i x nu}.
struct ModularModel {
  GridSpec grid;
  OpPtr delta_power(cplx z) const;
  OpPtr lightlike(double a) const;
  OpPtr conj_j() const;
  OpPtr weyl_v(double lambda) const;
  OpPtr weyl_t(double x) const;
};

ModularModel make_model(const GridSpec& g);

// Delta^{iz} applied to a kappa-representation vector. For Im z != 0 the
// input must pass the analytic edge-decay check.
StateVector delta_power_apply(cplx z, const StateVector& v, double decay_tol = 1e-13);

// U(a) = e^{i a e^nu} with the aliasing guard.
StateVector lightlike_apply(double a, const StateVector& v, const AliasGuard& guard = {});

// max over probes of ||V(l)T(x)p - e^{i l x} T(x)V(l)p|| / ||p||  (Eq. 7 form).
double check_weyl_ccr(double lambda, double x, const std::vector<AnalyticVector>& probes,
                      const GridSpec& g);

struct UnitarySample {
  double parameter;  // lambda for V samples, a for U samples
  Mat matrix;
};

struct SvnReport {
  int trivial_dim = 0;      // joint fixed space of the U samples
  int nontrivial_dim = 0;
  double weyl_residual = 0; // Weyl relation residual on the complement
  double generator_min = 0; // smallest generator eigenvalue on the complement
};

// Stone-von Neumann style decomposition of a finite model: splits off the
// numerical null space of the U generator, takes the logarithm P of the
// generator on the complement, and reports the canonical commutation
// residual between the V samples and T(x) = e^{-i x P}.
SvnReport svn_decompose(const std::vector<UnitarySample>& v_samples,
                        const std::vector<UnitarySample>& u_samples,
                        const std::vector<double>& x_samples, const std::vector<Vec>& probes,
                        double tol);

}  // namespace modlab::schrodinger
