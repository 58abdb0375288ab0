#include "doctest.h"

#include <cmath>

#include "modlab/rng.hpp"
#include "modlab/schrodinger.hpp"

using namespace modlab;
using namespace modlab::schrodinger;

namespace {

StateVector continuum_gaussian(const GridSpec& g) {
  const double c = std::pow(M_PI, -0.25);
  return from_kappa_function(g, [c](double k) { return cplx(c * std::exp(-0.5 * k * k), 0.0); });
}

}  // namespace

TEST_CASE("delta_power: z = 0 is the identity") {
  GridSpec g = make_grid(128, 8.0);
  StateVector v = AnalyticVector{0.3, 1.0, 2, cplx(0, 1)}.realize(g);
  StateVector w = delta_power_apply(cplx(0, 0), v);
  CHECK((w.samples - v.samples).norm() == 0.0);
}

TEST_CASE("delta_power: z = -i/2 on the unit Gaussian (closed-form oracle)") {
  GridSpec g = make_grid(512, 12.0);
  StateVector v = continuum_gaussian(g);
  CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));

  StateVector w = delta_power_apply(cplx(0.0, -0.5), v);
  // Pointwise: e^{pi kappa} e^{-kappa^2/2}; norm: e^{pi^2/2}.
  const double c = std::pow(M_PI, -0.25);
  for (int j = 0; j < g.n; j += 37) {
    double k = g.kappa(j);
    cplx expected = c * std::exp(M_PI * k - 0.5 * k * k) * std::sqrt(g.step());
    CHECK(std::abs(w.samples[j] - expected) < 1e-12 * std::abs(expected) + 1e-300);
  }
  CHECK(w.norm() == doctest::Approx(std::exp(0.5 * M_PI * M_PI)).epsilon(1e-11));
}

TEST_CASE("delta_power: real exponent preserves norm, imaginary needs decay") {
  GridSpec g = make_grid(128, 6.0);
  StateVector v = AnalyticVector{-0.5, 0.9, 1, 1.0}.realize(g);
  CHECK(delta_power_apply(cplx(0.7, 0.0), v).norm() == doctest::Approx(v.norm()).epsilon(1e-12));

  StateVector flat = from_kappa_function(g, [](double) { return cplx(1.0, 0.0); });
  CHECK_THROWS_AS(delta_power_apply(cplx(0.0, -0.5), flat), DomainError);
}

TEST_CASE("lightlike: a = 0 identity and exact group law") {
  GridSpec g = make_grid(256, 16.0);
  StateVector v = AnalyticVector{0.0, 2.0, 0, 1.0}.realize(g);
  CHECK((lightlike_apply(0.0, v).samples - v.samples).norm() < 1e-14);

  StateVector ab = lightlike_apply(0.03, lightlike_apply(0.05, v));
  StateVector a_plus_b = lightlike_apply(0.08, v);
  CHECK((ab.samples - a_plus_b.samples).norm() < 1e-9 * v.norm());
  CHECK(ab.norm() == doctest::Approx(v.norm()).epsilon(1e-12));
}

TEST_CASE("lightlike: modular covariance V(2 pi t) U(a) V(-2 pi t) = U(e^{-2 pi t} a)") {
  GridSpec g = make_grid(512, 16.0);
  ModularModel m = make_model(g);
  for (double t : {0.125, 0.1}) {  // one lattice point (2*K*t integral), one off-lattice
    for (const auto& av :
         {AnalyticVector{0.0, 2.0, 0, 1.0}, AnalyticVector{0.5, 1.8, 2, cplx(0, 1)}}) {
      StateVector v = av.realize(g);
      const double a = 0.05;
      StateVector lhs = apply_op(m.delta_power(cplx(t, 0)), lightlike_apply(a, apply_op(m.delta_power(cplx(-t, 0)), v)));
      StateVector rhs = lightlike_apply(a * std::exp(-2.0 * M_PI * t), v);
      CHECK((lhs.samples - rhs.samples).norm() < 1e-9 * v.norm());
    }
  }
}

TEST_CASE("lightlike: aliasing guard rejects unresolvable sweeps") {
  GridSpec g = make_grid(128, 8.0);
  StateVector v = AnalyticVector{0.0, 1.0, 0, 1.0}.realize(g);
  CHECK_THROWS_AS(lightlike_apply(5.0, v), ResolutionError);
}

TEST_CASE("J conjugation: J V(l) J = V(l) and J U(a) J = U(-a)") {
  GridSpec g = make_grid(256, 16.0);
  ModularModel m = make_model(g);
  StateVector v = AnalyticVector{0.4, 1.5, 1, cplx(0.6, 0.8)}.realize(g);

  StateVector lhs = apply_op(m.conj_j(), apply_op(m.weyl_v(0.8), apply_op(m.conj_j(), v)));
  StateVector rhs = apply_op(m.weyl_v(0.8), v);
  CHECK((lhs.samples - rhs.samples).norm() < 1e-12 * v.norm());

  const double a = 0.04;
  StateVector lhs2 = apply_op(m.conj_j(), lightlike_apply(a, apply_op(m.conj_j(), v)));
  StateVector rhs2 = lightlike_apply(-a, v);
  CHECK((lhs2.samples - rhs2.samples).norm() < 1e-12 * v.norm());
}

TEST_CASE("expression identity V(lambda) = Delta^{i lambda / 2 pi}") {
  GridSpec g = make_grid(128, 10.0);
  ModularModel m = make_model(g);
  const double lambda = 1.37;
  StateVector v = AnalyticVector{0.0, 1.0, 3, 1.0}.realize(g);
  StateVector via_v = apply_op(m.weyl_v(lambda), v);
  StateVector via_delta = apply_op(m.delta_power(cplx(lambda / (2.0 * M_PI), 0.0)), v);
  CHECK((via_v.samples - via_delta.samples).norm() < 1e-13 * v.norm());
}

TEST_CASE("weyl ccr: lambda = 0 and the calibrated residual") {
  GridSpec g = make_grid(1024, 16.0);
  auto probes = probe_family(6, 42, -1.0, 1.0, 0.8, 1.4, 2);
  CHECK(check_weyl_ccr(0.0, 1.0, probes, g) < 1e-12);
  CHECK(check_weyl_ccr(1.0, 1.0, probes, g) < 1e-10);
  CHECK(check_weyl_ccr(-2.0, 1.7, probes, g) < 1e-10);
}

TEST_CASE("weyl ccr: V(ln 2) U(a) V(-ln 2) = U(a/2)") {
  GridSpec g = make_grid(512, 16.0);
  ModularModel m = make_model(g);
  const double l = std::log(2.0), a = 0.04;
  StateVector v = AnalyticVector{0.2, 1.9, 1, 1.0}.realize(g);
  StateVector lhs = apply_op(m.weyl_v(l), lightlike_apply(a, apply_op(m.weyl_v(-l), v)));
  StateVector rhs = lightlike_apply(0.5 * a, v);
  CHECK((lhs.samples - rhs.samples).norm() < 1e-8 * v.norm());
}

TEST_CASE("svn: H = 0 model is entirely trivial") {
  const int dim = 16;
  std::vector<UnitarySample> us = {{0.3, Mat::Identity(dim, dim)}, {0.7, Mat::Identity(dim, dim)}};
  std::vector<UnitarySample> vs = {{1.0, Mat::Identity(dim, dim)}};
  SvnReport r = svn_decompose(vs, us, {0.5}, {Vec::Ones(dim)}, 1e-8);
  CHECK(r.trivial_dim == dim);
  CHECK(r.nontrivial_dim == 0);
  CHECK(r.weyl_residual == 0.0);
}

TEST_CASE("svn: windowed multiplication model is entirely nontrivial") {
  // nu window of about [-3, 3): kappa_max = pi * n / (2 * nu_cap).
  auto run = [](int n, double nu_cap) {
    GridSpec g = make_grid(n, M_PI * n / (2.0 * nu_cap));
    ModularModel m = make_model(g);
    std::vector<UnitarySample> us, vs;
    for (double a : {0.05, 0.09}) us.push_back({a, materialize(m.lightlike(a), g).mat});
    for (double l : {0.6, 1.1}) vs.push_back({l, materialize(m.weyl_v(l), g).mat});
    std::vector<Vec> probes;
    for (const auto& av : {AnalyticVector{0.0, 1.0, 0, 1.0}, AnalyticVector{0.3, 1.2, 1, 1.0}})
      probes.push_back(av.realize(g).samples);
    return svn_decompose(vs, us, {0.4, 0.9}, probes, 1e-8);
  };

  SvnReport r48 = run(48, 3.7);
  CHECK(r48.trivial_dim == 0);
  CHECK(r48.generator_min > 0.0);

  // Weyl residual decreases as the window grows with n.
  SvnReport r32 = run(32, 3.2);
  SvnReport r64 = run(64, 4.15);
  CHECK(r64.weyl_residual < 0.01);
  CHECK(r48.weyl_residual < r32.weyl_residual);
  CHECK(r64.weyl_residual < r48.weyl_residual);
}
