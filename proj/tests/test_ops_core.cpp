#include "doctest.h"

#include <cmath>

#include "modlab/analytic.hpp"
#include "modlab/antilinear.hpp"
#include "modlab/grid.hpp"
#include "modlab/operator_expr.hpp"
#include "modlab/rng.hpp"

using namespace modlab;

namespace {

StateVector random_state(const GridSpec& g, Rng& rng) {
  StateVector v{g, Rep::kappa, Vec(g.n)};
  for (int j = 0; j < g.n; ++j) v.samples[j] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return v;
}

OpPtr tomita_s_expr() {
  return compose({conj_flip(), kappa_mult([](double k) { return cplx(std::exp(M_PI * k), 0.0); },
                                          "exp(pi kappa)")});
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(make_grid(6, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(9, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(64, 0.0), ConfigError);
  GridSpec g = make_grid(64, 8.0);
  CHECK(g.step() == doctest::Approx(0.25));
  CHECK(g.nu_step() == doctest::Approx(M_PI / 8.0));
  CHECK(g.kappa(0) == doctest::Approx(-8.0));
  CHECK(g.nu(32) == doctest::Approx(0.0));
}

TEST_CASE("to_nu: delta spike becomes flat modulus") {
  GridSpec g = make_grid(64, 4.0);
  StateVector v{g, Rep::kappa, Vec::Zero(g.n)};
  v.samples[g.n / 2] = 1.0;  // spike at kappa = 0
  StateVector w = to_nu(v);
  for (int k = 0; k < g.n; ++k)
    CHECK(std::abs(w.samples[k]) == doctest::Approx(1.0 / std::sqrt(double(g.n))).epsilon(1e-12));
}

TEST_CASE("to_nu: Gaussian maps to Gaussian (closed-form oracle)") {
  for (auto [n, kmax] : {std::pair{256, 10.0}, std::pair{250, 12.0}, std::pair{96, 9.0}}) {
    GridSpec g = make_grid(n, kmax);
    for (int degree : {0, 1, 3}) {
      AnalyticVector av{0.4, 1.1, degree, cplx(0.8, 0.6)};
      StateVector numeric = to_nu(av.realize(g));
      StateVector oracle = av.realize_nu(g);
      CHECK((numeric.samples - oracle.samples).norm() < 1e-11);
    }
  }
}

TEST_CASE("to_nu: unitarity and round trip on 100 random vectors") {
  GridSpec g = make_grid(128, 6.0);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    StateVector v = random_state(g, rng);
    StateVector w = to_nu(v);
    CHECK(w.norm() == doctest::Approx(v.norm()).epsilon(1e-12));
    StateVector back = to_kappa(w);
    CHECK((back.samples - v.samples).norm() < 1e-12 * v.norm());
  }
  CHECK_THROWS_AS(to_nu(to_nu(random_state(g, rng))), GridMismatchError);
}

TEST_CASE("inner product respects representation change") {
  GridSpec g = make_grid(96, 5.0);
  Rng rng(21);
  StateVector a = random_state(g, rng), b = random_state(g, rng);
  cplx ip_kappa = inner(a, b);
  cplx ip_nu = inner(to_nu(a), to_nu(b));
  CHECK(std::abs(ip_kappa - ip_nu) < 1e-12 * a.norm() * b.norm());
}

TEST_CASE("apply: conj_flip is an involution") {
  GridSpec g = make_grid(64, 4.0);
  Rng rng(3);
  StateVector v = random_state(g, rng);
  StateVector w = apply_op(conj_flip(), apply_op(conj_flip(), v));
  CHECK((w.samples - v.samples).norm() < 1e-14 * v.norm());
}

TEST_CASE("apply: conj_flip in kappa equals conjugation in nu") {
  GridSpec g = make_grid(128, 7.0);
  Rng rng(5);
  StateVector v = random_state(g, rng);
  StateVector lhs = to_nu(apply_op(conj_flip(), v));
  StateVector rhs = to_nu(v);
  rhs.samples = rhs.samples.conjugate();
  CHECK((lhs.samples - rhs.samples).norm() < 1e-12 * v.norm());
}

TEST_CASE("apply: unimodular kappa symbol preserves norm") {
  GridSpec g = make_grid(128, 6.0);
  Rng rng(11);
  StateVector v = random_state(g, rng);
  OpPtr u = kappa_mult([](double k) { return std::exp(cplx(0.0, 2.0 * M_PI * k)); },
                       "exp(2 pi i kappa)");
  CHECK(apply_op(u, v).norm() == doctest::Approx(v.norm()).epsilon(1e-12));
}

TEST_CASE("apply: antilinear parity law") {
  GridSpec g = make_grid(64, 4.0);
  Rng rng(13);
  StateVector v = random_state(g, rng);
  const cplx c(0.3, -1.2);

  OpPtr odd = compose({conj_flip(), nu_mult([](double nu) { return std::exp(cplx(0.0, nu)); })});
  OpPtr even = compose({conj_flip(), odd});
  CHECK(odd->antilinear());
  CHECK_FALSE(even->antilinear());

  StateVector cv = v;
  cv.samples *= c;
  StateVector lhs_odd = apply_op(odd, cv);
  StateVector rhs_odd = apply_op(odd, v);
  rhs_odd.samples *= std::conj(c);
  CHECK((lhs_odd.samples - rhs_odd.samples).norm() < 1e-12 * v.norm());

  StateVector lhs_even = apply_op(even, cv);
  StateVector rhs_even = apply_op(even, v);
  rhs_even.samples *= c;
  CHECK((lhs_even.samples - rhs_even.samples).norm() < 1e-12 * v.norm());
}

TEST_CASE("apply: Tomita expression fixes Eq.15-form vectors") {
  GridSpec g = make_grid(256, 9.0);
  auto gauss = [](double k, double c, double w) {
    double u = (k - c) / w;
    return std::exp(-0.5 * u * u);
  };
  StateVector f = from_kappa_function(g, [&](double k) {
    return cplx(gauss(k, 1.0, 0.8) + std::exp(-M_PI * k) * gauss(-k, 1.0, 0.8), 0.0);
  });
  StateVector sf = apply_op(tomita_s_expr(), f);
  CHECK((sf.samples - f.samples).norm() < 1e-9 * f.norm());
}

TEST_CASE("apply: grid mismatch raises") {
  GridSpec g1 = make_grid(64, 4.0), g2 = make_grid(32, 4.0);
  Rng rng(17);
  StateVector v = random_state(g1, rng);
  Materialized id = materialize(identity_op(), g2);
  CHECK_THROWS_AS(apply_op(dense_op(id.mat, false, g2), v), GridMismatchError);
}

TEST_CASE("materialize: identity expression gives identity matrix") {
  GridSpec g = make_grid(32, 3.0);
  Materialized m = materialize(identity_op(), g);
  CHECK_FALSE(m.antilinear);
  CHECK((m.mat - Mat::Identity(g.n, g.n)).norm() < 1e-13);
}

TEST_CASE("materialize: unimodular nu symbol is unitary") {
  GridSpec g = make_grid(64, 6.0);
  const double a = 0.7;
  Materialized m = materialize(
      nu_mult([a](double nu) { return std::exp(cplx(0.0, a * std::exp(nu))); }, "exp(i a e^nu)"),
      g);
  CHECK((m.mat.adjoint() * m.mat - Mat::Identity(g.n, g.n)).norm() < 1e-10);
}

TEST_CASE("materialize: composition agrees with matrix product") {
  GridSpec g = make_grid(48, 4.0);
  OpPtr a = kappa_mult([](double k) { return std::exp(cplx(0.0, 0.5 * k)); });
  OpPtr b = nu_mult([](double nu) { return cplx(1.0 / (1.0 + nu * nu), 0.2); });
  Materialized ma = materialize(a, g), mb = materialize(b, g), mab = materialize(compose({a, b}), g);
  CHECK((mab.mat - ma.mat * mb.mat).norm() < 1e-10 * mab.mat.norm());
}

TEST_CASE("materialize: agreement with apply on random vectors") {
  GridSpec g = make_grid(64, 5.0);
  OpPtr op = compose({conj_flip(), nu_mult([](double nu) { return std::exp(cplx(0.0, -0.3 * nu)); }),
                      kappa_mult([](double k) { return cplx(std::cos(k), 0.1); })});
  Materialized m = materialize(op, g);
  CHECK(m.antilinear);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    StateVector v = random_state(g, rng);
    StateVector via_apply = apply_op(op, v);
    Vec via_mat = m.mat * v.samples.conjugate();
    CHECK((via_apply.samples - via_mat).norm() < 1e-10 * v.norm());
  }
}

TEST_CASE("materialize: dense cap enforced") {
  GridSpec g = make_grid(64, 4.0);
  CHECK_THROWS_AS(materialize(identity_op(), g, 32), ConfigError);
}

TEST_CASE("polar: plain conjugation decomposes trivially") {
  const int n = 6;
  AntilinearPolar p = polar_decompose_antilinear(Mat::Identity(n, n));
  CHECK((p.j - Mat::Identity(n, n)).norm() < 1e-13);
  CHECK((p.delta - Mat::Identity(n, n)).norm() < 1e-13);
}

TEST_CASE("polar: two-dimensional Tomita operator against direct solve") {
  // R spanned in C^2 by psi1 = (1,0) and psi2 = u*(cos a, sin a); the
  // Tomita map sends psi + i phi -> psi - i phi.
  const double alpha = 0.7;
  const cplx u = std::exp(cplx(0.0, 0.9));
  Vec psi1(2), psi2(2);
  psi1 << 1.0, 0.0;
  psi2 << u * std::cos(alpha), u * std::sin(alpha);

  Eigen::MatrixXd x(4, 2 * 2), y(4, 2 * 2);
  x.col(0) = realify_vec(psi1);
  x.col(1) = realify_vec(psi2);
  x.col(2) = realify_vec(Vec(cplx(0, 1) * psi1));
  x.col(3) = realify_vec(Vec(cplx(0, 1) * psi2));
  y.col(0) = x.col(0);
  y.col(1) = x.col(1);
  y.col(2) = realify_vec(Vec(-cplx(0, 1) * psi1));
  y.col(3) = realify_vec(Vec(-cplx(0, 1) * psi2));
  Eigen::MatrixXd s_real = y * x.inverse();
  Mat s = derealify_antilinear(s_real);

  // S is an involution by construction, so J^2 = 1 and J Delta J = Delta^{-1}.
  AntilinearPolar p = polar_decompose_antilinear(s);
  Mat s_rebuilt = p.j * p.delta_sqrt.conjugate();
  CHECK((s_rebuilt - s).norm() < 1e-12);

  Mat delta_direct = s.transpose() * s.conjugate();  // S*S in conjugate-first storage
  CHECK((p.delta - delta_direct).norm() < 1e-11);
  CHECK((p.delta - Mat::Identity(2, 2)).norm() > 0.05);  // generic R has Delta != 1

  Mat j2 = p.j * p.j.conjugate();
  CHECK((j2 - Mat::Identity(2, 2)).norm() < 1e-8);
  Mat jdj = p.j * p.delta.conjugate() * p.j.conjugate();  // J Delta J as a linear map
  Mat delta_inv = p.delta_inv_sqrt * p.delta_inv_sqrt;
  CHECK((jdj - delta_inv).norm() < 1e-6 * delta_inv.norm());
}

TEST_CASE("polar: materialized S has Delta = multiplication by exp(2 pi kappa)") {
  GridSpec g = make_grid(64, 2.5);
  Materialized s = materialize(tomita_s_expr(), g);
  CHECK(s.antilinear);
  AntilinearPolar p = polar_decompose_antilinear(s.mat);

  Mat expected = Mat::Zero(g.n, g.n);
  for (int j = 0; j < g.n; ++j) expected(j, j) = std::exp(2.0 * M_PI * g.kappa(j));
  CHECK((p.delta - expected).norm() < 1e-8 * expected.norm());

  // J is the plain conjugation-flip, an exact involution on the grid.
  Mat j2 = p.j * p.j.conjugate();
  CHECK((j2 - Mat::Identity(g.n, g.n)).norm() < 1e-8);

  // Reconstruction residual.
  Mat s_rebuilt = p.j * p.delta_sqrt.conjugate();
  CHECK((s_rebuilt - s.mat).norm() < 1e-8 * s.mat.norm());
}

TEST_CASE("polar: singular map rejected") {
  Mat s = Mat::Zero(3, 3);
  s(0, 0) = 1.0;
  CHECK_THROWS_AS(polar_decompose_antilinear(s), ModelError);
}
