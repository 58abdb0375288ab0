#include "modlab/freefield.hpp"

#include <cmath>

namespace modlab::freefield {

subspace::RealSubspace WedgeBasis::as_subspace(double rank_tol) const {
  return subspace::make_real_subspace(vectors, rank_tol);
}

WedgeBasis build_wedge_basis(WedgeSide side, const std::vector<AnalyticVector>& seeds,
                             const GridSpec& g, double edge_decay_tol) {
  WedgeBasis wb;
  wb.side = side;
  wb.grid = g;
  wb.seeds = seeds;
  const double sign = side == WedgeSide::r ? -1.0 : 1.0;

  OpPtr s_expr =
      side == WedgeSide::r
          ? compose({conj_flip(), kappa_mult([](double k) { return cplx(std::exp(M_PI * k), 0.0); },
                                             "exp(pi kappa)")})
          : compose({conj_flip(), kappa_mult([](double k) { return cplx(std::exp(-M_PI * k), 0.0); },
                                             "exp(-pi kappa)")});

  for (const auto& seed : seeds) {
    StateVector f = from_kappa_function(g, [&](double kappa) {
      return seed.eval(kappa) + std::exp(sign * M_PI * kappa) * std::conj(seed.eval(-kappa));
    });
    check_finite(f, "build_wedge_basis");
    if (!decays_at_edge(f, edge_decay_tol))
      throw DomainError("build_wedge_basis: seed does not satisfy the domain condition "
                        "(realized vector fails to decay at the window edge)");
    StateVector sf = apply_op(s_expr, f);
    wb.max_fix_residual =
        std::max(wb.max_fix_residual, (sf.samples - f.samples).norm() / f.norm());
    wb.vectors.push_back(std::move(f));
  }
  return wb;
}

LRGenerator make_lr(double lambda, double rho) {
  if (lambda == 0.0 && rho == 0.0)
    throw ConfigError("lr generator: (lambda, rho) = (0, 0) is excluded");
  return LRGenerator{lambda, rho};
}

namespace {

double lr_symbol(const LRGenerator& gen, double nu) {
  return gen.lambda * std::exp(nu) + gen.rho * std::exp(-nu);
}

OpPtr lr_expr(const LRGenerator& gen, double a) {
  return nu_mult([gen, a](double nu) { return std::exp(cplx(0.0, a * lr_symbol(gen, nu))); },
                 "exp(i a h_lr)");
}

}  // namespace

StateVector lr_apply(const LRGenerator& gen, double a, const StateVector& v,
                     const schrodinger::AliasGuard& guard) {
  schrodinger::require_resolved(
      v,
      [gen, a](double nu) {
        return std::abs(a) * (std::abs(gen.lambda) * std::exp(nu) +
                              std::abs(gen.rho) * std::exp(-nu));
      },
      guard, "lr_apply");
  return apply_op(lr_expr(gen, a), v);
}

double symbol_min(const LRGenerator& gen, const GridSpec& g) {
  int best = 0;
  double best_val = lr_symbol(gen, g.nu(0));
  for (int k = 1; k < g.n; ++k) {
    double val = lr_symbol(gen, g.nu(k));
    if (val < best_val) {
      best_val = val;
      best = k;
    }
  }
  double lo = g.nu(std::max(0, best - 1));
  double hi = g.nu(std::min(g.n - 1, best + 1));
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (lr_symbol(gen, m1) < lr_symbol(gen, m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best_val, lr_symbol(gen, 0.5 * (lo + hi)));
}

Classification classify(const LRGenerator& gen, const WedgeBasis& r_basis,
                        const WedgeBasis& rprime_basis, const std::vector<double>& a_samples,
                        double pos_tol, double endo_tol, const schrodinger::AliasGuard& guard) {
  if (r_basis.grid != rprime_basis.grid)
    throw GridMismatchError("classify: bases on different grids");
  Classification c;
  c.positive = symbol_min(gen, r_basis.grid) >= -pos_tol;

  auto pairing_stays_real = [&](const WedgeBasis& moving, const WedgeBasis& partner) {
    for (double a : a_samples) {
      for (const auto& f : moving.vectors) {
        StateVector uf = lr_apply(gen, a, f, guard);
        for (const auto& gp : partner.vectors) {
          double im = std::abs(std::imag(inner(uf, gp)));
          if (im / (uf.norm() * gp.norm()) > endo_tol) return false;
        }
      }
    }
    return true;
  };

  c.endo_m = pairing_stays_real(r_basis, rprime_basis);
  c.endo_m_prime = pairing_stays_real(rprime_basis, r_basis);
  return c;
}

CovarianceReport check_modular_covariance_ii(const LRGenerator& gen, double t,
                                             const std::vector<double>& a_samples,
                                             const std::vector<AnalyticVector>& probes,
                                             const GridSpec& g,
                                             const schrodinger::AliasGuard& guard) {
  schrodinger::ModularModel m{g};
  LRGenerator boosted{std::exp(-2.0 * M_PI * t) * gen.lambda,
                      std::exp(2.0 * M_PI * t) * gen.rho};
  LRGenerator negated{-gen.lambda, -gen.rho};

  CovarianceReport rep;
  for (double a : a_samples) {
    for (const auto& av : probes) {
      StateVector p = av.realize(g);

      StateVector inner_state = apply_op(m.delta_power(cplx(-t, 0.0)), p);
      StateVector lhs = apply_op(m.delta_power(cplx(t, 0.0)), lr_apply(gen, a, inner_state, guard));
      StateVector rhs = lr_apply(boosted, a, p, guard);
      rep.boost_residual =
          std::max(rep.boost_residual, (lhs.samples - rhs.samples).norm() / p.norm());

      StateVector jlhs = apply_op(m.conj_j(), lr_apply(gen, a, apply_op(m.conj_j(), p), guard));
      StateVector jrhs = lr_apply(negated, a, p, guard);
      rep.j_residual =
          std::max(rep.j_residual, (jlhs.samples - jrhs.samples).norm() / p.norm());
    }
  }
  return rep;
}

double BumpProfile::eval(double x) const {
  double u = 2.0 * (x - x0) / (x1 - x0) - 1.0;
  if (u <= -1.0 || u >= 1.0) return 0.0;
  return amplitude * std::exp(-1.0 / (1.0 - u * u));
}

cplx BumpProfile::fourier(double p, int quad_points) const {
  const double h = (x1 - x0) / quad_points;
  cplx acc(0.0, 0.0);
  for (int i = 0; i <= quad_points; ++i) {
    double x = x0 + i * h;
    double w = (i == 0 || i == quad_points) ? 0.5 : 1.0;
    acc += w * eval(x) * std::exp(cplx(0.0, p * x));
  }
  return acc * h / std::sqrt(2.0 * M_PI);
}

R1Vector build_r1_vector(const std::optional<BumpProfile>& g_profile,
                         const std::optional<BumpProfile>& h_profile, const GridSpec& g,
                         int quad_points, double p_cut) {
  for (const auto* prof : {&g_profile, &h_profile}) {
    if (prof->has_value()) {
      if (!((*prof)->x0 >= 1.0) || !((*prof)->x1 > (*prof)->x0))
        throw DomainError("build_r1_vector: profile support must lie in [1, infinity)");
    }
  }
  if (!g_profile && !h_profile)
    throw ConfigError("build_r1_vector: need at least one profile");

  StateVector nu_state = from_nu_function(g, [&](double nu) {
    double p = std::sinh(nu);
    if (std::abs(p) > p_cut) return cplx(0.0, 0.0);
    cplx val(0.0, 0.0);
    if (g_profile) val += g_profile->fourier(p, quad_points);
    if (h_profile) val += cplx(0.0, 1.0) * std::cosh(nu) * h_profile->fourier(p, quad_points);
    return val;
  });

  R1Vector out;
  out.g_profile = g_profile;
  out.h_profile = h_profile;
  out.realized = to_kappa(nu_state);
  return out;
}

EpsilonScan epsilon_invariance_scan(const R1Vector& v, const LRGenerator& gen, double eps,
                                    int steps, const WedgeBasis& rprime_basis,
                                    const schrodinger::AliasGuard& guard) {
  auto bilinear = [&](const StateVector& f) {
    double worst = 0.0;
    for (const auto& gp : rprime_basis.vectors) {
      double im = std::abs(std::imag(inner(f, gp)));
      worst = std::max(worst, im / (f.norm() * gp.norm()));
    }
    return worst;
  };

  EpsilonScan scan;
  scan.eps = eps;
  if (eps == 0.0) {
    scan.max_residual = bilinear(v.realized);
    scan.profile.emplace_back(0.0, scan.max_residual);
    return scan;
  }
  if (steps < 1) throw ConfigError("epsilon_invariance_scan: steps must be positive");
  // log-spaced in (0, eps], covering three decades below eps
  for (int i = 0; i < steps; ++i) {
    double frac = steps == 1 ? 1.0 : std::pow(10.0, -3.0 * (1.0 - double(i) / (steps - 1)));
    double a = eps * frac;
    double res = bilinear(lr_apply(gen, a, v.realized, guard));
    scan.profile.emplace_back(a, res);
    scan.max_residual = std::max(scan.max_residual, res);
  }
  return scan;
}

}  // namespace modlab::freefield
