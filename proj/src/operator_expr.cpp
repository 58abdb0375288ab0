#include "modlab/operator_expr.hpp"

#include <cmath>

namespace modlab {

bool OperatorExpr::antilinear() const {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ConjFlip>) {
          return true;
        } else if constexpr (std::is_same_v<T, Dense>) {
          return n.antilinear;
        } else if constexpr (std::is_same_v<T, Compose>) {
          bool parity = false;
          for (const auto& f : n.factors) parity ^= f->antilinear();
          return parity;
        } else {
          return false;
        }
      },
      node_);
}

std::string OperatorExpr::label() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, KappaMult> || std::is_same_v<T, NuMult>) {
          return n.label;
        } else if constexpr (std::is_same_v<T, ConjFlip>) {
          return "conj_flip";
        } else if constexpr (std::is_same_v<T, Dense>) {
          return n.antilinear ? "dense(antilinear)" : "dense";
        } else if constexpr (std::is_same_v<T, Scale>) {
          return "scale";
        } else {
          std::string s = "compose(";
          for (size_t i = 0; i < n.factors.size(); ++i) {
            if (i) s += ", ";
            s += n.factors[i]->label();
          }
          return s + ")";
        }
      },
      node_);
}

OpPtr kappa_mult(OperatorExpr::Symbol s, std::string label) {
  return std::make_shared<OperatorExpr>(OperatorExpr::KappaMult{std::move(s), std::move(label)});
}
OpPtr nu_mult(OperatorExpr::Symbol s, std::string label) {
  return std::make_shared<OperatorExpr>(OperatorExpr::NuMult{std::move(s), std::move(label)});
}
OpPtr conj_flip() { return std::make_shared<OperatorExpr>(OperatorExpr::ConjFlip{}); }
OpPtr dense_op(Mat m, bool antilinear, const GridSpec& grid) {
  if (m.rows() != grid.n || m.cols() != grid.n)
    throw GridMismatchError("dense_op: matrix size does not match grid");
  return std::make_shared<OperatorExpr>(OperatorExpr::Dense{std::move(m), antilinear, grid});
}
OpPtr scale_op(cplx c) { return std::make_shared<OperatorExpr>(OperatorExpr::Scale{c}); }
OpPtr compose(std::vector<OpPtr> factors) {
  return std::make_shared<OperatorExpr>(OperatorExpr::Compose{std::move(factors)});
}
OpPtr identity_op() {
  return kappa_mult([](double) { return cplx(1.0, 0.0); }, "identity");
}

namespace {

StateVector apply_node(const OperatorExpr& op, StateVector v) {
  using OE = OperatorExpr;
  return std::visit(
      [&v](const auto& n) -> StateVector {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, OE::KappaMult>) {
          StateVector w = to_rep(v, Rep::kappa);
          for (int j = 0; j < w.grid.n; ++j) w.samples[j] *= n.symbol(w.grid.kappa(j));
          check_finite(w, "kappa_mult");
          return w;
        } else if constexpr (std::is_same_v<T, OE::NuMult>) {
          StateVector w = to_rep(v, Rep::nu);
          for (int k = 0; k < w.grid.n; ++k) w.samples[k] *= n.symbol(w.grid.nu(k));
          check_finite(w, "nu_mult");
          return w;
        } else if constexpr (std::is_same_v<T, OE::ConjFlip>) {
          if (v.rep == Rep::nu) {
            StateVector w = v;
            w.samples = w.samples.conjugate();
            return w;
          }
          StateVector w = v;
          for (int j = 0; j < v.grid.n; ++j)
            w.samples[j] = std::conj(v.samples[v.grid.flip(j)]);
          return w;
        } else if constexpr (std::is_same_v<T, OE::Dense>) {
          if (v.grid != n.grid) throw GridMismatchError("dense node: grid mismatch");
          StateVector w = to_rep(v, Rep::kappa);
          w.samples = n.antilinear ? Vec(n.mat * w.samples.conjugate()) : Vec(n.mat * w.samples);
          check_finite(w, "dense");
          return w;
        } else if constexpr (std::is_same_v<T, OE::Scale>) {
          StateVector w = v;
          w.samples *= n.factor;
          return w;
        } else {
          StateVector w = v;
          for (auto it = n.factors.rbegin(); it != n.factors.rend(); ++it)
            w = apply_node(**it, std::move(w));
          return w;
        }
      },
      op.node());
}

}  // namespace

StateVector apply_op(const OpPtr& op, const StateVector& v) {
  Rep rep_in = v.rep;
  StateVector w = apply_node(*op, v);
  return to_rep(w, rep_in);
}

Materialized materialize(const OpPtr& op, const GridSpec& grid, int dense_cap) {
  if (grid.n > dense_cap)
    throw ConfigError("materialize: grid size exceeds dense cap");
  Materialized out;
  out.antilinear = op->antilinear();
  out.mat.resize(grid.n, grid.n);
  StateVector basis{grid, Rep::kappa, Vec::Zero(grid.n)};
  for (int j = 0; j < grid.n; ++j) {
    basis.samples[j] = 1.0;
    StateVector col = apply_op(op, basis);
    out.mat.col(j) = col.samples;
    basis.samples[j] = 0.0;
  }
  return out;
}

double symbol_distance(const GridSpec& g, Rep rep, const OperatorExpr::Symbol& sa,
                       const OperatorExpr::Symbol& sb) {
  double d = 0.0;
  for (int j = 0; j < g.n; ++j) {
    double x = rep == Rep::kappa ? g.kappa(j) : g.nu(j);
    d = std::max(d, std::abs(sa(x) - sb(x)));
  }
  return d;
}

}  // namespace modlab
