#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "modlab/grid.hpp"

namespace modlab {

// Lazily composed linear/antilinear operator on discretized states.
//
// Nodes:
//   KappaMult(s)  pointwise multiplication by s(kappa) in the kappa rep
//   NuMult(s)     pointwise multiplication by s(nu) in the nu rep
//   ConjFlip      f(kappa) -> conj(f(-kappa))  (antilinear; equals plain
//                 conjugation in the nu rep)
//   Dense         matrix in weight-absorbed kappa coordinates; the
//                 antilinear flavour acts as v -> M * conj(v)
//   Scale(c)      multiplication by a complex constant
//   Compose(list) operator product; factors[0] is applied last
//
// Expressions are immutable and shared.
class OperatorExpr;
using OpPtr = std::shared_ptr<const OperatorExpr>;

class OperatorExpr {
 public:
  using Symbol = std::function<cplx(double)>;

  struct KappaMult {
    Symbol symbol;
    std::string label;
  };
  struct NuMult {
    Symbol symbol;
    std::string label;
  };
  struct ConjFlip {};
  struct Dense {
    Mat mat;
    bool antilinear = false;
    GridSpec grid;
  };
  struct Scale {
    cplx factor;
  };
  struct Compose {
    std::vector<OpPtr> factors;
  };

  using Node = std::variant<KappaMult, NuMult, ConjFlip, Dense, Scale, Compose>;

  explicit OperatorExpr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  // Parity of antilinear factors.
  bool antilinear() const;

  // Human-readable symbol/structure tag, used by symbol comparison tests.
  std::string label() const;

 private:
  Node node_;
};

OpPtr kappa_mult(OperatorExpr::Symbol s, std::string label = "kappa_mult");
OpPtr nu_mult(OperatorExpr::Symbol s, std::string label = "nu_mult");
OpPtr conj_flip();
OpPtr dense_op(Mat m, bool antilinear, const GridSpec& grid);
OpPtr scale_op(cplx c);
OpPtr compose(std::vector<OpPtr> factors);
OpPtr identity_op();

// Applies the expression (right-to-left through Compose nodes) and
// returns the result converted back to the representation of the input.
// Non-finite intermediate samples raise DomainError.
StateVector apply_op(const OpPtr& op, const StateVector& v);

struct Materialized {
  Mat mat;
  bool antilinear = false;  // action is  v -> mat * conj(v)
};

// Dense matrix of the expression in weight-absorbed kappa coordinates.
Materialized materialize(const OpPtr& op, const GridSpec& grid, int dense_cap = 4096);

// Max |sa(x) - sb(x)| over the grid in the given representation; the
// expression-level identity test for multiplication operators.
double symbol_distance(const GridSpec& g, Rep rep, const OperatorExpr::Symbol& sa,
                       const OperatorExpr::Symbol& sb);

}  // namespace modlab
