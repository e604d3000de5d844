#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "promo/linear_form.hpp"
#include "promo/matrix.hpp"
#include "promo/poset.hpp"
#include "promo/promotion.hpp"

namespace promo {

/// Transition matrix with linear-form entries. Entry (r, c) is the weight of
/// the move basis[c] -> basis[r], so columns sum to x_1 + ... + x_n.
/// Stored by columns; each column lists its nonzero rows in increasing order.
class TransitionMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, LinearForm>>;

  TransitionMatrix() = default;
  TransitionMatrix(int n, WeightMode mode, Basis basis, std::vector<Column> columns);

  int n() const { return n_; }
  WeightMode mode() const { return mode_; }
  const Basis& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Column>& columns() const { return columns_; }

  /// Zero form when there is no transition.
  LinearForm entry(std::size_t row, std::size_t col) const;

  /// Column sums and row sums as linear forms.
  std::vector<LinearForm> column_sums() const;
  std::vector<LinearForm> row_sums() const;

  /// Rows of symbolic entries with the basis as header.
  std::string to_text() const;

 private:
  int n_ = 0;
  WeightMode mode_ = WeightMode::Promotion;
  Basis basis_;
  std::vector<Column> columns_;
};

/// Aggregates the parallel edges of a graph into linear-form entries.
TransitionMatrix transition_matrix(const PromotionGraph& g);
TransitionMatrix transition_matrix(const Poset& p, WeightMode mode, const Limits& limits = {});

/// Substitutes x_i = w_i.
RationalMatrix evaluate(const TransitionMatrix& m, const WeightVector& w);

/// prod numerator[i] / prod denominator[i]; identical factors are cancelled.
struct ProductFormula {
  std::vector<LinearForm> numerator;
  std::vector<LinearForm> denominator;

  /// Throws ZeroDenominator if a denominator factor vanishes at w.
  Rational evaluate(const WeightVector& w) const;
  /// e.g. "(x1+x2+x3)/(x1+x2+x4)", "x1/x2" or "1".
  std::string to_string() const;
};

/// prod_i (x_1 + ... + x_i) / (x_{pi_1} + ... + x_{pi_i}) for any permutation.
ProductFormula product_formula(const Word& pi);

/// The product formula for pi in L(P); equals 1 at the identity.
ProductFormula stationary_weight(const Poset& p, const Word& pi);
Rational stationary_weight(const Poset& p, const Word& pi, const WeightVector& w);

/// Product formula values over a basis, unnormalized.
std::vector<Rational> product_weights(const Basis& basis, const WeightVector& w);

enum class PartitionMode { Formula, Brute };

/// Z_P with probability(pi) = w(pi) * Z_P. Formula mode uses the rooted
/// forest product prod_i x_{<=i} / (x_1 + ... + x_i) and throws
/// NotRootedForest otherwise; brute mode is 1 / sum_pi w(pi).
Rational partition_function(const Poset& p, const WeightVector& w,
                            PartitionMode mode = PartitionMode::Formula,
                            const Limits& limits = {});

/// Exact stationary distribution of a column-stochastic irreducible matrix.
/// Throws NotStochastic, or SolverSingular when the kernel of M - I is not
/// one dimensional.
std::vector<Rational> stationary_solve(const RationalMatrix& m);

/// True iff sum_j M(i, j) v_j = v_i * (column sum i of M) for every i at w.
bool verify_master_equation(const TransitionMatrix& m, const std::vector<Rational>& v,
                            const WeightVector& w);

std::vector<Rational> normalize(const std::vector<Rational>& v);

}  // namespace promo
