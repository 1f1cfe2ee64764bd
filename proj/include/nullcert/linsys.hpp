#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "nullcert/field.hpp"
#include "nullcert/monomial.hpp"

namespace nullcert {

template <CoefficientField F>
struct SparseEntry {
  std::size_t col;
  typename F::value_type value;
};

template <CoefficientField F>
using SparseRow = std::vector<SparseEntry<F>>;

/// Exact sparse system A y = b. Rows keep sorted, duplicate-free column
/// indices with nonzero values. Columns may carry monomial labels.
template <CoefficientField F>
class SparseLinearSystem {
 public:
  using value_type = typename F::value_type;

  SparseLinearSystem(F field, std::size_t num_columns);
  SparseLinearSystem(F field, std::vector<ExponentVector> column_labels);

  /// Entries may be unsorted and repeat a column; repeats are summed and
  /// zeros dropped.
  void add_row(SparseRow<F> entries, value_type rhs);

  [[nodiscard]] const F& field() const { return field_; }
  [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t num_columns() const { return num_columns_; }
  [[nodiscard]] const std::vector<SparseRow<F>>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<value_type>& rhs() const { return rhs_; }
  [[nodiscard]] const std::vector<ExponentVector>& labels() const { return labels_; }
  [[nodiscard]] std::size_t nonzeros() const;

  /// A x - b evaluated exactly; true iff every row is satisfied.
  [[nodiscard]] bool is_solution(const std::vector<value_type>& x) const;

 private:
  F field_;
  std::size_t num_columns_;
  std::vector<ExponentVector> labels_;
  std::vector<SparseRow<F>> rows_;
  std::vector<value_type> rhs_;
};

/// Reduced row echelon form of the coefficient matrix with the right-hand
/// side carried along. Rows are ordered by strictly increasing pivot column;
/// every pivot entry is 1 and pivot columns are zero elsewhere.
template <CoefficientField F>
struct EchelonForm {
  std::vector<SparseRow<F>> rows;
  std::vector<typename F::value_type> rhs;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  /// Index of an original row that reduced to 0 = nonzero, if any.
  std::optional<std::size_t> inconsistent_row;
};

/// Solution that vanishes off the basis (the pivot columns).
template <CoefficientField F>
struct BasicSolution {
  std::vector<typename F::value_type> values;
  std::vector<std::size_t> basis;
};

template <CoefficientField F>
[[nodiscard]] EchelonForm<F> rref(const SparseLinearSystem<F>& sys);

/// Pivot columns of the echelon form, without the back-reduction pass.
template <CoefficientField F>
[[nodiscard]] std::vector<std::size_t> pivot_columns(const SparseLinearSystem<F>& sys);

/// The basic solution for the rref pivot basis; nullopt when infeasible.
template <CoefficientField F>
[[nodiscard]] std::optional<BasicSolution<F>> solve_basic(const SparseLinearSystem<F>& sys);

template <CoefficientField F>
[[nodiscard]] bool feasible(const SparseLinearSystem<F>& sys) {
  return solve_basic(sys).has_value();
}

/// MatrixMarket coordinate dump of [A | b] for debugging; values are printed
/// with the field's own string form.
template <CoefficientField F>
void write_matrix_market(std::ostream& out, const SparseLinearSystem<F>& sys);

extern template class SparseLinearSystem<PrimeField>;
extern template class SparseLinearSystem<RationalField>;

}  // namespace nullcert
