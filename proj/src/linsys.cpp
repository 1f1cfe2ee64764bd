#include "nullcert/linsys.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace nullcert {

template <CoefficientField F>
SparseLinearSystem<F>::SparseLinearSystem(F field, std::size_t num_columns)
    : field_(std::move(field)), num_columns_(num_columns) {}

template <CoefficientField F>
SparseLinearSystem<F>::SparseLinearSystem(F field, std::vector<ExponentVector> column_labels)
    : field_(std::move(field)), num_columns_(column_labels.size()), labels_(std::move(column_labels)) {}

template <CoefficientField F>
void SparseLinearSystem<F>::add_row(SparseRow<F> entries, value_type rhs) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseRow<F> row;
  row.reserve(entries.size());
  for (auto& e : entries) {
    if (e.col >= num_columns_) throw std::out_of_range("column index " + std::to_string(e.col) + " out of range");
    if (!row.empty() && row.back().col == e.col)
      row.back().value = field_.add(row.back().value, e.value);
    else
      row.push_back(std::move(e));
  }
  std::erase_if(row, [&](const auto& e) { return field_.is_zero(e.value); });
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
}

template <CoefficientField F>
std::size_t SparseLinearSystem<F>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

template <CoefficientField F>
bool SparseLinearSystem<F>::is_solution(const std::vector<value_type>& x) const {
  if (x.size() != num_columns_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    value_type s = field_.zero();
    for (const auto& e : rows_[i]) s = field_.add(s, field_.mul(e.value, x[e.col]));
    if (!field_.equal(s, rhs_[i])) return false;
  }
  return true;
}

namespace {

// Incremental forward elimination. Each stored pivot row starts with a 1 in
// its pivot column and has no entries to the left of it. A dense scratch
// accumulator plus a min-heap of live columns keeps the cost proportional to
// the entries actually touched.
template <CoefficientField F>
class Eliminator {
 public:
  using value_type = typename F::value_type;

  Eliminator(const F& field, std::size_t num_columns)
      : field_(field), pivot_of_col_(num_columns, -1), acc_(num_columns, field.zero()), state_(num_columns, 0) {}

  /// Reduces the row against the current pivots. Returns nullopt if it
  /// produced a new pivot, otherwise the residual right-hand side.
  std::optional<value_type> insert(const SparseRow<F>& row, const value_type& rhs) {
    for (const auto& e : row) touch(e.col, e.value);
    value_type r = rhs;
    std::optional<value_type> residual;
    bool pivoted = false;
    while (!heap_.empty()) {
      const std::size_t c = pop();
      if (field_.is_zero(acc_[c])) continue;
      const long p = pivot_of_col_[c];
      if (p < 0) {
        make_pivot(c, r);
        pivoted = true;
        break;
      }
      const value_type f = acc_[c];
      for (const auto& e : rows_[static_cast<std::size_t>(p)]) {
        if (e.col == c) continue;
        if (state_[e.col] == 0) touch(e.col, field_.zero());
        acc_[e.col] = field_.sub(acc_[e.col], field_.mul(f, e.value));
      }
      acc_[c] = field_.zero();
      r = field_.sub(r, field_.mul(f, rhs_[static_cast<std::size_t>(p)]));
    }
    if (!pivoted) residual = r;
    reset();
    return residual;
  }

  [[nodiscard]] const std::vector<SparseRow<F>>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<value_type>& rhs() const { return rhs_; }
  [[nodiscard]] const std::vector<long>& pivot_of_col() const { return pivot_of_col_; }

 private:
  void touch(std::size_t c, const value_type& v) {
    if (state_[c] == 0) {
      state_[c] = 1;
      heap_.push(c);
      touched_.push_back(c);
    }
    acc_[c] = field_.add(acc_[c], v);
  }

  std::size_t pop() {
    const std::size_t c = heap_.top();
    heap_.pop();
    state_[c] = 2;
    return c;
  }

  void make_pivot(std::size_t c, const value_type& r) {
    const value_type inv = field_.inv(acc_[c]);
    SparseRow<F> row;
    row.push_back({c, field_.one()});
    while (!heap_.empty()) {
      const std::size_t c2 = pop();
      if (!field_.is_zero(acc_[c2])) row.push_back({c2, field_.mul(acc_[c2], inv)});
    }
    pivot_of_col_[c] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    rhs_.push_back(field_.mul(r, inv));
  }

  void reset() {
    for (std::size_t c : touched_) {
      acc_[c] = field_.zero();
      state_[c] = 0;
    }
    touched_.clear();
    while (!heap_.empty()) heap_.pop();
  }

  F field_;
  std::vector<SparseRow<F>> rows_;
  std::vector<value_type> rhs_;
  std::vector<long> pivot_of_col_;
  std::vector<value_type> acc_;
  std::vector<unsigned char> state_;  // 0 untouched, 1 queued, 2 consumed
  std::vector<std::size_t> touched_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap_;
};

// Pivot row indices in increasing pivot-column order.
std::vector<std::size_t> pivot_order(const std::vector<long>& pivot_of_col) {
  std::vector<std::size_t> order;
  for (long p : pivot_of_col)
    if (p >= 0) order.push_back(static_cast<std::size_t>(p));
  return order;
}

}  // namespace

template <CoefficientField F>
EchelonForm<F> rref(const SparseLinearSystem<F>& sys) {
  const F& field = sys.field();
  Eliminator<F> elim(field, sys.num_columns());
  EchelonForm<F> out;
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    auto residual = elim.insert(sys.rows()[i], sys.rhs()[i]);
    if (residual && !field.is_zero(*residual) && !out.inconsistent_row) out.inconsistent_row = i;
  }
  const auto order = pivot_order(elim.pivot_of_col());
  const auto& pivot_of_col = elim.pivot_of_col();
  std::vector<SparseRow<F>> reduced(order.size());
  std::vector<typename F::value_type> reduced_rhs(order.size(), field.zero());
  std::vector<long> slot_of_col(sys.num_columns(), -1);
  for (std::size_t s = 0; s < order.size(); ++s) slot_of_col[elim.rows()[order[s]].front().col] = static_cast<long>(s);

  // Back-reduction from the rightmost pivot: a finished row holds zeros in
  // every other pivot column, so subtracting it never reintroduces one.
  std::vector<typename F::value_type> acc(sys.num_columns(), field.zero());
  std::vector<unsigned char> seen(sys.num_columns(), 0);
  for (std::size_t s = order.size(); s-- > 0;) {
    const auto& row = elim.rows()[order[s]];
    const std::size_t lead = row.front().col;
    std::vector<std::size_t> cols;
    auto add = [&](std::size_t c, const typename F::value_type& v) {
      if (!seen[c]) {
        seen[c] = 1;
        cols.push_back(c);
      }
      acc[c] = field.add(acc[c], v);
    };
    typename F::value_type r = elim.rhs()[order[s]];
    for (const auto& e : row) {
      if (e.col != lead && pivot_of_col[e.col] >= 0) {
        const auto& other = reduced[static_cast<std::size_t>(slot_of_col[e.col])];
        for (const auto& o : other)
          if (o.col != e.col) add(o.col, field.neg(field.mul(e.value, o.value)));
        r = field.sub(r, field.mul(e.value, reduced_rhs[static_cast<std::size_t>(slot_of_col[e.col])]));
      } else {
        add(e.col, e.value);
      }
    }
    std::sort(cols.begin(), cols.end());
    SparseRow<F> out_row;
    for (std::size_t c : cols) {
      if (!field.is_zero(acc[c])) out_row.push_back({c, acc[c]});
      acc[c] = field.zero();
      seen[c] = 0;
    }
    reduced[s] = std::move(out_row);
    reduced_rhs[s] = r;
  }
  for (std::size_t s = 0; s < order.size(); ++s) out.pivots.push_back(reduced[s].front().col);
  out.rows = std::move(reduced);
  out.rhs = std::move(reduced_rhs);
  out.rank = out.pivots.size();
  return out;
}

template <CoefficientField F>
std::vector<std::size_t> pivot_columns(const SparseLinearSystem<F>& sys) {
  Eliminator<F> elim(sys.field(), sys.num_columns());
  for (std::size_t i = 0; i < sys.num_rows(); ++i) (void)elim.insert(sys.rows()[i], sys.rhs()[i]);
  std::vector<std::size_t> cols;
  const auto& pivot_of_col = elim.pivot_of_col();
  for (std::size_t c = 0; c < pivot_of_col.size(); ++c)
    if (pivot_of_col[c] >= 0) cols.push_back(c);
  return cols;
}

template <CoefficientField F>
std::optional<BasicSolution<F>> solve_basic(const SparseLinearSystem<F>& sys) {
  const F& field = sys.field();
  Eliminator<F> elim(field, sys.num_columns());
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    auto residual = elim.insert(sys.rows()[i], sys.rhs()[i]);
    if (residual && !field.is_zero(*residual)) return std::nullopt;
  }
  BasicSolution<F> sol;
  sol.values.assign(sys.num_columns(), field.zero());
  const auto& pivot_of_col = elim.pivot_of_col();
  for (std::size_t c = pivot_of_col.size(); c-- > 0;) {
    if (pivot_of_col[c] < 0) continue;
    const auto p = static_cast<std::size_t>(pivot_of_col[c]);
    auto v = elim.rhs()[p];
    for (const auto& e : elim.rows()[p])
      if (e.col != c) v = field.sub(v, field.mul(e.value, sol.values[e.col]));
    sol.values[c] = v;
  }
  for (std::size_t c = 0; c < pivot_of_col.size(); ++c)
    if (pivot_of_col[c] >= 0) sol.basis.push_back(c);
  return sol;
}

template <CoefficientField F>
void write_matrix_market(std::ostream& out, const SparseLinearSystem<F>& sys) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << "% field " << sys.field().name() << ", last column is the right-hand side\n";
  std::size_t nnz = sys.nonzeros();
  for (const auto& b : sys.rhs())
    if (!sys.field().is_zero(b)) ++nnz;
  out << sys.num_rows() << ' ' << sys.num_columns() + 1 << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < sys.num_rows(); ++i) {
    for (const auto& e : sys.rows()[i]) out << i + 1 << ' ' << e.col + 1 << ' ' << sys.field().to_string(e.value) << '\n';
    if (!sys.field().is_zero(sys.rhs()[i]))
      out << i + 1 << ' ' << sys.num_columns() + 1 << ' ' << sys.field().to_string(sys.rhs()[i]) << '\n';
  }
}

#define NULLCERT_INSTANTIATE_LINSYS(F)                                               \
  template class SparseLinearSystem<F>;                                              \
  template EchelonForm<F> rref<F>(const SparseLinearSystem<F>&);                     \
  template std::vector<std::size_t> pivot_columns<F>(const SparseLinearSystem<F>&);  \
  template std::optional<BasicSolution<F>> solve_basic<F>(const SparseLinearSystem<F>&); \
  template void write_matrix_market<F>(std::ostream&, const SparseLinearSystem<F>&);

NULLCERT_INSTANTIATE_LINSYS(PrimeField)
NULLCERT_INSTANTIATE_LINSYS(RationalField)

}  // namespace nullcert
