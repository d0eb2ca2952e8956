#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yam {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

// "p/q", "-p/q" or "p"; the result is always canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

// Incremental Gauss-Jordan elimination. Rows are kept in reduced row echelon
// form at all times, so a long stream of equations never materializes a dense
// system. Pivots are the first nonzero entry of each reduced row.
template <typename Scalar>
class RowReducer {
 public:
  explicit RowReducer(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Index>& pivots() const { return pivots_; }
  const std::vector<VectorX<Scalar>>& rows() const { return rows_; }

  // Returns true when the row was independent of the rows already held.
  template <typename Derived>
  bool add_row(const Eigen::MatrixBase<Derived>& row_in) {
    if (row_in.size() != cols_) throw std::invalid_argument("row length mismatch");
    VectorX<Scalar> row = row_in;
    reduce(row);
    Index pivot = -1;
    for (Index j = 0; j < cols_; ++j) {
      if (!is_zero(row(j))) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    const Scalar lead = row(pivot);
    for (Index j = pivot; j < cols_; ++j)
      if (!is_zero(row(j))) row(j) /= lead;
    for (auto& other : rows_) {
      if (is_zero(other(pivot))) continue;
      const Scalar f = other(pivot);
      for (Index j = pivot; j < cols_; ++j)
        if (!is_zero(row(j))) other(j) -= f * row(j);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto at = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
  }

  // Reduces v against the stored rows in place; zero result means v lies in
  // the row space.
  void reduce(VectorX<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index p = pivots_[r];
      if (is_zero(v(p))) continue;
      const Scalar f = v(p);
      const auto& row = rows_[r];
      for (Index j = p; j < cols_; ++j)
        if (!is_zero(row(j))) v(j) -= f * row(j);
    }
  }

  template <typename Derived>
  bool in_row_space(const Eigen::MatrixBase<Derived>& v_in) const {
    VectorX<Scalar> v = v_in;
    reduce(v);
    for (Index j = 0; j < v.size(); ++j)
      if (!is_zero(v(j))) return false;
    return true;
  }

  MatrixX<Scalar> reduced() const {
    MatrixX<Scalar> out(rank(), cols_);
    for (Index r = 0; r < rank(); ++r) out.row(r) = rows_[r].transpose();
    return out;
  }

  // Null space of the accumulated rows, one column per free variable, in
  // increasing order of the free column.
  MatrixX<Scalar> kernel() const {
    std::vector<Index> free;
    std::size_t k = 0;
    for (Index j = 0; j < cols_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      free.push_back(j);
    }
    MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols_, static_cast<Index>(free.size()));
    for (std::size_t c = 0; c < free.size(); ++c) {
      const Index f = free[c];
      basis(f, static_cast<Index>(c)) = Scalar(1);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!is_zero(rows_[r](f))) basis(pivots_[r], static_cast<Index>(c)) = -rows_[r](f);
    }
    return basis;
  }

 private:
  Index cols_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Index> pivots_;
};

template <typename Derived>
RowReducer<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  RowReducer<typename Derived::Scalar> red(m.cols());
  for (Index i = 0; i < m.rows(); ++i) red.add_row(m.row(i).transpose());
  return red;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).reduced();
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank();
}

// Columns of the result form a basis of {v : m v = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).kernel();
}

// Some x with m x = b, free variables set to zero; nullopt when inconsistent.
template <typename DerivedM, typename DerivedB>
std::optional<VectorX<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto red = row_reduce(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
  for (Index r = 0; r < red.rank(); ++r) {
    const Index p = red.pivots()[static_cast<std::size_t>(r)];
    if (p == m.cols()) return std::nullopt;
    x(p) = red.rows()[static_cast<std::size_t>(r)](m.cols());
  }
  return x;
}

// Indices of the columns that are not combinations of earlier columns.
template <typename Derived>
std::vector<Index> pivot_columns(const Eigen::MatrixBase<Derived>& m) {
  RowReducer<typename Derived::Scalar> red(m.rows());
  std::vector<Index> keep;
  for (Index j = 0; j < m.cols(); ++j)
    if (red.add_row(m.col(j))) keep.push_back(j);
  return keep;
}

// A basis of the column space made of original columns.
template <typename Derived>
MatrixX<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& m) {
  auto keep = pivot_columns(m);
  MatrixX<typename Derived::Scalar> out(m.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Index>(c)) = m.col(keep[c]);
  return out;
}

template <typename DerivedM, typename DerivedV>
bool in_span(const Eigen::MatrixBase<DerivedM>& columns, const Eigen::MatrixBase<DerivedV>& v) {
  return solve(columns, v).has_value();
}

template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> hstack(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  MatrixX<typename DerivedA::Scalar> out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

// dim span(z) - dim span(b) once span(b) is confirmed to sit inside span(z).
template <typename DerivedZ, typename DerivedB>
Index quotient_dimension(const Eigen::MatrixBase<DerivedZ>& z, const Eigen::MatrixBase<DerivedB>& b) {
  const Index rz = rank(z.transpose());
  const Index rb = rank(b.transpose());
  const Index stacked = rank(hstack(z, b).transpose());
  if (stacked != rz) throw std::domain_error("quotient_dimension: subspace not contained");
  return rz - rb;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  auto red = row_reduce(hstack(m, MatrixX<Scalar>::Identity(n, n)));
  if (red.rank() < n || (n > 0 && red.pivots()[static_cast<std::size_t>(n - 1)] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return red.reduced().rightCols(n);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

}  // namespace yam
