#ifndef COVERCERT_MATRIX_HPP
#define COVERCERT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "covercert/rational.hpp"

namespace covercert {

/// Dense matrix of exact rationals. All reductions use deterministic
/// pivoting (first nonzero entry in row-then-column order), so ranks,
/// kernels and bases are reproducible across runs and platforms.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix& other) const = default;

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Matrix operator*(const Matrix& rhs) const {
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const Rational& b = rhs.at(k, j);
          if (b != 0) out.at(i, j) += a * b;
        }
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& q : data_)
      if (q != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan over the rationals. Pivot: first row with a nonzero entry
/// in the leftmost unfinished column.
inline Echelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (m.at(r, pc) != 0) { sel = r; break; }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(sel, c), m.at(pr, c));
    const Rational inv = Rational(1) / m.at(pr, pc);
    std::vector<std::size_t> support;  // nonzero columns of the pivot row
    for (std::size_t c = pc; c < cols; ++c) {
      if (m.at(pr, c) == 0) continue;
      m.at(pr, c) *= inv;
      support.push_back(c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Rational f = m.at(r, pc);
      if (f == 0) continue;
      for (std::size_t c : support) m.at(r, c) -= f * m.at(pr, c);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

/// Basis of the null space, one vector per free column, in column order.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rational> v(cols);
    v[free_c] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.reduced.at(i, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve A x = b exactly; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a,
                                                  const std::vector<Rational>& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  for (std::size_t p : e.pivot_cols)
    if (p == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.reduced.at(i, a.cols());
  return x;
}

/// Indices of a maximal independent subset of the columns (leftmost-greedy).
inline std::vector<std::size_t> independent_columns(const Matrix& m) {
  return row_reduce(m).pivot_cols;
}

}  // namespace covercert

#endif
