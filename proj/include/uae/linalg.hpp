#pragma once
// Dense exact linear algebra over Q. Everything here operates on tiny
// matrices (a few dozen rows at most), so plain Gauss-Jordan elimination is
// the right tool; no pivoting heuristics are needed with exact arithmetic.
#include "uae/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace uae {

using QVec = std::vector<Rational>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec scale(const Rational& c, const QVec& v);
bool is_zero(const QVec& v);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;
  QVec row(std::size_t i) const;
  std::vector<QVec> row_list() const;

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix scale(const Rational& c, const QMatrix& m);

// Reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(QMatrix& m);
QMatrix rref(QMatrix m);
std::size_t rank(QMatrix m);

// Canonical basis of the right kernel {x : m x = 0}: one vector per free
// column, with a 1 in that column and zeros in the other free columns.
std::vector<QVec> kernel_basis(const QMatrix& m);

bool in_row_space(const QMatrix& m, const QVec& v);
bool same_row_space(const QMatrix& a, const QMatrix& b);

// One solution of m x = rhs, if the system is consistent.
std::optional<QVec> solve(const QMatrix& m, const QVec& rhs);

}  // namespace uae
