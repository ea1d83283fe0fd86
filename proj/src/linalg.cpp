#include "uae/linalg.hpp"

#include <stdexcept>

namespace uae {

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVec: size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVec: size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const Rational& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rational& QMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("QMatrix::at");
  return a_[i * cols_ + j];
}

const Rational& QMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("QMatrix::at");
  return a_[i * cols_ + j];
}

QVec QMatrix::row(std::size_t i) const {
  QVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<QVec> QMatrix::row_list() const {
  std::vector<QVec> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return rows;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += x * rhs.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: shape mismatch in sum");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: shape mismatch in difference");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
  return r;
}

QMatrix scale(const Rational& c, const QMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
  return r;
}

std::vector<std::size_t> rref_in_place(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    Rational inv = 1 / m.at(lead, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

QMatrix rref(QMatrix m) {
  rref_in_place(m);
  return m;
}

std::size_t rank(QMatrix m) { return rref_in_place(m).size(); }

std::vector<QVec> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const QMatrix& m, const QVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: size mismatch");
  QMatrix ext(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
  return rank(ext) == rank(m);
}

bool same_row_space(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) return false;
  QMatrix ra = rref(a), rb = rref(b);
  // Compare the canonical forms row by row, ignoring trailing zero rows.
  std::size_t na = rank(a), nb = rank(b);
  if (na != nb) return false;
  for (std::size_t i = 0; i < na; ++i)
    if (ra.row(i) != rb.row(i)) return false;
  return true;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  QMatrix ext(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
    ext.at(i, m.cols()) = rhs[i];
  }
  std::vector<std::size_t> pivots = rref_in_place(ext);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  QVec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = ext.at(i, m.cols());
  return x;
}

}  // namespace uae
