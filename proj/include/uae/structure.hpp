#pragma once
// Structure theory of finite-dimensional unital associative algebras over Q,
// given by a multiplication table. The radical is computed as the kernel of
// the trace form (x, y) -> trace(L_x L_y), which equals the Jacobson radical
// in characteristic zero. Decomposition splits the semisimple quotient by
// the spectra of central elements, which over Q only succeeds when every
// minimal polynomial factors into distinct linear terms; anything else is
// reported as an unsupported field.
#include "uae/jsonio.hpp"
#include "uae/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace uae {

class AlgebraTable {
 public:
  // Validates the unit laws and full associativity; throws std::invalid_argument.
  static AlgebraTable make(std::vector<std::string> labels,
                           std::vector<std::vector<QVec>> table, QVec unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const QVec& unit() const { return unit_; }
  const QVec& basis_product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  QVec mul(const QVec& x, const QVec& y) const;
  QVec basis_vector(std::size_t i) const;
  // Matrix of left multiplication by x: column j holds x * b_j.
  QMatrix left_action(const QVec& x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<QVec>> table_;
  QVec unit_;
};

// Kernel of the trace form, returned as reduced-row-echelon rows.
std::vector<QVec> radical(const AlgebraTable& T);

struct Quotient {
  AlgebraTable table;             // algebra on the surviving coset basis
  std::vector<std::size_t> kept;  // indices of basis vectors whose cosets survive
  QMatrix ideal_rows;             // RREF of the ideal
  QVec project(const QVec& v) const;  // full coordinates -> coset coordinates
};

// Quotient by the span of the given vectors; throws std::invalid_argument
// when the span is not a two-sided ideal. The coset basis is the set of
// non-pivot standard basis vectors of the ideal's RREF.
Quotient quotient(const AlgebraTable& T, const std::vector<QVec>& ideal_vectors);

// Solutions of xb = bx for every basis vector b, as RREF rows.
std::vector<QVec> center(const AlgebraTable& T);

// Monic minimal polynomial of x over Q, coefficients by ascending power.
std::vector<Rational> minimal_polynomial(const AlgebraTable& T, const QVec& x);

// Refines {1} along the spectra of the given central elements into pairwise
// orthogonal central idempotents summing to 1; throws std::domain_error when
// a minimal polynomial has a repeated or irrational root.
std::vector<QVec> split_idempotents(const AlgebraTable& T, const std::vector<QVec>& central);

struct MatrixUnits {
  QVec e11, e12, e21, e22;
};

struct Component {
  QVec idempotent;
  std::vector<QVec> basis;  // RREF rows in the ambient coordinates
  std::size_t dimension = 0;
  enum class Kind { ground_field, matrix_2x2, unidentified_simple } kind = Kind::unidentified_simple;
  std::size_t irreducible_dim = 0;  // 0 when unidentified
  std::optional<MatrixUnits> units;
};

struct WedderburnReport {
  std::vector<std::string> input_labels;
  std::vector<QVec> radical_basis;  // input coordinates
  std::vector<std::vector<QVec>> radical_products;  // full table of the radical, input coordinates
  Quotient semisimple;
  std::vector<QVec> center_basis;  // quotient coordinates
  std::vector<QVec> idempotents;   // quotient coordinates
  std::vector<Component> components;
  std::vector<std::size_t> irreducible_dims;
};

// Full pipeline: radical, semisimple quotient (re-checked to have zero
// radical), center, central idempotents, identified simple components.
WedderburnReport decompose(const AlgebraTable& T);

OJson to_json(const AlgebraTable& T);
OJson to_json(const WedderburnReport& report);

}  // namespace uae
