#pragma once
// Trilinear operations on an associative algebra, written in the permutation
// basis {abc, acb, bac, bca, cab, cba}. The matrix form packs the same data
// as a scalar, a 2x2 block, and another scalar; two operations are the same
// up to change of arguments exactly when the scalars agree up to nonzero
// factors and the blocks are row-equivalent.
#include "uae/jsonio.hpp"
#include "uae/linalg.hpp"
#include "uae/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace uae {

struct TrilinearOp {
  std::array<Rational, 6> coeffs{};
  std::optional<std::string> label;
  bool operator==(const TrilinearOp& rhs) const { return coeffs == rhs.coeffs; }
};

struct MatrixForm {
  Rational y1;
  QMatrix block;  // 2x2
  Rational y6;
};

// Change of basis between the permutation coordinates and the split form.
const QMatrix& perm_to_split();  // the inverse matrix, applied as Y = M^{-1} X
const QMatrix& split_to_perm();  // M itself

MatrixForm to_matrix_form(const TrilinearOp& op);
TrilinearOp from_matrix_form(const MatrixForm& form);

// Scalars normalized to 0/1, block replaced by its reduced row echelon form.
MatrixForm canonical_form(const TrilinearOp& op);
// Text encoding of the canonical form, usable as a grouping key.
std::string canonical_key(const TrilinearOp& op);
bool equivalent(const TrilinearOp& lhs, const TrilinearOp& rhs);

// omega(x, y, z) = sum of coeff * (permuted triple product), multiplication
// supplied by the caller; works for matrices, free polynomials, anything
// with + and scalar scaling.
template <typename T, typename Mul>
T apply(const TrilinearOp& op, const T& x, const T& y, const T& z, Mul mul) {
  const std::array<std::array<const T*, 3>, 6> perms = {{
      {&x, &y, &z}, {&x, &z, &y}, {&y, &x, &z}, {&y, &z, &x}, {&z, &x, &y}, {&z, &y, &x}}};
  T acc = scale(Rational(0), x);
  for (std::size_t s = 0; s < 6; ++s) {
    if (op.coeffs[s] == 0) continue;
    acc = acc + scale(op.coeffs[s], mul(mul(*perms[s][0], *perms[s][1]), *perms[s][2]));
  }
  return acc;
}

struct CatalogEntry {
  std::string name;            // kebab-case selector
  std::string q;               // family parameter, empty when not applicable
  std::string expression;      // defining formula in a, b, c
  TrilinearOp op;              // coefficients used by the envelope pipeline
  std::optional<TrilinearOp> alt;  // second listed form, where one exists
  std::optional<std::string> alt_expression;
};

// The 22 named operations, in a fixed order. For the two weakly-(anti)
// commutative rows the pipeline coefficients are the second listed form;
// the first form is kept as alt.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

struct SearchReport {
  long coefficient_bound = 0;     // entries range over [-bound, bound]
  std::size_t total_vectors = 0;  // (2*bound+1)^5 vectors scanned
  std::size_t class_count = 0;    // distinct canonical forms among them
  std::vector<std::string> represented;  // catalog names whose class appeared
  std::vector<std::string> missing;
};

// Scans X = [1, x2..x6] with all entries in [-bound, bound], groups by
// canonical form, and reports which catalog operations are represented.
SearchReport search_operations(long bound);

OJson to_json(const TrilinearOp& op);
OJson to_json(const MatrixForm& form);
OJson to_json(const SearchReport& report);
OJson catalog_json();

}  // namespace uae
