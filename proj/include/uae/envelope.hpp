#pragma once
// Universal associative envelope of a two-generator triple system: the free
// algebra Q<a,b> modulo the relations equating each formal triple product
// x_i x_j x_k with its value on the pair e1 = E12, e2 = E21 of 2x2 matrix
// units. The quotient is presented through a Groebner basis; when the normal
// words run out the envelope is finite dimensional and gets a full
// multiplication table.
#include "uae/freealg.hpp"
#include "uae/groebner.hpp"
#include "uae/jsonio.hpp"
#include "uae/linalg.hpp"
#include "uae/structure.hpp"
#include "uae/tripleops.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace uae {

// Values of the operation on all eight ordered triples from {e1, e2},
// expressed in the basis {e1, e2}. Throws std::domain_error when a product
// leaves that span.
struct TripleSystem {
  TrilinearOp op;
  std::array<std::array<std::array<QVec, 2>, 2>, 2> products;
};

TripleSystem triple_system_from_operation(const TrilinearOp& op);

// The eight defining relations in lexicographic triple order (1,1,1)..(2,2,2):
// the formal word expansion minus the image of the structure constants.
// Zero relations are kept so indices match the triples.
std::vector<FreePoly> envelope_relations(const TripleSystem& sys, const GensPtr& gens);

struct EnvelopePresentation {
  GensPtr gens;
  TrilinearOp op;
  std::vector<FreePoly> raw_relations;
  std::vector<FreePoly> relations;      // monic, deduplicated, nonzero
  std::vector<std::size_t> provenance;  // first raw index producing each kept relation
  GBasis basis;
  Finiteness verdict;
  std::vector<Word> normal_basis;           // finite case: all normal words, deglex order
  std::optional<AlgebraTable> table;        // finite case: multiplication table
};

EnvelopePresentation build_envelope(const TrilinearOp& op, std::size_t degree_cap = 12);

// Number of normal words in each degree 0..max_degree.
std::vector<std::size_t> graded_dims(const GBasis& basis, std::size_t max_degree);

// Growth read off the cumulative dimension sequence: subsample by parity,
// drop a short burn-in, and look for a constant finite difference shared by
// both parity classes (polynomial growth of that order); otherwise test the
// tail ratios against 7/5 (exponential). Anything else is inconclusive.
struct GrowthEstimate {
  enum class Kind { polynomial, exponential, inconclusive };
  Kind kind = Kind::inconclusive;
  std::size_t degree = 0;  // Gelfand-Kirillov dimension when polynomial
};

GrowthEstimate growth_estimate(const std::vector<std::size_t>& dims_by_degree);

// Letter weight: a counts +1, b counts -1.
int word_weight(const Word& w);
// Every term of p has the same weight (zero polynomials count as homogeneous).
bool weight_homogeneous(const FreePoly& p);

// Every completed basis element is weight homogeneous, so the quotient
// inherits the weight grading.
bool grading_check(const EnvelopePresentation& env);

OJson to_json(const Finiteness& verdict);
OJson to_json(const GrowthEstimate& estimate);
OJson to_json(const EnvelopePresentation& env);

}  // namespace uae
