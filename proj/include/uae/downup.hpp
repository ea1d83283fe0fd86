#pragma once
// Down-up algebras A(alpha, beta, gamma) on a (down) and b (up), defined by
//   b^2 a = alpha bab + beta ab^2 + gamma b
//   b a^2 = alpha aba + beta a^2 b + gamma a.
// The two relations are a Groebner basis for every parameter choice (leading
// monomials b^2 a and b a^2), so the monomials a^i (ba)^j b^k form a linear
// basis. Quotient mode adjoins a^3 = b^3 = 0, capping i and k at 2; the
// annihilator rules are listed first so they fire before the straightening
// rules.
#include "uae/freealg.hpp"
#include "uae/jsonio.hpp"
#include "uae/rational.hpp"
#include "uae/verify.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace uae {

struct DownUpParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  bool operator==(const DownUpParams& rhs) const = default;
};

// The three parameter points used by the envelope computations.
DownUpParams downup_symsum();  // (-1, -1, 1)
DownUpParams downup_lie();     // (2, -1, -2)
DownUpParams downup_a010();    // (0, 1, 0)

enum class DownUpMode { full, quotient };

// Element in the monomial basis, keyed by the exponent triple (i, j, k) of
// a^i (ba)^j b^k. Zero coefficients are never stored. Elements of different
// modes never compare equal and never mix in arithmetic.
struct DownUpElement {
  std::map<std::array<long, 3>, Rational> terms;
  DownUpMode mode = DownUpMode::quotient;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const DownUpElement& rhs) const = default;
};

void add_term(DownUpElement& x, long i, long j, long k, const Rational& c);
DownUpElement operator+(const DownUpElement& x, const DownUpElement& y);
DownUpElement operator-(const DownUpElement& x, const DownUpElement& y);
DownUpElement scale(const Rational& c, const DownUpElement& x);
// Exponent exchange (i, j, k) -> (k, j, i); an anti-automorphism in both
// modes because the word-level involution swaps the two defining relations.
DownUpElement zeta(const DownUpElement& x);

class DownUpAlgebra {
 public:
  DownUpAlgebra(DownUpParams params, DownUpMode mode);

  const DownUpParams& params() const { return params_; }
  DownUpMode mode() const { return mode_; }
  const GensPtr& gens() const { return gens_; }
  const std::vector<FreePoly>& rules() const { return rules_; }

  // The word a^i (ba)^j b^k, unreduced.
  Word basis_word(long i, long j, long k) const;
  // c * a^i (ba)^j b^k reduced, so quotient mode may collapse it to zero.
  DownUpElement monomial(long i, long j, long k, Rational c = Rational(1)) const;

  FreePoly encode(const DownUpElement& x) const;
  // Requires every word of f to match a^i (ba)^j b^k (true of normal forms).
  DownUpElement decode(const FreePoly& f) const;

  DownUpElement rewrite_word(const Word& w) const;
  DownUpElement reduce(const FreePoly& f) const;
  DownUpElement multiply(const DownUpElement& x, const DownUpElement& y) const;
  bool commutes(const DownUpElement& x, const DownUpElement& y) const;

 private:
  DownUpParams params_;
  DownUpMode mode_;
  GensPtr gens_;
  std::vector<FreePoly> rules_;
};

// Alternating binomial string: sum_{t=0}^{j} (-1)^{j+t} C(j,t)
// a^l (ba)^{j+m-t} b^r, the building block of the closed product below.
DownUpElement L_poly(long m, long j, long l, long r);

// Closed form for a^i (ba)^j b^k * a^l (ba)^m b^n in the quotient of
// A(-1,-1,1) by a^3 = b^3 = 0. Requires 0 <= i,k,l,n <= 2 and j,m >= 0.
DownUpElement symsum_product_closed(long i, long j, long k, long l, long m, long n);

// Central element Z(m) of the quotient of A(-1,-1,1), defined for m >= 2.
DownUpElement center_element(long m);
// The solution vector the centrality system pins down; equals (1/3) Z(m).
DownUpElement center_displayed_solution(long m);
// Basis of the centralizer of a inside span{a^i (ba)^j b^i : i <= 2,
// j <= max_j} of the quotient of A(-1,-1,1), by exact linear algebra over
// the rewriting oracle. Within this slice, commuting with a already forces
// commuting with b. Scalars always account for one dimension.
std::vector<DownUpElement> center_slice_bruteforce(long max_j);

// Closed form for a^i (ba)^j b^k * a^l (ba)^m b^n in A(0,1,0), full mode.
// Always a single monomial, selected by the parities of k and l.
DownUpElement a010_product_closed(long i, long j, long k, long l, long m, long n);

// a^i (ba + c1 ab + c2)^j b^k expanded in the a^i (ba)^j b^k basis of alg.
DownUpElement b2_expand(const DownUpAlgebra& alg, long i, long j, long k,
                        const Rational& c1, const Rational& c2);

std::string to_string(const DownUpElement& x);
OJson to_json(const DownUpElement& x);

// Sweep drivers comparing closed forms against the rewriting oracle.
VerifyReport verify_symsum_closed(long max_j = 4);      // i,k,l,n <= 2; j,m <= max_j
VerifyReport verify_center(long max_m = 6);             // centrality, commuting, slice dims
VerifyReport verify_a010_closed(long max_exp = 4);      // all six exponents <= max_exp
VerifyReport verify_a010_identities(long max_exp = 6);  // the four auxiliary identities

}  // namespace uae
