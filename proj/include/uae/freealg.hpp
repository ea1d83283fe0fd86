#pragma once
// Free associative algebra over Q on a small ordered alphabet.
//
// A Word stores generator indices, one byte each, so the degree-lexicographic
// order is "shorter first, then bytewise"; the empty word is the monoid unit.
// A FreePoly is a sparse term map keyed by Word in deglex order (the leading
// term is the last entry) and never stores zero coefficients. Polynomials
// carry their generator set so mixed-alphabet arithmetic is rejected.
#include "uae/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uae {

class GeneratorSet {
 public:
  // Names must be distinct and nonempty; their order fixes the letter order.
  explicit GeneratorSet(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index(std::string_view name) const;
  bool operator==(const GeneratorSet& rhs) const { return names_ == rhs.names_; }

 private:
  std::vector<std::string> names_;
};

using GensPtr = std::shared_ptr<const GeneratorSet>;
GensPtr make_gens(std::initializer_list<std::string> names);
GensPtr make_gens(std::vector<std::string> names);

class Word {
 public:
  Word() = default;  // empty word
  static Word single(unsigned letter);
  static Word from_letters(const std::vector<unsigned>& letters);
  static Word power(unsigned letter, std::size_t count);

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  unsigned letter(std::size_t pos) const;
  Word operator*(const Word& rhs) const;  // concatenation
  Word subword(std::size_t pos, std::size_t len) const;
  bool operator==(const Word& rhs) const = default;
  // Deglex: compare degrees first, then letters left to right.
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  std::string letters_;
};

std::strong_ordering deglex_cmp(const Word& u, const Word& v);

// Leftmost factorization w = u1 * u * u2, if u occurs as a factor of w.
std::optional<std::pair<Word, Word>> find_factor(const Word& u, const Word& w);

Word reversed(const Word& w);
// Relabels each letter x as image[x]; image must cover every letter used.
Word map_letters(const Word& w, const std::vector<unsigned>& image);
// Exchange involution on a two-letter alphabet: reverse and swap the letters.
// An anti-automorphism of the free algebra (and of any quotient whose ideal
// it preserves).
Word zeta(const Word& w);

std::string to_string(const Word& w, const GeneratorSet& gens);  // empty word prints as "1"

class FreePoly {
 public:
  FreePoly() = default;  // zero over an unspecified alphabet; usable only as a target of assignment
  explicit FreePoly(GensPtr gens);
  static FreePoly term(GensPtr gens, Word w, Rational c);
  static FreePoly generator(GensPtr gens, std::size_t i);
  static FreePoly constant(GensPtr gens, Rational c);

  const GensPtr& gens() const { return gens_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;

  // Leading term in deglex order; throws std::domain_error on zero.
  std::pair<Word, Rational> leading_term() const;
  Word leading_monomial() const { return leading_term().first; }

  FreePoly operator+(const FreePoly& rhs) const;
  FreePoly operator-(const FreePoly& rhs) const;
  FreePoly operator-() const;
  FreePoly operator*(const FreePoly& rhs) const;
  FreePoly& operator+=(const FreePoly& rhs);
  FreePoly& operator-=(const FreePoly& rhs);
  bool operator==(const FreePoly& rhs) const;

  FreePoly left_mul(const Word& w) const;   // w * poly
  FreePoly right_mul(const Word& w) const;  // poly * w

  // poly / leading coefficient; throws on zero.
  FreePoly monic() const;

 private:
  void add_term(const Word& w, const Rational& c);
  void check_compatible(const FreePoly& rhs) const;

  GensPtr gens_;
  std::map<Word, Rational> terms_;
  friend FreePoly scale(const Rational& c, const FreePoly& f);
};

FreePoly scale(const Rational& c, const FreePoly& f);
// zeta applied to every word; requires exactly two generators.
FreePoly zeta(const FreePoly& p);

// Grammar: ['-'] term (('+'|'-') term)*, where a term is a rational literal
// ("p" or "p/q"), a word of concatenated generator names, or both (optionally
// separated by '*' or spaces). Example: "bba + 1/2 bab - b".
struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what);
  std::size_t position;
};
FreePoly parse_poly(GensPtr gens, std::string_view text);

std::string to_string(const FreePoly& f);

}  // namespace uae
