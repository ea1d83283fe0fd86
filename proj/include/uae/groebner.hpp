#pragma once
// Noncommutative Groebner bases in the free associative algebra, deglex
// order. Completion follows the classical overlap scheme: a composition of
// monic g and h is g*u - v*h where a proper suffix of LM(g) equals a proper
// prefix of LM(h), so both sides share the overlap word LM(g)*u = v*LM(h).
// Containments (one leading monomial a factor of the other) are never
// treated as compositions; self_reduce eliminates them instead.
#include "uae/freealg.hpp"
#include "uae/jsonio.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace uae {

struct CompositionRecord {
  std::size_t g_index = 0;  // element whose leading monomial starts the overlap
  std::size_t h_index = 0;  // element whose leading monomial ends the overlap
  Word u;                   // proper right factor of LM(h)
  Word v;                   // proper left factor of LM(g)
  FreePoly value;           // g*u - v*h; shares the overlap word LM(g)*u = v*LM(h)
  Word overlap() const { return v * u_prefix_; }
  Word u_prefix_;           // LM(h) (cached so overlap() needs no backref)
};

// Remainder of f after rewriting with the monic set basis: repeatedly
// replaces the deglex-greatest reducible word using the first listed element
// whose leading monomial occurs (leftmost occurrence). Throws
// std::invalid_argument if any basis element is zero or non-monic.
FreePoly normal_form(const FreePoly& f, const std::vector<FreePoly>& basis);

// All compositions of the unordered pair {g, h}, both orientations, every
// overlap length. For g == h the self-overlaps are listed once. Indices in
// the records are 0 for g and 1 for h.
std::vector<CompositionRecord> compositions(const FreePoly& g, const FreePoly& h);

// Same enumeration over a whole list, indices into it; i == j included.
// Pairs where one leading monomial divides the other are skipped entirely.
std::vector<CompositionRecord> all_compositions(const std::vector<FreePoly>& polys);

// Interreduce: drop zeros, make monic, and rewrite every element by the
// others until no leading monomial divides a word of another element.
std::vector<FreePoly> self_reduce(std::vector<FreePoly> polys);

enum class GBStatus { complete, truncated };

struct GBasis {
  GensPtr gens;
  std::vector<FreePoly> elements;  // monic, self-reduced
  GBStatus status = GBStatus::complete;
  std::size_t degree_cap = 0;
  std::size_t rounds = 0;  // iterations that adjoined at least one new element
};

// Completion loop: repeatedly normal-form all compositions against the
// frozen current set (in deglex order of overlap word), adjoin the nonzero
// remainders, and self-reduce. Stops with status complete when a round
// produces nothing new, or truncated when a remainder would exceed the
// degree cap.
GBasis complete(const std::vector<FreePoly>& generators, GensPtr gens,
                std::size_t degree_cap = 12);

// Normal words (no factor equal to a leading monomial) grouped by degree
// 0..max_degree, each group sorted in deglex order. Built by extending words
// one letter at a time, so only the new suffix needs checking.
std::vector<std::vector<Word>> normal_words(const GBasis& basis, std::size_t max_degree);

struct Finiteness {
  enum class Kind { finite, infinite_witnessed, unknown };
  Kind kind = Kind::unknown;
  std::size_t dimension = 0;      // total normal words, when finite
  std::size_t witness_degree = 0; // degree of the pumpable witness, when infinite
};

// Degree with zero normal words => finite (the word language is factor
// closed). A normal word at least as long as m^(L-1) + L - 1 (m letters,
// L the longest leading monomial, at least 1) revisits a suffix state of the
// forbidden-factor automaton, so it pumps => infinite. Otherwise, or for a
// truncated basis, unknown.
Finiteness finiteness(const GBasis& basis, std::size_t probe_cap = 12);

OJson to_json(const GBasis& basis);

}  // namespace uae
