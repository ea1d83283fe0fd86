#pragma once
// PBW arithmetic in U(sl2) with the generator order f < h < e and relations
//   ef = fe + h,  eh = he - 2e,  hf = fh - 2f.
// Straightening any word into the basis f^i h^j e^k is rewriting with those
// three rules; they close under overlaps, so the normal form is unique.
#include "uae/freealg.hpp"
#include "uae/jsonio.hpp"
#include "uae/rational.hpp"
#include "uae/verify.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace uae {

// Element keyed by the exponent triple (i, j, k) of f^i h^j e^k.
struct PBWElement {
  std::map<std::array<long, 3>, Rational> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const PBWElement& rhs) const = default;
};

void add_term(PBWElement& x, long i, long j, long k, const Rational& c);
PBWElement operator+(const PBWElement& x, const PBWElement& y);
PBWElement operator-(const PBWElement& x, const PBWElement& y);
PBWElement scale(const Rational& c, const PBWElement& x);

const GensPtr& sl2_gens();                 // {"f", "h", "e"}, letter order = PBW order
const std::vector<FreePoly>& sl2_rules();  // the three straightening rules

Word sl2_word(long i, long j, long k);  // the word f^i h^j e^k
PBWElement sl2_monomial(long i, long j, long k, Rational c = Rational(1));
FreePoly sl2_encode(const PBWElement& x);

PBWElement pbw_normalize(const Word& w);
PBWElement pbw_normalize(const FreePoly& f);
PBWElement sl2_multiply(const PBWElement& x, const PBWElement& y);

// C(h + shift, order) = prod_{s=0}^{order-1} (h + shift - s) / order!, a
// polynomial in the central-variable style: coeffs() lists the coefficients
// of h^0, h^1, ..., h^order.
struct HBinomial {
  Rational shift;
  unsigned long order = 0;
  std::vector<Rational> coeffs() const;
};

// Closed forms for straightened powers.
PBWElement closed_eh(long l, long k);  // e^l h^k
PBWElement closed_hf(long k, long m);  // h^k f^m
PBWElement closed_ef(long l, long j);  // e^l f^j
// f^i h^j e^k * f^l h^m e^n straightened in one triple summation.
PBWElement closed_product(long i, long j, long k, long l, long m, long n);

std::string to_string(const PBWElement& x);
OJson to_json(const PBWElement& x);

// Sweep drivers comparing the closed forms against rewriting.
VerifyReport verify_sl2_closed_forms(long max_exp = 4);
VerifyReport verify_sl2_product(long max_exp = 3);

}  // namespace uae
