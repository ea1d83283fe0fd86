#include "uae/sl2pbw.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "uae/groebner.hpp"
#include "uae/parallel.hpp"

namespace uae {
namespace {

constexpr unsigned kF = 0;
constexpr unsigned kH = 1;
constexpr unsigned kE = 2;

Integer pow_int(long base, long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exp));
  return out;  // GMP defines 0^0 = 1, matching the summation conventions here
}

std::string mono_string(const std::array<long, 3>& x) {
  static const char* names[3] = {"f", "h", "e"};
  std::ostringstream out;
  bool any = false;
  for (int t = 0; t < 3; ++t) {
    if (x[t] == 0) continue;
    if (any) out << ' ';
    out << names[t];
    if (x[t] > 1) out << '^' << x[t];
    any = true;
  }
  if (!any) out << '1';
  return out.str();
}

PBWElement sl2_decode(const FreePoly& f) {
  PBWElement out;
  for (const auto& [w, c] : f.terms()) {
    long count[3] = {0, 0, 0};
    unsigned prev = 0;
    for (std::size_t pos = 0; pos < w.degree(); ++pos) {
      unsigned letter = w.letter(pos);
      if (letter < prev) throw std::logic_error("word is not of the form f^i h^j e^k");
      ++count[letter];
      prev = letter;
    }
    out.terms[{count[0], count[1], count[2]}] = c;
  }
  return out;
}

}  // namespace

void add_term(PBWElement& x, long i, long j, long k, const Rational& c) {
  if (c == 0) return;
  std::array<long, 3> key{i, j, k};
  auto it = x.terms.find(key);
  if (it == x.terms.end()) {
    x.terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) x.terms.erase(it);
}

PBWElement operator+(const PBWElement& x, const PBWElement& y) {
  PBWElement out = x;
  for (const auto& [e, c] : y.terms) add_term(out, e[0], e[1], e[2], c);
  return out;
}

PBWElement operator-(const PBWElement& x, const PBWElement& y) {
  PBWElement out = x;
  for (const auto& [e, c] : y.terms) add_term(out, e[0], e[1], e[2], -c);
  return out;
}

PBWElement scale(const Rational& c, const PBWElement& x) {
  PBWElement out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : x.terms) out.terms.emplace(e, c * coeff);
  return out;
}

const GensPtr& sl2_gens() {
  static const GensPtr gens = make_gens({"f", "h", "e"});
  return gens;
}

const std::vector<FreePoly>& sl2_rules() {
  static const std::vector<FreePoly> rules = [] {
    const GensPtr& g = sl2_gens();
    auto term = [&](std::vector<unsigned> letters, const Rational& c) {
      return FreePoly::term(g, Word::from_letters(letters), c);
    };
    std::vector<FreePoly> out;
    out.push_back(term({kE, kF}, rat(1)) - term({kF, kE}, rat(1)) - term({kH}, rat(1)));
    out.push_back(term({kE, kH}, rat(1)) - term({kH, kE}, rat(1)) + term({kE}, rat(2)));
    out.push_back(term({kH, kF}, rat(1)) - term({kF, kH}, rat(1)) + term({kF}, rat(2)));
    return out;
  }();
  return rules;
}

Word sl2_word(long i, long j, long k) {
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent");
  std::vector<unsigned> letters;
  letters.reserve(static_cast<std::size_t>(i + j + k));
  for (long t = 0; t < i; ++t) letters.push_back(kF);
  for (long t = 0; t < j; ++t) letters.push_back(kH);
  for (long t = 0; t < k; ++t) letters.push_back(kE);
  return Word::from_letters(letters);
}

PBWElement sl2_monomial(long i, long j, long k, Rational c) {
  PBWElement out;
  add_term(out, i, j, k, c);
  return out;
}

FreePoly sl2_encode(const PBWElement& x) {
  FreePoly f(sl2_gens());
  for (const auto& [e, c] : x.terms) f += FreePoly::term(sl2_gens(), sl2_word(e[0], e[1], e[2]), c);
  return f;
}

PBWElement pbw_normalize(const Word& w) {
  return pbw_normalize(FreePoly::term(sl2_gens(), w, rat(1)));
}

PBWElement pbw_normalize(const FreePoly& f) { return sl2_decode(normal_form(f, sl2_rules())); }

PBWElement sl2_multiply(const PBWElement& x, const PBWElement& y) {
  return pbw_normalize(sl2_encode(x) * sl2_encode(y));
}

std::vector<Rational> HBinomial::coeffs() const {
  std::vector<Rational> poly{rat(1)};
  for (unsigned long s = 0; s < order; ++s) {
    std::vector<Rational> next(poly.size() + 1, rat(0));
    Rational constant = shift - Rational(static_cast<long>(s));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += constant * poly[d];
    }
    poly = std::move(next);
  }
  Rational fact(factorial(order));
  for (Rational& c : poly) c /= fact;
  return poly;
}

PBWElement closed_eh(long l, long k) {
  if (l < 0 || k < 0) throw std::invalid_argument("closed_eh needs nonnegative exponents");
  PBWElement out;
  for (long q = 0; q <= k; ++q) {
    Rational c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(q)) *
               pow_int(2, q) * pow_int(l, q));
    if (q % 2 != 0) c = -c;
    add_term(out, 0, k - q, l, c);
  }
  return out;
}

PBWElement closed_hf(long k, long m) {
  if (k < 0 || m < 0) throw std::invalid_argument("closed_hf needs nonnegative exponents");
  PBWElement out;
  for (long q = 0; q <= k; ++q) {
    Rational c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(q)) *
               pow_int(2, q) * pow_int(m, q));
    if (q % 2 != 0) c = -c;
    add_term(out, m, k - q, 0, c);
  }
  return out;
}

PBWElement closed_ef(long l, long j) {
  if (l < 0 || j < 0) throw std::invalid_argument("closed_ef needs nonnegative exponents");
  PBWElement out;
  const Rational lead(factorial(static_cast<unsigned long>(l)) *
                      factorial(static_cast<unsigned long>(j)));
  for (long r = 0; r <= std::min(l, j); ++r) {
    Rational c = lead / Rational(factorial(static_cast<unsigned long>(j - r)) *
                                 factorial(static_cast<unsigned long>(l - r)));
    HBinomial bin{rat(-j - l + 2 * r), static_cast<unsigned long>(r)};
    const std::vector<Rational> hc = bin.coeffs();
    for (std::size_t d = 0; d < hc.size(); ++d)
      add_term(out, j - r, static_cast<long>(d), l - r, c * hc[d]);
  }
  return out;
}

PBWElement closed_product(long i, long j, long k, long l, long m, long n) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || m < 0 || n < 0)
    throw std::invalid_argument("closed_product needs nonnegative exponents");
  PBWElement out;
  const Rational lead(factorial(static_cast<unsigned long>(k)) *
                      factorial(static_cast<unsigned long>(l)));
  for (long r = 0; r <= std::min(l, k); ++r) {
    Rational base = lead / Rational(factorial(static_cast<unsigned long>(l - r)) *
                                    factorial(static_cast<unsigned long>(k - r)));
    HBinomial bin{rat(-k - l + 2 * r), static_cast<unsigned long>(r)};
    const std::vector<Rational> hc = bin.coeffs();
    for (long q = 0; q <= j; ++q)
      for (long p = 0; p <= m; ++p) {
        Rational c = base * Rational(binomial(static_cast<unsigned long>(j),
                                              static_cast<unsigned long>(q)) *
                                     binomial(static_cast<unsigned long>(m),
                                              static_cast<unsigned long>(p)) *
                                     pow_int(2, q + p) * pow_int(l - r, q) * pow_int(k - r, p));
        if (c == 0) continue;
        if ((q + p) % 2 != 0) c = -c;
        for (std::size_t d = 0; d < hc.size(); ++d)
          add_term(out, i + l - r, j - q + static_cast<long>(d) + m - p, k - r + n, c * hc[d]);
      }
  }
  return out;
}

std::string to_string(const PBWElement& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : x.terms) {
    const bool neg = c < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    Rational mag = neg ? Rational(-c) : c;
    std::string mono = mono_string(e);
    if (mono == "1")
      out << to_string(mag);
    else if (mag == 1)
      out << mono;
    else
      out << to_string(mag) << ' ' << mono;
  }
  return out.str();
}

OJson to_json(const PBWElement& x) {
  OJson arr = OJson::array();
  for (const auto& [e, c] : x.terms) arr.push_back({e[0], e[1], e[2], to_string(c)});
  return arr;
}

VerifyReport verify_sl2_closed_forms(long max_exp) {
  if (max_exp < 0) throw std::invalid_argument("verify_sl2_closed_forms needs max_exp >= 0");
  struct Case {
    long x, y;
  };
  std::vector<Case> grid;
  for (long x = 0; x <= max_exp; ++x)
    for (long y = 0; y <= max_exp; ++y) grid.push_back({x, y});

  std::vector<std::string> failures(3 * grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const long x = grid[idx].x;
    const long y = grid[idx].y;
    auto check = [&](std::size_t slot, const std::string& what, const PBWElement& oracle,
                     const PBWElement& closed) {
      if (!(oracle == closed))
        failures[3 * idx + slot] =
            what + ": rewriting gives " + to_string(oracle) + ", closed form gives " + to_string(closed);
    };
    check(0, "e^" + std::to_string(x) + " h^" + std::to_string(y),
          pbw_normalize(Word::power(kE, x) * Word::power(kH, y)), closed_eh(x, y));
    check(1, "h^" + std::to_string(x) + " f^" + std::to_string(y),
          pbw_normalize(Word::power(kH, x) * Word::power(kF, y)), closed_hf(x, y));
    check(2, "e^" + std::to_string(x) + " f^" + std::to_string(y),
          pbw_normalize(Word::power(kE, x) * Word::power(kF, y)), closed_ef(x, y));
  });
  return collect_report("sl2-closed-forms", failures);
}

VerifyReport verify_sl2_product(long max_exp) {
  if (max_exp < 0) throw std::invalid_argument("verify_sl2_product needs max_exp >= 0");
  struct Case {
    long i, j, k, l, m, n;
  };
  std::vector<Case> grid;
  for (long i = 0; i <= max_exp; ++i)
    for (long j = 0; j <= max_exp; ++j)
      for (long k = 0; k <= max_exp; ++k)
        for (long l = 0; l <= max_exp; ++l)
          for (long m = 0; m <= max_exp; ++m)
            for (long n = 0; n <= max_exp; ++n) grid.push_back({i, j, k, l, m, n});

  std::vector<std::string> failures(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const Case& c = grid[idx];
    PBWElement oracle = sl2_multiply(sl2_monomial(c.i, c.j, c.k), sl2_monomial(c.l, c.m, c.n));
    PBWElement closed = closed_product(c.i, c.j, c.k, c.l, c.m, c.n);
    if (!(oracle == closed))
      failures[idx] = mono_string({c.i, c.j, c.k}) + " * " + mono_string({c.l, c.m, c.n}) +
                      ": rewriting gives " + to_string(oracle) + ", closed form gives " +
                      to_string(closed);
  });
  return collect_report("sl2-closed-product", failures);
}

}  // namespace uae
