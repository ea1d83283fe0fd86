#include "uae/downup.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "uae/groebner.hpp"
#include "uae/linalg.hpp"
#include "uae/parallel.hpp"

namespace uae {
namespace {

constexpr unsigned kA = 0;
constexpr unsigned kB = 1;

const GensPtr& downup_gens() {
  static const GensPtr gens = make_gens({"a", "b"});
  return gens;
}

void check_mode(const DownUpElement& x, const DownUpElement& y) {
  if (x.mode != y.mode) throw std::invalid_argument("mixed down-up modes");
}

std::string mono_string(const std::array<long, 3>& e) {
  std::ostringstream out;
  bool any = false;
  auto piece = [&](const std::string& base, long exp) {
    if (exp == 0) return;
    if (any) out << ' ';
    out << base;
    if (exp > 1) out << '^' << exp;
    any = true;
  };
  piece("a", e[0]);
  piece("(ba)", e[1]);
  piece("b", e[2]);
  if (!any) out << '1';
  return out.str();
}

}  // namespace

DownUpParams downup_symsum() { return {rat(-1), rat(-1), rat(1)}; }
DownUpParams downup_lie() { return {rat(2), rat(-1), rat(-2)}; }
DownUpParams downup_a010() { return {rat(0), rat(1), rat(0)}; }

void add_term(DownUpElement& x, long i, long j, long k, const Rational& c) {
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

DownUpElement operator+(const DownUpElement& x, const DownUpElement& y) {
  check_mode(x, y);
  DownUpElement out = x;
  for (const auto& [e, c] : y.terms) add_term(out, e[0], e[1], e[2], c);
  return out;
}

DownUpElement operator-(const DownUpElement& x, const DownUpElement& y) {
  check_mode(x, y);
  DownUpElement out = x;
  for (const auto& [e, c] : y.terms) add_term(out, e[0], e[1], e[2], -c);
  return out;
}

DownUpElement scale(const Rational& c, const DownUpElement& x) {
  DownUpElement out;
  out.mode = x.mode;
  if (c == 0) return out;
  for (const auto& [e, coeff] : x.terms) out.terms.emplace(e, c * coeff);
  return out;
}

DownUpElement zeta(const DownUpElement& x) {
  DownUpElement out;
  out.mode = x.mode;
  for (const auto& [e, c] : x.terms) out.terms[{e[2], e[1], e[0]}] = c;
  return out;
}

DownUpAlgebra::DownUpAlgebra(DownUpParams params, DownUpMode mode)
    : params_(std::move(params)), mode_(mode), gens_(downup_gens()) {
  auto term = [&](std::vector<unsigned> letters, const Rational& c) {
    return FreePoly::term(gens_, Word::from_letters(letters), c);
  };
  if (mode_ == DownUpMode::quotient) {
    rules_.push_back(term({kA, kA, kA}, rat(1)));
    rules_.push_back(term({kB, kB, kB}, rat(1)));
  }
  FreePoly down = term({kB, kB, kA}, rat(1));
  down -= term({kB, kA, kB}, params_.alpha);
  down -= term({kA, kB, kB}, params_.beta);
  down -= term({kB}, params_.gamma);
  rules_.push_back(down);
  FreePoly up = term({kB, kA, kA}, rat(1));
  up -= term({kA, kB, kA}, params_.alpha);
  up -= term({kA, kA, kB}, params_.beta);
  up -= term({kA}, params_.gamma);
  rules_.push_back(up);
}

Word DownUpAlgebra::basis_word(long i, long j, long k) const {
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent");
  std::vector<unsigned> letters;
  letters.reserve(static_cast<std::size_t>(i + 2 * j + k));
  for (long t = 0; t < i; ++t) letters.push_back(kA);
  for (long t = 0; t < j; ++t) {
    letters.push_back(kB);
    letters.push_back(kA);
  }
  for (long t = 0; t < k; ++t) letters.push_back(kB);
  return Word::from_letters(letters);
}

DownUpElement DownUpAlgebra::monomial(long i, long j, long k, Rational c) const {
  return reduce(FreePoly::term(gens_, basis_word(i, j, k), std::move(c)));
}

FreePoly DownUpAlgebra::encode(const DownUpElement& x) const {
  if (x.mode != mode_) throw std::invalid_argument("element mode does not match the algebra");
  FreePoly f(gens_);
  for (const auto& [e, c] : x.terms) f += FreePoly::term(gens_, basis_word(e[0], e[1], e[2]), c);
  return f;
}

DownUpElement DownUpAlgebra::decode(const FreePoly& f) const {
  DownUpElement out;
  out.mode = mode_;
  for (const auto& [w, c] : f.terms()) {
    std::size_t pos = 0;
    const std::size_t n = w.degree();
    long i = 0, j = 0, k = 0;
    while (pos < n && w.letter(pos) == kA) {
      ++i;
      ++pos;
    }
    while (pos + 1 < n && w.letter(pos) == kB && w.letter(pos + 1) == kA) {
      ++j;
      pos += 2;
    }
    while (pos < n && w.letter(pos) == kB) {
      ++k;
      ++pos;
    }
    if (pos != n) throw std::logic_error("word is not of the form a^i (ba)^j b^k");
    out.terms[{i, j, k}] = c;
  }
  return out;
}

DownUpElement DownUpAlgebra::rewrite_word(const Word& w) const {
  return reduce(FreePoly::term(gens_, w, rat(1)));
}

DownUpElement DownUpAlgebra::reduce(const FreePoly& f) const {
  return decode(normal_form(f, rules_));
}

DownUpElement DownUpAlgebra::multiply(const DownUpElement& x, const DownUpElement& y) const {
  return reduce(encode(x) * encode(y));
}

bool DownUpAlgebra::commutes(const DownUpElement& x, const DownUpElement& y) const {
  return multiply(x, y) == multiply(y, x);
}

DownUpElement L_poly(long m, long j, long l, long r) {
  if (m < 0 || j < 0 || l < 0 || r < 0) throw std::invalid_argument("L_poly needs nonnegative arguments");
  DownUpElement out;
  for (long t = 0; t <= j; ++t) {
    Rational c(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(t)));
    if ((j + t) % 2 != 0) c = -c;
    add_term(out, l, j + m - t, r, c);
  }
  return out;
}

DownUpElement symsum_product_closed(long i, long j, long k, long l, long m, long n) {
  auto small = [](long x) { return 0 <= x && x <= 2; };
  if (!small(i) || !small(k) || !small(l) || !small(n) || j < 0 || m < 0)
    throw std::invalid_argument("symsum_product_closed: exponent out of range");
  DownUpElement out;
  if ((k == 0 && l == 0) || (k == 1 && l == 1)) {
    add_term(out, i, j + k * l + m, n, rat(1));
    return out;
  }
  if (k == 0 && l == 1) {
    if (i == 0 && n != 2 && j != 0) out = out - L_poly(j - 1, m, 2, n + 1);
    if (i != 2) out = out + L_poly(m, j, i + 1, n);
    return out;
  }
  if (k == 1 && l == 0) {
    if (n == 0 && i != 2 && m != 0) out = out - L_poly(m - 1, j, i + 1, 2);
    if (n != 2) out = out + L_poly(j, m, i, n + 1);
    return out;
  }
  if (k == 2 && l == 1) {
    if (n == 0 && i != 2) out = out - L_poly(m, j, i + 1, 2);
    if (n != 2) out = out + L_poly(j, m + 1, i, n + 1);
    return out;
  }
  if (k == 1 && l == 2) {
    if (i == 0 && n != 2) out = out - L_poly(j, m, 2, n + 1);
    if (i != 2) out = out + L_poly(m, j + 1, i + 1, n);
    return out;
  }
  if (k == 2 && l == 0) {
    if (m == 0 && n == 0) add_term(out, i, j, 2, rat(1));
    return out;
  }
  if (k == 0 && l == 2) {
    if (i == 0 && j == 0) add_term(out, 2, m, n, rat(1));
    return out;
  }
  // k == 2 and l == 2.
  for (long s = 0; s <= j + 1; ++s) {
    Rational c(binomial(static_cast<unsigned long>(j + 1), static_cast<unsigned long>(s)));
    if ((s + j) % 2 != 0) c = -c;
    if (n == 0 && i == 0 && m != 0) out = out - scale(c, L_poly(m - 1, j - s + 1, 2, 2));
    if (n != 2 && i != 2) out = out + scale(c, L_poly(j - s + 1, m, i + 1, n + 1));
  }
  add_term(out, i, j + m + 1, n, rat(1));
  add_term(out, i, j + m + 2, n, rat(-1));
  if (i == 0 && m == 0 && n == 0) add_term(out, 2, j, 2, rat(1));
  return out;
}

DownUpElement center_element(long m) {
  if (m < 2) throw std::invalid_argument("center_element needs m >= 2");
  DownUpElement z;
  for (long j = 1; j <= m - 2; ++j) {
    Rational c(binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(j - 1)));
    if (j % 2 == 0) c = -c;
    add_term(z, 0, j, 0, c);
    add_term(z, 1, j - 1, 1, -c);
  }
  const bool even = m % 2 == 0;
  add_term(z, 0, m - 1, 0, even ? rat(m + 1) : rat(3 - m));
  add_term(z, 0, m, 0, even ? rat(-3) : rat(-1));
  add_term(z, 1, m - 1, 1, even ? rat(0) : rat(-2));
  add_term(z, 1, m - 2, 1, even ? rat(-m + 2) : rat(m));
  add_term(z, 2, m - 2, 2, rat(3));
  return z;
}

DownUpElement center_displayed_solution(long m) {
  if (m < 2) throw std::invalid_argument("center_displayed_solution needs m >= 2");
  const bool even = m % 2 == 0;
  auto s0 = [&](long j) -> Rational {
    if (j < 1 || j > m) return rat(0);
    if (j <= m - 2) {
      Rational c(binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(j - 1)));
      if (j % 2 == 0) c = -c;
      return c / 3;
    }
    if (j == m - 1) return even ? rat(m + 1, 3) : rat(3 - m, 3);
    return even ? rat(-1) : rat(-1, 3);  // j == m
  };
  DownUpElement z;
  for (long j = 1; j <= m; ++j) add_term(z, 0, j, 0, s0(j));
  for (long j = 0; j <= m - 3; ++j) add_term(z, 1, j, 1, -s0(j + 1));
  add_term(z, 1, m - 2, 1, rat(1) - s0(m - 1));
  if (!even) add_term(z, 1, m - 1, 1, rat(-2, 3));
  add_term(z, 2, m - 2, 2, rat(1));
  return z;
}

std::vector<DownUpElement> center_slice_bruteforce(long max_j) {
  if (max_j < 0) throw std::invalid_argument("center_slice_bruteforce needs max_j >= 0");
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  std::vector<std::array<long, 2>> cols;
  for (long i = 0; i <= 2; ++i)
    for (long j = 0; j <= max_j; ++j) cols.push_back({i, j});

  const FreePoly a = FreePoly::generator(alg.gens(), kA);
  std::vector<FreePoly> commutators;
  std::map<Word, std::size_t> word_index;
  for (const auto& col : cols) {
    FreePoly mu = FreePoly::term(alg.gens(), alg.basis_word(col[0], col[1], col[0]), rat(1));
    FreePoly d = normal_form(mu * a - a * mu, alg.rules());
    for (const auto& [w, c] : d.terms())
      if (!word_index.count(w)) {
        std::size_t next = word_index.size();
        word_index.emplace(w, next);
      }
    commutators.push_back(std::move(d));
  }

  QMatrix system(word_index.size(), cols.size());
  for (std::size_t c = 0; c < commutators.size(); ++c)
    for (const auto& [w, coeff] : commutators[c].terms()) system.at(word_index.at(w), c) = coeff;

  std::vector<DownUpElement> basis;
  for (const QVec& v : kernel_basis(system)) {
    DownUpElement z;
    for (std::size_t c = 0; c < cols.size(); ++c) add_term(z, cols[c][0], cols[c][1], cols[c][0], v[c]);
    basis.push_back(std::move(z));
  }
  return basis;
}

DownUpElement a010_product_closed(long i, long j, long k, long l, long m, long n) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || m < 0 || n < 0)
    throw std::invalid_argument("a010_product_closed needs nonnegative exponents");
  DownUpElement out;
  out.mode = DownUpMode::full;
  const bool k_odd = k % 2 != 0;
  const bool l_odd = l % 2 != 0;
  if (k_odd && l_odd) {
    add_term(out, i + l - 1, j + m + 1, k - 1 + n, rat(1));
  } else if (!k_odd && !l_odd) {
    add_term(out, i + l, j + m, k + n, rat(1));
  } else if (!k_odd) {  // k even, l odd
    if (j > m)
      add_term(out, 2 * m + i + l + 1, j - m - 1, 2 * m + k + n + 1, rat(1));
    else
      add_term(out, 2 * j + i + l, m - j, 2 * j + k + n, rat(1));
  } else {  // k odd, l even
    if (j > m - 1)
      add_term(out, 2 * m + i + l, j - m, 2 * m + k + n, rat(1));
    else
      add_term(out, 2 * j + i + l + 1, m - j - 1, 2 * j + k + n + 1, rat(1));
  }
  return out;
}

DownUpElement b2_expand(const DownUpAlgebra& alg, long i, long j, long k, const Rational& c1,
                        const Rational& c2) {
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("b2_expand needs nonnegative exponents");
  const GensPtr& g = alg.gens();
  FreePoly mid = FreePoly::term(g, Word::from_letters({kB, kA}), rat(1));
  mid += FreePoly::term(g, Word::from_letters({kA, kB}), c1);
  mid += FreePoly::constant(g, c2);
  FreePoly acc = FreePoly::term(g, Word::power(kA, static_cast<std::size_t>(i)), rat(1));
  for (long t = 0; t < j; ++t) acc = acc * mid;
  acc = acc * FreePoly::term(g, Word::power(kB, static_cast<std::size_t>(k)), rat(1));
  return alg.reduce(acc);
}

std::string to_string(const DownUpElement& x) {
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

OJson to_json(const DownUpElement& x) {
  OJson arr = OJson::array();
  for (const auto& [e, c] : x.terms) arr.push_back({e[0], e[1], e[2], to_string(c)});
  return arr;
}

namespace {

std::string case_label(long i, long j, long k, long l, long m, long n) {
  return mono_string({i, j, k}) + " * " + mono_string({l, m, n});
}

std::string mismatch_line(const std::string& label, const DownUpElement& oracle,
                          const DownUpElement& closed) {
  return label + ": rewriting gives " + to_string(oracle) + ", closed form gives " + to_string(closed);
}

}  // namespace

VerifyReport verify_symsum_closed(long max_j) {
  if (max_j < 0) throw std::invalid_argument("verify_symsum_closed needs max_j >= 0");
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  struct Case {
    long i, j, k, l, m, n;
  };
  std::vector<Case> grid;
  for (long i = 0; i <= 2; ++i)
    for (long j = 0; j <= max_j; ++j)
      for (long k = 0; k <= 2; ++k)
        for (long l = 0; l <= 2; ++l)
          for (long m = 0; m <= max_j; ++m)
            for (long n = 0; n <= 2; ++n) grid.push_back({i, j, k, l, m, n});

  std::vector<std::string> failures(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const Case& c = grid[idx];
    DownUpElement oracle = alg.multiply(alg.monomial(c.i, c.j, c.k), alg.monomial(c.l, c.m, c.n));
    DownUpElement closed = symsum_product_closed(c.i, c.j, c.k, c.l, c.m, c.n);
    if (!(oracle == closed))
      failures[idx] = mismatch_line(case_label(c.i, c.j, c.k, c.l, c.m, c.n), oracle, closed);
  });
  return collect_report("symsum-closed-product", failures);
}

VerifyReport verify_center(long max_m) {
  if (max_m < 2) throw std::invalid_argument("verify_center needs max_m >= 2");
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) { failures.push_back(ok ? "" : what); };

  const DownUpElement a = alg.monomial(1, 0, 0);
  const DownUpElement b = alg.monomial(0, 0, 1);
  std::vector<DownUpElement> zs;
  for (long m = 2; m <= max_m; ++m) {
    DownUpElement z = center_element(m);
    zs.push_back(z);
    expect(alg.commutes(z, a), "Z(" + std::to_string(m) + ") does not commute with a");
    expect(alg.commutes(z, b), "Z(" + std::to_string(m) + ") does not commute with b");
    expect(scale(rat(3), center_displayed_solution(m)) == z,
           "Z(" + std::to_string(m) + ") differs from 3x the displayed solution");

    std::vector<DownUpElement> slice = center_slice_bruteforce(m);
    expect(slice.size() == static_cast<std::size_t>(m),
           "slice at max_j=" + std::to_string(m) + " has dimension " + std::to_string(slice.size()) +
               ", expected " + std::to_string(m));

    // Coordinates over the slice monomials a^i (ba)^j b^i, i <= 2, j <= m.
    auto coords = [&](const DownUpElement& x) -> std::optional<QVec> {
      QVec v(static_cast<std::size_t>(3 * (m + 1)), rat(0));
      for (const auto& [e, c] : x.terms) {
        if (e[0] != e[2] || e[0] > 2 || e[1] > m) return std::nullopt;
        v[static_cast<std::size_t>(e[0] * (m + 1) + e[1])] = c;
      }
      return v;
    };
    std::vector<QVec> rows;
    bool shaped = true;
    for (const DownUpElement& s : slice) {
      auto v = coords(s);
      if (!v) {
        shaped = false;
        break;
      }
      rows.push_back(*v);
    }
    auto zv = coords(z);
    expect(shaped && zv && in_row_space(QMatrix::from_rows(rows), *zv),
           "Z(" + std::to_string(m) + ") is not in the centralizer slice span");
  }
  for (std::size_t p = 0; p < zs.size(); ++p)
    for (std::size_t q = p + 1; q < zs.size(); ++q)
      expect(alg.commutes(zs[p], zs[q]), "Z(" + std::to_string(p + 2) + ") and Z(" +
                                             std::to_string(q + 2) + ") do not commute");
  expect(center_slice_bruteforce(1).size() == 1, "slice at max_j=1 should contain only scalars");
  return collect_report("center-elements", failures);
}

VerifyReport verify_a010_closed(long max_exp) {
  if (max_exp < 0) throw std::invalid_argument("verify_a010_closed needs max_exp >= 0");
  DownUpAlgebra alg(downup_a010(), DownUpMode::full);
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
    DownUpElement oracle = alg.multiply(alg.monomial(c.i, c.j, c.k), alg.monomial(c.l, c.m, c.n));
    DownUpElement closed = a010_product_closed(c.i, c.j, c.k, c.l, c.m, c.n);
    if (!(oracle == closed))
      failures[idx] = mismatch_line(case_label(c.i, c.j, c.k, c.l, c.m, c.n), oracle, closed);
  });
  return collect_report("a010-closed-product", failures);
}

VerifyReport verify_a010_identities(long max_exp) {
  if (max_exp < 0) throw std::invalid_argument("verify_a010_identities needs max_exp >= 0");
  DownUpAlgebra alg(downup_a010(), DownUpMode::full);
  struct Case {
    long i, j;
  };
  std::vector<Case> grid;
  for (long i = 0; i <= max_exp; ++i)
    for (long j = 0; j <= max_exp; ++j) grid.push_back({i, j});

  std::vector<std::string> failures(4 * grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const long i = grid[idx].i;
    const long j = grid[idx].j;
    const bool i_odd = i % 2 != 0;
    const bool j_odd = j % 2 != 0;
    auto check = [&](std::size_t slot, const std::string& what, const DownUpElement& lhs,
                     const DownUpElement& rhs) {
      if (!(lhs == rhs))
        failures[4 * idx + slot] =
            what + ": rewriting gives " + to_string(lhs) + ", expected " + to_string(rhs);
    };

    // b^i a^j: straightens unless both exponents are odd.
    check(0, "b^" + std::to_string(i) + " a^" + std::to_string(j),
          alg.multiply(alg.monomial(0, 0, i), alg.monomial(j, 0, 0)),
          (i_odd && j_odd) ? alg.monomial(j - 1, 1, i - 1) : alg.monomial(j, 0, i));

    // (ba)^j a^i: a single (ba) survives only for odd i.
    check(1, "(ba)^" + std::to_string(j) + " a^" + std::to_string(i),
          alg.multiply(alg.monomial(0, j, 0), alg.monomial(i, 0, 0)),
          (i_odd && j != 0) ? alg.monomial(i + 1, j - 1, 1) : alg.monomial(i, j, 0));

    // b^i (ba)^j: mirror image of the previous identity.
    check(2, "b^" + std::to_string(i) + " (ba)^" + std::to_string(j),
          alg.multiply(alg.monomial(0, 0, i), alg.monomial(0, j, 0)),
          (i_odd && j != 0) ? alg.monomial(1, j - 1, i + 1) : alg.monomial(0, j, i));

    // (ba)^i a (ba)^j: collapses by comparing i against j.
    check(3, "(ba)^" + std::to_string(i) + " a (ba)^" + std::to_string(j),
          alg.multiply(alg.monomial(0, i, 0), alg.multiply(alg.monomial(1, 0, 0), alg.monomial(0, j, 0))),
          (i > j) ? alg.monomial(2 * j + 2, i - j - 1, 2 * j + 1)
                  : alg.monomial(2 * i + 1, j - i, 2 * i));
  });
  return collect_report("a010-identities", failures);
}

}  // namespace uae
