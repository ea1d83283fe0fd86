#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "uae/downup.hpp"
#include "uae/linalg.hpp"

using namespace uae;

namespace {

DownUpElement mono(const DownUpAlgebra& alg, long i, long j, long k, long num = 1,
                   long den = 1) {
  return alg.monomial(i, j, k, rat(num, den));
}

DownUpElement random_element(std::mt19937& rng, const DownUpAlgebra& alg, long max_j,
                             std::size_t terms) {
  std::uniform_int_distribution<long> small(0, 2), jdist(0, max_j), coeff(-3, 3);
  DownUpElement x{{}, alg.mode()};
  for (std::size_t t = 0; t < terms; ++t) {
    DownUpElement m = alg.monomial(small(rng), jdist(rng), small(rng), rat(coeff(rng)));
    x = x + m;
  }
  return x;
}

}  // namespace

TEST_CASE("defining rules: two straightening rules, plus caps in quotient mode") {
  DownUpAlgebra full(downup_symsum(), DownUpMode::full);
  CHECK(full.rules().size() == 2);
  DownUpAlgebra quot(downup_symsum(), DownUpMode::quotient);
  CHECK(quot.rules().size() == 4);
  CHECK(quot.monomial(3, 0, 0).is_zero());
  CHECK(quot.monomial(0, 0, 5).is_zero());
  CHECK_FALSE(full.mode() == DownUpMode::quotient);

  CHECK(downup_symsum() == DownUpParams{rat(-1), rat(-1), rat(1)});
  CHECK(downup_lie() == DownUpParams{rat(2), rat(-1), rat(-2)});
  CHECK(downup_a010() == DownUpParams{rat(0), rat(1), rat(0)});
}

TEST_CASE("rewriting the defining words reproduces the right-hand sides") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  // b^2 a -> -bab - ab^2 + b, and bab = (ba) b in the basis.
  DownUpElement lhs = alg.rewrite_word(Word::from_letters({1, 1, 0}));
  DownUpElement expected = mono(alg, 0, 0, 1) + mono(alg, 0, 1, 1, -1) +
                           mono(alg, 1, 0, 2, -1);
  CHECK(lhs == expected);

  DownUpAlgebra a010(downup_a010(), DownUpMode::full);
  CHECK(a010.rewrite_word(Word::from_letters({1, 1, 0})) == mono(a010, 1, 0, 2));
  // b^3 a^2 straightens to a^2 b^3 when alpha = gamma = 0, beta = 1.
  DownUpElement m = a010.multiply(mono(a010, 0, 0, 3), mono(a010, 2, 0, 0));
  CHECK(m == mono(a010, 2, 0, 3));
}

TEST_CASE("encode and decode are mutually inverse on the monomial basis") {
  DownUpAlgebra alg(downup_lie(), DownUpMode::full);
  for (long i : {0L, 1L, 2L})
    for (long j : {0L, 1L, 3L})
      for (long k : {0L, 2L}) {
        DownUpElement x = mono(alg, i, j, k, 5, 3);
        CHECK(alg.decode(alg.encode(x)) == x);
      }
  // Words outside the basis shape are rejected by decode.
  FreePoly bad = FreePoly::term(alg.gens(), Word::from_letters({1, 1, 0}), rat(1));
  CHECK_THROWS_AS(alg.decode(bad), std::logic_error);
}

TEST_CASE("arithmetic refuses to mix the two modes") {
  DownUpAlgebra full(downup_symsum(), DownUpMode::full);
  DownUpAlgebra quot(downup_symsum(), DownUpMode::quotient);
  DownUpElement x = mono(full, 0, 1, 0);
  DownUpElement y = mono(quot, 0, 1, 0);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(full.multiply(x, y), std::invalid_argument);
}

TEST_CASE("multiplication is associative in three parameter regimes") {
  std::mt19937 rng(90210);
  DownUpAlgebra symsum(downup_symsum(), DownUpMode::quotient);
  DownUpAlgebra lie(downup_lie(), DownUpMode::full);
  DownUpAlgebra a010(downup_a010(), DownUpMode::full);
  for (const DownUpAlgebra* alg : {&symsum, &lie, &a010}) {
    for (int trial = 0; trial < 12; ++trial) {
      DownUpElement x = random_element(rng, *alg, 2, 2);
      DownUpElement y = random_element(rng, *alg, 2, 2);
      DownUpElement z = random_element(rng, *alg, 1, 2);
      CHECK(alg->multiply(alg->multiply(x, y), z) ==
            alg->multiply(x, alg->multiply(y, z)));
    }
  }
}

TEST_CASE("confluence: random rewriting strategies agree with the oracle") {
  // Apply the rules by hand at randomly chosen occurrences of random words of
  // length up to 10; the endpoint must match reduce().
  std::mt19937 rng(1331);
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  const auto& rules = alg.rules();
  std::uniform_int_distribution<std::size_t> len(0, 10);
  std::uniform_int_distribution<unsigned> letter(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<unsigned> letters(len(rng));
    for (unsigned& l : letters) l = letter(rng);
    FreePoly f = FreePoly::term(alg.gens(), Word::from_letters(letters), rat(1));
    FreePoly g = f;
    while (true) {
      struct Site { Word w; std::size_t rule; std::size_t offset; };
      std::vector<Site> sites;
      for (const auto& [w, c] : g.terms()) {
        (void)c;
        for (std::size_t r = 0; r < rules.size(); ++r) {
          Word lm = rules[r].leading_monomial();
          if (lm.degree() > w.degree()) continue;
          for (std::size_t off = 0; off + lm.degree() <= w.degree(); ++off)
            if (w.subword(off, lm.degree()) == lm) sites.push_back({w, r, off});
        }
      }
      if (sites.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      const Site& s = sites[pick(rng)];
      Rational c = g.coeff(s.w);
      if (c == 0) continue;
      Word left = s.w.subword(0, s.offset);
      Word lm = rules[s.rule].leading_monomial();
      Word right = s.w.subword(s.offset + lm.degree(), s.w.degree() - s.offset - lm.degree());
      g -= FreePoly::term(alg.gens(), left, c) * rules[s.rule] *
           FreePoly::term(alg.gens(), right, rat(1));
    }
    CHECK(alg.decode(g) == alg.reduce(f));
  }
}

TEST_CASE("zeta is an involutive anti-automorphism in both modes") {
  std::mt19937 rng(24601);
  for (DownUpMode mode : {DownUpMode::full, DownUpMode::quotient}) {
    DownUpAlgebra alg(downup_symsum(), mode);
    for (int trial = 0; trial < 15; ++trial) {
      DownUpElement x = random_element(rng, alg, 2, 2);
      DownUpElement y = random_element(rng, alg, 2, 2);
      CHECK(zeta(zeta(x)) == x);
      CHECK(zeta(alg.multiply(x, y)) == alg.multiply(zeta(y), zeta(x)));
    }
  }
}

TEST_CASE("products respect the letter-count weight i - k") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<long> small(0, 2), jdist(0, 3);
  for (const DownUpParams& p : {downup_symsum(), downup_lie(), downup_a010()}) {
    DownUpAlgebra alg(p, DownUpMode::full);
    for (int trial = 0; trial < 20; ++trial) {
      long i1 = small(rng), j1 = jdist(rng), k1 = small(rng);
      long i2 = small(rng), j2 = jdist(rng), k2 = small(rng);
      long want = (i1 - k1) + (i2 - k2);
      DownUpElement prod = alg.multiply(alg.monomial(i1, j1, k1), alg.monomial(i2, j2, k2));
      for (const auto& [key, c] : prod.terms) {
        (void)c;
        CHECK(key[0] - key[2] == want);
      }
    }
  }
}

TEST_CASE("the annihilator identity a^2 (ba)^l a = 0 holds in the quotient") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  for (long l = 0; l <= 6; ++l) {
    CAPTURE(l);
    CHECK(alg.multiply(mono(alg, 2, l, 0), mono(alg, 1, 0, 0)).is_zero());
    CHECK(alg.multiply(mono(alg, 0, 0, 1), mono(alg, 0, l, 2)).is_zero());
  }
}

TEST_CASE("the alternating binomial string and its contraction identities") {
  CHECK(L_poly(0, 0, 2, 1) == mono(DownUpAlgebra(downup_symsum(), DownUpMode::quotient), 2, 0, 1));
  // One-step contractions shift either index up by one.
  for (long j = 1; j <= 3; ++j)
    for (long m = 0; m <= 3; ++m) {
      CAPTURE(j);
      CAPTURE(m);
      DownUpElement lhs = L_poly(j - 1, m, 2, 1) - L_poly(j - 1, m + 1, 2, 1);
      CHECK(lhs == L_poly(j, m, 2, 1));
      DownUpElement rhs = L_poly(m, j - 1, 2, 1) - L_poly(m + 1, j - 1, 2, 1);
      CHECK(rhs == L_poly(m, j, 2, 1));
    }
}

TEST_CASE("closed product formula: spot values and the degenerate cases") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  // (2,0): a^i (ba)^j b^2 * (ba)^m b^n is zero unless m = n = 0.
  CHECK(symsum_product_closed(1, 1, 2, 0, 1, 0).is_zero());
  CHECK(symsum_product_closed(1, 1, 2, 0, 0, 1).is_zero());
  CHECK(symsum_product_closed(1, 1, 2, 0, 0, 0) == mono(alg, 1, 1, 2));
  // (0,0): exponents add in the middle.
  CHECK(symsum_product_closed(1, 2, 0, 0, 3, 2) == mono(alg, 1, 5, 2));
  // b * a = (ba) exactly.
  CHECK(symsum_product_closed(0, 0, 1, 1, 0, 0) == mono(alg, 0, 1, 0));
}

TEST_CASE("closed product matches the rewriting oracle on a small sweep") {
  VerifyReport r = verify_symsum_closed(2);
  CHECK(r.ok());
  CHECK(r.cases == 729);
}

TEST_CASE("central elements: frozen Z(2), displayed solution, slice dimensions") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  DownUpElement z2 = center_element(2);
  DownUpElement expected = mono(alg, 0, 1, 0, 3) + mono(alg, 0, 2, 0, -3) +
                           mono(alg, 2, 0, 2, 3);
  CHECK(z2 == expected);
  CHECK(to_string(z2) == "3 (ba) - 3 (ba)^2 + 3 a^2 b^2");
  CHECK_THROWS_AS(center_element(1), std::invalid_argument);

  for (long m = 2; m <= 4; ++m) {
    CAPTURE(m);
    DownUpElement z = center_element(m);
    CHECK(alg.commutes(z, mono(alg, 1, 0, 0)));
    CHECK(alg.commutes(z, mono(alg, 0, 0, 1)));
    CHECK(scale(rat(3), center_displayed_solution(m)) == z);
  }

  auto slice1 = center_slice_bruteforce(1);
  REQUIRE(slice1.size() == 1);
  CHECK(slice1[0] == mono(alg, 0, 0, 0));
  CHECK(center_slice_bruteforce(3).size() == 3);
  CHECK(verify_center(3).ok());
}

TEST_CASE("parity-dispatch closed product for the (0,1,0) parameters") {
  DownUpAlgebra alg(downup_a010(), DownUpMode::full);
  // Both even: everything adds componentwise.
  CHECK(a010_product_closed(2, 1, 0, 0, 2, 2) == mono(alg, 2, 3, 2));
  // b^i a^j with i, j odd merges into a (ba) pair.
  CHECK(a010_product_closed(0, 0, 1, 1, 0, 0) == mono(alg, 0, 1, 0));
  CHECK(a010_product_closed(0, 0, 1, 3, 0, 0) == mono(alg, 2, 1, 0));
  // The four auxiliary identities, frozen single cases.
  CHECK(alg.multiply(mono(alg, 0, 0, 1), mono(alg, 1, 0, 0)) == mono(alg, 0, 1, 0));
  CHECK(alg.multiply(mono(alg, 0, 2, 0), mono(alg, 1, 0, 0)) == mono(alg, 2, 1, 1));
  CHECK(alg.multiply(mono(alg, 0, 2, 0), mono(alg, 1, 1, 0)) == mono(alg, 4, 0, 3));
  VerifyReport r = verify_a010_closed(2);
  CHECK(r.ok());
  CHECK(r.cases == 729);
  CHECK(verify_a010_identities(3).ok());
}

TEST_CASE("quadratic substitution expands in the monomial basis") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  // With c1 = c2 = 0 the substitution is the identity.
  for (long j = 0; j <= 3; ++j)
    CHECK(b2_expand(alg, 1, j, 1, rat(0), rat(0)) == mono(alg, 1, j, 1));
  // Frozen expansion of (ba - ab)^2.
  DownUpElement got = b2_expand(alg, 0, 2, 0, rat(-1), rat(0));
  DownUpElement expected = mono(alg, 0, 2, 0) + mono(alg, 1, 0, 1, -2) +
                           mono(alg, 1, 1, 1, 3) + mono(alg, 2, 0, 2, 2);
  CHECK(got == expected);

  // The substituted monomials with small exponents stay linearly independent
  // in full mode, so they form an alternative basis slice.
  DownUpAlgebra full(downup_symsum(), DownUpMode::full);
  std::vector<DownUpElement> images;
  std::map<std::array<long, 3>, std::size_t> columns;
  for (long i = 0; i <= 1; ++i)
    for (long j = 0; j <= 2; ++j)
      for (long k = 0; k <= 1; ++k) {
        images.push_back(b2_expand(full, i, j, k, rat(-1), rat(0)));
        for (const auto& [key, c] : images.back().terms) {
          (void)c;
          columns.emplace(key, columns.size());
        }
      }
  QMatrix m(images.size(), columns.size());
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto& [key, c] : images[r].terms) m.at(r, columns.at(key)) = c;
  CHECK(rref_in_place(m).size() == images.size());
}

TEST_CASE("element printing and json forms") {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  CHECK(to_string(mono(alg, 0, 0, 0)) == "1");
  CHECK(to_string(mono(alg, 2, 1, 0, -1, 2)) == "-1/2 a^2 (ba)");
  CHECK(to_string(DownUpElement{{}, DownUpMode::full}) == "0");
  OJson j = to_json(center_element(2));
  CHECK(j.size() == 3);
  CHECK(j[0] == OJson::array({0, 1, 0, "3"}));
}
