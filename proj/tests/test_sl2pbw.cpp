#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "uae/groebner.hpp"
#include "uae/sl2pbw.hpp"

using namespace uae;

namespace {

PBWElement mono(long i, long j, long k, long num = 1, long den = 1) {
  return sl2_monomial(i, j, k, rat(num, den));
}

PBWElement random_element(std::mt19937& rng, std::size_t terms, long max_exp) {
  std::uniform_int_distribution<long> e(0, max_exp), coeff(-3, 3);
  PBWElement x;
  for (std::size_t t = 0; t < terms; ++t)
    x = x + mono(e(rng), e(rng), e(rng), coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("generators and straightening rules") {
  CHECK(sl2_gens()->size() == 3);
  CHECK(sl2_gens()->name(0) == "f");
  CHECK(sl2_gens()->name(1) == "h");
  CHECK(sl2_gens()->name(2) == "e");
  REQUIRE(sl2_rules().size() == 3);
  // The rules close under composition: they are their own completion.
  GBasis g = complete(sl2_rules(), sl2_gens());
  CHECK(g.status == GBStatus::complete);
  CHECK(g.elements.size() == 3);
  for (const auto& rec : all_compositions(sl2_rules()))
    CHECK(normal_form(rec.value, sl2_rules()).is_zero());
}

TEST_CASE("normalizing the three defining words") {
  // ef = fe + h.
  CHECK(pbw_normalize(Word::from_letters({2, 0})) == mono(1, 0, 1) + mono(0, 1, 0));
  // eh = he - 2e.
  CHECK(pbw_normalize(Word::from_letters({2, 1})) == mono(0, 1, 1) + mono(0, 0, 1, -2));
  // hf = fh - 2f.
  CHECK(pbw_normalize(Word::from_letters({1, 0})) == mono(1, 1, 0) + mono(1, 0, 0, -2));
  // Already-normal words pass through.
  CHECK(pbw_normalize(sl2_word(2, 1, 3)) == mono(2, 1, 3));
  CHECK(pbw_normalize(Word()) == mono(0, 0, 0));
}

TEST_CASE("pbw elements round-trip through the free algebra") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    PBWElement x = random_element(rng, 3, 3);
    CHECK(pbw_normalize(sl2_encode(x)) == x);
  }
}

TEST_CASE("multiplication is associative and the Casimir element is central") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    PBWElement x = random_element(rng, 2, 2);
    PBWElement y = random_element(rng, 2, 2);
    PBWElement z = random_element(rng, 2, 2);
    CHECK(sl2_multiply(sl2_multiply(x, y), z) == sl2_multiply(x, sl2_multiply(y, z)));
  }
  // Omega = fe + h^2/4 + h/2 commutes with every generator.
  PBWElement omega = mono(1, 0, 1) + mono(0, 2, 0, 1, 4) + mono(0, 1, 0, 1, 2);
  for (long g = 0; g < 3; ++g) {
    PBWElement x = pbw_normalize(Word::single(static_cast<unsigned>(g)));
    CHECK(sl2_multiply(omega, x) == sl2_multiply(x, omega));
  }
}

TEST_CASE("binomial coefficient polynomials in h") {
  CHECK(HBinomial{rat(0), 0}.coeffs() == std::vector<Rational>{rat(1)});
  // C(h - 2, 1) = h - 2.
  CHECK(HBinomial{rat(-2), 1}.coeffs() == std::vector<Rational>{rat(-2), rat(1)});
  // C(h, 2) = (h^2 - h) / 2.
  CHECK(HBinomial{rat(0), 2}.coeffs() ==
        std::vector<Rational>{rat(0), rat(-1, 2), rat(1, 2)});
  // C(h + 1, 2) = (h^2 + h) / 2.
  CHECK(HBinomial{rat(1), 2}.coeffs() ==
        std::vector<Rational>{rat(0), rat(1, 2), rat(1, 2)});
}

TEST_CASE("closed forms for the two-letter powers, frozen small cases") {
  CHECK(closed_eh(1, 1) == mono(0, 1, 1) + mono(0, 0, 1, -2));
  CHECK(closed_hf(1, 1) == mono(1, 1, 0) + mono(1, 0, 0, -2));
  CHECK(closed_ef(1, 1) == mono(1, 0, 1) + mono(0, 1, 0));
  // e^2 f^2 = f^2 e^2 + 4 fhe - 8 fe + 2 h^2 - 2 h.
  CHECK(closed_ef(2, 2) == mono(2, 0, 2) + mono(1, 1, 1, 4) + mono(1, 0, 1, -8) +
                               mono(0, 2, 0, 2) + mono(0, 1, 0, -2));
  // Degenerate exponents reduce to plain monomials.
  CHECK(closed_eh(0, 3) == mono(0, 3, 0));
  CHECK(closed_hf(0, 3) == mono(3, 0, 0));
  CHECK(closed_ef(2, 0) == mono(0, 0, 2));
}

TEST_CASE("closed forms agree with rewriting on a grid") {
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y) {
      CAPTURE(x);
      CAPTURE(y);
      CHECK(closed_eh(x, y) ==
            pbw_normalize(Word::power(2, static_cast<std::size_t>(x)) *
                          Word::power(1, static_cast<std::size_t>(y))));
      CHECK(closed_hf(x, y) ==
            pbw_normalize(Word::power(1, static_cast<std::size_t>(x)) *
                          Word::power(0, static_cast<std::size_t>(y))));
      CHECK(closed_ef(x, y) ==
            pbw_normalize(Word::power(2, static_cast<std::size_t>(x)) *
                          Word::power(0, static_cast<std::size_t>(y))));
    }
}

TEST_CASE("the one-summation product formula matches multiplication") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<long> e(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    long i = e(rng), j = e(rng), k = e(rng), l = e(rng), m = e(rng), n = e(rng);
    CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(l); CAPTURE(m); CAPTURE(n);
    CHECK(closed_product(i, j, k, l, m, n) ==
          sl2_multiply(mono(i, j, k), mono(l, m, n)));
  }
  CHECK(closed_product(0, 0, 1, 1, 0, 0) == mono(1, 0, 1) + mono(0, 1, 0));
}

TEST_CASE("verification drivers pass on reduced grids") {
  VerifyReport forms = verify_sl2_closed_forms(2);
  CHECK(forms.ok());
  CHECK(forms.cases == 27);  // three families over a 3x3 grid
  VerifyReport prod = verify_sl2_product(1);
  CHECK(prod.ok());
  CHECK(prod.cases == 64);
}

TEST_CASE("printing and json") {
  CHECK(to_string(mono(0, 0, 0)) == "1");
  CHECK(to_string(closed_ef(1, 1)) == "h + f e");
  CHECK(to_string(PBWElement{}) == "0");
  OJson j = to_json(closed_ef(1, 1));
  CHECK(j.size() == 2);
  CHECK(j[0] == OJson::array({0, 1, 0, "1"}));
  CHECK(j[1] == OJson::array({1, 0, 1, "1"}));
}
