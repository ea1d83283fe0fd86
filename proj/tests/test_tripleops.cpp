#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "uae/freealg.hpp"
#include "uae/tripleops.hpp"

using namespace uae;

namespace {

TrilinearOp op6(long c1, long c2, long c3, long c4, long c5, long c6) {
  return TrilinearOp{{rat(c1), rat(c2), rat(c3), rat(c4), rat(c5), rat(c6)}, std::nullopt};
}

const TrilinearOp& named(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  REQUIRE(e != nullptr);
  return e->op;
}

}  // namespace

TEST_CASE("catalog: 22 uniquely named operations with frozen coefficients") {
  const auto& entries = catalog();
  CHECK(entries.size() == 22);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  CHECK(names.size() == 22);

  CHECK(named("jordan-inf") == op6(1, 0, 0, 0, 0, 1));
  CHECK(named("jordan-half") == op6(1, 2, 0, 0, 2, 1));
  CHECK(named("lie-inf") == op6(1, -1, 0, -1, 0, 1));
  CHECK(named("lie-half") == op6(1, 1, 0, -1, 0, -1));
  CHECK(named("anti-jordan-half") == op6(1, 0, 0, 0, 0, -1));
  CHECK(named("symmetric-sum") == op6(1, 1, 1, 1, 1, 1));
  CHECK(named("alternating-sum") == op6(1, -1, -1, 1, 1, -1));
  CHECK(named("cyclic-sum") == op6(1, 0, 0, 1, 1, 0));
  CHECK(named("cyclic-commutator") == op6(1, 0, 0, -1, 0, 0));
  CHECK(catalog_find("no-such-op") == nullptr);

  // The two rows with a second listed form carry it as alt.
  const CatalogEntry* wc = catalog_find("weakly-commutative");
  REQUIRE(wc != nullptr);
  CHECK(wc->op == op6(1, -1, 2, 0, 0, 0));
  REQUIRE(wc->alt.has_value());
  CHECK(*wc->alt == op6(1, 1, 1, 0, 0, -1));
  const CatalogEntry* wa = catalog_find("weakly-anticommutative");
  REQUIRE(wa != nullptr);
  CHECK(wa->op == op6(1, 1, -2, 0, 0, 0));
  REQUIRE(wa->alt.has_value());
  CHECK(*wa->alt == op6(1, 1, -1, 0, 0, -1));
}

TEST_CASE("family parameter values are recorded") {
  CHECK(catalog_find("jordan-0")->q == "0");
  CHECK(catalog_find("jordan-half")->q == "1/2");
  CHECK(catalog_find("jordan-inf")->q == "inf");
  CHECK(catalog_find("symmetric-sum")->q.empty());
}

TEST_CASE("split basis change: the two matrices are mutually inverse") {
  const QMatrix& m = split_to_perm();
  const QMatrix& minv = perm_to_split();
  CHECK(m * minv == QMatrix::identity(6));
  CHECK(minv * m == QMatrix::identity(6));
  // First row of M is (1/6) * [1, 2, 0, 0, 2, 1].
  CHECK(m.at(0, 0) == rat(1, 6));
  CHECK(m.at(0, 1) == rat(1, 3));
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(0, 5) == rat(1, 6));
  // First row of M^{-1} is all ones.
  for (std::size_t j = 0; j < 6; ++j) CHECK(minv.at(0, j) == 1);
}

TEST_CASE("matrix form of the all-ones operation is (6, 0, 0)") {
  MatrixForm f = to_matrix_form(named("symmetric-sum"));
  CHECK(f.y1 == 6);
  CHECK(f.y6 == 0);
  CHECK(f.block == QMatrix(2, 2));
}

TEST_CASE("matrix form round-trips for the whole catalog") {
  for (const auto& e : catalog()) {
    CHECK(from_matrix_form(to_matrix_form(e.op)) == e.op);
    if (e.alt) CHECK(from_matrix_form(to_matrix_form(*e.alt)) == *e.alt);
  }
}

TEST_CASE("equivalence: both listed forms of a row are the same operation") {
  const CatalogEntry* wc = catalog_find("weakly-commutative");
  const CatalogEntry* wa = catalog_find("weakly-anticommutative");
  CHECK(equivalent(wc->op, *wc->alt));
  CHECK(equivalent(wa->op, *wa->alt));
  CHECK(canonical_key(wc->op) == canonical_key(*wc->alt));
  CHECK(canonical_key(wc->op) == "1|1,0,0,1|0");
}

TEST_CASE("equivalence is invariant under nonzero scaling") {
  for (const auto& e : catalog()) {
    TrilinearOp doubled = e.op;
    for (auto& c : doubled.coeffs) c *= rat(-7, 3);
    CHECK(equivalent(e.op, doubled));
  }
}

TEST_CASE("equivalence separates operations that differ in the split data") {
  CHECK_FALSE(equivalent(named("lie-inf"), named("anti-jordan-inf")));
  CHECK_FALSE(equivalent(named("symmetric-sum"), named("alternating-sum")));
  CHECK_FALSE(equivalent(named("jordan-inf"), named("lie-inf")));
}

TEST_CASE("apply expands the operation with caller multiplication") {
  GensPtr g = make_gens({"a", "b"});
  FreePoly a = FreePoly::generator(g, 0);
  FreePoly b = FreePoly::generator(g, 1);
  auto mul = [](const FreePoly& x, const FreePoly& y) { return x * y; };
  // abc + cba at (a, b, a) gives 2 aba.
  CHECK(apply(named("jordan-inf"), a, b, a, mul) ==
        scale(rat(2), parse_poly(g, "aba")));
  // [a, [b, c]] expands to the full commutator polynomial.
  CHECK(apply(named("lie-inf"), a, a, b, mul) ==
        parse_poly(g, "aab - 2 aba + baa"));

  // The same template works for matrices: the sum over all six orders of
  // E12, E21, E12 is 2 E12.
  QMatrix e12(2, 2), e21(2, 2);
  e12.at(0, 1) = 1;
  e21.at(1, 0) = 1;
  auto mmul = [](const QMatrix& x, const QMatrix& y) { return x * y; };
  CHECK(apply(named("symmetric-sum"), e12, e21, e12, mmul) == scale(rat(2), e12));
}

TEST_CASE("coefficient search over {-1, 0, 1} finds all but two rows") {
  SearchReport r = search_operations(1);
  CHECK(r.total_vectors == 243);
  CHECK(r.class_count == 25);
  CHECK(r.represented.size() == 20);
  CHECK(r.missing == std::vector<std::string>{"jordan-half", "anti-jordan-inf"});
}

TEST_CASE("search rejects nonpositive bounds") {
  CHECK_THROWS_AS(search_operations(0), std::invalid_argument);
  CHECK_THROWS_AS(search_operations(-2), std::invalid_argument);
}

TEST_CASE("catalog json carries every entry with matrix data") {
  OJson j = catalog_json();
  CHECK(j.size() == 22);
  CHECK(j[0]["name"] == "jordan-0");
  for (const auto& item : j) {
    CHECK(item.contains("coefficients"));
    CHECK(item["coefficients"].size() == 6);
    CHECK(item.contains("expression"));
  }
  // The two-form rows carry both coefficient vectors.
  bool saw_alt = false;
  for (const auto& item : j)
    if (item.contains("alt_coefficients")) saw_alt = true;
  CHECK(saw_alt);
}
