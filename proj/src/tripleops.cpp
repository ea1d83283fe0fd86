#include "uae/tripleops.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uae {
namespace {

QMatrix matrix_from_longs(const long (&rows)[6][6], long den) {
  QMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rat(rows[i][j], den);
  return m;
}

}  // namespace

const QMatrix& split_to_perm() {
  static const QMatrix m = matrix_from_longs(
      {{1, 2, 0, 0, 2, 1},
       {1, 0, 2, 2, 0, -1},
       {1, 2, -2, 0, -2, -1},
       {1, -2, 2, -2, 0, 1},
       {1, 0, -2, 2, -2, 1},
       {1, -2, 0, -2, 2, -1}},
      6);
  return m;
}

const QMatrix& perm_to_split() {
  static const QMatrix m = matrix_from_longs(
      {{1, 1, 1, 1, 1, 1},
       {1, 0, 1, 0, -1, -1},
       {0, 1, 0, 1, -1, -1},
       {0, 1, -1, -1, 1, 0},
       {1, 0, -1, -1, 0, 1},
       {1, -1, -1, 1, 1, -1}},
      1);
  return m;
}

MatrixForm to_matrix_form(const TrilinearOp& op) {
  const QMatrix& inv = perm_to_split();
  QVec y(6, Rational(0));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) y[i] += inv.at(i, j) * op.coeffs[j];
  MatrixForm form;
  form.y1 = y[0];
  form.block = QMatrix(2, 2);
  form.block.at(0, 0) = y[1];
  form.block.at(0, 1) = y[2];
  form.block.at(1, 0) = y[3];
  form.block.at(1, 1) = y[4];
  form.y6 = y[5];
  return form;
}

TrilinearOp from_matrix_form(const MatrixForm& form) {
  const QVec y = {form.y1,          form.block.at(0, 0), form.block.at(0, 1),
                  form.block.at(1, 0), form.block.at(1, 1), form.y6};
  const QMatrix& m = split_to_perm();
  TrilinearOp op;
  for (std::size_t i = 0; i < 6; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < 6; ++j) acc += m.at(i, j) * y[j];
    op.coeffs[i] = acc;
  }
  return op;
}

MatrixForm canonical_form(const TrilinearOp& op) {
  MatrixForm form = to_matrix_form(op);
  form.y1 = form.y1 == 0 ? Rational(0) : Rational(1);
  form.y6 = form.y6 == 0 ? Rational(0) : Rational(1);
  form.block = rref(form.block);
  return form;
}

std::string canonical_key(const TrilinearOp& op) {
  const MatrixForm form = canonical_form(op);
  std::ostringstream os;
  os << to_string(form.y1) << '|';
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) os << to_string(form.block.at(i, j)) << (i == 1 && j == 1 ? "" : ",");
  os << '|' << to_string(form.y6);
  return os.str();
}

bool equivalent(const TrilinearOp& lhs, const TrilinearOp& rhs) {
  return canonical_key(lhs) == canonical_key(rhs);
}

namespace {

TrilinearOp op_of(const long (&x)[6], const char* label) {
  TrilinearOp op;
  for (std::size_t i = 0; i < 6; ++i) op.coeffs[i] = rat(x[i]);
  op.label = label;
  return op;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&c](const char* name, const char* q, const char* expr, const long (&x)[6]) {
    CatalogEntry e;
    e.name = name;
    e.q = q;
    e.expression = expr;
    e.op = op_of(x, name);
    c.push_back(std::move(e));
  };
  auto add_alt = [&c](const char* expr, const long (&x)[6]) {
    c.back().alt = op_of(x, c.back().name.c_str());
    c.back().alt_expression = expr;
  };
  add("jordan-0", "0", "(a o b)c", {1, 0, 1, 0, 0, 0});
  add("jordan-half", "1/2", "a(b o c) + c(a o b) + (c o a)b", {1, 2, 0, 0, 2, 1});
  add("jordan-1", "1", "a(b o c)", {1, 1, 0, 0, 0, 0});
  add("jordan-inf", "inf", "abc + cba", {1, 0, 0, 0, 0, 1});
  add("lie-half", "1/2", "[a, b o c]", {1, 1, 0, -1, 0, -1});
  add("lie-inf", "inf", "[a, [b, c]]", {1, -1, 0, -1, 0, 1});
  add("anti-jordan--1", "-1", "a[b, c]", {1, -1, 0, 0, 0, 0});
  add("anti-jordan-2", "2", "[a, b]c", {1, 0, -1, 0, 0, 0});
  add("anti-jordan-half", "1/2", "abc - cba", {1, 0, 0, 0, 0, -1});
  add("anti-jordan-inf", "inf", "a[b, c] + c[a, b] + [c, a]b", {1, -2, 0, 0, 2, -1});
  add("fourth--1", "-1", "abc + bac + cab", {1, 0, 1, 0, 1, 0});
  add("fourth-0", "0", "abc - acb + bca", {1, -1, 0, 1, 0, 0});
  add("fourth-1", "1", "abc - bac + cab", {1, 0, -1, 0, 1, 0});
  add("fourth-2", "2", "abc + acb + bca", {1, 1, 0, 1, 0, 0});
  add("fourth-half", "1/2", "abc + acb + bac", {1, 1, 1, 0, 0, 0});
  add("fourth-inf", "inf", "abc - acb - bac", {1, -1, -1, 0, 0, 0});
  add("cyclic-commutator", "", "[a, bc]", {1, 0, 0, -1, 0, 0});
  add("weakly-commutative", "", "abc - acb + 2bac", {1, -1, 2, 0, 0, 0});
  add_alt("abc + acb + bac - cba", {1, 1, 1, 0, 0, -1});
  add("weakly-anticommutative", "", "abc + acb - 2bac", {1, 1, -2, 0, 0, 0});
  add_alt("abc + acb - bac - cba", {1, 1, -1, 0, 0, -1});
  add("symmetric-sum", "", "a(b o c) + b(c o a) + c(a o b)", {1, 1, 1, 1, 1, 1});
  add("alternating-sum", "", "a[b, c] + b[c, a] + c[a, b]", {1, -1, -1, 1, 1, -1});
  add("cyclic-sum", "", "abc + bca + cab", {1, 0, 0, 1, 1, 0});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

SearchReport search_operations(long bound) {
  if (bound < 1) throw std::invalid_argument("search_operations: bound must be positive");
  SearchReport report;
  report.coefficient_bound = bound;
  std::set<std::string> classes;
  const long span = 2 * bound + 1;
  long x[6] = {1, 0, 0, 0, 0, 0};
  std::size_t total = 1;
  for (int i = 0; i < 5; ++i) total *= static_cast<std::size_t>(span);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (int i = 1; i < 6; ++i) {
      x[i] = static_cast<long>(rest % static_cast<std::size_t>(span)) - bound;
      rest /= static_cast<std::size_t>(span);
    }
    TrilinearOp op;
    for (std::size_t i = 0; i < 6; ++i) op.coeffs[i] = rat(x[i]);
    classes.insert(canonical_key(op));
  }
  report.total_vectors = total;
  report.class_count = classes.size();
  for (const CatalogEntry& e : catalog()) {
    if (classes.count(canonical_key(e.op)))
      report.represented.push_back(e.name);
    else
      report.missing.push_back(e.name);
  }
  return report;
}

OJson to_json(const TrilinearOp& op) {
  OJson j;
  if (op.label) j["label"] = *op.label;
  OJson coeffs = OJson::array();
  for (const Rational& c : op.coeffs) coeffs.push_back(to_string(c));
  j["coefficients"] = std::move(coeffs);
  return j;
}

OJson to_json(const MatrixForm& form) {
  OJson j;
  j["y1"] = to_string(form.y1);
  j["block"] = OJson::array({OJson::array({to_string(form.block.at(0, 0)), to_string(form.block.at(0, 1))}),
                             OJson::array({to_string(form.block.at(1, 0)), to_string(form.block.at(1, 1))})});
  j["y6"] = to_string(form.y6);
  return j;
}

OJson to_json(const SearchReport& report) {
  OJson j;
  j["coefficient_bound"] = report.coefficient_bound;
  j["total_vectors"] = report.total_vectors;
  j["class_count"] = report.class_count;
  j["represented"] = report.represented;
  j["missing"] = report.missing;
  return j;
}

OJson catalog_json() {
  OJson arr = OJson::array();
  for (const CatalogEntry& e : catalog()) {
    OJson j;
    j["name"] = e.name;
    j["q"] = e.q;
    j["expression"] = e.expression;
    OJson coeffs = OJson::array();
    for (const Rational& c : e.op.coeffs) coeffs.push_back(to_string(c));
    j["coefficients"] = std::move(coeffs);
    if (e.alt) {
      OJson alt = OJson::array();
      for (const Rational& c : e.alt->coeffs) alt.push_back(to_string(c));
      j["alt_coefficients"] = std::move(alt);
      j["alt_expression"] = *e.alt_expression;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace uae
