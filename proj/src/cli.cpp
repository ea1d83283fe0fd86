#include "uae/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uae/downup.hpp"
#include "uae/envelope.hpp"
#include "uae/sl2pbw.hpp"
#include "uae/structure.hpp"
#include "uae/tripleops.hpp"
#include "uae/verify.hpp"

namespace uae {
namespace {

void print_json(std::ostream& out, const OJson& j) { out << j.dump(2) << '\n'; }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) out.push_back(piece);
  return out;
}

Rational parse_rational_or_throw(const std::string& text, const std::string& what) {
  auto q = parse_rational(text);
  if (!q) throw std::invalid_argument(what + ": cannot parse rational '" + text + "'");
  return *q;
}

// A selector is either a catalog name or six comma-separated rationals in the
// permutation basis.
TrilinearOp resolve_op(const std::string& selector) {
  if (const CatalogEntry* entry = catalog_find(selector)) return entry->op;
  std::vector<std::string> pieces = split_commas(selector);
  if (pieces.size() != 6)
    throw std::invalid_argument("unknown operation '" + selector +
                                "' (expected a catalog name or six comma-separated rationals)");
  TrilinearOp op;
  for (std::size_t i = 0; i < 6; ++i)
    op.coeffs[i] = parse_rational_or_throw(pieces[i], "operation coefficients");
  return op;
}

DownUpParams resolve_params(const std::string& text) {
  std::vector<std::string> pieces = split_commas(text);
  if (pieces.size() != 3)
    throw std::invalid_argument("--params needs three comma-separated rationals");
  return {parse_rational_or_throw(pieces[0], "--params"),
          parse_rational_or_throw(pieces[1], "--params"),
          parse_rational_or_throw(pieces[2], "--params")};
}

DownUpMode resolve_mode(const std::string& text) {
  if (text == "full") return DownUpMode::full;
  if (text == "quotient") return DownUpMode::quotient;
  throw std::invalid_argument("--mode must be 'full' or 'quotient'");
}

std::string coeff_list(const TrilinearOp& op) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out << ", ";
    out << to_string(op.coeffs[i]);
  }
  out << ']';
  return out.str();
}

std::string op_title(const TrilinearOp& op) {
  if (op.label) return *op.label + ' ' + coeff_list(op);
  return coeff_list(op);
}

std::string lin_string(const QVec& v, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    Rational mag = neg ? Rational(-v[i]) : v[i];
    if (mag == 1)
      out << labels[i];
    else
      out << to_string(mag) << ' ' << labels[i];
  }
  if (first) out << '0';
  return out.str();
}

std::string finiteness_line(const Finiteness& verdict) {
  switch (verdict.kind) {
    case Finiteness::Kind::finite:
      return "finite, dimension " + std::to_string(verdict.dimension);
    case Finiteness::Kind::infinite_witnessed:
      return "infinite (pumpable normal word at degree " + std::to_string(verdict.witness_degree) +
             ")";
    case Finiteness::Kind::unknown:
    default:
      return "unknown (degree cap reached before a verdict)";
  }
}

std::string growth_line(const GrowthEstimate& estimate) {
  switch (estimate.kind) {
    case GrowthEstimate::Kind::polynomial:
      return "polynomial of degree " + std::to_string(estimate.degree);
    case GrowthEstimate::Kind::exponential:
      return "exponential";
    case GrowthEstimate::Kind::inconclusive:
    default:
      return "inconclusive";
  }
}

int run_ops_list(std::ostream& out, bool json) {
  if (json) {
    print_json(out, catalog_json());
    return 0;
  }
  for (const CatalogEntry& e : catalog()) {
    out << e.name;
    if (!e.q.empty()) out << " (q = " << e.q << ")";
    out << ": " << e.expression << "  " << coeff_list(e.op) << '\n';
    if (e.alt) out << "  second form: " << *e.alt_expression << "  " << coeff_list(*e.alt) << '\n';
  }
  return 0;
}

int run_ops_matrix(std::ostream& out, const std::string& selector, bool json) {
  TrilinearOp op = resolve_op(selector);
  MatrixForm form = to_matrix_form(op);
  MatrixForm canon = canonical_form(op);
  if (json) {
    OJson j;
    j["operation"] = to_json(op);
    j["matrix"] = to_json(form);
    j["canonical"] = to_json(canon);
    j["canonical_key"] = canonical_key(op);
    print_json(out, j);
    return 0;
  }
  out << "operation: " << op_title(op) << '\n';
  auto block_line = [&](const MatrixForm& f) {
    return "y1 = " + to_string(f.y1) + ", block = [[" + to_string(f.block.at(0, 0)) + ", " +
           to_string(f.block.at(0, 1)) + "], [" + to_string(f.block.at(1, 0)) + ", " +
           to_string(f.block.at(1, 1)) + "]], y6 = " + to_string(f.y6);
  };
  out << "matrix form: " << block_line(form) << '\n';
  out << "canonical form: " << block_line(canon) << '\n';
  return 0;
}

int run_ops_equiv(std::ostream& out, const std::string& lhs, const std::string& rhs, bool json) {
  TrilinearOp x = resolve_op(lhs);
  TrilinearOp y = resolve_op(rhs);
  bool same = equivalent(x, y);
  if (json) {
    OJson j;
    j["lhs"] = to_json(x);
    j["rhs"] = to_json(y);
    j["lhs_canonical_key"] = canonical_key(x);
    j["rhs_canonical_key"] = canonical_key(y);
    j["equivalent"] = same;
    print_json(out, j);
    return 0;
  }
  out << (same ? "equivalent" : "inequivalent") << '\n';
  out << "lhs canonical: " << canonical_key(x) << '\n';
  out << "rhs canonical: " << canonical_key(y) << '\n';
  return 0;
}

int run_ops_search(std::ostream& out, long range, bool json) {
  SearchReport report = search_operations(range);
  if (json) {
    print_json(out, to_json(report));
    return 0;
  }
  out << "coefficients in [-" << range << ", " << range << "]: " << report.total_vectors
      << " vectors, " << report.class_count << " equivalence classes\n";
  out << "catalog operations represented: " << report.represented.size() << " of "
      << (report.represented.size() + report.missing.size()) << '\n';
  if (!report.missing.empty()) {
    out << "missing:";
    for (const std::string& name : report.missing) out << ' ' << name;
    out << '\n';
  }
  return 0;
}

int run_envelope(std::ostream& out, const std::string& selector, long cap, bool json) {
  EnvelopePresentation env = build_envelope(resolve_op(selector), static_cast<std::size_t>(cap));
  if (json) {
    print_json(out, to_json(env));
    return 0;
  }
  out << "operation: " << op_title(env.op) << '\n';
  out << "relations (" << env.raw_relations.size() << " raw, " << env.relations.size()
      << " kept):\n";
  for (const FreePoly& r : env.relations) out << "  " << to_string(r) << '\n';
  out << "groebner basis ("
      << (env.basis.status == GBStatus::complete ? "complete" : "truncated, not authoritative")
      << ", degree cap " << env.basis.degree_cap << "):\n";
  for (const FreePoly& g : env.basis.elements) out << "  " << to_string(g) << '\n';
  out << "verdict: " << finiteness_line(env.verdict) << '\n';
  if (!env.normal_basis.empty()) {
    out << "basis:";
    for (const Word& w : env.normal_basis) out << ' ' << to_string(w, *env.gens);
    out << '\n';
  }
  if (env.basis.status == GBStatus::complete &&
      env.verdict.kind == Finiteness::Kind::infinite_witnessed) {
    std::vector<std::size_t> dims = graded_dims(env.basis, 8);
    out << "graded dims 0..8:";
    for (std::size_t d : dims) out << ' ' << d;
    out << '\n';
  }
  return 0;
}

int run_wedderburn(std::ostream& out, std::ostream& err, const std::string& selector, long cap,
                   bool json) {
  EnvelopePresentation env = build_envelope(resolve_op(selector), static_cast<std::size_t>(cap));
  if (!env.table) {
    err << "envelope is not finite dimensional (" << finiteness_line(env.verdict)
        << "); nothing to decompose\n";
    return 1;
  }
  WedderburnReport report = decompose(*env.table);
  if (json) {
    print_json(out, to_json(report));
    return 0;
  }
  const std::vector<std::string>& labels = report.input_labels;
  out << "operation: " << op_title(env.op) << '\n';
  out << "envelope dimension: " << labels.size() << '\n';
  out << "radical dimension: " << report.radical_basis.size() << '\n';
  for (const QVec& r : report.radical_basis) out << "  radical: " << lin_string(r, labels) << '\n';
  const std::vector<std::string>& qlabels = report.semisimple.table.labels();
  out << "semisimple dimension: " << qlabels.size() << '\n';
  out << "center dimension: " << report.center_basis.size() << '\n';
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const Component& c = report.components[i];
    const char* kind = c.kind == Component::Kind::ground_field     ? "ground field"
                       : c.kind == Component::Kind::matrix_2x2     ? "2x2 matrices"
                                                                   : "simple, not identified";
    out << "component " << (i + 1) << ": " << kind << ", dimension " << c.dimension
        << ", idempotent " << lin_string(c.idempotent, qlabels) << '\n';
  }
  out << "irreducible dimensions:";
  for (std::size_t d : report.irreducible_dims) out << ' ' << d;
  out << '\n';
  return 0;
}

int run_downup_mult(std::ostream& out, const std::string& params_text, const std::string& mode_text,
                    const std::string& x_text, const std::string& y_text, bool json) {
  DownUpAlgebra alg(resolve_params(params_text), resolve_mode(mode_text));
  DownUpElement x = alg.reduce(parse_poly(alg.gens(), x_text));
  DownUpElement y = alg.reduce(parse_poly(alg.gens(), y_text));
  DownUpElement xy = alg.multiply(x, y);
  if (json) {
    OJson j;
    j["params"] = {to_string(alg.params().alpha), to_string(alg.params().beta),
                   to_string(alg.params().gamma)};
    j["mode"] = mode_text;
    j["lhs"] = to_json(x);
    j["rhs"] = to_json(y);
    j["product"] = to_json(xy);
    print_json(out, j);
    return 0;
  }
  out << "lhs = " << to_string(x) << '\n';
  out << "rhs = " << to_string(y) << '\n';
  out << "product = " << to_string(xy) << '\n';
  return 0;
}

int run_downup_center(std::ostream& out, long m, long slice, bool json) {
  DownUpAlgebra alg(downup_symsum(), DownUpMode::quotient);
  DownUpElement z = center_element(m);
  bool central = alg.commutes(z, alg.monomial(1, 0, 0)) && alg.commutes(z, alg.monomial(0, 0, 1));
  std::vector<DownUpElement> slice_basis;
  if (slice >= 0) slice_basis = center_slice_bruteforce(slice);
  if (json) {
    OJson j;
    j["m"] = m;
    j["element"] = to_json(z);
    j["central"] = central;
    if (slice >= 0) {
      j["slice_max_j"] = slice;
      j["slice_dimension"] = slice_basis.size();
      OJson arr = OJson::array();
      for (const DownUpElement& s : slice_basis) arr.push_back(to_json(s));
      j["slice_basis"] = std::move(arr);
    }
    print_json(out, j);
  } else {
    out << "Z(" << m << ") = " << to_string(z) << '\n';
    out << "central: " << (central ? "yes" : "NO") << '\n';
    if (slice >= 0) {
      out << "centralizer slice (i <= 2, j <= " << slice << "): dimension " << slice_basis.size()
          << '\n';
      for (const DownUpElement& s : slice_basis) out << "  " << to_string(s) << '\n';
    }
  }
  return central ? 0 : 1;
}

int run_downup_b2(std::ostream& out, const std::string& params_text, const std::string& mode_text,
                  long i, long j, long k, const std::string& c1_text, const std::string& c2_text,
                  bool json) {
  DownUpAlgebra alg(resolve_params(params_text), resolve_mode(mode_text));
  Rational c1 = parse_rational_or_throw(c1_text, "--c1");
  Rational c2 = parse_rational_or_throw(c2_text, "--c2");
  DownUpElement x = b2_expand(alg, i, j, k, c1, c2);
  if (json) {
    OJson jj;
    jj["params"] = {to_string(alg.params().alpha), to_string(alg.params().beta),
                    to_string(alg.params().gamma)};
    jj["mode"] = mode_text;
    jj["exponents"] = {i, j, k};
    jj["c1"] = to_string(c1);
    jj["c2"] = to_string(c2);
    jj["expansion"] = to_json(x);
    print_json(out, jj);
  } else {
    out << "a^" << i << " (ba + c1 ab + c2)^" << j << " b^" << k << " = " << to_string(x) << '\n';
  }
  return 0;
}

// Graded dimensions of the symmetric-sum envelope against the closed pattern
// 1, 2, 4, then 4 for odd and 5 for even degrees; with enough terms the
// growth estimate must come out linear.
VerifyReport verify_symsum_graded(long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("verify needs a nonnegative degree");
  std::vector<std::string> failures;
  EnvelopePresentation env = build_envelope(catalog_find("symmetric-sum")->op);
  if (env.basis.status != GBStatus::complete) {
    failures.push_back("groebner basis truncated; graded dimensions not authoritative");
    return collect_report("symsum-graded-dims", failures);
  }
  std::vector<std::size_t> dims = graded_dims(env.basis, static_cast<std::size_t>(max_degree));
  for (long n = 0; n <= max_degree; ++n) {
    std::size_t expected = n == 0 ? 1 : n == 1 ? 2 : (n % 2 != 0 ? 4 : n == 2 ? 4 : 5);
    std::size_t got = dims[static_cast<std::size_t>(n)];
    failures.push_back(got == expected ? ""
                                       : "degree " + std::to_string(n) + ": dimension " +
                                             std::to_string(got) + ", expected " +
                                             std::to_string(expected));
  }
  if (max_degree >= 8) {
    GrowthEstimate est = growth_estimate(dims);
    failures.push_back(est.kind == GrowthEstimate::Kind::polynomial && est.degree == 1
                           ? ""
                           : "growth estimate is " + growth_line(est) +
                                 ", expected polynomial of degree 1");
  }
  return collect_report("symsum-graded-dims", failures);
}

int run_verify(std::ostream& out, const std::string& suite, long max, bool json) {
  VerifyReport report;
  if (suite == "thm4.13")
    report = verify_symsum_closed(max >= 0 ? max : 4);
  else if (suite == "thm4.16")
    report = verify_center(max >= 0 ? max : 6);
  else if (suite == "thm4.20")
    report = verify_sl2_product(max >= 0 ? max : 3);
  else if (suite == "thm4.25")
    report = verify_a010_closed(max >= 0 ? max : 4);
  else if (suite == "lemma4.19")
    report = verify_sl2_closed_forms(max >= 0 ? max : 4);
  else if (suite == "lemma4.24")
    report = verify_a010_identities(max >= 0 ? max : 6);
  else if (suite == "cor4.7")
    report = verify_symsum_graded(max >= 0 ? max : 12);
  else
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (choose from thm4.13, thm4.16, thm4.20, thm4.25, "
                                "lemma4.19, lemma4.24, cor4.7)");
  if (json) {
    OJson j;
    j["requested"] = suite;
    j["report"] = to_json(report);
    print_json(out, j);
  } else {
    out << "suite " << suite << " (" << report.suite << "): " << report.cases << " cases, "
        << report.mismatches << " mismatches\n";
    if (!report.first_counterexample.empty())
      out << "first counterexample: " << report.first_counterexample << '\n';
    out << (report.ok() ? "ok" : "FAILED") << '\n';
  }
  return report.ok() ? 0 : 1;
}

int run_gk(std::ostream& out, const std::string& selector, long degree, bool json) {
  if (degree < 0) throw std::invalid_argument("--degree must be nonnegative");
  std::size_t cap = std::max<long>(degree, 12);
  EnvelopePresentation env = build_envelope(resolve_op(selector), cap);
  std::vector<std::size_t> dims = graded_dims(env.basis, static_cast<std::size_t>(degree));
  GrowthEstimate est = growth_estimate(dims);
  bool authoritative = env.basis.status == GBStatus::complete;
  if (json) {
    OJson j;
    j["operation"] = to_json(env.op);
    j["max_degree"] = degree;
    j["dims"] = dims;
    j["estimate"] = to_json(est);
    j["authoritative"] = authoritative;
    print_json(out, j);
    return 0;
  }
  out << "operation: " << op_title(env.op) << '\n';
  out << "graded dims 0.." << degree << ":";
  for (std::size_t d : dims) out << ' ' << d;
  out << '\n';
  out << "growth estimate: " << growth_line(est) << '\n';
  if (!authoritative)
    out << "note: groebner basis truncated at degree " << env.basis.degree_cap
        << "; dimensions are upper bounds only\n";
  return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"universal associative envelopes of trilinear operations"};
  app.require_subcommand(1);
  std::function<int()> run;

  // ops
  CLI::App* ops = app.add_subcommand("ops", "catalog of trilinear operations");
  ops->require_subcommand(1);
  bool ops_list_json = false;
  CLI::App* ops_list = ops->add_subcommand("list", "list the named operations");
  ops_list->add_flag("--json", ops_list_json, "machine readable output");
  ops_list->callback([&] { run = [&] { return run_ops_list(out, ops_list_json); }; });

  std::string ops_matrix_sel;
  bool ops_matrix_json = false;
  CLI::App* ops_matrix = ops->add_subcommand("matrix", "matrix and canonical form");
  ops_matrix->add_option("operation", ops_matrix_sel, "catalog name or six rationals")->required();
  ops_matrix->add_flag("--json", ops_matrix_json, "machine readable output");
  ops_matrix->callback(
      [&] { run = [&] { return run_ops_matrix(out, ops_matrix_sel, ops_matrix_json); }; });

  std::string equiv_lhs, equiv_rhs;
  bool equiv_json = false;
  CLI::App* ops_equiv = ops->add_subcommand("equiv", "compare two operations up to equivalence");
  ops_equiv->add_option("lhs", equiv_lhs, "catalog name or six rationals")->required();
  ops_equiv->add_option("rhs", equiv_rhs, "catalog name or six rationals")->required();
  ops_equiv->add_flag("--json", equiv_json, "machine readable output");
  ops_equiv->callback(
      [&] { run = [&] { return run_ops_equiv(out, equiv_lhs, equiv_rhs, equiv_json); }; });

  long search_range = 1;
  bool search_json = false;
  CLI::App* ops_search = ops->add_subcommand("search", "scan small coefficient vectors");
  ops_search->add_option("--range", search_range, "coefficient bound (default 1)");
  ops_search->add_flag("--json", search_json, "machine readable output");
  ops_search->callback([&] { run = [&] { return run_ops_search(out, search_range, search_json); }; });

  // envelope
  std::string env_sel;
  long env_cap = 12;
  bool env_json = false;
  CLI::App* envelope = app.add_subcommand("envelope", "universal associative envelope");
  envelope->add_option("operation", env_sel, "catalog name or six rationals")->required();
  envelope->add_option("--cap", env_cap, "completion degree cap (default 12)");
  envelope->add_flag("--json", env_json, "machine readable output");
  envelope->callback([&] { run = [&] { return run_envelope(out, env_sel, env_cap, env_json); }; });

  // wedderburn
  std::string wd_sel;
  long wd_cap = 12;
  bool wd_json = false;
  CLI::App* wedderburn = app.add_subcommand("wedderburn", "decompose a finite envelope");
  wedderburn->add_option("operation", wd_sel, "catalog name or six rationals")->required();
  wedderburn->add_option("--cap", wd_cap, "completion degree cap (default 12)");
  wedderburn->add_flag("--json", wd_json, "machine readable output");
  wedderburn->callback(
      [&] { run = [&] { return run_wedderburn(out, err, wd_sel, wd_cap, wd_json); }; });

  // downup
  CLI::App* downup = app.add_subcommand("downup", "down-up algebra computations");
  downup->require_subcommand(1);

  std::string du_params = "-1,-1,1";
  std::string du_mode = "quotient";
  std::string du_x, du_y;
  bool du_mult_json = false;
  CLI::App* du_mult = downup->add_subcommand("mult", "multiply two elements");
  du_mult->add_option("lhs", du_x, "polynomial in a, b")->required();
  du_mult->add_option("rhs", du_y, "polynomial in a, b")->required();
  du_mult->add_option("--params", du_params, "alpha,beta,gamma (default -1,-1,1)");
  du_mult->add_option("--mode", du_mode, "full or quotient (default quotient)");
  du_mult->add_flag("--json", du_mult_json, "machine readable output");
  du_mult->callback([&] {
    run = [&] { return run_downup_mult(out, du_params, du_mode, du_x, du_y, du_mult_json); };
  });

  long center_m = 2;
  long center_slice = -1;
  bool center_json = false;
  CLI::App* du_center = downup->add_subcommand("center", "central elements of the quotient");
  du_center->add_option("--m", center_m, "index of the central element (default 2)");
  du_center->add_option("--slice", center_slice, "also solve the centralizer slice up to this j");
  du_center->add_flag("--json", center_json, "machine readable output");
  du_center->callback(
      [&] { run = [&] { return run_downup_center(out, center_m, center_slice, center_json); }; });

  long b2_i = 0, b2_j = 1, b2_k = 0;
  std::string b2_c1 = "-1", b2_c2 = "0";
  std::string b2_params = "-1,-1,1";
  std::string b2_mode = "full";
  bool b2_json = false;
  CLI::App* du_b2 = downup->add_subcommand("b2", "expand a^i (ba + c1 ab + c2)^j b^k");
  du_b2->add_option("--i", b2_i, "left exponent (default 0)");
  du_b2->add_option("--j", b2_j, "middle exponent (default 1)");
  du_b2->add_option("--k", b2_k, "right exponent (default 0)");
  du_b2->add_option("--c1", b2_c1, "coefficient of ab (default -1)");
  du_b2->add_option("--c2", b2_c2, "constant term (default 0)");
  du_b2->add_option("--params", b2_params, "alpha,beta,gamma (default -1,-1,1)");
  du_b2->add_option("--mode", b2_mode, "full or quotient (default full)");
  du_b2->add_flag("--json", b2_json, "machine readable output");
  du_b2->callback([&] {
    run = [&] {
      return run_downup_b2(out, b2_params, b2_mode, b2_i, b2_j, b2_k, b2_c1, b2_c2, b2_json);
    };
  });

  // verify
  std::string verify_suite;
  long verify_max = -1;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "closed forms against rewriting oracles");
  verify->add_option("suite", verify_suite,
                     "thm4.13 | thm4.16 | thm4.20 | thm4.25 | lemma4.19 | lemma4.24 | cor4.7")
      ->required();
  verify->add_option("--max,--m,--n", verify_max, "override the sweep bound");
  verify->add_flag("--json", verify_json, "machine readable output");
  verify->callback(
      [&] { run = [&] { return run_verify(out, verify_suite, verify_max, verify_json); }; });

  // gk
  std::string gk_sel;
  long gk_degree = 12;
  bool gk_json = false;
  CLI::App* gk = app.add_subcommand("gk", "graded dimensions and growth estimate");
  gk->add_option("operation", gk_sel, "catalog name or six rationals")->required();
  gk->add_option("--degree", gk_degree, "largest degree to tabulate (default 12)");
  gk->add_flag("--json", gk_json, "machine readable output");
  gk->callback([&] { run = [&] { return run_gk(out, gk_sel, gk_degree, gk_json); }; });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return run ? run() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace uae
