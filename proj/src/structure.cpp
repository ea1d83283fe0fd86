#include "uae/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace uae {

namespace {

QVec zero_vec(std::size_t n) { return QVec(n, Rational(0)); }

void add_scaled(QVec& acc, const Rational& c, const QVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

OJson json_vec(const QVec& v) {
  OJson out = OJson::array();
  for (const Rational& c : v) out.push_back(to_string(c));
  return out;
}

OJson json_vec_list(const std::vector<QVec>& rows) {
  OJson out = OJson::array();
  for (const QVec& r : rows) out.push_back(json_vec(r));
  return out;
}

}  // namespace

AlgebraTable AlgebraTable::make(std::vector<std::string> labels,
                                std::vector<std::vector<QVec>> table, QVec unit) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("algebra table: empty basis");
  if (table.size() != n || unit.size() != n)
    throw std::invalid_argument("algebra table: dimension mismatch");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("algebra table: dimension mismatch");
    for (const auto& entry : row)
      if (entry.size() != n) throw std::invalid_argument("algebra table: dimension mismatch");
  }

  AlgebraTable T;
  T.labels_ = std::move(labels);
  T.table_ = std::move(table);
  T.unit_ = std::move(unit);

  for (std::size_t i = 0; i < n; ++i) {
    const QVec b = T.basis_vector(i);
    if (T.mul(T.unit_, b) != b || T.mul(b, T.unit_) != b)
      throw std::invalid_argument("algebra table: unit law fails on basis vector " +
                                  T.labels_[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVec bk = T.basis_vector(k);
        const QVec bi = T.basis_vector(i);
        if (T.mul(T.table_[i][j], bk) != T.mul(bi, T.table_[j][k]))
          throw std::invalid_argument("algebra table: associativity fails at (" +
                                      T.labels_[i] + ", " + T.labels_[j] + ", " +
                                      T.labels_[k] + ")");
      }
  return T;
}

QVec AlgebraTable::mul(const QVec& x, const QVec& y) const {
  const std::size_t n = dim();
  QVec acc = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      add_scaled(acc, x[i] * y[j], table_[i][j]);
    }
  }
  return acc;
}

QVec AlgebraTable::basis_vector(std::size_t i) const {
  QVec v = zero_vec(dim());
  v[i] = 1;
  return v;
}

QMatrix AlgebraTable::left_action(const QVec& x) const {
  const std::size_t n = dim();
  QMatrix L(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QVec col = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0) add_scaled(col, x[i], table_[i][j]);
    for (std::size_t k = 0; k < n; ++k) L.at(k, j) = col[k];
  }
  return L;
}

std::vector<QVec> radical(const AlgebraTable& T) {
  const std::size_t n = T.dim();
  // Gram matrix of the trace form: tr(L_i L_j) expands over table entries.
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          s += T.basis_product(i, l)[k] * T.basis_product(j, k)[l];
      gram.at(i, j) = s;
    }
  std::vector<QVec> kernel = kernel_basis(gram);
  if (kernel.empty()) return {};
  QMatrix rows = QMatrix::from_rows(kernel);
  rref_in_place(rows);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (!is_zero(rows.row(i))) out.push_back(rows.row(i));
  return out;
}

QVec Quotient::project(const QVec& v) const {
  QVec w = v;
  for (std::size_t r = 0; r < ideal_rows.rows(); ++r) {
    const QVec row = ideal_rows.row(r);
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) continue;
    const Rational c = w[pivot];
    if (c != 0) add_scaled(w, -c, row);
  }
  QVec out;
  out.reserve(kept.size());
  for (std::size_t idx : kept) out.push_back(w[idx]);
  return out;
}

Quotient quotient(const AlgebraTable& T, const std::vector<QVec>& ideal_vectors) {
  const std::size_t n = T.dim();
  QMatrix R(ideal_vectors.size(), n);
  for (std::size_t i = 0; i < ideal_vectors.size(); ++i) {
    if (ideal_vectors[i].size() != n)
      throw std::invalid_argument("quotient: vector dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) R.at(i, j) = ideal_vectors[i][j];
  }
  std::vector<std::size_t> pivots = rref_in_place(R);
  QMatrix ideal(pivots.size(), n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) ideal.at(i, j) = R.at(i, j);

  for (std::size_t r = 0; r < ideal.rows(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      const QVec b = T.basis_vector(i);
      if (!in_row_space(ideal, T.mul(b, ideal.row(r))) ||
          !in_row_space(ideal, T.mul(ideal.row(r), b)))
        throw std::invalid_argument("quotient: span is not a two-sided ideal");
    }

  Quotient q;
  q.ideal_rows = ideal;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) q.kept.push_back(j);

  std::vector<std::string> labels;
  labels.reserve(q.kept.size());
  for (std::size_t idx : q.kept) labels.push_back(T.labels()[idx]);
  std::vector<std::vector<QVec>> table(q.kept.size(), std::vector<QVec>(q.kept.size()));
  for (std::size_t i = 0; i < q.kept.size(); ++i)
    for (std::size_t j = 0; j < q.kept.size(); ++j)
      table[i][j] = q.project(T.basis_product(q.kept[i], q.kept[j]));
  q.table = AlgebraTable::make(std::move(labels), std::move(table), q.project(T.unit()));
  return q;
}

std::vector<QVec> center(const AlgebraTable& T) {
  const std::size_t n = T.dim();
  // Row (i, k) states coordinate k of x b_i - b_i x vanishes.
  QMatrix M(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        M.at(i * n + k, j) = T.basis_product(j, i)[k] - T.basis_product(i, j)[k];
  std::vector<QVec> kernel = kernel_basis(M);
  if (kernel.empty()) return {};
  QMatrix rows = QMatrix::from_rows(kernel);
  rref_in_place(rows);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (!is_zero(rows.row(i))) out.push_back(rows.row(i));
  return out;
}

namespace {

// Minimal polynomial of x acting on the unital subalgebra seeded at `seed`
// (the ordinary minimal polynomial when seed is the unit).
std::vector<Rational> minimal_polynomial_at(const AlgebraTable& T, const QVec& seed,
                                            const QVec& x) {
  const std::size_t n = T.dim();
  std::vector<QVec> powers{seed};
  for (std::size_t k = 1; k <= n + 1; ++k) {
    QVec next = T.mul(powers.back(), x);
    QMatrix M(n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) M.at(i, j) = powers[j][i];
    if (std::optional<QVec> combo = solve(M, next)) {
      std::vector<Rational> coeffs(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*combo)[i];
      coeffs[k] = 1;
      return coeffs;
    }
    powers.push_back(std::move(next));
  }
  throw std::logic_error("minimal polynomial: no linear dependence found");
}

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

// Divides out (t - r); the caller guarantees r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
  const std::size_t d = coeffs.size() - 1;
  std::vector<Rational> q(d, Rational(0));
  q[d - 1] = coeffs[d];
  for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = coeffs[i] + r * q[i];
  return q;
}

struct RootScan {
  std::vector<Rational> roots;  // ascending, with repeats kept
  bool split = true;
  bool repeated = false;
};

RootScan rational_roots(std::vector<Rational> work) {
  RootScan scan;
  while (work.size() > 1) {
    if (work[0] == 0) {
      scan.roots.emplace_back(0);
      work.erase(work.begin());
      continue;
    }
    Integer denom_lcm = 1;
    for (const Rational& c : work) {
      Integer d = c.get_den();
      denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }
    const Integer lead = Rational(work.back() * denom_lcm).get_num();
    const Integer constant = Rational(work.front() * denom_lcm).get_num();
    bool found = false;
    for (const Integer& p : positive_divisors(constant)) {
      for (const Integer& q : positive_divisors(lead)) {
        if (gcd(p, q) != 1) continue;
        for (int s : {1, -1}) {
          Rational r(s * p, q);
          r.canonicalize();
          if (eval_poly(work, r) == 0) {
            scan.roots.push_back(r);
            work = deflate(work, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) {
      scan.split = false;
      break;
    }
  }
  std::sort(scan.roots.begin(), scan.roots.end());
  for (std::size_t i = 1; i < scan.roots.size(); ++i)
    if (scan.roots[i] == scan.roots[i - 1]) scan.repeated = true;
  return scan;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const AlgebraTable& T, const QVec& x) {
  return minimal_polynomial_at(T, T.unit(), x);
}

std::vector<QVec> split_idempotents(const AlgebraTable& T, const std::vector<QVec>& central) {
  std::vector<QVec> idems{T.unit()};
  for (std::size_t sweep = 0; sweep <= T.dim(); ++sweep) {
    bool changed = false;
    for (const QVec& z : central) {
      std::vector<QVec> next;
      for (const QVec& e : idems) {
        const QVec ze = T.mul(e, z);
        std::vector<Rational> minp = minimal_polynomial_at(T, e, ze);
        if (minp.size() <= 2) {
          next.push_back(e);
          continue;
        }
        RootScan scan = rational_roots(minp);
        if (!scan.split || scan.repeated)
          throw std::domain_error(
              "cannot split over Q: central minimal polynomial has a repeated or "
              "irrational root");
        for (const Rational& lambda : scan.roots) {
          QVec f = e;
          for (const Rational& mu : scan.roots) {
            if (mu == lambda) continue;
            QVec shifted = ze;
            add_scaled(shifted, -mu, e);
            f = scale(Rational(1) / (lambda - mu), T.mul(f, shifted));
          }
          next.push_back(std::move(f));
        }
        changed = true;
      }
      idems = std::move(next);
    }
    if (!changed) break;
  }
  // Every central element must now act as a scalar on every summand.
  for (const QVec& e : idems)
    for (const QVec& z : central) {
      const QVec ze = T.mul(e, z);
      std::size_t i0 = 0;
      while (i0 < e.size() && e[i0] == 0) ++i0;
      if (i0 == e.size()) throw std::logic_error("idempotent split produced zero");
      QVec expect = scale(ze[i0] / e[i0], e);
      if (expect != ze) throw std::logic_error("idempotent split did not stabilize");
    }
  return idems;
}

namespace {

bool try_matrix_units(const AlgebraTable& T, const QVec& e, const std::vector<QVec>& basis,
                      MatrixUnits& out) {
  std::vector<QVec> seeds;
  for (const QVec& r : basis) seeds.push_back(r);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) seeds.push_back(basis[i] + basis[j]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j) seeds.push_back(basis[i] - basis[j]);

  for (const QVec& s : seeds) {
    std::vector<Rational> minp = minimal_polynomial_at(T, e, s);
    if (minp.size() != 3) continue;
    RootScan scan = rational_roots(minp);
    if (!scan.split || scan.repeated) continue;
    // Spectral idempotent for the smaller eigenvalue.
    const Rational lambda = scan.roots[0], mu = scan.roots[1];
    QVec shifted = s;
    add_scaled(shifted, -mu, e);
    QVec p = scale(Rational(1) / (lambda - mu), T.mul(e, shifted));
    bool central_in_component = true;
    for (const QVec& r : basis)
      if (T.mul(p, r) != T.mul(r, p)) {
        central_in_component = false;
        break;
      }
    if (central_in_component) continue;

    const QVec e11 = p;
    QVec e22 = e;
    add_scaled(e22, Rational(-1), p);
    QVec e12;
    for (const QVec& r : basis) {
      QVec v = T.mul(T.mul(e11, r), e22);
      if (!is_zero(v)) {
        e12 = v;
        break;
      }
    }
    if (e12.empty()) continue;
    QVec e21;
    for (const QVec& r : basis) {
      QVec w = T.mul(T.mul(e22, r), e11);
      if (is_zero(w)) continue;
      QVec q = T.mul(e12, w);
      std::size_t i0 = 0;
      while (i0 < e11.size() && e11[i0] == 0) ++i0;
      if (i0 == e11.size() || q[i0] == 0) continue;
      const Rational lam = q[i0] / e11[i0];
      if (q != scale(lam, e11)) continue;
      e21 = scale(Rational(1) / lam, w);
      break;
    }
    if (e21.empty()) continue;

    const QVec units[2][2] = {{e11, e12}, {e21, e22}};
    bool ok = true;
    for (int a = 0; a < 2 && ok; ++a)
      for (int b = 0; b < 2 && ok; ++b)
        for (int c = 0; c < 2 && ok; ++c)
          for (int d = 0; d < 2 && ok; ++d) {
            QVec prod = T.mul(units[a][b], units[c][d]);
            QVec expect = b == c ? units[a][d] : zero_vec(e.size());
            if (prod != expect) ok = false;
          }
    if (!ok) continue;
    QVec sum = e11 + e22;
    if (sum != e) continue;
    QMatrix span = QMatrix::from_rows({e11, e12, e21, e22});
    if (rank(span) != 4) continue;
    out = MatrixUnits{e11, e12, e21, e22};
    return true;
  }
  return false;
}

Component identify_component(const AlgebraTable& T, const QVec& e) {
  Component comp;
  comp.idempotent = e;
  std::vector<QVec> span;
  for (std::size_t j = 0; j < T.dim(); ++j) span.push_back(T.mul(e, T.basis_vector(j)));
  QMatrix rows = QMatrix::from_rows(span);
  rref_in_place(rows);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (!is_zero(rows.row(i))) comp.basis.push_back(rows.row(i));
  comp.dimension = comp.basis.size();

  if (comp.dimension == 1) {
    comp.kind = Component::Kind::ground_field;
    comp.irreducible_dim = 1;
    return comp;
  }
  if (comp.dimension == 4) {
    MatrixUnits units;
    if (try_matrix_units(T, e, comp.basis, units)) {
      comp.kind = Component::Kind::matrix_2x2;
      comp.irreducible_dim = 2;
      comp.units = units;
      return comp;
    }
  }
  comp.kind = Component::Kind::unidentified_simple;
  comp.irreducible_dim = 0;
  return comp;
}

}  // namespace

WedderburnReport decompose(const AlgebraTable& T) {
  WedderburnReport report;
  report.input_labels = T.labels();
  report.radical_basis = radical(T);
  report.radical_products.resize(report.radical_basis.size());
  for (std::size_t i = 0; i < report.radical_basis.size(); ++i) {
    report.radical_products[i].resize(report.radical_basis.size());
    for (std::size_t j = 0; j < report.radical_basis.size(); ++j)
      report.radical_products[i][j] = T.mul(report.radical_basis[i], report.radical_basis[j]);
  }
  report.semisimple = quotient(T, report.radical_basis);
  if (!radical(report.semisimple.table).empty())
    throw std::logic_error("quotient by the radical is not semisimple");
  report.center_basis = center(report.semisimple.table);
  report.idempotents = split_idempotents(report.semisimple.table, report.center_basis);
  for (const QVec& e : report.idempotents) {
    Component comp = identify_component(report.semisimple.table, e);
    report.irreducible_dims.push_back(comp.irreducible_dim);
    report.components.push_back(std::move(comp));
  }
  return report;
}

OJson to_json(const AlgebraTable& T) {
  OJson out;
  out["labels"] = T.labels();
  out["unit"] = json_vec(T.unit());
  OJson table = OJson::array();
  for (std::size_t i = 0; i < T.dim(); ++i) {
    OJson row = OJson::array();
    for (std::size_t j = 0; j < T.dim(); ++j) row.push_back(json_vec(T.basis_product(i, j)));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  return out;
}

OJson to_json(const WedderburnReport& report) {
  OJson out;
  out["labels"] = report.input_labels;
  OJson rad;
  rad["basis"] = json_vec_list(report.radical_basis);
  OJson rad_table = OJson::array();
  for (const auto& row : report.radical_products) rad_table.push_back(json_vec_list(row));
  rad["products"] = std::move(rad_table);
  out["radical"] = std::move(rad);
  out["semisimple"] = to_json(report.semisimple.table);
  out["center"] = json_vec_list(report.center_basis);
  out["idempotents"] = json_vec_list(report.idempotents);
  OJson comps = OJson::array();
  for (const Component& c : report.components) {
    OJson jc;
    jc["idempotent"] = json_vec(c.idempotent);
    jc["dimension"] = c.dimension;
    switch (c.kind) {
      case Component::Kind::ground_field: jc["kind"] = "ground-field"; break;
      case Component::Kind::matrix_2x2: jc["kind"] = "matrix-2x2"; break;
      case Component::Kind::unidentified_simple: jc["kind"] = "unidentified-simple"; break;
    }
    jc["irreducible_dim"] = c.irreducible_dim;
    jc["basis"] = json_vec_list(c.basis);
    if (c.units) {
      OJson ju;
      ju["e11"] = json_vec(c.units->e11);
      ju["e12"] = json_vec(c.units->e12);
      ju["e21"] = json_vec(c.units->e21);
      ju["e22"] = json_vec(c.units->e22);
      jc["units"] = std::move(ju);
    }
    comps.push_back(std::move(jc));
  }
  out["components"] = std::move(comps);
  out["irreducible_dims"] = report.irreducible_dims;
  return out;
}

}  // namespace uae
