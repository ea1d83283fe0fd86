#include "uae/envelope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace uae {

namespace {

QMatrix matrix_unit(std::size_t r, std::size_t c) {
  QMatrix m(2, 2);
  m.at(r, c) = 1;
  return m;
}

}  // namespace

TripleSystem triple_system_from_operation(const TrilinearOp& op) {
  TripleSystem sys;
  sys.op = op;
  const QMatrix e[2] = {matrix_unit(0, 1), matrix_unit(1, 0)};
  auto mat_mul = [](const QMatrix& x, const QMatrix& y) { return x * y; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        QMatrix prod = apply(op, e[i], e[j], e[k], mat_mul);
        if (prod.at(0, 0) != 0 || prod.at(1, 1) != 0)
          throw std::domain_error("triple product leaves the span of e1, e2");
        sys.products[i][j][k] = QVec{prod.at(0, 1), prod.at(1, 0)};
      }
  return sys;
}

std::vector<FreePoly> envelope_relations(const TripleSystem& sys, const GensPtr& gens) {
  if (gens->size() != 2) throw std::invalid_argument("envelope relations need two generators");
  const FreePoly x[2] = {FreePoly::generator(gens, 0), FreePoly::generator(gens, 1)};
  auto poly_mul = [](const FreePoly& p, const FreePoly& q) { return p * q; };
  std::vector<FreePoly> rels;
  rels.reserve(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        FreePoly lhs = apply(sys.op, x[i], x[j], x[k], poly_mul);
        const QVec& c = sys.products[i][j][k];
        lhs -= scale(c[0], x[0]) + scale(c[1], x[1]);
        rels.push_back(std::move(lhs));
      }
  return rels;
}

EnvelopePresentation build_envelope(const TrilinearOp& op, std::size_t degree_cap) {
  EnvelopePresentation env;
  env.gens = make_gens({"a", "b"});
  env.op = op;
  env.raw_relations = envelope_relations(triple_system_from_operation(op), env.gens);

  for (std::size_t i = 0; i < env.raw_relations.size(); ++i) {
    if (env.raw_relations[i].is_zero()) continue;
    FreePoly m = env.raw_relations[i].monic();
    if (std::find(env.relations.begin(), env.relations.end(), m) != env.relations.end())
      continue;
    env.relations.push_back(std::move(m));
    env.provenance.push_back(i);
  }

  env.basis = complete(env.relations, env.gens, degree_cap);
  env.verdict = finiteness(env.basis, degree_cap);

  if (env.verdict.kind == Finiteness::Kind::finite) {
    // Enumerate normal words up to the first empty degree.
    std::vector<std::vector<Word>> levels;
    for (std::size_t d = 0;; ++d) {
      levels = normal_words(env.basis, d);
      if (levels.back().empty()) break;
    }
    for (const auto& level : levels)
      for (const Word& w : level) env.normal_basis.push_back(w);
    if (env.normal_basis.empty()) return env;  // everything collapsed; no table

    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < env.normal_basis.size(); ++i) index[env.normal_basis[i]] = i;
    const std::size_t n = env.normal_basis.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const Word& w : env.normal_basis) labels.push_back(to_string(w, *env.gens));
    std::vector<std::vector<QVec>> table(n, std::vector<QVec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FreePoly prod = normal_form(
            FreePoly::term(env.gens, env.normal_basis[i] * env.normal_basis[j], Rational(1)),
            env.basis.elements);
        QVec coords(n, Rational(0));
        for (const auto& [w, c] : prod.terms()) coords[index.at(w)] = c;
        table[i][j] = std::move(coords);
      }
    QVec unit(n, Rational(0));
    unit[index.at(Word())] = 1;
    env.table = AlgebraTable::make(std::move(labels), std::move(table), std::move(unit));
  }
  return env;
}

std::vector<std::size_t> graded_dims(const GBasis& basis, std::size_t max_degree) {
  std::vector<std::size_t> dims;
  for (const auto& level : normal_words(basis, max_degree)) dims.push_back(level.size());
  return dims;
}

namespace {

// d-th finite differences of an exact integer sequence.
std::vector<Integer> differences(std::vector<Integer> v, std::size_t d) {
  for (std::size_t round = 0; round < d; ++round) {
    if (v.size() < 2) return {};
    std::vector<Integer> next;
    next.reserve(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) next.push_back(v[i + 1] - v[i]);
    v = std::move(next);
  }
  return v;
}

}  // namespace

GrowthEstimate growth_estimate(const std::vector<std::size_t>& dims_by_degree) {
  GrowthEstimate est;
  std::vector<Integer> cumulative;
  Integer total = 0;
  for (std::size_t d : dims_by_degree) {
    total += static_cast<long>(d);
    cumulative.push_back(total);
  }

  constexpr std::size_t burn_in = 2;
  std::vector<Integer> even, odd;
  for (std::size_t i = 0; i < cumulative.size(); ++i)
    (i % 2 == 0 ? even : odd).push_back(cumulative[i]);
  if (even.size() > burn_in) even.erase(even.begin(), even.begin() + burn_in);
  else even.clear();
  if (odd.size() > burn_in) odd.erase(odd.begin(), odd.begin() + burn_in);
  else odd.clear();

  for (std::size_t d = 0; d <= 6; ++d) {
    std::vector<Integer> pooled = differences(even, d);
    std::vector<Integer> odd_diffs = differences(odd, d);
    pooled.insert(pooled.end(), odd_diffs.begin(), odd_diffs.end());
    if (pooled.size() < 3) break;
    bool constant = true;
    for (const Integer& x : pooled)
      if (x != pooled.front()) {
        constant = false;
        break;
      }
    if (!constant) continue;
    if (d >= 1 && pooled.front() == 0) continue;  // settled at a lower order already
    est.kind = GrowthEstimate::Kind::polynomial;
    est.degree = d;
    return est;
  }

  // Exponential test on the tail half: every consecutive ratio at least 7/5.
  const std::size_t start = cumulative.size() / 2;
  if (cumulative.size() >= 4 && start + 1 < cumulative.size()) {
    bool exponential = true;
    for (std::size_t i = start; i + 1 < cumulative.size(); ++i)
      if (cumulative[i + 1] * 5 < cumulative[i] * 7) {
        exponential = false;
        break;
      }
    if (exponential) {
      est.kind = GrowthEstimate::Kind::exponential;
      return est;
    }
  }
  est.kind = GrowthEstimate::Kind::inconclusive;
  return est;
}

int word_weight(const Word& w) {
  int weight = 0;
  for (std::size_t i = 0; i < w.degree(); ++i) weight += w.letter(i) == 0 ? 1 : -1;
  return weight;
}

bool weight_homogeneous(const FreePoly& p) {
  if (p.is_zero()) return true;
  const int w0 = word_weight(p.terms().begin()->first);
  for (const auto& [w, c] : p.terms())
    if (word_weight(w) != w0) return false;
  return true;
}

bool grading_check(const EnvelopePresentation& env) {
  for (const FreePoly& g : env.basis.elements)
    if (!weight_homogeneous(g)) return false;
  return true;
}

OJson to_json(const Finiteness& verdict) {
  OJson out;
  switch (verdict.kind) {
    case Finiteness::Kind::finite:
      out["kind"] = "finite";
      out["dimension"] = verdict.dimension;
      break;
    case Finiteness::Kind::infinite_witnessed:
      out["kind"] = "infinite";
      out["witness_degree"] = verdict.witness_degree;
      break;
    case Finiteness::Kind::unknown:
      out["kind"] = "unknown";
      break;
  }
  return out;
}

OJson to_json(const GrowthEstimate& estimate) {
  OJson out;
  switch (estimate.kind) {
    case GrowthEstimate::Kind::polynomial:
      out["kind"] = "polynomial";
      out["degree"] = estimate.degree;
      break;
    case GrowthEstimate::Kind::exponential:
      out["kind"] = "exponential";
      break;
    case GrowthEstimate::Kind::inconclusive:
      out["kind"] = "inconclusive";
      break;
  }
  return out;
}

OJson to_json(const EnvelopePresentation& env) {
  OJson out;
  out["operation"] = to_json(env.op);
  OJson raw = OJson::array();
  for (const FreePoly& r : env.raw_relations) raw.push_back(to_string(r));
  out["raw_relations"] = std::move(raw);
  OJson rels = OJson::array();
  for (const FreePoly& r : env.relations) rels.push_back(to_string(r));
  out["relations"] = std::move(rels);
  out["provenance"] = env.provenance;
  out["groebner"] = to_json(env.basis);
  out["verdict"] = to_json(env.verdict);
  if (!env.normal_basis.empty()) {
    OJson words = OJson::array();
    for (const Word& w : env.normal_basis) words.push_back(to_string(w, *env.gens));
    out["basis_words"] = std::move(words);
  }
  if (env.table) out["table"] = to_json(*env.table);
  return out;
}

}  // namespace uae
