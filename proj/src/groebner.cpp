#include "uae/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace uae {
namespace {

void check_reducers(const std::vector<FreePoly>& basis) {
  for (const FreePoly& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero reducer");
    if (g.leading_term().second != 1) throw std::invalid_argument("normal_form: non-monic reducer");
  }
}

// First basis element (list order) whose leading monomial occurs in w.
const FreePoly* find_reducer(const Word& w, const std::vector<FreePoly>& basis,
                             std::pair<Word, Word>* split) {
  for (const FreePoly& g : basis) {
    if (auto occ = find_factor(g.leading_monomial(), w)) {
      *split = *occ;
      return &g;
    }
  }
  return nullptr;
}

}  // namespace

FreePoly normal_form(const FreePoly& f, const std::vector<FreePoly>& basis) {
  check_reducers(basis);
  FreePoly r = f;
  bool have_cap = false;
  Word cap;  // words above this are already known irreducible
  while (!r.is_zero()) {
    const FreePoly* g = nullptr;
    Word w;
    Rational c;
    std::pair<Word, Word> split;
    // Scan terms from the deglex-greatest down; rewrites only introduce words
    // below the rewritten one, so anything above the last cap stays normal.
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      if (have_cap && cap < it->first) continue;
      if (const FreePoly* hit = find_reducer(it->first, basis, &split)) {
        g = hit;
        w = it->first;
        c = it->second;
        break;
      }
    }
    if (g == nullptr) break;
    r -= scale(c, g->left_mul(split.first).right_mul(split.second));
    cap = w;
    have_cap = true;
  }
  return r;
}

namespace {

// Overlap records for the ordered orientation (left, right): a proper suffix
// of LM(left) equals a proper prefix of LM(right).
void oriented_overlaps(const FreePoly& left, const FreePoly& right,
                       std::size_t left_index, std::size_t right_index,
                       std::vector<CompositionRecord>& out) {
  const Word p = left.leading_monomial();
  const Word q = right.leading_monomial();
  if (p.degree() < 2 || q.degree() < 2) return;
  const std::size_t max_len = std::min(p.degree(), q.degree()) - 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (p.subword(p.degree() - len, len) != q.subword(0, len)) continue;
    CompositionRecord rec;
    rec.g_index = left_index;
    rec.h_index = right_index;
    rec.u = q.subword(len, q.degree() - len);
    rec.v = p.subword(0, p.degree() - len);
    rec.u_prefix_ = q;
    rec.value = left.right_mul(rec.u) - right.left_mul(rec.v);
    out.push_back(std::move(rec));
  }
}

bool divides(const Word& u, const Word& w) { return find_factor(u, w).has_value(); }

}  // namespace

std::vector<CompositionRecord> compositions(const FreePoly& g, const FreePoly& h) {
  check_reducers({g, h});
  std::vector<CompositionRecord> out;
  oriented_overlaps(g, h, 0, 1, out);
  if (!(g == h)) oriented_overlaps(h, g, 1, 0, out);
  return out;
}

std::vector<CompositionRecord> all_compositions(const std::vector<FreePoly>& polys) {
  check_reducers(polys);
  std::vector<CompositionRecord> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i != j) {
        const Word lmi = polys[i].leading_monomial();
        const Word lmj = polys[j].leading_monomial();
        if (divides(lmi, lmj) || divides(lmj, lmi)) continue;
      }
      oriented_overlaps(polys[i], polys[j], i, j, out);
    }
  }
  return out;
}

std::vector<FreePoly> self_reduce(std::vector<FreePoly> polys) {
  std::vector<FreePoly> work;
  for (FreePoly& f : polys)
    if (!f.is_zero()) work.push_back(f.monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      std::vector<FreePoly> others;
      others.reserve(work.size() - 1);
      for (std::size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      FreePoly r = normal_form(work[i], others);
      if (r == work[i]) continue;
      changed = true;
      if (r.is_zero()) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
      } else {
        work[i] = r.monic();
      }
    }
  }
  std::sort(work.begin(), work.end(), [](const FreePoly& a, const FreePoly& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  return work;
}

GBasis complete(const std::vector<FreePoly>& generators, GensPtr gens,
                std::size_t degree_cap) {
  GBasis result;
  result.gens = gens;
  result.degree_cap = degree_cap;
  std::vector<FreePoly> g;
  for (const FreePoly& f : generators)
    if (!f.is_zero()) g.push_back(f.monic());
  for (;;) {
    std::vector<CompositionRecord> recs = all_compositions(g);
    std::sort(recs.begin(), recs.end(), [](const CompositionRecord& a, const CompositionRecord& b) {
      return std::tuple(a.overlap(), a.g_index, a.h_index, a.u.degree()) <
             std::tuple(b.overlap(), b.g_index, b.h_index, b.u.degree());
    });
    std::vector<FreePoly> fresh;
    for (const CompositionRecord& rec : recs) {
      FreePoly r = normal_form(rec.value, g);
      if (r.is_zero()) continue;
      r = r.monic();
      if (r.leading_monomial().degree() > degree_cap) {
        result.elements = self_reduce(g);
        result.status = GBStatus::truncated;
        return result;
      }
      if (std::find(fresh.begin(), fresh.end(), r) == fresh.end()) fresh.push_back(r);
    }
    if (!fresh.empty()) {
      for (FreePoly& f : fresh) g.push_back(std::move(f));
      g = self_reduce(std::move(g));
      ++result.rounds;
      continue;
    }
    // No new remainders, but a raw input may still hide containment pairs
    // whose compositions were skipped; only a self-reduction fixed point is
    // genuinely complete.
    std::vector<FreePoly> reduced = self_reduce(g);
    if (reduced == g) break;
    g = std::move(reduced);
  }
  result.elements = std::move(g);
  result.status = GBStatus::complete;
  return result;
}

std::vector<std::vector<Word>> normal_words(const GBasis& basis, std::size_t max_degree) {
  std::vector<std::vector<Word>> levels(max_degree + 1);
  std::vector<Word> lms;
  for (const FreePoly& g : basis.elements) lms.push_back(g.leading_monomial());
  for (const Word& lm : lms)
    if (lm.empty()) return levels;  // the ideal is the whole ring
  const std::size_t m = basis.gens ? basis.gens->size() : 0;
  levels[0].push_back(Word());
  for (std::size_t d = 0; d + 1 <= max_degree; ++d) {
    for (const Word& w : levels[d]) {
      for (unsigned x = 0; x < m; ++x) {
        Word ext = w * Word::single(x);
        // Every proper factor of ext is a factor of w, so only suffixes of
        // the extension need testing against the leading monomials.
        bool normal = true;
        for (const Word& lm : lms) {
          const std::size_t t = lm.degree();
          if (t > ext.degree()) continue;
          if (ext.subword(ext.degree() - t, t) == lm) {
            normal = false;
            break;
          }
        }
        if (normal) levels[d + 1].push_back(std::move(ext));
      }
    }
  }
  return levels;
}

Finiteness finiteness(const GBasis& basis, std::size_t probe_cap) {
  Finiteness out;
  if (basis.status != GBStatus::complete) return out;  // unknown
  const std::size_t m = basis.gens ? basis.gens->size() : 0;
  std::size_t max_lm = 0;
  for (const FreePoly& g : basis.elements)
    max_lm = std::max(max_lm, g.leading_monomial().degree());
  if (m == 0) {
    out.kind = Finiteness::Kind::finite;
    out.dimension = basis.elements.empty() ? 1 : 0;
    return out;
  }
  const std::size_t window = max_lm > 0 ? max_lm - 1 : 0;
  // Pigeonhole bound: a normal word with more than m^window suffix windows
  // repeats a window state, so its middle pumps and the algebra is infinite.
  std::size_t threshold = 1;
  bool threshold_ok = true;
  for (std::size_t i = 0; i < window; ++i) {
    if (threshold > probe_cap) {
      threshold_ok = false;
      break;
    }
    threshold *= m;
  }
  threshold += window;
  const std::vector<std::vector<Word>> levels = normal_words(basis, probe_cap);
  std::size_t total = 0;
  for (std::size_t d = 0; d < levels.size(); ++d) {
    if (levels[d].empty()) {
      out.kind = Finiteness::Kind::finite;
      out.dimension = total;
      return out;
    }
    total += levels[d].size();
    if (threshold_ok && d >= threshold) {
      out.kind = Finiteness::Kind::infinite_witnessed;
      out.witness_degree = d;
      return out;
    }
  }
  return out;  // unknown: probe cap too small to decide
}

OJson to_json(const GBasis& basis) {
  OJson j;
  OJson names = OJson::array();
  if (basis.gens)
    for (std::size_t i = 0; i < basis.gens->size(); ++i) names.push_back(basis.gens->name(i));
  j["generators"] = std::move(names);
  j["status"] = basis.status == GBStatus::complete ? "complete" : "truncated";
  j["degree_cap"] = basis.degree_cap;
  j["rounds"] = basis.rounds;
  OJson elems = OJson::array();
  for (const FreePoly& g : basis.elements) elems.push_back(to_string(g));
  j["elements"] = std::move(elems);
  if (basis.status == GBStatus::complete) {
    OJson counts = OJson::array();
    for (const auto& level : normal_words(basis, basis.degree_cap)) counts.push_back(level.size());
    j["normal_word_counts"] = std::move(counts);
  }
  return j;
}

}  // namespace uae
