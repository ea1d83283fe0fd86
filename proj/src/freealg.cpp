#include "uae/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace uae {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("GeneratorSet: empty name");
    if (std::count(names_.begin(), names_.end(), n) != 1)
      throw std::invalid_argument("GeneratorSet: duplicate name " + n);
  }
  if (names_.size() > 255) throw std::invalid_argument("GeneratorSet: too many generators");
}

const std::string& GeneratorSet::name(std::size_t i) const {
  if (i >= names_.size()) throw std::out_of_range("GeneratorSet::name");
  return names_[i];
}

std::optional<std::size_t> GeneratorSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

GensPtr make_gens(std::initializer_list<std::string> names) {
  return std::make_shared<const GeneratorSet>(std::vector<std::string>(names));
}

GensPtr make_gens(std::vector<std::string> names) {
  return std::make_shared<const GeneratorSet>(std::move(names));
}

Word Word::single(unsigned letter) {
  Word w;
  w.letters_.push_back(static_cast<char>(letter));
  return w;
}

Word Word::from_letters(const std::vector<unsigned>& letters) {
  Word w;
  for (unsigned x : letters) w.letters_.push_back(static_cast<char>(x));
  return w;
}

Word Word::power(unsigned letter, std::size_t count) {
  Word w;
  w.letters_.assign(count, static_cast<char>(letter));
  return w;
}

unsigned Word::letter(std::size_t pos) const {
  if (pos >= letters_.size()) throw std::out_of_range("Word::letter");
  return static_cast<unsigned char>(letters_[pos]);
}

Word Word::operator*(const Word& rhs) const {
  Word w;
  w.letters_ = letters_ + rhs.letters_;
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("Word::subword");
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() < rhs.letters_.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = letters_.compare(rhs.letters_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering deglex_cmp(const Word& u, const Word& v) { return u <=> v; }

std::optional<std::pair<Word, Word>> find_factor(const Word& u, const Word& w) {
  if (u.degree() > w.degree()) return std::nullopt;
  std::size_t span = w.degree() - u.degree();
  for (std::size_t pos = 0; pos <= span; ++pos) {
    bool hit = true;
    for (std::size_t j = 0; j < u.degree(); ++j)
      if (w.letter(pos + j) != u.letter(j)) {
        hit = false;
        break;
      }
    if (hit) return std::make_pair(w.subword(0, pos), w.subword(pos + u.degree(), w.degree() - pos - u.degree()));
  }
  return std::nullopt;
}

Word reversed(const Word& w) {
  std::vector<unsigned> letters;
  letters.reserve(w.degree());
  for (std::size_t i = w.degree(); i > 0; --i) letters.push_back(w.letter(i - 1));
  return Word::from_letters(letters);
}

Word map_letters(const Word& w, const std::vector<unsigned>& image) {
  std::vector<unsigned> letters;
  letters.reserve(w.degree());
  for (std::size_t i = 0; i < w.degree(); ++i) {
    unsigned x = w.letter(i);
    if (x >= image.size()) throw std::invalid_argument("map_letters: letter outside image table");
    letters.push_back(image[x]);
  }
  return Word::from_letters(letters);
}

Word zeta(const Word& w) { return map_letters(reversed(w), {1, 0}); }

FreePoly zeta(const FreePoly& p) {
  if (!p.gens() || p.gens()->size() != 2)
    throw std::invalid_argument("zeta needs a two-generator polynomial");
  FreePoly out(p.gens());
  for (const auto& [w, c] : p.terms()) out += FreePoly::term(p.gens(), zeta(w), c);
  return out;
}

std::string to_string(const Word& w, const GeneratorSet& gens) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) out += gens.name(w.letter(i));
  return out;
}

FreePoly::FreePoly(GensPtr gens) : gens_(std::move(gens)) {
  if (!gens_) throw std::invalid_argument("FreePoly: null generator set");
}

FreePoly FreePoly::term(GensPtr gens, Word w, Rational c) {
  FreePoly f(std::move(gens));
  for (std::size_t i = 0; i < w.degree(); ++i)
    if (w.letter(i) >= f.gens_->size()) throw std::invalid_argument("FreePoly: letter outside generator set");
  if (c != 0) f.terms_.emplace(std::move(w), std::move(c));
  return f;
}

FreePoly FreePoly::generator(GensPtr gens, std::size_t i) {
  if (i >= gens->size()) throw std::invalid_argument("FreePoly::generator: index out of range");
  return term(std::move(gens), Word::single(static_cast<unsigned>(i)), 1);
}

FreePoly FreePoly::constant(GensPtr gens, Rational c) { return term(std::move(gens), Word(), std::move(c)); }

Rational FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Word, Rational> FreePoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
  auto it = std::prev(terms_.end());
  return {it->first, it->second};
}

void FreePoly::add_term(const Word& w, const Rational& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void FreePoly::check_compatible(const FreePoly& rhs) const {
  if (!gens_ || !rhs.gens_) throw std::invalid_argument("FreePoly: uninitialized operand");
  if (gens_ != rhs.gens_ && !(*gens_ == *rhs.gens_))
    throw std::invalid_argument("FreePoly: mismatched generator sets");
}

FreePoly FreePoly::operator+(const FreePoly& rhs) const {
  FreePoly r = *this;
  r += rhs;
  return r;
}

FreePoly FreePoly::operator-(const FreePoly& rhs) const {
  FreePoly r = *this;
  r -= rhs;
  return r;
}

FreePoly FreePoly::operator-() const {
  FreePoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

FreePoly FreePoly::operator*(const FreePoly& rhs) const {
  check_compatible(rhs);
  FreePoly r(gens_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : rhs.terms_) r.add_term(u * v, cu * cv);
  return r;
}

bool FreePoly::operator==(const FreePoly& rhs) const {
  if (gens_ && rhs.gens_) check_compatible(rhs);
  return terms_ == rhs.terms_;
}

FreePoly FreePoly::left_mul(const Word& w) const {
  FreePoly r(gens_);
  for (const auto& [u, c] : terms_) r.terms_.emplace(w * u, c);
  return r;
}

FreePoly FreePoly::right_mul(const Word& w) const {
  FreePoly r(gens_);
  for (const auto& [u, c] : terms_) r.terms_.emplace(u * w, c);
  return r;
}

FreePoly FreePoly::monic() const {
  auto [lm, lc] = leading_term();
  return scale(1 / lc, *this);
}

FreePoly scale(const Rational& c, const FreePoly& f) {
  FreePoly r(f.gens());
  if (c == 0) return r;
  for (const auto& [w, x] : f.terms()) r.terms_.emplace(w, c * x);
  return r;
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Parser {
  GensPtr gens;
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos == text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::optional<std::string> digits() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return std::string(text.substr(start, pos - start));
  }

  std::optional<Rational> coefficient() {
    skip_space();
    auto num = digits();
    if (!num) return std::nullopt;
    Integer n(*num), d(1);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      auto den = digits();
      if (!den) throw ParseError(pos, "expected denominator digits");
      d = Integer(*den);
      if (d == 0) throw ParseError(pos, "zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  // Longest-match generator name at the current position.
  std::optional<unsigned> letter() {
    skip_space();
    std::optional<unsigned> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < gens->size(); ++i) {
      const std::string& n = gens->name(i);
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = static_cast<unsigned>(i);
        best_len = n.size();
      }
    }
    if (best) pos += best_len;
    return best;
  }

  std::optional<Word> word() {
    std::vector<unsigned> letters;
    while (true) {
      auto x = letter();
      if (!x) break;
      letters.push_back(*x);
    }
    if (letters.empty()) return std::nullopt;
    return Word::from_letters(letters);
  }

  FreePoly poly() {
    FreePoly f(gens);
    bool first = true;
    while (!done()) {
      int sign = 1;
      char c = peek();
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError(pos, "expected '+' or '-'");
      }
      skip_space();
      std::size_t term_start = pos;
      auto coeff = coefficient();
      if (coeff) {
        skip_space();
        if (pos < text.size() && text[pos] == '*') ++pos;
      }
      auto w = word();
      if (!coeff && !w) throw ParseError(term_start, "expected a coefficient or a word");
      Rational c0 = coeff ? *coeff : Rational(1);
      if (sign < 0) c0 = -c0;
      f += FreePoly::term(gens, w ? *w : Word(), c0);
      first = false;
    }
    if (first) throw ParseError(0, "empty polynomial text");
    return f;
  }
};

}  // namespace

FreePoly parse_poly(GensPtr gens, std::string_view text) {
  Parser p{std::move(gens), text};
  return p.poly();
}

std::string to_string(const FreePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  // Leading term first: iterate the deglex map backwards.
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      out << abs.get_str();
    } else {
      if (abs != 1) out << abs.get_str() << " ";
      out << to_string(w, *f.gens());
    }
  }
  return out.str();
}

}  // namespace uae
