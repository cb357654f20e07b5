#include "swe/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace swe {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kAlphabetSize)
    throw std::invalid_argument("a morphism needs a domain of 1 to 3 letters");
}

Morphism Morphism::identity(int domain_size) {
  std::vector<Word> images;
  for (int a = 0; a < domain_size; ++a) images.push_back(Word::from_letters({static_cast<Letter>(a)}));
  return Morphism(std::move(images));
}

int Morphism::codomain_size() const {
  int n = domain_size();
  for (const Word& w : images_)
    for (Letter a : w.letters()) n = std::max(n, a + 1);
  return n;
}

Word Morphism::operator()(const Word& w) const {
  WordBuilder out;
  for (char c : w.digits()) {
    auto a = static_cast<std::size_t>(c - '0');
    if (a >= images_.size())
      throw std::invalid_argument("letter " + std::string(1, c) + " is outside the morphism's domain");
    out.append(images_[a].digits());
  }
  return std::move(out).build();
}

bool Morphism::is_erasing() const {
  return std::any_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

bool Morphism::is_permutation() const {
  LetterSet hit;
  for (const Word& w : images_) {
    if (w.size() != 1 || w[0] >= images_.size()) return false;
    hit.set(w[0]);
  }
  return hit.count() == images_.size();
}

std::size_t Morphism::total_length() const {
  std::size_t n = 0;
  for (const Word& w : images_) n += w.size();
  return n;
}

Word apply(const Morphism& f, const Word& w) { return f(w); }

Morphism compose(const Morphism& g, const Morphism& f) {
  for (const Word& w : f.images())
    for (Letter a : w.letters())
      if (a >= g.domain_size())
        throw std::invalid_argument("cannot compose: letter " + std::string(1, to_digit(a)) +
                                    " is outside the domain of the outer morphism");
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const Word& w : f.images()) images.push_back(g(w));
  return Morphism(std::move(images));
}

Morphism power(const Morphism& f, unsigned n) {
  Morphism out = Morphism::identity(f.domain_size());
  for (unsigned k = 0; k < n; ++k) out = compose(f, out);
  return out;
}

Morphism parse_morphism(std::string_view text) {
  std::vector<std::optional<Word>> images(kAlphabetSize);
  std::size_t pos = 0;
  auto fail = [&](const std::string& expected) -> void {
    std::string got = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
    throw ParseError("in morphism \"" + std::string(text) + "\" at position " + std::to_string(pos) +
                         ": expected " + expected + ", got " + got,
                     pos);
  };
  for (;;) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '2') fail("letter 0, 1 or 2");
    auto letter = static_cast<std::size_t>(text[pos] - '0');
    if (images[letter]) fail("a letter not already defined");
    ++pos;
    if (pos >= text.size() || text[pos] != '=') fail("'='");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '2') ++pos;
    images[letter] = Word(text.substr(start, pos - start));
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("',' or image letter 0, 1 or 2");
    ++pos;
  }
  std::size_t n = 0;
  while (n < images.size() && images[n]) ++n;
  for (std::size_t a = n; a < images.size(); ++a)
    if (images[a])
      throw ParseError("in morphism \"" + std::string(text) + "\": letter " + std::to_string(n) +
                           " is missing",
                       text.size());
  std::vector<Word> out;
  for (std::size_t a = 0; a < n; ++a) out.push_back(*images[a]);
  return Morphism(std::move(out));
}

std::string to_string(const Morphism& f) {
  std::string s;
  for (int a = 0; a < f.domain_size(); ++a) {
    if (a) s += ',';
    s += to_digit(static_cast<Letter>(a));
    s += '=';
    s += f.image(static_cast<Letter>(a)).str();
  }
  return s;
}

namespace generators {

Morphism exchange() { return Morphism({Word("1"), Word("0")}); }
Morphism phi() { return Morphism({Word("01"), Word("0")}); }
Morphism phi_tilde() { return Morphism({Word("10"), Word("0")}); }

Morphism exchange3(Letter fixed) {
  std::vector<Word> images;
  Letter others[2];
  int k = 0;
  for (Letter a = 0; a < kAlphabetSize; ++a)
    if (a != fixed) others[k++] = a;
  for (Letter a = 0; a < kAlphabetSize; ++a) {
    Letter b = a == fixed ? a : (a == others[0] ? others[1] : others[0]);
    images.push_back(Word::from_letters({b}));
  }
  return Morphism(std::move(images));
}

Morphism phi1() { return Morphism({Word("01"), Word("0"), Word()}); }
Morphism phi_tilde1() { return Morphism({Word("10"), Word("0"), Word()}); }

Morphism erasure(Letter i) {
  std::vector<Word> images;
  for (Letter a = 0; a < kAlphabetSize; ++a)
    images.push_back(a == i ? Word() : Word::from_letters({a}));
  return Morphism(std::move(images));
}

}  // namespace generators

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {}

IncidenceMatrix IncidenceMatrix::identity(int n) {
  IncidenceMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  IncidenceMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Integer s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = std::move(s);
    }
  return c;
}

IncidenceMatrix incidence(const Morphism& f) {
  IncidenceMatrix m(f.codomain_size(), f.domain_size());
  for (int j = 0; j < f.domain_size(); ++j)
    for (Letter i = 0; i < m.rows(); ++i) m(i, j) = f.image(static_cast<Letter>(j)).count(i);
  return m;
}

namespace {

Integer cofactor_det(const IncidenceMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  if (rows.empty()) return 1;
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Integer det = 0;
  int r = rows.front();
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m(r, cols[k]) == 0) continue;
    std::vector<int> sub_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != k) sub_cols.push_back(cols[c]);
    Integer minor = cofactor_det(m, sub_rows, sub_cols);
    if (k % 2 == 0)
      det += m(r, cols[k]) * minor;
    else
      det -= m(r, cols[k]) * minor;
  }
  return det;
}

}  // namespace

Integer determinant(const IncidenceMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  std::vector<int> idx(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> cols = idx;
  return cofactor_det(m, idx, cols);
}

namespace {

LetterSet letters_of(const Word& w) {
  LetterSet s;
  for (Letter a : w.letters()) s.set(a);
  return s;
}

bool within(const LetterSet& s, const LetterSet& allowed) { return (s & ~allowed).none(); }

}  // namespace

LetterClassification classify_letters(const Morphism& f) {
  const int n = f.domain_size();
  if (f.codomain_size() > n)
    throw std::invalid_argument("letter classification needs an endomorphism");
  LetterClassification c;
  c.alphabet_size = n;

  std::vector<LetterSet> image_letters;
  for (Letter a = 0; a < n; ++a) image_letters.push_back(letters_of(f.image(a)));

  // Nilpotent letters: least fixpoint of {a : f(a) in N*}. A letter added in
  // round k satisfies f^k(a) = eps.
  for (int round = 1; round <= n; ++round) {
    LetterSet added;
    for (Letter a = 0; a < n; ++a)
      if (!c.nilpotent.test(a) && within(image_letters[a], c.nilpotent)) added.set(a);
    if (added.none()) break;
    for (Letter a = 0; a < n; ++a)
      if (added.test(a)) c.witness[a] = round;
    c.nilpotent |= added;
  }

  // Permuting core: pi_N(f^k(a)) = a for some k >= 1. Along such an orbit
  // every reduced image is a single letter.
  auto reduced_single = [&](Letter b) -> std::optional<Letter> {
    std::optional<Letter> only;
    for (std::size_t k = 0; k < f.image(b).size(); ++k) {
      Letter x = f.image(b)[k];
      if (c.nilpotent.test(x)) continue;
      if (only) return std::nullopt;
      only = x;
    }
    return only;
  };
  for (Letter a = 0; a < n; ++a) {
    if (c.nilpotent.test(a)) continue;
    Letter cur = a;
    for (int step = 1; step <= n; ++step) {
      auto next = reduced_single(cur);
      if (!next) break;
      cur = *next;
      if (cur == a) {
        c.permuting_core.set(a);
        c.witness[a] = step;
        break;
      }
    }
  }

  // Permuting: f^k(a) in (N ∪ P')* \ N* for some k. Only the letter set of
  // f^k(a) matters, and that set evolves deterministically over 2^n states.
  const LetterSet allowed = c.nilpotent | c.permuting_core;
  const int cap = (1 << n) + n;
  for (Letter a = 0; a < n; ++a) {
    if (c.nilpotent.test(a)) continue;
    if (c.permuting_core.test(a)) {
      c.permuting.set(a);
      continue;
    }
    LetterSet s;
    s.set(a);
    for (int k = 0; k <= cap; ++k) {
      if (within(s, allowed) && !within(s, c.nilpotent)) {
        c.permuting.set(a);
        c.witness[a] = k;
        break;
      }
      LetterSet next;
      for (Letter b = 0; b < n; ++b)
        if (s.test(b)) next |= image_letters[b];
      s = next;
    }
  }

  for (Letter a = 0; a < n; ++a)
    if (!c.nilpotent.test(a) && !c.permuting.test(a)) c.expansive.set(a);
  return c;
}

bool is_nilpotent_morphism(const Morphism& f) {
  auto c = classify_letters(f);
  return static_cast<int>(c.nilpotent.count()) == c.alphabet_size;
}

bool is_expansive(const Morphism& f) { return classify_letters(f).expansive.any(); }

bool is_unit(const Morphism& f) {
  auto c = classify_letters(f);
  return c.expansive.none() && static_cast<int>(c.nilpotent.count()) != c.alphabet_size;
}

std::string to_string(const LetterSet& s, int alphabet_size) {
  std::string out = "{";
  bool first = true;
  for (int a = 0; a < alphabet_size; ++a) {
    if (!s.test(static_cast<std::size_t>(a))) continue;
    if (!first) out += ',';
    out += to_digit(static_cast<Letter>(a));
    first = false;
  }
  return out + "}";
}

}  // namespace swe
