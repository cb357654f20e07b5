#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swe/errors.hpp"
#include "swe/word.hpp"

namespace swe {

// A morphism maps each letter of its domain {0..n-1} (n = 2 or 3) to a word
// over A3. Equality is extensional.
class Morphism {
 public:
  explicit Morphism(std::vector<Word> images);

  static Morphism identity(int domain_size);

  int domain_size() const { return static_cast<int>(images_.size()); }
  // max(domain size, 1 + largest letter occurring in an image)
  int codomain_size() const;

  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }

  // Throws std::out_of_range on a letter outside the domain.
  Word operator()(const Word& w) const;

  bool is_erasing() const;
  bool is_permutation() const;
  std::size_t total_length() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
};

Word apply(const Morphism& f, const Word& w);
// g∘f; throws std::invalid_argument if an image of f leaves g's domain.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism power(const Morphism& f, unsigned n);

// "0=02,1=10,2=" format. Missing or duplicate letters throw ParseError.
Morphism parse_morphism(std::string_view text);
std::string to_string(const Morphism& f);

// Named morphisms. E, phi, phi~ act on A2; the rest on A3.
namespace generators {
Morphism exchange();          // E: 0->1, 1->0
Morphism phi();               // 0->01, 1->0
Morphism phi_tilde();         // 0->10, 1->0
Morphism exchange3(Letter fixed);  // E_0, E_1, E_2: swaps the two letters other than `fixed`
Morphism phi1();              // 0->01, 1->0, 2->eps
Morphism phi_tilde1();        // 0->10, 1->0, 2->eps
Morphism erasure(Letter i);   // pi_i on A3
}  // namespace generators

// m_{i,j} = |f(j)|_i, codomain_size rows by domain_size columns.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Integer& operator()(int i, int j) const { return entries_[index(i, j)]; }
  Integer& operator()(int i, int j) { return entries_[index(i, j)]; }

  static IncidenceMatrix identity(int n);
  // Throws std::invalid_argument on a dimension mismatch.
  friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b);
  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * cols_ + j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> entries_;
};

IncidenceMatrix incidence(const Morphism& f);
// Exact determinant by cofactor expansion; throws std::invalid_argument if
// the matrix is not square.
Integer determinant(const IncidenceMatrix& m);

using LetterSet = std::bitset<kAlphabetSize>;

// Nilpotent / permuting / expansive letters of an endomorphism. witness[a]
// holds the exponent that certifies a's class: n with f^n(a) = eps for
// nilpotent letters, the cycle length for permuting-core letters, and n with
// f^n(a) in (N ∪ P')* \ N* for the remaining permuting letters.
struct LetterClassification {
  int alphabet_size = 0;
  LetterSet nilpotent;
  LetterSet permuting_core;
  LetterSet permuting;
  LetterSet expansive;
  std::array<std::optional<int>, kAlphabetSize> witness{};
};

// Requires an endomorphism (codomain within the domain); throws
// std::invalid_argument otherwise.
LetterClassification classify_letters(const Morphism& f);
bool is_nilpotent_morphism(const Morphism& f);
bool is_expansive(const Morphism& f);
bool is_unit(const Morphism& f);

std::string to_string(const LetterSet& s, int alphabet_size);

}  // namespace swe
