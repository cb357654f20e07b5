#include "swe/sturmian_monoid.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace swe {

std::string_view name(StGenerator g) {
  switch (g) {
    case StGenerator::E: return "E";
    case StGenerator::Phi: return "phi";
    case StGenerator::PhiTilde: return "phit";
  }
  return "?";
}

std::optional<StGenerator> generator_from_name(std::string_view s) {
  if (s == "E") return StGenerator::E;
  if (s == "phi") return StGenerator::Phi;
  if (s == "phit") return StGenerator::PhiTilde;
  return std::nullopt;
}

Morphism generator_morphism(StGenerator g) {
  switch (g) {
    case StGenerator::E: return generators::exchange();
    case StGenerator::Phi: return generators::phi();
    case StGenerator::PhiTilde: return generators::phi_tilde();
  }
  throw std::logic_error("unknown generator");
}

int StCertificate::degree() const { return st_degree(*this); }

std::string_view to_string(StRejection r) {
  switch (r) {
    case StRejection::Erasing: return "erasing";
    case StRejection::Determinant: return "determinant";
    case StRejection::NoDecomposition: return "no-decomposition";
  }
  return "?";
}

std::optional<Word> decode_over_code(const Word& w, BinaryCode code) {
  std::vector<Letter> out;
  std::string_view s = w.digits();
  for (std::size_t i = 0; i < s.size();) {
    if (code == BinaryCode::Phi) {
      // 01 -> 0, 0 -> 1; one letter of lookahead
      if (s[i] != '0') return std::nullopt;
      if (i + 1 < s.size() && s[i + 1] == '1') {
        out.push_back(0);
        i += 2;
      } else {
        out.push_back(1);
        i += 1;
      }
    } else {
      // {10, 0} is a prefix code
      if (s[i] == '0') {
        out.push_back(1);
        i += 1;
      } else if (i + 1 < s.size() && s[i + 1] == '0') {
        out.push_back(0);
        i += 2;
      } else {
        return std::nullopt;
      }
    }
  }
  return Word::from_letters(out);
}

namespace {

using Images = std::pair<Word, Word>;

bool is_binary(const Morphism& f) {
  if (f.domain_size() != 2) return false;
  for (const Word& w : f.images())
    for (Letter a : w.letters())
      if (a > 1) return false;
  return true;
}

std::pair<std::size_t, std::size_t> counts(const Word& w) { return {w.count(0), w.count(1)}; }

// det of [[|x|_0, |y|_0], [|x|_1, |y|_1]]
long long det2(const Images& f) {
  auto [a, c] = counts(f.first);
  auto [b, d] = counts(f.second);
  return static_cast<long long>(a * d) - static_cast<long long>(b * c);
}

Word exchanged(const Word& w) {
  std::string s(w.digits());
  for (char& c : s) c = c == '0' ? '1' : '0';
  return Word(s);
}

class Peeler {
 public:
  // Factor sequence for f, or nullopt. Peel order: phi, phi~, then the same
  // two under a left E twist.
  std::optional<std::vector<StGenerator>> peel(const Images& f) {
    static const Images kIdentity{Word("0"), Word("1")};
    static const Images kExchange{Word("1"), Word("0")};
    if (f == kIdentity) return std::vector<StGenerator>{};
    if (f == kExchange) return std::vector<StGenerator>{StGenerator::E};
    if (f.first.empty() || f.second.empty() || std::llabs(det2(f)) != 1) return std::nullopt;
    if (!visited_.insert(f).second) return std::nullopt;

    for (bool twist : {false, true}) {
      Images g = twist ? Images{exchanged(f.first), exchanged(f.second)} : f;
      for (BinaryCode code : {BinaryCode::Phi, BinaryCode::PhiTilde}) {
        auto x = decode_over_code(g.first, code);
        if (!x) continue;
        auto y = decode_over_code(g.second, code);
        if (!y) continue;
        if (auto rest = peel({*x, *y})) {
          std::vector<StGenerator> out;
          if (twist) out.push_back(StGenerator::E);
          out.push_back(code == BinaryCode::Phi ? StGenerator::Phi : StGenerator::PhiTilde);
          out.insert(out.end(), rest->begin(), rest->end());
          return out;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::set<Images> visited_;
};

}  // namespace

StDecision st_membership(const Morphism& f) {
  if (!is_binary(f))
    throw std::invalid_argument("St membership needs a morphism {0,1} -> {0,1}*, got " + to_string(f));
  Images images{f.image(0), f.image(1)};
  if (f.is_erasing()) return StRejected{StRejection::Erasing, "empty image in " + to_string(f)};
  long long det = det2(images);
  if (std::llabs(det) != 1)
    return StRejected{StRejection::Determinant, "det M_f = " + std::to_string(det)};
  Peeler peeler;
  if (auto factors = peeler.peel(images)) return StCertificate{std::move(*factors)};
  return StRejected{StRejection::NoDecomposition,
                    "no factorization over {E, phi, phit} for " + to_string(f)};
}

Morphism recompose(const StCertificate& c) {
  Morphism out = Morphism::identity(2);
  for (StGenerator g : c.factors) out = compose(out, generator_morphism(g));
  return out;
}

int st_degree(const StCertificate& c) {
  int n = 0;
  for (StGenerator g : c.factors) n += g != StGenerator::E;
  return n;
}

std::string to_string(const StCertificate& c) {
  if (c.factors.empty()) return "Id";
  std::string s;
  for (StGenerator g : c.factors) {
    if (!s.empty()) s += ' ';
    s += name(g);
  }
  return s;
}

}  // namespace swe
