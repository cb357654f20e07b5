#include "swe/mse.hpp"

#include <stdexcept>

namespace swe {

namespace {

std::array<Letter, 2> others(Letter i) {
  std::array<Letter, 2> out{};
  int k = 0;
  for (Letter a = 0; a < kAlphabetSize; ++a)
    if (a != i) out[static_cast<std::size_t>(k++)] = a;
  return out;
}

std::optional<Letter> first_erased(const Morphism& f) {
  for (Letter a = 0; a < f.domain_size(); ++a)
    if (f.image(a).empty()) return a;
  return std::nullopt;
}

void require_ternary(const Morphism& f) {
  if (f.domain_size() != kAlphabetSize)
    throw std::invalid_argument("expected a morphism on {0,1,2}, got " + to_string(f));
}

std::string letter(Letter a) { return std::string(1, to_digit(a)); }

}  // namespace

Morphism projected_binary(const Morphism& f, Letter erased, Letter projection) {
  const auto domain = others(erased);
  const auto codomain = others(projection);
  std::vector<Word> images;
  for (Letter d : domain) {
    std::vector<Letter> out;
    const Word& w = f.image(d);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == projection) continue;
      out.push_back(w[k] == codomain[0] ? 0 : 1);
    }
    images.push_back(Word::from_letters(out));
  }
  return Morphism(std::move(images));
}

MseVerdict mse_membership(const Morphism& f) {
  require_ternary(f);
  if (f.is_permutation()) return PermutationMember{};
  auto erased = first_erased(f);
  if (!erased)
    return MseRejected{"not-permutation-no-erased-letter",
                       "no image is empty and f does not permute {0,1,2}: " + to_string(f)};
  ErasingMember member;
  member.erased = *erased;
  for (Letter j = 0; j < kAlphabetSize; ++j) {
    Morphism h = projected_binary(f, *erased, j);
    StDecision d = st_membership(h);
    if (auto* r = std::get_if<StRejected>(&d)) {
      return MseRejected{"projection-not-sturmian",
                         "pi_" + letter(j) + " of f restricted to A3\\{" + letter(*erased) + "} is " +
                             to_string(h) + ", not in St (" + std::string(to_string(r->reason)) + ": " +
                             r->detail + ")"};
    }
    member.certificates[j] = std::get<StCertificate>(std::move(d));
  }
  return member;
}

bool is_member(const MseVerdict& v) { return !std::holds_alternative<MseRejected>(v); }

std::string to_string(const MseVerdict& v) {
  if (std::holds_alternative<PermutationMember>(v)) return "Permutation";
  if (const auto* m = std::get_if<ErasingMember>(&v)) {
    std::string s = "ErasingMember(" + letter(m->erased) + ")";
    for (Letter j = 0; j < kAlphabetSize; ++j) s += "\n  pi_" + letter(j) + ": " + to_string(m->certificates[j]);
    return s;
  }
  const auto& r = std::get<MseRejected>(v);
  return "Rejected(" + r.reason + "): " + r.witness;
}

LengthFilterResult length_filter(const Morphism& f) {
  require_ternary(f);
  auto erased = first_erased(f);
  if (!erased) throw std::invalid_argument("length filter needs a letter with empty image: " + to_string(f));
  const Letter i = *erased;
  const auto [j, k] = others(i);
  for (Letter a : {j, k}) {
    if (f.image(a).size() < 2)
      return {false, "|f(" + letter(a) + ")|=" + std::to_string(f.image(a).size())};
  }
  for (Letter a : {j, k}) {
    if (f.image(a).size() == f.image(a).count(i))
      return {false, "|f(" + letter(a) + ")|_" + letter(j) + "+|f(" + letter(a) + ")|_" + letter(k) + "=0"};
  }
  const Word both = f.image(j) + f.image(k);
  for (Letter a : {j, k}) {
    if (both.count(a) == 0)
      return {false, "|f(" + letter(j) + letter(k) + ")|_" + letter(a) + "=0"};
  }
  return {true, ""};
}

std::optional<Word> intercalate(const Word& u, const Word& v, const Word& w) {
  if (u.count(2) || v.count(1) || w.count(0))
    throw std::invalid_argument("intercalate needs words over {0,1}, {0,2} and {1,2}");
  std::size_t iu = 0, iv = 0, iw = 0;
  std::vector<Letter> x;
  x.reserve(u.size() + v.size() + w.size());
  auto front = [](const Word& s, std::size_t i) { return i < s.size() ? int(s[i]) : -1; };
  while (iu < u.size() || iv < v.size() || iw < w.size()) {
    // Any two of these share a stream front, so at most one holds.
    if (front(u, iu) == 0 && front(v, iv) == 0) {
      x.push_back(0);
      ++iu, ++iv;
    } else if (front(u, iu) == 1 && front(w, iw) == 1) {
      x.push_back(1);
      ++iu, ++iw;
    } else if (front(v, iv) == 2 && front(w, iw) == 2) {
      x.push_back(2);
      ++iv, ++iw;
    } else {
      return std::nullopt;
    }
  }
  return Word::from_letters(x);
}

PsiFamily psi(int n) {
  if (n < 1) throw std::invalid_argument("psi_n needs n >= 1, got " + std::to_string(n));
  using namespace generators;
  std::vector<Morphism> family{Morphism({Word("01"), Word("20"), Word()}),
                               Morphism({Word("2010"), Word("01"), Word()})};
  for (int m = 3; m <= n; ++m) {
    const Morphism& older = family[static_cast<std::size_t>(m - 3)];
    const Morphism& prev = family[static_cast<std::size_t>(m - 2)];
    family.emplace_back(std::vector<Word>{older.image(0) + older.image(1) + older.image(0), prev.image(0), Word()});
  }

  const Morphism restrict = erasure(2);
  const Morphism tail = compose(power(phi_tilde1(), static_cast<unsigned>(n - 1)), restrict);
  PsiFamily out{n, family[static_cast<std::size_t>(n - 1)],
                compose(power(phi1(), static_cast<unsigned>(n)), restrict),
                compose(exchange3(0), compose(phi_tilde1(), compose(exchange3(2), tail))),
                compose(exchange3(2), compose(exchange3(0), tail))};

  if (compose(erasure(2), out.psi) != out.f || compose(erasure(1), out.psi) != out.g ||
      compose(erasure(0), out.psi) != out.h)
    throw std::logic_error("psi_" + std::to_string(n) + " does not project onto f_n, g_n, h_n");
  return out;
}

namespace {

bool prefix_or_suffix(const Word& a, const Word& b) { return b.starts_with(a) || b.ends_with(a); }

std::optional<CompositeCertified> verified(const Morphism& f, Morphism left, Morphism right) {
  if (compose(left, right) != f) return std::nullopt;
  if (!is_member(mse_membership(left)) || !is_member(mse_membership(right))) return std::nullopt;
  if (is_unit(left) || is_unit(right)) return std::nullopt;
  return CompositeCertified{std::move(left), std::move(right)};
}

Morphism from_images(Letter a, Word wa, Letter b, Word wb) {
  std::vector<Word> images(kAlphabetSize);
  images[a] = std::move(wa);
  images[b] = std::move(wb);
  return Morphism(std::move(images));
}

}  // namespace

PrimalityVerdict primality(const Morphism& f) {
  MseVerdict v = mse_membership(f);
  if (std::holds_alternative<PermutationMember>(v))
    return PrimalityUnknown{"f permutes {0,1,2}; units are never prime"};
  if (const auto* r = std::get_if<MseRejected>(&v))
    throw std::invalid_argument("primality needs a member of MSE: " + r->witness);

  const Letter i = std::get<ErasingMember>(v).erased;
  auto [j, k] = others(i);
  const Word& fj = f.image(j);
  const Word& fk = f.image(k);
  if (!prefix_or_suffix(fj, fk) && !prefix_or_suffix(fk, fj))
    return PrimeCertified{"f(" + letter(j) + ")=" + fj.str() + " and f(" + letter(k) + ")=" + fk.str() +
                          ": neither is a prefix or a suffix of the other"};

  const Word all = f.image(0) + f.image(1) + f.image(2);
  if (all.count(k) > all.count(j)) std::swap(j, k);
  if (!(all.count(j) > all.count(k) && all.count(k) >= all.count(i)))
    return PrimalityUnknown{"an image is a prefix or suffix of the other, but |f(012)|_" + letter(j) + " > |f(012)|_" +
                            letter(k) + " >= |f(012)|_" + letter(i) + " fails"};

  // long image f(p), short image f(q)
  for (auto [p, q] : {std::pair{j, k}, std::pair{k, j}}) {
    const Word& lp = f.image(p);
    const Word& sq = f.image(q);
    if (sq.size() >= lp.size()) continue;
    const Word rest_after = lp.suffix(lp.size() - sq.size());
    const Word rest_before = lp.prefix(lp.size() - sq.size());
    const Word pq = Word::from_letters({p, q}), pi = Word::from_letters({p, i});
    const Word qp = Word::from_letters({q, p}), ip = Word::from_letters({i, p});
    if (lp.starts_with(sq)) {
      // f(p) = u·v, f(q) = u: g = (p->u, q->v), h = (p->pq, q->pi)
      if (auto c = verified(f, from_images(p, sq, q, rest_after), from_images(p, pq, q, pi))) return *c;
    }
    if (lp.ends_with(sq)) {
      // f(p) = v·u, f(q) = u: g = (p->u, q->v), h = (p->qp, q->ip)
      if (auto c = verified(f, from_images(p, sq, q, rest_before), from_images(p, qp, q, ip))) return *c;
    }
  }
  return PrimalityUnknown{"no verified factorization found"};
}

std::string to_string(const PrimalityVerdict& v) {
  if (const auto* p = std::get_if<PrimeCertified>(&v)) return "PrimeCertified: " + p->witness;
  if (const auto* c = std::get_if<CompositeCertified>(&v))
    return "CompositeCertified: f = (" + to_string(c->left) + ") o (" + to_string(c->right) + ")";
  return "Unknown: " + std::get<PrimalityUnknown>(v).note;
}

}  // namespace swe
