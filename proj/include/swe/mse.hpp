#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "swe/morphism.hpp"
#include "swe/sturmian_monoid.hpp"

namespace swe {

struct PermutationMember {
  friend bool operator==(const PermutationMember&, const PermutationMember&) = default;
};

// f(erased) = eps and, for each j in A3, the binary morphism
// projected_binary(f, erased, j) is in St with the given certificate.
struct ErasingMember {
  Letter erased = 0;
  std::array<StCertificate, kAlphabetSize> certificates{};
  friend bool operator==(const ErasingMember&, const ErasingMember&) = default;
};

struct MseRejected {
  std::string reason;
  std::string witness;
  friend bool operator==(const MseRejected&, const MseRejected&) = default;
};

using MseVerdict = std::variant<PermutationMember, ErasingMember, MseRejected>;

// pi_j ∘ f restricted to A3 \ {erased}, with domain and codomain recoded to
// {0,1} by the order-preserving bijections A3\{erased} -> A2 and A3\{j} -> A2.
Morphism projected_binary(const Morphism& f, Letter erased, Letter projection);

// Exact decision of f ∈ MSE for f : A3 -> A3*.
//
// MSE is the union of the permutations of A3 and MSE^eps. For f with
// f(i) = eps, every image f(x) of a word x with Sturmian erasures equals
// f(pi_i(x)), and pi_i(x) ranges over all Sturmian words. Then pi_j(f(x)),
// recoded to A2, is h_j(pi_i(x)) for the binary morphism
// h_j = projected_binary(f, i, j). f maps every such x into WSE iff each h_j
// maps every Sturmian word to a Sturmian word, i.e. iff each h_j is in St
// (a locally Sturmian morphism is Sturmian and belongs to St). The verdict
// therefore carries three St certificates.
//
// Throws std::invalid_argument unless f has domain A3.
MseVerdict mse_membership(const Morphism& f);

bool is_member(const MseVerdict& v);
std::string to_string(const MseVerdict& v);

struct LengthFilterResult {
  bool pass = true;
  std::string witness;  // first failed condition
};

// Necessary conditions for f ∈ MSE_i, i the erased letter, written for i = 2
// as: |f(a)| >= 2, |f(a)|_0 + |f(a)|_1 >= 1 and |f(01)|_a >= 1 for a in
// {0,1}. Throws std::invalid_argument if no letter has an empty image.
LengthFilterResult length_filter(const Morphism& f);

// The unique x with pi_2(x) = u, pi_1(x) = v, pi_0(x) = w, if it exists.
// u, v, w must be words over {0,1}, {0,2}, {1,2} (std::invalid_argument).
std::optional<Word> intercalate(const Word& u, const Word& v, const Word& w);

// psi_n together with its three projections
//   f_n = phi1^n,  g_n = E0 ∘ phi~1 ∘ E2 ∘ phi~1^(n-1),  h_n = E2 ∘ E0 ∘ phi~1^(n-1),
// each restricted to {0,1} (letter 2 maps to eps).
struct PsiFamily {
  int n = 0;
  Morphism psi;
  Morphism f;
  Morphism g;
  Morphism h;
};

// Builds psi_n from psi_1 = (01, 20, eps), psi_2 = (2010, 01, eps) and
// psi_{n+1}(0) = psi_{n-1}(0) psi_{n-1}(1) psi_{n-1}(0), psi_{n+1}(1) = psi_n(0);
// the projections are computed separately from generator products and checked
// against psi (std::logic_error on mismatch). Throws std::invalid_argument
// for n < 1.
PsiFamily psi(int n);

struct PrimeCertified {
  std::string witness;
  friend bool operator==(const PrimeCertified&, const PrimeCertified&) = default;
};

// f = left ∘ right, both in MSE, right not a unit.
struct CompositeCertified {
  Morphism left;
  Morphism right;
  friend bool operator==(const CompositeCertified&, const CompositeCertified&) = default;
};

struct PrimalityUnknown {
  std::string note;
  friend bool operator==(const PrimalityUnknown&, const PrimalityUnknown&) = default;
};

using PrimalityVerdict = std::variant<PrimeCertified, CompositeCertified, PrimalityUnknown>;

// Prime/composite certificates for f ∈ MSE_i, A3 = {i, j, k}:
//  - neither of f(j), f(k) is a prefix or suffix of the other: prime;
//  - otherwise, if |f(012)|_j > |f(012)|_k >= |f(012)|_i (after ordering j, k
//    by count), split the longer image around the shorter and verify the
//    factorization;
//  - otherwise unknown.
// Permutations yield PrimalityUnknown (units are never prime). Throws
// std::invalid_argument if f is not in MSE.
PrimalityVerdict primality(const Morphism& f);

std::string to_string(const PrimalityVerdict& v);

}  // namespace swe
