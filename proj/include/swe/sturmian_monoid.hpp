#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swe/morphism.hpp"

namespace swe {

// Generators of St on A2.
enum class StGenerator { E, Phi, PhiTilde };

std::string_view name(StGenerator g);  // "E", "phi", "phit"
std::optional<StGenerator> generator_from_name(std::string_view s);
Morphism generator_morphism(StGenerator g);

// f = factors[0] ∘ factors[1] ∘ ... ; the empty sequence is the identity.
struct StCertificate {
  std::vector<StGenerator> factors;

  int degree() const;
  friend bool operator==(const StCertificate&, const StCertificate&) = default;
};

enum class StRejection { Erasing, Determinant, NoDecomposition };
std::string_view to_string(StRejection r);

struct StRejected {
  StRejection reason;
  std::string detail;
  friend bool operator==(const StRejected&, const StRejected&) = default;
};

using StDecision = std::variant<StCertificate, StRejected>;

// Codes for the images of phi ({01 -> 0, 0 -> 1}) and phi~ ({10 -> 0, 0 -> 1}).
enum class BinaryCode { Phi, PhiTilde };

// The preimage of w under phi or phi~, if any.
std::optional<Word> decode_over_code(const Word& w, BinaryCode code);

// Decides f ∈ St for f : A2 -> A2*. Accepted morphisms carry a factorization
// over {E, phi, phi~} that recomposes to f exactly. Throws
// std::invalid_argument if f is not a map {0,1} -> {0,1}*.
StDecision st_membership(const Morphism& f);

// Left-to-right composition of the factors.
Morphism recompose(const StCertificate& c);

// Number of phi/phi~ factors. An upper bound on the degree of the morphism.
int st_degree(const StCertificate& c);

std::string to_string(const StCertificate& c);

}  // namespace swe
