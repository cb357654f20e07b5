#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "swe/analysis.hpp"
#include "swe/billiard.hpp"
#include "swe/morphism.hpp"
#include "swe/mse.hpp"
#include "swe/sturmian_monoid.hpp"

namespace swe {

using nlohmann::json;

// nlohmann adapters: `json j = x;` and `j.get<T>()`. from_json throws
// std::invalid_argument (or nlohmann::json::exception) on malformed input.

void to_json(json& j, const Word& w);
void from_json(const json& j, Word& w);

void to_json(json& j, const SqrtNumber& x);  // canonical form
void from_json(const json& j, SqrtNumber& x);

void to_json(json& j, const ComplexityProfile& p);
void from_json(const json& j, ComplexityProfile& p);
void to_json(json& j, const BalanceProfile& p);
void from_json(const json& j, BalanceProfile& p);

void to_json(json& j, const SturmianVerdict& v);
void from_json(const json& j, SturmianVerdict& v);
void to_json(json& j, const WseVerdict& v);
void from_json(const json& j, WseVerdict& v);

void to_json(json& j, const IncidenceMatrix& m);  // row arrays
void from_json(const json& j, IncidenceMatrix& m);
void to_json(json& j, const LetterClassification& c);

void to_json(json& j, const StCertificate& c);  // ["E","phi","phit"]
void from_json(const json& j, StCertificate& c);
void to_json(json& j, const StDecision& d);
void from_json(const json& j, StDecision& d);

void to_json(json& j, const MseVerdict& v);
void from_json(const json& j, MseVerdict& v);
void to_json(json& j, const PrimalityVerdict& v);
void from_json(const json& j, PrimalityVerdict& v);
void to_json(json& j, const PsiFamily& p);

void to_json(json& j, const CrossingEvent& e);  // {"t": "...", "omega": [..]}
void from_json(const json& j, CrossingEvent& e);

// Header "n,P,imbalance"; both profiles must share max_n.
std::string profile_csv(const ComplexityProfile& p, const BalanceProfile& b);

}  // namespace swe

// Morphism has no empty value, so it needs the non-default-constructible form.
template <>
struct nlohmann::adl_serializer<swe::Morphism> {
  static void to_json(json& j, const swe::Morphism& f) { j = swe::to_string(f); }  // "0=02,1=10,2="
  static swe::Morphism from_json(const json& j) { return swe::parse_morphism(j.get<std::string>()); }
};
