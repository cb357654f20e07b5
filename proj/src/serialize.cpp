#include "swe/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace swe {

namespace {

Outcome outcome_from(const std::string& s) {
  if (s == "Consistent") return Outcome::Consistent;
  if (s == "Refuted") return Outcome::Refuted;
  throw std::invalid_argument("unknown outcome \"" + s + "\"");
}

StRejection rejection_from(const std::string& s) {
  for (auto r : {StRejection::Erasing, StRejection::Determinant, StRejection::NoDecomposition})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown St rejection \"" + s + "\"");
}

Letter letter_from(const json& j) {
  const int a = j.get<int>();
  if (a < 0 || a >= kAlphabetSize) throw std::invalid_argument("letter out of range: " + std::to_string(a));
  return static_cast<Letter>(a);
}

}  // namespace

void to_json(json& j, const Word& w) { j = w.str(); }
void from_json(const json& j, Word& w) { w = Word(j.get<std::string>()); }


void to_json(json& j, const SqrtNumber& x) { j = x.to_string(); }
void from_json(const json& j, SqrtNumber& x) { x = parse_number(j.get<std::string>()); }

void to_json(json& j, const ComplexityProfile& p) {
  json counts = json::object();
  for (std::size_t n = 1; n <= p.max_n; ++n) counts[std::to_string(n)] = p.at(n);
  j = {{"prefix_length", p.prefix_length}, {"max_n", p.max_n}, {"counts", counts}};
}

void from_json(const json& j, ComplexityProfile& p) {
  p.prefix_length = j.at("prefix_length").get<std::size_t>();
  p.max_n = j.at("max_n").get<std::size_t>();
  p.counts.clear();
  for (std::size_t n = 1; n <= p.max_n; ++n) p.counts.push_back(j.at("counts").at(std::to_string(n)).get<std::size_t>());
}

void to_json(json& j, const BalanceProfile& p) {
  json imbalance = json::object();
  for (std::size_t n = 1; n <= p.max_n; ++n) imbalance[std::to_string(n)] = p.at(n);
  j = {{"max_n", p.max_n}, {"order", p.order}, {"imbalance", imbalance}};
}

void from_json(const json& j, BalanceProfile& p) {
  p.max_n = j.at("max_n").get<std::size_t>();
  p.order = j.at("order").get<std::size_t>();
  p.imbalance.clear();
  for (std::size_t n = 1; n <= p.max_n; ++n)
    p.imbalance.push_back(j.at("imbalance").at(std::to_string(n)).get<std::size_t>());
}

void to_json(json& j, const SturmianVerdict& v) {
  j = {{"outcome", std::string(to_string(v.outcome))}, {"n", v.n}, {"detail", v.detail}};
}

void from_json(const json& j, SturmianVerdict& v) {
  v.outcome = outcome_from(j.at("outcome").get<std::string>());
  v.n = j.at("n").get<std::size_t>();
  v.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const WseVerdict& v) {
  json erasures = json::array();
  for (const auto& e : v.erasures) {
    json r = {{"erased", e.erased}, {"erased_length", e.erased_length}, {"verdict", e.verdict}};
    r["period"] = e.period ? json(*e.period) : json(nullptr);
    erasures.push_back(r);
  }
  j = {{"outcome", std::string(to_string(v.outcome))}, {"erasures", erasures}};
}

void from_json(const json& j, WseVerdict& v) {
  v.outcome = outcome_from(j.at("outcome").get<std::string>());
  const json& es = j.at("erasures");
  if (es.size() != kAlphabetSize) throw std::invalid_argument("expected three erasure reports");
  for (std::size_t k = 0; k < kAlphabetSize; ++k) {
    auto& e = v.erasures[k];
    e.erased = letter_from(es[k].at("erased"));
    e.erased_length = es[k].at("erased_length").get<std::size_t>();
    e.verdict = es[k].at("verdict").get<SturmianVerdict>();
    const json& p = es[k].at("period");
    e.period = p.is_null() ? std::nullopt : std::optional<std::size_t>(p.get<std::size_t>());
  }
}

void to_json(json& j, const IncidenceMatrix& m) {
  j = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    j.push_back(row);
  }
}

void from_json(const json& j, IncidenceMatrix& m) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  m = IncidenceMatrix(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const json& x = j[r][c];
      m(r, c) = x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long long>());
    }
  }
}

void to_json(json& j, const LetterClassification& c) {
  json witness = json::object();
  for (int a = 0; a < c.alphabet_size; ++a)
    if (c.witness[a]) witness[std::to_string(a)] = *c.witness[a];
  j = {{"nilpotent", to_string(c.nilpotent, c.alphabet_size)},
       {"permuting_core", to_string(c.permuting_core, c.alphabet_size)},
       {"permuting", to_string(c.permuting, c.alphabet_size)},
       {"expansive", to_string(c.expansive, c.alphabet_size)},
       {"witness", witness}};
}

void to_json(json& j, const StCertificate& c) {
  j = json::array();
  for (auto g : c.factors) j.push_back(std::string(name(g)));
}

void from_json(const json& j, StCertificate& c) {
  c.factors.clear();
  for (const auto& x : j) {
    auto g = generator_from_name(x.get<std::string>());
    if (!g) throw std::invalid_argument("unknown St generator " + x.dump());
    c.factors.push_back(*g);
  }
}

void to_json(json& j, const StDecision& d) {
  if (const auto* c = std::get_if<StCertificate>(&d)) {
    j = {{"verdict", "St"}, {"certificate", *c}};
  } else {
    const auto& r = std::get<StRejected>(d);
    j = {{"verdict", "Rejected"}, {"reason", std::string(to_string(r.reason))}, {"detail", r.detail}};
  }
}

void from_json(const json& j, StDecision& d) {
  const auto v = j.at("verdict").get<std::string>();
  if (v == "St")
    d = j.at("certificate").get<StCertificate>();
  else if (v == "Rejected")
    d = StRejected{rejection_from(j.at("reason").get<std::string>()), j.at("detail").get<std::string>()};
  else
    throw std::invalid_argument("unknown St verdict \"" + v + "\"");
}

void to_json(json& j, const MseVerdict& v) {
  if (std::holds_alternative<PermutationMember>(v)) {
    j = {{"verdict", "Permutation"}};
  } else if (const auto* m = std::get_if<ErasingMember>(&v)) {
    json certs = json::object();
    for (std::size_t k = 0; k < kAlphabetSize; ++k) certs[std::to_string(k)] = m->certificates[k];
    j = {{"verdict", "ErasingMember"}, {"erased", m->erased}, {"certificates", certs}};
  } else {
    const auto& r = std::get<MseRejected>(v);
    j = {{"verdict", "Rejected"}, {"reason", r.reason}, {"witness", r.witness}};
  }
}

void from_json(const json& j, MseVerdict& v) {
  const auto kind = j.at("verdict").get<std::string>();
  if (kind == "Permutation") {
    v = PermutationMember{};
  } else if (kind == "ErasingMember") {
    ErasingMember m;
    m.erased = letter_from(j.at("erased"));
    for (std::size_t k = 0; k < kAlphabetSize; ++k)
      m.certificates[k] = j.at("certificates").at(std::to_string(k)).get<StCertificate>();
    v = m;
  } else if (kind == "Rejected") {
    v = MseRejected{j.at("reason").get<std::string>(), j.at("witness").get<std::string>()};
  } else {
    throw std::invalid_argument("unknown MSE verdict \"" + kind + "\"");
  }
}

void to_json(json& j, const PrimalityVerdict& v) {
  if (const auto* p = std::get_if<PrimeCertified>(&v))
    j = {{"verdict", "PrimeCertified"}, {"witness", p->witness}};
  else if (const auto* c = std::get_if<CompositeCertified>(&v))
    j = {{"verdict", "CompositeCertified"}, {"g", c->left}, {"h", c->right}};
  else
    j = {{"verdict", "Unknown"}, {"note", std::get<PrimalityUnknown>(v).note}};
}

void from_json(const json& j, PrimalityVerdict& v) {
  const auto kind = j.at("verdict").get<std::string>();
  if (kind == "PrimeCertified")
    v = PrimeCertified{j.at("witness").get<std::string>()};
  else if (kind == "CompositeCertified")
    v = CompositeCertified{j.at("g").get<Morphism>(), j.at("h").get<Morphism>()};
  else if (kind == "Unknown")
    v = PrimalityUnknown{j.at("note").get<std::string>()};
  else
    throw std::invalid_argument("unknown primality verdict \"" + kind + "\"");
}

void to_json(json& j, const PsiFamily& p) {
  j = {{"n", p.n}, {"psi", p.psi}, {"f", p.f}, {"g", p.g}, {"h", p.h}};
}

void to_json(json& j, const CrossingEvent& e) {
  json omega = json::array();
  for (Letter a : e.faces) omega.push_back(int(a));
  j = {{"t", e.time}, {"omega", omega}};
}

void from_json(const json& j, CrossingEvent& e) {
  e.time = j.at("t").get<SqrtNumber>();
  e.faces.clear();
  for (const auto& a : j.at("omega")) e.faces.push_back(letter_from(a));
}

std::string profile_csv(const ComplexityProfile& p, const BalanceProfile& b) {
  if (p.max_n != b.max_n) throw std::invalid_argument("complexity and balance profiles differ in max_n");
  std::ostringstream out;
  out << "n,P,imbalance\n";
  for (std::size_t n = 1; n <= p.max_n; ++n) out << n << ',' << p.at(n) << ',' << b.at(n) << '\n';
  return out.str();
}

}  // namespace swe
