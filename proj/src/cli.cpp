#include "swe/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "swe/analysis.hpp"
#include "swe/billiard.hpp"
#include "swe/mse.hpp"
#include "swe/serialize.hpp"
#include "swe/stream.hpp"

namespace swe::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  // input word
  std::optional<std::string> word;
  std::optional<std::string> file;
  bool fib = false;
  std::optional<std::string> image;
  std::size_t length = 10000;
  std::size_t max_n = 30;
  std::string format = "text";

  std::string spec;
  std::string with;
  int letter = 0;
  int seed = 0;
  int n = 1;
  std::string alpha;
  std::string rho = "0";
  std::string direction;
  bool include_start = false;
  std::size_t count = 10;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string trim_digits(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

Word read_word(const Options& o, Io& io) {
  const int sources = int(o.word.has_value()) + int(o.file.has_value()) + int(o.fib);
  if (sources > 1) throw UsageError("give at most one of --word, --file, --fib");
  Word w;
  if (o.fib) {
    WordStream s = fibonacci_stream();
    if (o.image) return apply_stream(parse_morphism(*o.image), std::move(s)).prefix(o.length);
    return s.prefix(o.length);
  }
  if (o.word) {
    w = Word(trim_digits(*o.word));
  } else if (o.file) {
    std::ifstream f(*o.file);
    if (!f) throw UsageError("cannot read " + *o.file);
    w = Word(trim_digits(std::string(std::istreambuf_iterator<char>(f), {})));
  } else {
    w = Word(trim_digits(std::string(std::istreambuf_iterator<char>(io.in), {})));
  }
  if (o.image) w = apply(parse_morphism(*o.image), w);
  return w;
}

std::size_t checked_max_n(const Options& o, const Word& w) {
  if (w.empty()) throw UsageError("empty input word");
  if (o.max_n < 1 || o.max_n > w.size())
    throw UsageError("--max-n must lie in [1, " + std::to_string(w.size()) + "], got " + std::to_string(o.max_n));
  return o.max_n;
}

void need_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (o.format == f) return;
  throw UsageError("--format " + o.format + " is not available for this command");
}

BilliardConfig billiard_config(const Options& o) {
  BilliardConfig c;
  auto d = parse_number_list(o.direction);
  auto rho = parse_number_list(o.rho);
  if (rho.size() == 1 && o.rho == "0") rho.assign(3, SqrtNumber(0));
  if (d.size() != 3) throw UsageError("--d needs three comma-separated expressions: " + o.direction);
  if (rho.size() != 3) throw UsageError("--rho needs three comma-separated expressions: " + o.rho);
  std::copy(d.begin(), d.end(), c.direction.begin());
  std::copy(rho.begin(), rho.end(), c.intercept.begin());
  c.include_start = o.include_start;
  c.validate();
  return c;
}

// --- word ---------------------------------------------------------------

int word_fib(const Options& o, Io& io) {
  io.out << fibonacci_stream().prefix(o.length) << '\n';
  return kOk;
}

int word_mechanical(const Options& o, Io& io) {
  io.out << mechanical_stream(parse_number(o.alpha), parse_number(o.rho)).prefix(o.length) << '\n';
  return kOk;
}

int word_fixed_point(const Options& o, Io& io) {
  if (o.seed < 0 || o.seed >= kAlphabetSize) throw UsageError("--seed must be 0, 1 or 2");
  io.out << fixed_point_stream(parse_morphism(o.spec), static_cast<Letter>(o.seed)).prefix(o.length) << '\n';
  return kOk;
}

int word_erase(const Options& o, Io& io) {
  if (o.letter < 0 || o.letter >= kAlphabetSize) throw UsageError("--letter must be 0, 1 or 2");
  io.out << erase(read_word(o, io), static_cast<Letter>(o.letter)) << '\n';
  return kOk;
}

// --- analyze ------------------------------------------------------------

int analyze_complexity(const Options& o, Io& io) {
  need_format(o, {"text", "json", "csv"});
  Word w = read_word(o, io);
  auto p = complexity(w, checked_max_n(o, w));
  if (o.format == "json") {
    io.out << json(p).dump(2) << '\n';
  } else if (o.format == "csv") {
    io.out << profile_csv(p, balance_order(w, p.max_n));
  } else {
    for (std::size_t n = 1; n <= p.max_n; ++n) io.out << "P(" << n << ")=" << p.at(n) << '\n';
  }
  return kOk;
}

int analyze_balance(const Options& o, Io& io) {
  need_format(o, {"text", "json", "csv"});
  Word w = read_word(o, io);
  auto b = balance_order(w, checked_max_n(o, w));
  if (o.format == "json") {
    io.out << json(b).dump(2) << '\n';
  } else if (o.format == "csv") {
    io.out << profile_csv(complexity(w, b.max_n), b);
  } else {
    for (std::size_t n = 1; n <= b.max_n; ++n) io.out << "imbalance(" << n << ")=" << b.at(n) << '\n';
    io.out << "order=" << b.order << '\n';
  }
  return kOk;
}

std::string describe(const SturmianVerdict& v) {
  return std::string(to_string(v.outcome)) + " n=" + std::to_string(v.n) + ": " + v.detail;
}

int analyze_sturmian(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  Word w = read_word(o, io);
  auto v = sturmian_verdict(w, checked_max_n(o, w));
  if (o.format == "json")
    io.out << json(v).dump(2) << '\n';
  else
    io.out << describe(v) << '\n';
  return v.outcome == Outcome::Consistent ? kOk : kRejected;
}

int analyze_wse(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  Word w = read_word(o, io);
  auto v = wse_verdict(w, checked_max_n(o, w));
  if (o.format == "json") {
    io.out << json(v).dump(2) << '\n';
  } else {
    io.out << to_string(v.outcome) << '\n';
    for (const auto& e : v.erasures) {
      io.out << "pi_" << int(e.erased) << " (" << e.erased_length << " letters): " << describe(e.verdict);
      if (e.period) io.out << " [period " << *e.period << "?]";
      io.out << '\n';
    }
  }
  return v.outcome == Outcome::Consistent ? kOk : kRejected;
}

// --- morphism -----------------------------------------------------------

int morphism_apply(const Options& o, Io& io) {
  const Morphism f = parse_morphism(o.spec);
  if (o.fib) {
    io.out << apply_stream(f, fibonacci_stream()).prefix(o.length) << '\n';
  } else {
    if (o.image) throw UsageError("--image is not available here; compose first");
    io.out << apply(f, read_word(o, io)) << '\n';
  }
  return kOk;
}

int morphism_compose(const Options& o, Io& io) {
  io.out << to_string(compose(parse_morphism(o.spec), parse_morphism(o.with))) << '\n';
  return kOk;
}

int morphism_matrix(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  auto m = incidence(parse_morphism(o.spec));
  if (o.format == "json") {
    io.out << json(m).dump() << '\n';
    return kOk;
  }
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) io.out << (c ? " " : "") << m(r, c);
    io.out << '\n';
  }
  return kOk;
}

int morphism_det(const Options& o, Io& io) {
  io.out << determinant(incidence(parse_morphism(o.spec))) << '\n';
  return kOk;
}

int morphism_classify(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  auto c = classify_letters(parse_morphism(o.spec));
  if (o.format == "json") {
    io.out << json(c).dump(2) << '\n';
    return kOk;
  }
  io.out << "N=" << to_string(c.nilpotent, c.alphabet_size) << '\n'
         << "P'=" << to_string(c.permuting_core, c.alphabet_size) << '\n'
         << "P=" << to_string(c.permuting, c.alphabet_size) << '\n'
         << "E=" << to_string(c.expansive, c.alphabet_size) << '\n';
  return kOk;
}

// --- st / mse -----------------------------------------------------------

int st_decompose(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  StDecision d = st_membership(parse_morphism(o.spec));
  if (o.format == "json") {
    io.out << json(d).dump(2) << '\n';
  } else if (const auto* c = std::get_if<StCertificate>(&d)) {
    io.out << "St: " << to_string(*c) << '\n';
  } else {
    const auto& r = std::get<StRejected>(d);
    io.out << "Rejected(" << to_string(r.reason) << "): " << r.detail << '\n';
  }
  return std::holds_alternative<StCertificate>(d) ? kOk : kRejected;
}

int mse_check(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  MseVerdict v = mse_membership(parse_morphism(o.spec));
  if (o.format == "json")
    io.out << json(v).dump(2) << '\n';
  else
    io.out << to_string(v) << '\n';
  return is_member(v) ? kOk : kRejected;
}

int mse_prime(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  PrimalityVerdict v = primality(parse_morphism(o.spec));
  if (o.format == "json")
    io.out << json(v).dump(2) << '\n';
  else
    io.out << to_string(v) << '\n';
  return std::holds_alternative<PrimalityUnknown>(v) ? kRejected : kOk;
}

int mse_psi(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  PsiFamily p = psi(o.n);
  if (o.format == "json")
    io.out << json(p).dump(2) << '\n';
  else
    io.out << to_string(p.psi) << '\n';
  return kOk;
}

// --- billiard -----------------------------------------------------------

int billiard_code(const Options& o, Io& io) {
  io.out << billiard_word(billiard_config(o)).prefix(o.length) << '\n';
  return kOk;
}

int billiard_classify(const Options& o, Io& io) {
  io.out << to_string(classify(billiard_config(o))) << '\n';
  return kOk;
}

int billiard_events(const Options& o, Io& io) {
  need_format(o, {"text", "json"});
  auto es = events(billiard_config(o), o.count);
  if (o.format == "json") {
    io.out << json(es).dump(2) << '\n';
    return kOk;
  }
  for (const auto& e : es) {
    io.out << "t=" << e.time << " omega={";
    for (std::size_t k = 0; k < e.faces.size(); ++k) io.out << (k ? "," : "") << int(e.faces[k]);
    io.out << "}\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  Io io{in, out, err};
  std::function<int(const Options&, Io&)> action;

  CLI::App app{"Sturmian words, morphisms with Sturmian erasures and cubic billiard codings", "swe"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_input = [&](CLI::App* c) {
    c->add_option("--word", o.word, "input word over 012");
    c->add_option("--file", o.file, "file holding the input word");
    c->add_flag("--fib", o.fib, "use a prefix of the Fibonacci word");
    c->add_option("--image", o.image, "apply this morphism to the input first");
    c->add_option("--length", o.length, "prefix length for --fib")->check(CLI::PositiveNumber);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about,
                  int (*fn)(const Options&, Io&)) {
    CLI::App* c = parent->add_subcommand(name, about);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto add_billiard = [&](CLI::App* c) {
    c->add_option("--d", o.direction, "direction d0,d1,d2")->required();
    c->add_option("--rho", o.rho, "intercept rho0,rho1,rho2");
    c->add_flag("--include-start", o.include_start, "code the starting point as an event when rho_i = 0");
  };

  CLI::App* word = app.add_subcommand("word", "generate and transform words")->require_subcommand(1);
  leaf(word, "fib", "Fibonacci word prefix", word_fib)->add_option("--length", o.length)->check(CLI::PositiveNumber);
  {
    auto* c = leaf(word, "mechanical", "mechanical word prefix", word_mechanical);
    c->add_option("--alpha", o.alpha, "slope in (0,1)")->required();
    c->add_option("--rho", o.rho, "intercept in [0,1)");
    c->add_option("--length", o.length)->check(CLI::PositiveNumber);
  }
  {
    auto* c = leaf(word, "fixed-point", "fixed point of a morphism", word_fixed_point);
    c->add_option("--spec", o.spec, "morphism, e.g. 0=01,1=0")->required();
    c->add_option("--seed", o.seed, "first letter");
    c->add_option("--length", o.length)->check(CLI::PositiveNumber);
  }
  {
    auto* c = leaf(word, "erase", "delete every occurrence of a letter", word_erase);
    c->add_option("--letter", o.letter)->required();
    add_input(c);
  }

  CLI::App* analyze = app.add_subcommand("analyze", "factor complexity, balance and verdicts")->require_subcommand(1);
  for (auto [name, about, fn] : {std::tuple{"complexity", "P(n) for n <= max-n", analyze_complexity},
                                 std::tuple{"balance", "imbalance per length and balance order", analyze_balance},
                                 std::tuple{"sturmian", "Sturmian verdict", analyze_sturmian},
                                 std::tuple{"wse", "verdict for each erasure", analyze_wse}}) {
    auto* c = leaf(analyze, name, about, fn);
    add_input(c);
    c->add_option("--max-n", o.max_n, "largest window length")->check(CLI::PositiveNumber);
    add_format(c);
  }

  CLI::App* morphism = app.add_subcommand("morphism", "morphism operations")->require_subcommand(1);
  {
    auto* c = leaf(morphism, "apply", "image of a word", morphism_apply);
    c->add_option("--spec", o.spec)->required();
    add_input(c);
  }
  {
    auto* c = leaf(morphism, "compose", "spec o with", morphism_compose);
    c->add_option("--spec", o.spec)->required();
    c->add_option("--with", o.with)->required();
  }
  for (auto [name, about, fn] : {std::tuple{"matrix", "incidence matrix (column per letter)", morphism_matrix},
                                 std::tuple{"det", "determinant of the incidence matrix", morphism_det},
                                 std::tuple{"classify", "nilpotent, permuting and expansive letters", morphism_classify}}) {
    auto* c = leaf(morphism, name, about, fn);
    c->add_option("--spec", o.spec)->required();
    add_format(c);
  }

  CLI::App* st = app.add_subcommand("st", "Sturmian morphisms")->require_subcommand(1);
  {
    auto* c = leaf(st, "decompose", "factor over E, phi, phi~", st_decompose);
    c->add_option("--spec", o.spec)->required();
    add_format(c);
  }

  CLI::App* mse = app.add_subcommand("mse", "morphisms with Sturmian erasures")->require_subcommand(1);
  for (auto [name, about, fn] : {std::tuple{"check", "membership with certificates", mse_check},
                                 std::tuple{"prime", "prime/composite certificate", mse_prime}}) {
    auto* c = leaf(mse, name, about, fn);
    c->add_option("--spec", o.spec)->required();
    add_format(c);
  }
  {
    auto* c = leaf(mse, "psi", "the prime psi_n", mse_psi);
    c->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    add_format(c);
  }

  CLI::App* billiard = app.add_subcommand("billiard", "cubic billiard codings")->require_subcommand(1);
  {
    auto* c = leaf(billiard, "code", "coded word prefix", billiard_code);
    add_billiard(c);
    c->add_option("--length", o.length)->check(CLI::PositiveNumber);
  }
  add_billiard(leaf(billiard, "classify", "Periodic, SturmianProjection, WSECandidate or Degenerate",
                    billiard_classify));
  {
    auto* c = leaf(billiard, "events", "crossing events", billiard_events);
    add_billiard(c);
    c->add_option("--count", o.count, "number of events")->check(CLI::PositiveNumber);
    add_format(c);
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action(o, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace swe::cli
