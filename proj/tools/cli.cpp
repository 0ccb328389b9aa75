#include "cli.hpp"

#include "repetend/certify.hpp"
#include "repetend/error.hpp"
#include "repetend/expansion.hpp"
#include "repetend/numtheory.hpp"
#include "repetend/reconstruction.hpp"
#include "repetend/symmetry.hpp"
#include "repetend/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace repetend::cli {

using nlohmann::json;

json result_record(std::string_view command, json inputs, json result) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

json error_record(std::string_view command, json inputs, std::string_view name,
                  std::string_view message) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"error", {{"name", name}, {"message", message}}}};
}

std::string serialize(const json& record) { return record.dump(); }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string base;
  std::string modulus;
  std::string value;
  std::string digits;
  std::string shift;
  std::string length;
  std::string index;
  std::string max_length;
  std::string mode = "exhaustive";
  std::string seed;
  std::string budget;
  std::string max_candidates;
  std::string samples;
  std::string workers = "1";
  std::string max_m = "500";
  std::string bases = "2,10";
  bool all = false;
  bool json = true;
  bool quiet = false;
};

Natural natural_flag(const std::string& text, std::string_view flag) {
  try {
    return parse_natural(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + ": expected a nonnegative integer, got '" + text + "'");
  }
}

std::uint64_t u64_flag(const std::string& text, std::string_view flag) {
  const Natural v = natural_flag(text, flag);
  if (!fits_u64(v)) throw UsageError(std::string(flag) + ": value too large");
  return to_u64(v);
}

std::string digits_of(const Natural& v) { return to_decimal(v); }

json factorization_json(const Factorization& f) {
  json out = json::array();
  for (const auto& [p, e] : f.factors) {
    out.push_back({{"prime", digits_of(p)}, {"exponent", std::to_string(e)}});
  }
  return out;
}

json reconstruction_json(const ReconstructionResult& r) {
  return {{"base", std::to_string(r.base)},
          {"a", digits_of(r.a)},
          {"padded_string", r.padded_string.to_wire()},
          {"l", std::to_string(r.l)},
          {"m", digits_of(r.m)},
          {"order_of_base_mod_m", digits_of(r.order_of_base_mod_m)},
          {"order_equals_length", r.order_equals_length()},
          {"collapsed", r.collapsed}};
}

json certificate_json(const PrimitivityCertificate& c) {
  json a_primes = json::array();
  for (const auto& q : c.a_primes) a_primes.push_back(digits_of(q));
  return {{"base", std::to_string(c.base)},
          {"a", digits_of(c.a)},
          {"string", c.string.to_wire()},
          {"l", std::to_string(c.l)},
          {"m", digits_of(c.m)},
          {"m_factorization", factorization_json(c.m_factorization)},
          {"p", digits_of(c.p)},
          {"p_exponent", std::to_string(c.p_exponent)},
          {"condition1", c.condition1},
          {"condition2_statement", c.condition2_statement},
          {"condition2_proof_form", c.condition2_proof_form},
          {"condition2_over_am", c.condition2_over_am ? json(*c.condition2_over_am) : json()},
          {"a_primes", a_primes},
          {"verified", c.verified}};
}

json runs_json(const RunLengthForm& form) {
  json out = json::array();
  for (const auto& r : form.runs) {
    out.push_back({{"symbol", std::to_string(r.symbol)}, {"length", std::to_string(r.length)}});
  }
  return out;
}

void render_plain(const json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) {
      render_plain(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      render_plain(node[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool as_json, std::string command, json inputs)
      : out_(out), as_json_(as_json), command_(std::move(command)), inputs_(std::move(inputs)) {}

  void result(json payload) { write(result_record(command_, inputs_, std::move(payload))); }
  void error(std::string_view name, std::string_view message) {
    write(error_record(command_, inputs_, name, message));
  }

 private:
  void write(const json& record) {
    if (as_json_) {
      out_ << serialize(record) << "\n";
    } else {
      render_plain(record, "", out_);
      out_ << "\n";
    }
    out_.flush();
  }

  std::ostream& out_;
  bool as_json_;
  std::string command_;
  json inputs_;
};

struct Context {
  const Flags& flags;
  Emitter& emit;
  std::ostream& err;

  std::uint64_t base() const { return u64_flag(flags.base, "--base"); }
  Natural modulus() const { return natural_flag(flags.modulus, "--modulus"); }
  FactorOptions factor() const {
    FactorOptions f;
    if (!flags.budget.empty()) f.budget = u64_flag(flags.budget, "--budget");
    f.seed = seed(kDefaultFactorSeed);
    return f;
  }
  std::uint64_t seed(std::uint64_t fallback) const {
    if (!flags.seed.empty()) return u64_flag(flags.seed, "--seed");
    if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
      return u64_flag(env, kSeedEnvVar);
    }
    return fallback;
  }
  void note(const std::string& line) const {
    if (!flags.quiet) err << line << "\n";
  }
};

void cmd_expand(const Context& c) {
  const Natural m = c.modulus();
  const auto base = c.base();
  const Expansion e = expand(m, base);
  c.emit.result({{"modulus", digits_of(m)},
                 {"base", std::to_string(base)},
                 {"period", std::to_string(e.period())},
                 {"digits", e.repetend().to_wire()},
                 {"quotient", digits_of(string_value(e.repetend()))},
                 {"first_nonzero_index", std::to_string(first_nonzero_index(m, base))}});
}

void cmd_digits(const Context& c) {
  const Natural m = c.modulus();
  const auto base = c.base();
  if (!c.flags.index.empty()) {
    const Natural k = natural_flag(c.flags.index, "--index");
    c.emit.result({{"index", digits_of(k)},
                   {"digit", std::to_string(digit_via_residues(m, base, k))}});
    return;
  }
  const auto period = to_u64(multiplicative_order(Natural(base), m));
  std::vector<Digit> digits;
  for (std::uint64_t k = 1; k <= period; ++k) {
    digits.push_back(digit_via_residues(m, base, Natural(k)));
  }
  c.emit.result({{"period", std::to_string(period)},
                 {"digits", DigitString(base, std::move(digits)).to_wire()}});
}

void cmd_value(const Context& c) {
  const auto base = c.base();
  if (!c.flags.digits.empty()) {
    const DigitString s = DigitString::parse(c.flags.digits, base);
    const auto period = minimal_word_period(s);
    json result{{"value", digits_of(string_value(s))},
                {"length", std::to_string(s.size())},
                {"word_period", std::to_string(period)},
                {"periodic", period < s.size()}};
    const ExactFraction f = repeating_value(s);
    result["repeating_value"] = f.to_string();
    c.emit.result(std::move(result));
    return;
  }
  if (c.flags.value.empty() || c.flags.length.empty()) {
    throw UsageError("value: pass --string, or --value together with --length");
  }
  const Natural a = natural_flag(c.flags.value, "--value");
  const auto l = u64_flag(c.flags.length, "--length");
  const PeriodicityVerdict v = is_periodic_padded(a, l, base);
  c.emit.result({{"padded", DigitString::from_natural(a, base, l).to_wire()},
                 {"periodic", v.periodic},
                 {"minimal_period", std::to_string(v.minimal_period)}});
}

void cmd_reconstruct(const Context& c) {
  const auto base = c.base();
  const OrderOptions options{OrderStrategy::Auto, c.factor()};
  if (!c.flags.digits.empty() == !c.flags.value.empty()) {
    throw UsageError("reconstruct: pass exactly one of --value or --string");
  }
  if (!c.flags.digits.empty()) {
    json r = reconstruction_json(
        reconstruct_from_string(DigitString::parse(c.flags.digits, base), options));
    r["mode"] = "string";
    c.emit.result(std::move(r));
  } else {
    json r = reconstruction_json(
        reconstruct_from_integer(natural_flag(c.flags.value, "--value"), base, options));
    r["mode"] = "integer";
    c.emit.result(std::move(r));
  }
}

void cmd_shift(const Context& c) {
  const auto base = c.base();
  const Natural t = natural_flag(c.flags.shift, "--shift");
  if (!c.flags.digits.empty()) {
    c.emit.result(
        {{"shifted", cyclic_shift(DigitString::parse(c.flags.digits, base), t).to_wire()}});
    return;
  }
  if (c.flags.modulus.empty()) throw UsageError("shift: pass --modulus or --string");
  const Natural m = c.modulus();
  const ExactFraction f = shift_fraction(m, base, t);
  c.emit.result({{"fraction", f.to_string()},
                 {"residue", digits_of(mod_pow(Natural(base), t, m))},
                 {"shifted", cyclic_shift(expand(m, base).repetend(), t).to_wire()}});
}

void cmd_orbit(const Context& c) {
  json residues = json::array();
  for (const auto& r : orbit_residues(c.modulus(), c.base())) residues.push_back(digits_of(r));
  const auto size = residues.size();
  c.emit.result({{"residues", std::move(residues)}, {"size", std::to_string(size)}});
}

void cmd_complement(const Context& c) {
  const Natural m = c.modulus();
  const auto base = c.base();
  const bool holds = complement_pairs_check(m, base);
  c.emit.result({{"holds", holds},
                 {"period", std::to_string(expand(m, base).period())}});
}

void cmd_runs(const Context& c) {
  if (!c.flags.digits.empty()) {
    const std::uint64_t base = c.flags.base.empty() ? 2 : c.base();
    c.emit.result({{"runs", runs_json(run_length_encode(DigitString::parse(c.flags.digits, base)))}});
    return;
  }
  if (c.flags.modulus.empty()) throw UsageError("runs: pass --string or --modulus");
  const auto report = base2_structure_report(c.modulus());
  json result{{"runs", runs_json(report.form)},
              {"run_count", std::to_string(report.form.runs.size())},
              {"run_count_mod4", report.run_count_mod4},
              {"half_symmetry", report.half_symmetry},
              {"decrement_by_two", report.decrement_by_two},
              {"all_hold", report.all_hold()}};
  if (report.counterexample) result["counterexample"] = *report.counterexample;
  c.emit.result(std::move(result));
}

void cmd_alpha(const Context& c) {
  c.emit.result({{"alpha", digits_of(alpha_quotient(c.modulus(), c.base()))}});
}

void cmd_primitive(const Context& c) {
  const Natural m = c.modulus();
  const auto base = c.base();
  const bool primitive = is_primitive_by_alpha(m, base);
  const Natural alpha = alpha_quotient(m, base);
  const auto verdict = is_periodic_padded(alpha, to_u64(m - 1), base);
  c.emit.result({{"primitive", primitive},
                 {"alpha", digits_of(alpha)},
                 {"alpha_minimal_period", std::to_string(verdict.minimal_period)}});
}

void cmd_certify(const Context& c) {
  const auto outcome =
      certify_from_integer(natural_flag(c.flags.value, "--value"), c.base(), {c.factor()});
  json certs = json::array();
  for (const auto& cert : outcome.certificates) certs.push_back(certificate_json(cert));
  json result{{"reconstruction", reconstruction_json(outcome.reconstruction)},
              {"certificates", std::move(certs)},
              {"accepted", !outcome.rejection.has_value()}};
  if (outcome.rejection) {
    result["rejection"] = {{"reason", rejection_name(outcome.rejection->reason)},
                           {"detail", outcome.rejection->detail}};
  }
  c.emit.result(std::move(result));
}

void cmd_scan(const Context& c) {
  ScanConfig config;
  config.base = c.base();
  config.max_length = u64_flag(c.flags.max_length, "--max-length");
  if (c.flags.mode == "exhaustive") {
    config.mode = ScanMode::Exhaustive;
  } else if (c.flags.mode == "random") {
    config.mode = ScanMode::Random;
  } else {
    throw UsageError("--mode: expected 'exhaustive' or 'random', got '" + c.flags.mode + "'");
  }
  config.seed = c.seed(0);
  if (!c.flags.samples.empty()) config.samples = u64_flag(c.flags.samples, "--samples");
  if (!c.flags.max_candidates.empty()) {
    config.candidate_budget = u64_flag(c.flags.max_candidates, "--max-candidates");
  }
  config.factor = c.factor();
  config.workers = static_cast<unsigned>(u64_flag(c.flags.workers, "--workers"));
  config.distinct_primes = !c.flags.all;

  const ScanSummary summary = scan(config, [&](const PrimitivityCertificate& cert) {
    json r = certificate_json(cert);
    r["type"] = "certificate";
    c.emit.result(std::move(r));
  });
  json s{{"type", "summary"},
         {"examined", std::to_string(summary.examined)},
         {"qualifying", std::to_string(summary.qualifying)},
         {"emitted", std::to_string(summary.emitted)},
         {"truncated", summary.truncated}};
  if (summary.truncation_reason) s["truncation_reason"] = *summary.truncation_reason;
  if (summary.advisory) {
    s["advisory"] = *summary.advisory;
    c.note("note: " + *summary.advisory);
  }
  c.emit.result(std::move(s));
}

bool cmd_verify(const Context& c) {
  VerifyConfig config;
  config.max_m = u64_flag(c.flags.max_m, "--max-m");
  config.bases.clear();
  std::stringstream list(c.flags.bases);
  for (std::string item; std::getline(list, item, ',');) {
    config.bases.push_back(u64_flag(item, "--bases"));
  }
  if (config.bases.empty()) throw UsageError("--bases: expected a comma-separated list");
  for (const auto b : config.bases) {
    if (b < 2) throw UsageError("--bases: every base must be at least 2");
  }

  bool all_passed = true;
  for (const auto& check : verify_lemmas(config)) {
    all_passed = all_passed && check.passed();
    json r{{"type", "lemma"},
           {"name", check.name},
           {"cases", std::to_string(check.cases)},
           {"failures", std::to_string(check.failures)},
           {"passed", check.passed()}};
    if (check.first_failure) r["first_failure"] = *check.first_failure;
    c.emit.result(std::move(r));
    std::ostringstream line;
    line << std::left << std::setw(24) << check.name << (check.passed() ? "PASS" : "FAIL")
         << "  " << check.cases << " cases";
    if (check.first_failure) line << "  first failure: " << *check.first_failure;
    c.note(line.str());
  }
  c.emit.result({{"type", "summary"}, {"passed", all_passed}});
  return all_passed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Base-n repetends of 1/m and primitive-root certificates", "repetend"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json,!--no-json", flags.json, "Emit JSON lines (default on)");
  app.add_flag("--quiet", flags.quiet, "Suppress diagnostics on stderr");

  using Handler = std::function<bool(const Context&)>;
  std::map<std::string, Handler> handlers;
  auto command = [&](const std::string& name, const std::string& about, auto handler) {
    CLI::App* sub = app.add_subcommand(name, about);
    handlers[name] = [handler](const Context& c) {
      using R = decltype(handler(c));
      if constexpr (std::is_same_v<R, bool>) {
        return handler(c);
      } else {
        handler(c);
        return true;
      }
    };
    return sub;
  };
  auto base = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--base", flags.base, "Base n >= 2");
    if (required) o->required();
  };
  auto modulus = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--modulus", flags.modulus, "Modulus m");
    if (required) o->required();
  };
  auto digits = [&](CLI::App* s) {
    s->add_option("--string", flags.digits, "Comma-separated digits, leading zeros significant");
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", flags.budget, "Rho iteration budget for factorization");
    s->add_option("--seed", flags.seed, "Seed (falls back to $REPETEND_SEED)");
  };

  {
    auto* s = command("expand", "Repetend of 1/m in base n", cmd_expand);
    modulus(s);
    base(s);
  }
  {
    auto* s = command("digits", "Digits of 1/m from residues of powers", cmd_digits);
    modulus(s);
    base(s);
    s->add_option("--index", flags.index, "Single digit index k >= 1");
  }
  {
    auto* s = command("value", "Value and periodicity of a digit string", cmd_value);
    base(s);
    digits(s);
    s->add_option("--value", flags.value, "Integer to pad");
    s->add_option("--length", flags.length, "Target length for --value");
  }
  {
    auto* s = command("reconstruct", "Recover m from a repetend", cmd_reconstruct);
    base(s);
    digits(s);
    s->add_option("--value", flags.value, "Repetend as an integer");
    budget(s);
  }
  {
    auto* s = command("shift", "Cyclic shift of a repetend and its fraction", cmd_shift);
    modulus(s, false);
    base(s);
    digits(s);
    s->add_option("--shift", flags.shift, "Shift t")->required();
  }
  {
    auto* s = command("orbit", "Powers of n mod m", cmd_orbit);
    modulus(s);
    base(s);
  }
  {
    auto* s = command("complement", "Digit complement pairs for prime m", cmd_complement);
    modulus(s);
    base(s);
  }
  {
    auto* s = command("runs", "Run-length form; base-2 structure report for --modulus", cmd_runs);
    modulus(s, false);
    base(s, false);
    digits(s);
  }
  {
    auto* s = command("alpha", "(n^(m-1) - 1)/m for odd prime m", cmd_alpha);
    modulus(s);
    base(s);
  }
  {
    auto* s = command("primitive", "Primitivity via periodicity of alpha", cmd_primitive);
    modulus(s);
    base(s);
  }
  {
    auto* s = command("certify", "Primitive-root certificates from an integer a", cmd_certify);
    s->add_option("--value", flags.value, "Integer a")->required();
    base(s);
    budget(s);
  }
  {
    auto* s = command("scan", "Search for certifiable primes", cmd_scan);
    base(s);
    s->add_option("--max-length", flags.max_length, "Largest order l")->required();
    s->add_option("--mode", flags.mode, "exhaustive | random");
    s->add_option("--samples", flags.samples, "Draws in random mode");
    s->add_option("--max-candidates", flags.max_candidates, "Stop after this many candidates");
    s->add_option("--workers", flags.workers, "Worker threads");
    s->add_flag("--all", flags.all, "Emit every verified certificate, not one per prime");
    budget(s);
  }
  {
    auto* s = command("verify-lemmas", "Sweep the digit identities", cmd_verify);
    s->add_option("--max-m", flags.max_m, "Largest modulus");
    s->add_option("--bases", flags.bases, "Comma-separated bases");
  }

  auto inputs_of = [](const CLI::App* sub) {
    json inputs = json::object();
    if (sub == nullptr) return inputs;
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_lnames().empty()) continue;
      const auto& results = opt->results();
      inputs[opt->get_lnames().front()] = opt->get_type_size() == 0 || results.empty()
                                              ? std::string("true")
                                              : results.front();
    }
    return inputs;
  };

  std::string command_name;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    command_name = subs.empty() ? "" : subs.front()->get_name();
    Emitter(out, true, command_name, json::object()).error("usage", e.what());
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  command_name = sub->get_name();
  Emitter emit(out, flags.json, command_name, inputs_of(sub));
  Context context{flags, emit, err};
  try {
    return handlers.at(command_name)(context) ? kExitOk : kExitDomainError;
  } catch (const UsageError& e) {
    emit.error("usage", e.what());
    context.note(std::string("usage error: ") + e.what());
    return kExitUsage;
  } catch (const Error& e) {
    emit.error(e.name(), e.what());
    context.note(std::string("error: ") + std::string(e.name()) + ": " + e.what());
    return kExitDomainError;
  }
}

}  // namespace repetend::cli
