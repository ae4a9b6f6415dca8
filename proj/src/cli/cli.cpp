#include "ura/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "ura/automata/automaton.hpp"
#include "ura/automata/properties.hpp"
#include "ura/automata/reduction.hpp"
#include "ura/automata/semantics.hpp"
#include "ura/core/error.hpp"
#include "ura/counting/compile.hpp"
#include "ura/counting/oracle.hpp"
#include "ura/zeroness/decide.hpp"
#include "ura/zeroness/hnf.hpp"

namespace ura::cli {

namespace {

using nlohmann::json;

// Longest word the counterexample search enumerates.
constexpr std::size_t kMaxSearchLength = 8;

struct Options {
  std::string format = "text";
  std::string backend = "elim";
  std::uint64_t seed = 0;
  std::size_t max_n = 7, max_k = 7;
  std::optional<std::size_t> n, k;
  std::string var;
  std::vector<std::string> files;

  bool as_json() const { return format == "json"; }
  Backend zeroness_backend() const { return backend == "hnf" ? Backend::Hermite : Backend::Elimination; }
};

RegisterAutomaton load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_automaton(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string render_word(const RegisterAutomaton& a, const DataWord& w) {
  if (w.empty()) return "<empty>";
  std::string out;
  for (const Letter& l : w) out += "(" + a.alphabet[l.symbol] + "," + std::to_string(l.atom) + ")";
  return out;
}

json word_json(const RegisterAutomaton& a, const DataWord& w) {
  json arr = json::array();
  for (const Letter& l : w) arr.push_back({{"symbol", a.alphabet[l.symbol]}, {"atom", l.atom}});
  return arr;
}

// Shortest canonical word up to `max_length` with the property.
std::optional<DataWord> find_word(std::size_t alphabet_size, std::size_t max_length,
                                  const std::function<bool(const DataWord&)>& wanted) {
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::optional<DataWord> found;
    for_each_canonical_word(alphabet_size, len, [&](const DataWord& w) {
      if (found) return false;
      if (w.size() == len && wanted(w)) found = w;
      return !found;
    });
    if (found) return found;
  }
  return std::nullopt;
}

void require_unambiguous(const RegisterAutomaton& a, const std::string& what) {
  if (!check_properties(a).unambiguous) throw PreconditionError(what + " is not unambiguous");
}

struct CheckResult {
  std::string property;
  bool holds = true;
  ZeronessReport report;
  std::optional<DataWord> counterexample;
  const RegisterAutomaton* word_automaton = nullptr;  // alphabet for rendering
  std::string direction;                              // equivalence only
};

ZeronessReport decide_universal(const RegisterAutomaton& a, const Options& opt) {
  CountingSystem cs = build_counting_system(a);
  return decide_zeroness(cs.system, "G", opt.zeroness_backend());
}

CheckResult check_universality(const RegisterAutomaton& a, const Options& opt) {
  require_unambiguous(a, "automaton");
  CheckResult r{"universality", true, decide_universal(a, opt), std::nullopt, &a, ""};
  r.holds = r.report.verdict.zero;
  if (!r.holds && r.report.verdict.n <= kMaxSearchLength)
    r.counterexample =
        find_word(a.alphabet.size(), r.report.verdict.n, [&](const DataWord& w) { return !accepts(a, w); });
  return r;
}

CheckResult check_inclusion(const RegisterAutomaton& a, const RegisterAutomaton& b, const Options& opt) {
  RegisterAutomaton c = reduce_inclusion_to_universality(a, b);
  if (!check_properties(c).unambiguous) throw InternalError("reduction produced an ambiguous automaton");
  CheckResult r{"inclusion", true, decide_universal(c, opt), std::nullopt, &a, ""};
  r.holds = r.report.verdict.zero;
  if (!r.holds && r.report.verdict.n <= kMaxSearchLength)
    r.counterexample = find_word(a.alphabet.size(), r.report.verdict.n,
                                 [&](const DataWord& w) { return accepts(a, w) && !accepts(b, w); });
  return r;
}

void print_check(const CheckResult& r, const Options& opt, std::ostream& out) {
  const Verdict& v = r.report.verdict;
  const auto [li, lj] = r.report.relation.lead();
  if (opt.as_json()) {
    json j = {{"property", r.property},
              {"holds", r.holds},
              {"verdict", to_string(v)},
              {"relation", {{"lead", {li, lj}}, {"monic", r.report.relation.monic()}}}};
    if (!r.direction.empty()) j["direction"] = r.direction;
    if (!r.holds) {
      j["witness"] = {{"n", v.n}, {"k", v.k}, {"value", to_fraction_string(v.value)}};
      j["counterexample"] = r.counterexample ? word_json(*r.word_automaton, *r.counterexample) : json(nullptr);
    }
    out << j.dump() << "\n";
    return;
  }
  out << r.property << ": " << (r.holds ? "holds" : "fails") << "\n";
  if (!r.direction.empty()) out << "direction: " << r.direction << "\n";
  out << "verdict: " << to_string(v) << "\n";
  if (!r.holds) {
    out << "counterexample: "
        << (r.counterexample ? render_word(*r.word_automaton, *r.counterexample)
                             : "witness at (" + std::to_string(v.n) + "," + std::to_string(v.k) +
                                   ") without reconstructed word")
        << "\n";
  }
  out << "relation: lead=(" << li << "," << lj << ") monic=" << (r.report.relation.monic() ? "true" : "false")
      << "\n";
}

int cmd_check(const std::string& kind, const Options& opt, std::ostream& out) {
  const std::size_t want = kind == "universality" ? 1 : 2;
  if (opt.files.size() != want) throw CLI::ValidationError(kind + " expects " + std::to_string(want) + " file(s)");
  RegisterAutomaton a = load(opt.files[0]);
  CheckResult r;
  if (kind == "universality") {
    r = check_universality(a, opt);
  } else {
    RegisterAutomaton b = load(opt.files[1]);
    if (kind == "inclusion") {
      r = check_inclusion(a, b, opt);
    } else {
      CheckResult ab = check_inclusion(a, b, opt);
      if (!ab.holds) {
        ab.property = "equivalence";
        ab.direction = "first not included in second";
        print_check(ab, opt, out);
        return kFails;
      }
      CheckResult ba = check_inclusion(b, a, opt);
      ba.property = "equivalence";
      if (!ba.holds) ba.direction = "second not included in first";
      print_check(ba, opt, out);
      return ba.holds ? kHolds : kFails;
    }
  }
  print_check(r, opt, out);
  return r.holds ? kHolds : kFails;
}

int cmd_props(const Options& opt, std::ostream& out) {
  RegisterAutomaton a = load(opt.files.at(0));
  PropertyReport p = check_properties(a);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  if (opt.as_json()) {
    json j = {{"deterministic", p.deterministic}, {"unambiguous", p.unambiguous}, {"non_guessing", p.non_guessing}};
    auto witness = [&](const char* key, const std::optional<DataWord>& w) {
      if (w) j["witnesses"][key] = word_json(a, *w);
    };
    witness("nondeterminism", p.nondeterminism_witness);
    witness("ambiguity", p.ambiguity_witness);
    witness("guessing", p.guessing_witness);
    out << j.dump() << "\n";
  } else {
    out << "deterministic=" << flag(p.deterministic) << " unambiguous=" << flag(p.unambiguous)
        << " non_guessing=" << flag(p.non_guessing) << "\n";
    auto witness = [&](const char* key, const std::optional<DataWord>& w) {
      if (w) out << key << "_witness=" << render_word(a, *w) << "\n";
    };
    witness("nondeterminism", p.nondeterminism_witness);
    witness("ambiguity", p.ambiguity_witness);
    witness("guessing", p.guessing_witness);
  }
  return kHolds;
}

int cmd_linrec(const Options& opt, std::ostream& out) {
  CountingSystem cs = build_counting_system(load(opt.files.at(0)));
  out << (opt.as_json() ? to_json(cs.system) + "\n" : to_text(cs.system));
  return kHolds;
}

void print_table(const SequenceTable& t, const Options& opt, std::ostream& out) {
  if (!opt.as_json()) {
    out << to_csv(t, opt.var);
    return;
  }
  json values = json::object();
  for (std::size_t v = 0; v < t.names().size(); ++v) {
    if (t.names()[v].rfind(opt.var, 0) != 0) continue;
    json rows = json::array();
    for (std::size_t n = 0; n <= t.max_n(); ++n) {
      json row = json::array();
      for (std::size_t k = 0; k <= t.max_k(); ++k) row.push_back(to_fraction_string(t.at(v, n, k)));
      rows.push_back(row);
    }
    values[t.names()[v]] = rows;
  }
  out << json{{"max_n", t.max_n()}, {"max_k", t.max_k()}, {"values", values}}.dump() << "\n";
}

int cmd_eval(const Options& opt, std::ostream& out) {
  CountingSystem cs = build_counting_system(load(opt.files.at(0)));
  print_table(evaluate(cs.system, opt.n.value_or(opt.max_n), opt.k.value_or(opt.max_k)), opt, out);
  return kHolds;
}

int cmd_cr(const Options& opt, std::ostream& out) {
  CountingSystem cs = build_counting_system(load(opt.files.at(0)));
  const std::string target = opt.var.empty() ? "G" : opt.var;
  CancellingRelation2 rel = opt.zeroness_backend() == Backend::Hermite ? hnf_cancelling_relation(cs.system, target)
                                                                       : cancelling_relation(cs.system, target);
  out << (opt.as_json() ? to_json(rel) + "\n" : to_text(rel));
  return kHolds;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  RegisterAutomaton a = load(opt.files.at(0));
  const std::size_t n = opt.n.value_or(opt.max_n), k = opt.k.value_or(opt.max_k);
  SequenceTable t = oracle_table(a, n, k);
  if (opt.as_json()) {
    json counts = json::object();
    for (std::size_t v = 0; v < t.names().size(); ++v)
      if (t.names()[v].rfind(opt.var, 0) == 0) counts[t.names()[v]] = to_fraction_string(t.at(v, n, k));
    out << json{{"n", n}, {"k", k}, {"counts", counts}}.dump() << "\n";
  } else {
    for (std::size_t v = 0; v < t.names().size(); ++v)
      if (t.names()[v].rfind(opt.var, 0) == 0)
        out << t.names()[v] << "(" << n << "," << k << ")=" << to_fraction_string(t.at(v, n, k)) << "\n";
  }
  return kHolds;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  RegisterAutomaton a = load(opt.files.at(0));
  CountingSystem cs = build_counting_system(a);
  SequenceTable sys = evaluate(cs.system, opt.max_n, opt.max_k);
  SequenceTable oracle = oracle_table(a, opt.max_n, opt.max_k);
  const std::size_t g = *sys.index("G");
  // S - G counts accepting runs; it equals the accepted words only without ambiguity.
  const bool compare_accepted = check_properties(a).unambiguous;
  std::size_t compared = 0;
  for (std::size_t v = 0; v < oracle.names().size(); ++v) {
    const bool accepted = v + 1 == oracle.names().size();
    if (accepted && !compare_accepted) continue;
    const std::optional<std::size_t> idx = accepted ? std::nullopt : sys.index(oracle.names()[v]);
    if (!accepted && !idx) throw InternalError("oracle column " + oracle.names()[v] + " missing from the system");
    for (std::size_t n = 0; n <= opt.max_n; ++n)
      for (std::size_t k = 0; k <= opt.max_k; ++k) {
        const Rat lin = accepted ? sys.at(cs.stirling_variable, n, k) - sys.at(g, n, k) : sys.at(*idx, n, k);
        ++compared;
        if (lin == oracle.at(v, n, k)) continue;
        if (opt.as_json()) {
          out << json{{"agree", false},
                      {"var", oracle.names()[v]},
                      {"n", n},
                      {"k", k},
                      {"linrec", to_fraction_string(lin)},
                      {"oracle", to_fraction_string(oracle.at(v, n, k))}}
                     .dump()
              << "\n";
        } else {
          out << "mismatch var=" << oracle.names()[v] << " n=" << n << " k=" << k
              << " linrec=" << to_fraction_string(lin) << " oracle=" << to_fraction_string(oracle.at(v, n, k))
              << "\n";
        }
        return kFails;
      }
  }
  if (opt.as_json())
    out << json{{"agree", true}, {"compared", compared}}.dump() << "\n";
  else
    out << "agree: " << compared << " values on n<=" << opt.max_n << " k<=" << opt.max_k << "\n";
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Decision procedures for unambiguous register automata"};
  app.name("ura");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--backend", opt.backend, "Zeroness backend")->check(CLI::IsMember({"elim", "hnf"}));
  app.add_option("--seed", opt.seed, "Seed for randomized procedures (none of the commands is randomized yet)");
  app.add_option("--max-n", opt.max_n, "Largest n for verify and oracle");
  app.add_option("--max-k", opt.max_k, "Largest k for verify and oracle");

  std::string check_kind;
  CLI::App* check = app.add_subcommand("check", "Decide universality, inclusion or equivalence");
  check->fallthrough();
  check->require_subcommand(1);
  for (const char* kind : {"universality", "inclusion", "equivalence"}) {
    CLI::App* sub = check->add_subcommand(kind);
    sub->fallthrough();
    sub->add_option("files", opt.files, "Automaton files")->required();
    sub->callback([&check_kind, kind] { check_kind = kind; });
  }

  auto single_file = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", opt.files, "Automaton file")->required()->expected(1);
    return sub;
  };
  CLI::App* props = single_file("props", "Report determinism, unambiguity and guessing");
  CLI::App* linrec = single_file("linrec", "Print the orbit-counting system");
  CLI::App* eval = single_file("eval", "Evaluate the counting system as CSV");
  CLI::App* cr = single_file("cr", "Print a cancelling relation");
  CLI::App* oracle = single_file("oracle", "Brute-force orbit counts at one point");
  CLI::App* verify = single_file("verify", "Compare the counting system with brute force");
  for (CLI::App* sub : {eval, oracle}) {
    sub->add_option("--n", opt.n, "n bound or point");
    sub->add_option("--k", opt.k, "k bound or point");
  }
  for (CLI::App* sub : {eval, cr, oracle}) sub->add_option("--var", opt.var, "Variable name prefix (cr: exact name)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_kind, opt, out);
    if (props->parsed()) return cmd_props(opt, out);
    if (linrec->parsed()) return cmd_linrec(opt, out);
    if (eval->parsed()) return cmd_eval(opt, out);
    if (cr->parsed()) return cmd_cr(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  throw InternalError("no subcommand dispatched");
}

}  // namespace ura::cli
