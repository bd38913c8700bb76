#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svb/svb.hpp"

namespace svb::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsage = 2,
  kDistinct = 3,
  kUnknown = 4,
};

namespace detail {

struct Options {
  int n = 0;
  std::size_t budget = SearchBudget{}.max_nodes;
  std::size_t max_len = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> words;
  std::string suite;
  std::string gauss;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool json_mode(const Options& o) { return o.format == "json"; }

inline std::size_t strand_count(const Options& o) {
  if (o.n == 0) throw UsageError("--n is required for this command");
  if (o.n < 2) throw UsageError("--n must be at least 2");
  return static_cast<std::size_t>(o.n);
}

inline BraidWord word_arg(const Options& o, std::size_t k = 0) { return parse_word(o.words.at(k), strand_count(o)); }

inline SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.budget;
  b.max_len = o.max_len;
  return b;
}

inline Json trace_json(const BraidTrace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    out.push_back({{"rule", s.label},
                   {"position", s.position},
                   {"removed", print_word(s.removed)},
                   {"inserted", print_word(s.inserted)}});
  }
  return out;
}

inline int cmd_parse(const Options& o, std::ostream& out) {
  const auto w = word_arg(o);
  if (json_mode(o)) {
    out << Json{{"n", w.strand_count()}, {"word", print_word(w)}, {"length", w.size()}}.dump() << '\n';
  } else {
    out << print_word(w) << '\n';
  }
  return kOk;
}

inline int cmd_invariants(const Options& o, std::ostream& out) {
  const auto w = word_arg(o);
  const auto th = theta(w);
  if (json_mode(o)) {
    out << Json{{"theta", perm_to_json(th)}, {"degree", degree(w)}, {"singularities", singularity_count(w)}}.dump()
        << '\n';
  } else {
    out << "theta: " << th.to_string() << '\n'
        << "degree: " << degree(w) << '\n'
        << "singularities: " << singularity_count(w) << '\n';
  }
  return kOk;
}

inline int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.words.size() != 2) throw UsageError("equiv takes exactly two words");
  const auto u = word_arg(o, 0);
  const auto v = word_arg(o, 1);
  const auto verdict = equivalent(u, v, budget_of(o));
  if (json_mode(o)) {
    Json j{{"verdict", to_string(verdict.kind)}};
    if (verdict.kind == VerdictKind::Equivalent) j["trace"] = trace_json(verdict.trace);
    if (verdict.kind == VerdictKind::Distinct) {
      j["witness"] = {{"invariant", verdict.witness.invariant},
                      {"first", verdict.witness.first},
                      {"second", verdict.witness.second}};
    }
    j["stats"] = {{"nodes", verdict.stats.nodes}, {"length_cap", verdict.stats.length_cap}};
    out << j.dump() << '\n';
  } else {
    out << to_string(verdict.kind) << '\n';
    for (const auto& s : verdict.trace) out << "  " << to_string(s) << '\n';
    if (verdict.kind == VerdictKind::Distinct) {
      out << "  " << verdict.witness.invariant << ": " << verdict.witness.first << " vs "
          << verdict.witness.second << '\n';
    }
    if (verdict.kind == VerdictKind::Unknown) {
      out << "  searched " << verdict.stats.nodes << " nodes, length cap " << verdict.stats.length_cap << '\n';
    }
  }
  switch (verdict.kind) {
    case VerdictKind::Equivalent: return kOk;
    case VerdictKind::Distinct: return kDistinct;
    case VerdictKind::Unknown: return kUnknown;
  }
  return kUnknown;
}

inline int cmd_to_gauss(const Options& o, std::ostream& out) {
  const auto g = gauss_of_braid(word_arg(o));
  if (json_mode(o)) {
    out << to_json(g).dump() << '\n';
  } else {
    out << "arrows: " << print_arrows(g.arrows()) << '\n' << "perm: " << g.perm().to_string() << '\n';
  }
  return kOk;
}

// The diagram comes as a JSON string, "-" for standard input, or @file.
inline int cmd_from_gauss(const Options& o, std::istream& in, std::ostream& out) {
  std::string text = o.gauss;
  if (text == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!text.empty() && text.front() == '@') {
    std::ifstream file(text.substr(1));
    if (!file) throw DomainError("cannot open " + text.substr(1));
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  const auto g = gauss_from_json(j);
  if (o.n != 0 && static_cast<std::size_t>(o.n) != g.strand_count()) {
    throw DomainError("--n disagrees with the diagram's strand count");
  }
  const auto w = braid_of_gauss(g);
  if (json_mode(o)) {
    out << Json{{"n", w.strand_count()}, {"word", print_word(w)}}.dump() << '\n';
  } else {
    out << print_word(w) << '\n';
  }
  return kOk;
}

inline int cmd_desing(const Options& o, std::ostream& out) {
  const auto sum = eta_hat(word_arg(o));
  if (json_mode(o)) {
    out << to_json(sum).dump() << '\n';
    return kOk;
  }
  for (const auto& [word, coeff] : sum.sorted_by_text()) {
    out << (coeff > 0 ? "+" : "") << coeff << ' ' << word << '\n';
  }
  out << "spectrum:";
  const auto spectrum = degree_spectrum(sum);
  for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) {
    out << ' ' << (it->first > 0 ? "+" : "") << it->first << ':' << it->second;
  }
  out << '\n';
  return kOk;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  const auto pair = decompose(word_arg(o));
  if (json_mode(o)) {
    out << to_json(pair).dump() << '\n';
  } else {
    out << "pure: " << print_pure_word(pair.pure) << '\n' << "perm: " << pair.perm.to_string() << '\n';
  }
  return kOk;
}

inline int cmd_factor(const Options& o, std::ostream& out) {
  const auto f = factor_singular(word_arg(o));
  if (json_mode(o)) {
    Json taus = Json::array();
    for (const auto& ct : f.conjugated_taus) taus.push_back({{"conjugator", print_word(ct.conjugator)}, {"index", ct.index}});
    out << Json{{"conjugated_taus", std::move(taus)}, {"virtual_part", print_word(f.virtual_part)}}.dump() << '\n';
  } else {
    for (const auto& ct : f.conjugated_taus) {
      out << "tau" << ct.index << " conjugated by " << print_word(ct.conjugator) << '\n';
    }
    out << "virtual part: " << print_word(f.virtual_part) << '\n';
  }
  return kOk;
}

inline int cmd_genus(const Options& o, std::ostream& out) {
  const auto s = surface_summary(word_arg(o));
  if (json_mode(o)) {
    out << to_json(s).dump() << '\n';
  } else {
    out << "euler: " << s.euler << '\n' << "boundaries: " << s.boundaries << '\n' << "genus: " << s.genus << '\n';
  }
  return kOk;
}

inline int cmd_relations(const Options& o, std::ostream& out) {
  const auto catalog = relation_catalog(strand_count(o));
  if (json_mode(o)) {
    Json j = Json::array();
    for (const auto& r : catalog) j.push_back({{"family", r.family}, {"lhs", print_word(r.lhs)}, {"rhs", print_word(r.rhs)}});
    out << j.dump() << '\n';
  } else {
    for (const auto& r : catalog) out << r.family << ": " << print_word(r.lhs) << " = " << print_word(r.rhs) << '\n';
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = run_suite(o.suite, strand_count(o), o.seed, budget_of(o));
  if (json_mode(o)) {
    out << to_json(report).dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name << ' ' << (c.count - c.failures) << '/' << c.count;
      if (!c.passed()) out << " first failure: " << c.first_failure;
      out << '\n';
    }
    out << (report.passed() ? "suite passed" : "suite failed") << '\n';
  }
  return report.passed() ? kOk : kDomainError;
}

}  // namespace detail

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  detail::Options o;
  CLI::App app{"Computations in the singular virtual braid monoid", "svb"};
  app.require_subcommand(1, 1);
  app.add_option("--n", o.n, "number of strands");
  app.add_option("--budget", o.budget, "search node limit")->check(CLI::PositiveNumber);
  app.add_option("--max-len", o.max_len, "length cap for intermediate words")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "random seed for suites");

  const auto word_command = [&](const char* name, const char* help, std::size_t words = 1) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("words", o.words, words == 1 ? "braid word" : "braid words")->required()->expected(
        static_cast<int>(words));
    return sub;
  };
  auto* parse = word_command("parse", "normalize a word");
  auto* invariants = word_command("invariants", "theta, degree and singularity count");
  auto* equiv = word_command("equiv", "bounded equivalence search", 2);
  auto* to_gauss = word_command("to-gauss", "horizontal Gauss diagram of a word");
  auto* desing = word_command("desing", "desingularization into signed virtual braid words");
  auto* decompose_cmd = word_command("decompose", "pure part and permutation");
  auto* factor = word_command("factor", "conjugated singular letters and virtual part");
  auto* genus_cmd = word_command("genus", "surface summary of the canonical abstract diagram");
  auto* from_gauss = app.add_subcommand("from-gauss", "braid word of a Gauss diagram (JSON, - or @file)");
  from_gauss->fallthrough();
  from_gauss->add_option("diagram", o.gauss, "diagram")->required();
  auto* relations = app.add_subcommand("relations", "list the defining relations");
  relations->fallthrough();
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->fallthrough();
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

  std::vector<std::string> argv_storage{"svb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (parse->parsed()) return detail::cmd_parse(o, out);
    if (invariants->parsed()) return detail::cmd_invariants(o, out);
    if (equiv->parsed()) return detail::cmd_equiv(o, out);
    if (to_gauss->parsed()) return detail::cmd_to_gauss(o, out);
    if (from_gauss->parsed()) return detail::cmd_from_gauss(o, in, out);
    if (desing->parsed()) return detail::cmd_desing(o, out);
    if (decompose_cmd->parsed()) return detail::cmd_decompose(o, out);
    if (factor->parsed()) return detail::cmd_factor(o, out);
    if (genus_cmd->parsed()) return detail::cmd_genus(o, out);
    if (relations->parsed()) return detail::cmd_relations(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, out);
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace svb::cli
