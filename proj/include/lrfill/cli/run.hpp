#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrfill/analysis/coincidence.hpp"
#include "lrfill/analysis/conjecture.hpp"
#include "lrfill/analysis/oplus.hpp"
#include "lrfill/analysis/report.hpp"
#include "lrfill/analysis/sequences.hpp"
#include "lrfill/analysis/theorems.hpp"
#include "lrfill/analysis/types.hpp"
#include "lrfill/fill.hpp"
#include "lrfill/morph/morphism.hpp"
#include "lrfill/morph/sequence.hpp"
#include "lrfill/oeis/bfile.hpp"
#include "lrfill/oeis/fetch.hpp"
#include "lrfill/oeis/registry.hpp"
#include "lrfill/rule_spec.hpp"

namespace lrfill::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kRuntime = 3 };

struct Environment {
  oeis::Transport transport;  // empty: no network
};

namespace detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Plain, Structured };

/// Space-separated up to 1000 terms, one per line above.
template <class R>
void print_terms(std::ostream& out, const R& terms) {
  const bool lines = std::size(terms) > 1000;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) out << (lines ? '\n' : ' ');
    out << t;
    first = false;
  }
  out << '\n';
}

template <class R>
std::string join(const R& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << ' ';
    os << t;
    first = false;
  }
  return os.str();
}

inline RulePreset require_preset(const std::string& text) {
  const auto p = parse_preset(text);
  if (!p) throw UsageError("this command needs a preset rule (36, even, odd, 42), got '" + text + "'");
  return *p;
}

inline int report_exit(std::ostream& out, const analysis::Report& r, Format f) {
  out << (f == Format::Plain ? analysis::format_plain(r) : analysis::format_structured(r));
  return r.pass() ? kOk : kCheckFailed;
}

struct Options {
  std::string rule = "36";
  std::uint64_t n = 0;
  std::string format = "plain";
  std::optional<std::uint64_t> steps;
  std::string claim;
  unsigned jobs = 1;
  std::string id;
  std::string against;
  bool pairs = false;
  std::string cache_dir;
  bool offline = false;
  unsigned retries = 0;
  std::string spec;
  std::size_t min_agreement = 0;

  [[nodiscard]] Format fmt() const { return format == "structured" ? Format::Structured : Format::Plain; }
};

inline int cmd_gen(const Options& o, std::ostream& out) {
  const FillingRule r = resolve_rule(o.rule);
  const PartialPermutation perm = o.steps ? fill(r, *o.steps) : fill_prefix(r, o.n);
  const auto cells = read_prefix(perm, o.n);
  if (o.fmt() == Format::Structured) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << "n=" << i + 1 << " value=" << (cells[i] ? std::to_string(*cells[i]) : "-") << '\n';
    return kOk;
  }
  std::vector<std::string> text;
  text.reserve(cells.size());
  for (const auto& c : cells) text.push_back(c ? std::to_string(*c) : "-");
  print_terms(out, text);
  return kOk;
}

inline int cmd_types(const Options& o, std::ostream& out) {
  const RulePreset p = require_preset(o.rule);
  const auto labels = analysis::classify(fill_prefix(p, o.n), analysis::ruleset(p), o.n);
  const auto s = analysis::type_string(labels);
  if (o.fmt() == Format::Structured)
    out << "rule=" << preset_name(p) << " n=" << o.n << " types=" << s << '\n';
  else
    out << s << '\n';
  return kOk;
}

inline int cmd_records(const Options& o, std::ostream& out) {
  const RulePreset p = require_preset(o.rule);
  const auto rec = analysis::records(fill_prefix(p, o.n), o.n);
  const std::vector<std::pair<std::string, std::string>> rows{
      {"R_pos", join(rec.positions)}, {"R_rec", join(rec.values)},
      {"dR_pos", join(rec.pos_deltas)}, {"dR_rec", join(rec.val_deltas)}};
  for (const auto& [k, v] : rows) {
    if (o.fmt() == Format::Structured)
      out << "series=" << k << " rule=" << preset_name(p) << " values=" << analysis::detail::kv_value(v) << '\n';
    else
      out << k << ": " << v << '\n';
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, bool rule_given) {
  using analysis::Report;
  const std::uint64_t n = o.n;
  std::vector<std::function<Report()>> tasks;
  const std::vector<std::string> known{"types", "morphism", "even", "selfsim", "records", "oplus", "duplicate",
                                       "coincide", "conjecture", "all"};
  if (std::ranges::find(known, o.claim) == known.end())
    throw UsageError("unknown claim '" + o.claim + "' (types, morphism, even, selfsim, records, oplus, duplicate, coincide, conjecture, all)");

  std::vector<RulePreset> variants{RulePreset::Rule36, RulePreset::RuleOdd, RulePreset::Rule42};
  if (rule_given || o.claim != "all") variants = {require_preset(o.rule)};
  const bool all = o.claim == "all";
  for (RulePreset p : variants) {
    if (all || o.claim == "types") {
      if (n < 9) throw UsageError("the type theorem needs --n >= 9");
      tasks.emplace_back([=] { return analysis::verify_type_theorem(p, n); });
    }
    if (all || o.claim == "morphism") tasks.emplace_back([=] { return analysis::verify_morphism_theorem(p, n); });
    if (all || o.claim == "records") tasks.emplace_back([=] { return analysis::verify_record_props(p, n); });
  }
  const bool standard_only = !rule_given || o.rule == "36" || o.rule == "standard" || !all;
  if (standard_only) {
    if (all || o.claim == "even") tasks.emplace_back([=] { return analysis::verify_fill_properties(n); });
    if (all || o.claim == "selfsim") tasks.emplace_back([=] { return analysis::self_similarity_check(n); });
    if (all || o.claim == "duplicate") tasks.emplace_back([=] { return analysis::duplicate_question(n); });
    if (all || o.claim == "oplus") tasks.emplace_back([=] { return analysis::verify_oplus_prop(n); });
    if (all || o.claim == "coincide")
      tasks.emplace_back([=] { return analysis::verify_coincidence(n, std::max<std::uint64_t>(1, n / 10)); });
    if (all || o.claim == "conjecture") tasks.emplace_back([=] { return analysis::conjecture_check(n); });
  }

  Report r;
  if (o.jobs > 1) {
    std::vector<std::future<Report>> running;
    for (auto& t : tasks) running.push_back(std::async(std::launch::async, t));
    for (auto& f : running) r.append(f.get());
  } else {
    for (auto& t : tasks) r.append(t());
  }
  return report_exit(out, r, o.fmt());
}

inline int cmd_coincide(const Options& o, std::ostream& out) {
  const auto c = analysis::coincidence_sequence(o.n);
  const std::size_t gaps = c.size() > 2 ? c.size() - 2 : 1;
  const auto r = analysis::verify_coincidence(o.n, gaps);
  const auto* eq = r.find("coincidence.C_eq_I4");
  if (o.fmt() == Format::Structured) {
    out << "series=C n=" << o.n << " values=" << analysis::detail::kv_value(join(c)) << '\n';
    return report_exit(out, r, o.fmt());
  }
  out << join(c) << '\n';
  out << "C == I4: " << (eq && eq->pass ? "PASS" : "FAIL") << '\n';
  return report_exit(out, r, o.fmt());
}

inline int cmd_oplus(const Options& o, std::ostream& out) {
  const auto terms = analysis::oplus_transform(o.n);
  if (o.fmt() == Format::Structured)
    out << "series=oplus n=" << o.n << " values=" << analysis::detail::kv_value(join(terms)) << '\n';
  else
    print_terms(out, terms);
  return report_exit(out, analysis::verify_oplus_prop(o.n), o.fmt());
}

inline int cmd_conjecture(const Options& o, std::ostream& out) {
  const auto d = analysis::conjecture_data(o.n);
  const auto r = analysis::conjecture_check(o.n, o.min_agreement);
  if (o.fmt() == Format::Plain) {
    out << "EMPIRICAL report (no proof), values up to " << o.n << '\n';
    std::vector<Position> head(d.complement.begin(), d.complement.begin() + std::min<std::ptrdiff_t>(12, std::ssize(d.complement)));
    std::vector<Position> halved(d.halved.begin(), d.halved.begin() + std::min<std::ptrdiff_t>(12, std::ssize(d.halved)));
    out << "complement: " << join(head) << (d.complement.size() > head.size() ? " ..." : "") << '\n';
    out << "halved:     " << join(halved) << (d.halved.size() > halved.size() ? " ..." : "") << '\n';
  }
  return report_exit(out, r, o.fmt());
}

inline void print_diff(std::ostream& out, const oeis::DiffReport& d, Format f) {
  if (f == Format::Plain) {
    out << oeis::format_diff(d) << '\n';
    return;
  }
  out << "lhs=" << d.lhs_id << " rhs=" << d.rhs_id << " status=" << oeis::status_name(d.status) << " from=" << d.from
      << " to=" << d.to << " compared=" << d.compared;
  if (d.index) out << " index=" << *d.index << " lhs_value=" << d.lhs << " rhs_value=" << d.rhs;
  out << '\n';
}

inline int cmd_oeis(const Options& o, std::ostream& out, const Environment& env) {
  oeis::FetchOptions fo;
  fo.offline = o.offline;
  fo.retries = o.retries;
  oeis::BFileCache cache(oeis::resolve_cache_dir(o.cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(o.cache_dir)),
                         o.offline ? oeis::Transport{} : env.transport, fo);
  const std::size_t limit = o.n;
  bool ok = true;
  auto against_generator = [&](const std::string& id) {
    const auto* src = oeis::find_source(id);
    if (!src) throw UsageError("no generator for " + id + " (use --against to compare two b-files)");
    const auto b = cache.fetch(id);
    std::size_t count = limit;
    if (count == 0 || count > b.entries.size()) count = b.entries.size();
    auto d = oeis::compare(src->generate(count), src->offset, b, limit);
    d.lhs_id = "generated " + src->id;
    ok = ok && d.agrees();
    print_diff(out, d, o.fmt());
  };
  auto two_files = [&](const std::string& a, const std::string& b) {
    const auto d = oeis::compare_bfiles(cache.fetch(a), cache.fetch(b), limit);
    ok = ok && d.agrees();
    print_diff(out, d, o.fmt());
  };

  if (o.pairs) {
    for (const auto& [a, b] : oeis::even_rule_identities()) two_files(a, b);
  } else if (o.id.empty()) {
    throw UsageError("oeis-check needs --id or --pairs");
  } else if (!o.against.empty()) {
    two_files(oeis::normalize_id(o.id), oeis::normalize_id(o.against));
  } else {
    against_generator(oeis::normalize_id(o.id));
  }
  return ok ? kOk : kCheckFailed;
}

inline int cmd_morphism(const Options& o, std::ostream& out) {
  const auto lit = morph::parse_morphism(o.spec);
  const morph::Symbol seed = lit.seed.value_or(lit.morphism.alphabet().front());
  const auto prefix = morph::fixed_point(lit.morphism, seed).take(o.n);
  const auto text = lit.morphism.format_word(prefix);
  if (o.fmt() == Format::Structured)
    out << "morphism=" << analysis::detail::kv_value(lit.morphism.to_string())
        << " seed=" << lit.morphism.names()(seed) << " n=" << prefix.size()
        << " prefix=" << analysis::detail::kv_value(text) << '\n';
  else
    out << text << '\n';
  return kOk;
}

}  // namespace detail

/// Runs one command line (argv without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {}) {
  using detail::Options;
  Options o;
  CLI::App app{"Left-right filling permutations: generation, types, morphisms and checks", "lrfill"};
  app.require_subcommand(1, 1);
  const CLI::Validator positive(
      [](const std::string& v) {
        return !v.empty() && v.find_first_not_of("0123456789") == std::string::npos && v.find_first_not_of('0') != std::string::npos
                   ? std::string()
                   : "must be a positive integer, got '" + v + "'";
      },
      "INT>=1");

  auto common = [&](CLI::App* sub, bool with_rule) {
    if (with_rule) sub->add_option("--rule", o.rule, "preset (36, even, odd, 42, unit, degenerate) or 'L=..;R=..;tie=..'");
    sub->add_option("--n", o.n, "number of entries")->required()->check(positive);
    sub->add_option("--format", o.format, "plain or structured")->check(CLI::IsMember({"plain", "structured"}));
  };
  auto* gen = app.add_subcommand("gen", "print the permutation prefix ('-' for undefined cells)");
  common(gen, true);
  gen->add_option("--steps", o.steps, "run exactly this many steps instead of filling 1..n")->check(positive);
  auto* types = app.add_subcommand("types", "print the type word of the prefix");
  common(types, true);
  auto* records = app.add_subcommand("records", "records of the prefix and their differences");
  common(records, true);
  auto* verify = app.add_subcommand("verify", "check theorems up to --n");
  common(verify, true);
  verify->add_option("--claim", o.claim, "types, morphism, even, selfsim, records, oplus, duplicate, coincide, conjecture, all")
      ->required();
  verify->add_option("--jobs", o.jobs, "claims checked concurrently")->check(positive);
  auto* coincide = app.add_subcommand("coincide", "positions where rule 36 and rule 42 agree");
  common(coincide, false);
  auto* oplus = app.add_subcommand("oplus", "the transform n -> Pi(n+1)-1 and its characterisation");
  common(oplus, false);
  auto* conj = app.add_subcommand("conjecture", "empirical report on records and the choral sequence");
  common(conj, false);
  conj->add_option("--min-agreement", o.min_agreement, "fail unless this many terms agree");
  auto* oeis_cmd = app.add_subcommand("oeis-check", "diff generated sequences against OEIS b-files");
  oeis_cmd->add_option("--id", o.id, "A-number");
  oeis_cmd->add_option("--against", o.against, "compare --id with this b-file instead of the generator");
  oeis_cmd->add_flag("--pairs", o.pairs, "check the right-if-even identities between b-files");
  oeis_cmd->add_option("--n", o.n, "terms to compare (0 = whole file)");
  oeis_cmd->add_option("--cache-dir", o.cache_dir, std::string("b-file cache (default $") + oeis::kCacheEnv + " or ./oeis-cache)");
  oeis_cmd->add_flag("--offline", o.offline, "never use the network");
  oeis_cmd->add_option("--retries", o.retries, "extra download attempts with backoff");
  oeis_cmd->add_option("--format", o.format, "plain or structured")->check(CLI::IsMember({"plain", "structured"}));
  auto* morph_cmd = app.add_subcommand("morphism", "fixed-point prefix of a morphism literal");
  morph_cmd->add_option("--spec", o.spec, "e.g. '1->114,3->314,4->314;seed=1'")->required();
  morph_cmd->add_option("--n", o.n, "prefix length")->required()->check(positive);
  morph_cmd->add_option("--format", o.format, "plain or structured")->check(CLI::IsMember({"plain", "structured"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*gen) return detail::cmd_gen(o, out);
    if (*types) return detail::cmd_types(o, out);
    if (*records) return detail::cmd_records(o, out);
    if (*verify) return detail::cmd_verify(o, out, verify->count("--rule") > 0);
    if (*coincide) return detail::cmd_coincide(o, out);
    if (*oplus) return detail::cmd_oplus(o, out);
    if (*conj) return detail::cmd_conjecture(o, out);
    if (*oeis_cmd) return detail::cmd_oeis(o, out, env);
    if (*morph_cmd) return detail::cmd_morphism(o, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RuleSpecError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const morph::MorphismError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const oeis::FetchError& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const oeis::BFileError& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace lrfill::cli
