#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gallery.hpp"
#include "kneser/classifier.hpp"
#include "kneser/errors.hpp"
#include "kneser/oracle.hpp"
#include "kneser/profinite.hpp"
#include "kneser/rational.hpp"
#include "kneser/report.hpp"
#include "kneser/setlang.hpp"
#include "kneser/transforms.hpp"

namespace kneser::tools {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Thrown for bad flags or file problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

setlang::Environment load_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    return setlang::load(text);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Pairs named by --pair, or else by the file's queries of the given kind.
std::vector<std::vector<std::string>> query_args(const setlang::Environment& env, setlang::QueryKind kind,
                                                 const std::vector<std::string>& flag) {
  if (!flag.empty()) return {flag};
  std::vector<std::vector<std::string>> out;
  for (const auto& q : env.queries)
    if (q.kind == kind) out.push_back(q.args);
  if (out.empty()) throw UsageError("no --pair given and the file has no matching query");
  return out;
}

json classify_json(const setlang::Environment& env, const std::string& a, const std::string& b) {
  const HybridSet& sa = env.set(a);
  const HybridSet& sb = env.set(b);
  json j = report::classification(classify(sa, sb), sa.group());
  j["pair"] = {a, b};
  return j;
}

json check_json(const setlang::Environment& env, const std::string& suite, const std::string& a, const std::string& b) {
  json outcomes = json::array();
  for (const auto& o : oracle::run_checks(suite, env.set(a), env.set(b)))
    outcomes.push_back({{"check", o.check}, {"passed", o.passed}, {"detail", o.detail}});
  return {{"suite", suite}, {"pair", {a, b}}, {"outcomes", outcomes}};
}

json transform_json(const setlang::Environment& env, const std::string& a, const std::string& b, std::size_t steps) {
  const HybridSet& sa = env.set(a);
  auto t = transform_sequence(sa, env.set(b), steps);
  json rows = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    json s = report::step(t.steps[i].step, sa.group());
    s["step"] = i + 1;
    s["sumSimilar"] = t.steps[i].sum_similar;
    s["shrinkBound"] = t.steps[i].shrink_bound;
    rows.push_back(s);
  }
  return {{"pair", {a, b}}, {"steps", rows}, {"stop", t.stop_reason}};
}

json profinite_json(const setlang::Environment& env, const std::string& c, const std::optional<std::string>& d,
                    std::uint32_t depth) {
  const auto& def = env.rset(c);
  json rows = json::array();
  for (std::uint32_t n = 1; n <= depth; ++n) rows.push_back(report::truncation(truncate(def, n)));
  json j = {{"set", c}, {"p", def.p}, {"truncations", rows}};
  if (d) {
    const auto& other = env.rset(*d);
    json sums = json::array();
    for (std::uint32_t n = 1; n <= depth; ++n) sums.push_back(report::truncated_sum(sum_truncations(def, other, n)));
    j["sum"] = {{"with", *d}, {"depths", sums}};
  }
  return j;
}

json run_query(const setlang::Environment& env, const setlang::QueryDecl& q) {
  switch (q.kind) {
    case setlang::QueryKind::Classify:
      return {{"query", "classify"}, {"report", classify_json(env, q.args[0], q.args[1])}};
    case setlang::QueryKind::Check:
      return {{"query", "check"}, {"report", check_json(env, q.suite, q.args[0], q.args[1])}};
    case setlang::QueryKind::Transform:
      return {{"query", "transform"}, {"report", transform_json(env, q.args[0], q.args[1], q.count)}};
    case setlang::QueryKind::Profinite: {
      std::optional<std::string> other;
      if (q.args.size() > 1) other = q.args[1];
      return {{"query", "profinite"}, {"report", profinite_json(env, q.args[0], other, q.count)}};
    }
  }
  return {};
}

void emit(std::ostream& out, const std::vector<json>& items) {
  if (items.size() == 1) {
    out << items[0].dump(2) << "\n";
  } else {
    out << json(items).dump(2) << "\n";
  }
}

oracle::Dedup parse_dedup(const std::string& s) {
  if (s == "none") return oracle::Dedup::None;
  if (s == "simultaneous") return oracle::Dedup::Simultaneous;
  if (s == "independent") return oracle::Dedup::Independent;
  throw UsageError("unknown dedup mode: " + s);
}

int examples_command(const std::string& dir, std::ostream& out, std::ostream& err) {
  fs::create_directories(dir);
  bool all_ok = true;
  for (const auto& entry : gallery()) {
    write_file(fs::path(dir) / (entry.name + ".setl"), entry.program);
    // Reparse what was written so the recorded report comes from the file.
    auto env = load_file((fs::path(dir) / (entry.name + ".setl")).string());
    json reports = json::array();
    std::vector<std::string> got;
    std::string roman;
    for (const auto& q : env.queries) {
      json r = run_query(env, q);
      if (q.kind == setlang::QueryKind::Classify && got.empty()) {
        got = r["report"]["conclusions"].get<std::vector<std::string>>();
        roman = r["report"].value("roman", "");
      }
      reports.push_back(r);
    }
    write_file(fs::path(dir) / (entry.name + ".expected.json"), reports.dump(2) + "\n");
    bool ok = got == entry.conclusions && roman == entry.roman;
    std::string tags;
    for (const auto& c : got) tags += (tags.empty() ? "" : ",") + c;
    out << entry.name << "\t{" << tags << "}\t" << (ok ? "ok" : "MISMATCH") << "\n";
    if (!ok) {
      err << entry.name << ": recorded conclusions differ from the computed ones\n";
      all_ok = false;
    }
  }
  return all_ok ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumset structure for subsets of compact abelian groups", "kneser"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string file, format = "json";
  std::vector<std::string> pair;

  auto* classify_cmd = app.add_subcommand("classify", "Classify sur-critical pairs");
  classify_cmd->add_option("file", file, "Input .setl file")->required();
  classify_cmd->add_option("--pair", pair, "Set names A B")->expected(2);
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string suite = "subcritical-identities";
  auto* check_cmd = app.add_subcommand("check", "Run an oracle suite on pairs");
  check_cmd->add_option("file", file, "Input .setl file")->required();
  check_cmd->add_option("--pair", pair, "Set names A B")->expected(2);
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember(oracle::suite_names()));
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  std::size_t steps = 8;
  auto* transform_cmd = app.add_subcommand("transform", "Run the e-transform sequence");
  transform_cmd->add_option("file", file, "Input .setl file")->required();
  transform_cmd->add_option("--pair", pair, "Set names A B")->expected(2);
  transform_cmd->add_option("--steps", steps, "Maximum number of steps");
  transform_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string rset;
  std::uint32_t depth = 4;
  std::vector<std::string> sum;
  auto* profinite_cmd = app.add_subcommand("profinite", "Truncations of recursive p-adic sets");
  profinite_cmd->add_option("file", file, "Input .setl file")->required();
  profinite_cmd->add_option("--set", rset, "Recursive set name");
  profinite_cmd->add_option("--depth", depth)->check(CLI::Range(1u, 64u));
  profinite_cmd->add_option("--sum", sum, "Two recursive set names")->expected(2);

  std::string family, dedup = "simultaneous", out_dir;
  unsigned workers = 1;
  std::uint64_t budget = oracle::kDefaultBudget;
  std::uint32_t max_arcs = 0;
  bool points = false, allow_empty = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive oracle run over a family");
  enumerate_cmd->add_option("--family", family, "finite:N, finite:AxB, hybrid:F:q")->required();
  enumerate_cmd->add_option("--suite", suite)->check(CLI::IsMember(oracle::suite_names()));
  enumerate_cmd->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
  enumerate_cmd->add_option("--out", out_dir, "Directory for summary and counterexamples");
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  enumerate_cmd->add_option("--dedup", dedup)->check(CLI::IsMember({"none", "simultaneous", "independent"}));
  enumerate_cmd->add_option("--budget", budget, "Maximum number of pairs");
  enumerate_cmd->add_option("--max-arcs", max_arcs, "Positive arcs per fiber, 0 for no limit");
  enumerate_cmd->add_flag("--points", points, "Include grid points as fiber pieces");
  enumerate_cmd->add_flag("--allow-empty", allow_empty, "Include the empty set");

  auto* examples_cmd = app.add_subcommand("examples", "Write the example gallery");
  examples_cmd->add_option("--out", out_dir, "Output directory")->required();

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
    err << "kneser: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*classify_cmd) {
      auto env = load_file(file);
      std::vector<json> items;
      std::string text;
      for (const auto& p : query_args(env, setlang::QueryKind::Classify, pair)) {
        if (format == "text") {
          const HybridSet& a = env.set(p[0]);
          text += (text.empty() ? "" : "\n") + p[0] + " + " + p[1] + "\n" +
                  report::classification_text(classify(a, env.set(p[1])), a.group());
        } else {
          items.push_back(classify_json(env, p[0], p[1]));
        }
      }
      if (format == "text") out << text;
      else emit(out, items);
      return kOk;
    }

    if (*check_cmd) {
      auto env = load_file(file);
      std::vector<std::vector<std::string>> pairs;
      std::vector<std::string> suites;
      if (!pair.empty()) {
        pairs.push_back(pair);
        suites.push_back(suite);
      } else {
        for (const auto& q : env.queries) {
          if (q.kind != setlang::QueryKind::Check) continue;
          pairs.push_back(q.args);
          suites.push_back(q.suite);
        }
        if (pairs.empty()) throw UsageError("no --pair given and the file has no check query");
      }
      bool failed = false;
      std::vector<json> items;
      std::string tsv = "suite\tA\tB\tcheck\tpassed\tdetail\n";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        json j = check_json(env, suites[i], pairs[i][0], pairs[i][1]);
        for (const auto& o : j["outcomes"]) {
          failed |= !o["passed"].get<bool>();
          tsv += suites[i] + "\t" + pairs[i][0] + "\t" + pairs[i][1] + "\t" + o["check"].get<std::string>() + "\t" +
                 (o["passed"].get<bool>() ? "yes" : "no") + "\t" + o["detail"].get<std::string>() + "\n";
        }
        if (j["outcomes"].empty()) err << "note: no check of " << suites[i] << " applies to this pair\n";
        items.push_back(j);
      }
      if (format == "tsv") out << tsv;
      else emit(out, items);
      return failed ? kFailure : kOk;
    }

    if (*transform_cmd) {
      auto env = load_file(file);
      std::vector<std::vector<std::string>> pairs;
      std::vector<std::size_t> counts;
      if (!pair.empty()) {
        pairs.push_back(pair);
        counts.push_back(steps);
      } else {
        for (const auto& q : env.queries) {
          if (q.kind != setlang::QueryKind::Transform) continue;
          pairs.push_back(q.args);
          counts.push_back(transform_cmd->count("--steps") ? steps : q.count);
        }
        if (pairs.empty()) throw UsageError("no --pair given and the file has no transform query");
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const HybridSet& a = env.set(pairs[i][0]);
        auto t = transform_sequence(a, env.set(pairs[i][1]), counts[i]);
        if (format == "text") {
          out << pairs[i][0] << " + " << pairs[i][1] << "\n";
          for (std::size_t s = 0; s < t.steps.size(); ++s) {
            const auto& st = t.steps[s].step;
            out << "  " << s + 1 << ": e = " << format_point(a.group(), st.e) << ", m(Ae) = " << to_string(st.m_ae)
                << ", m(Be) = " << to_string(st.m_be) << "\n";
          }
          out << "  stop: " << t.stop_reason << "\n";
        } else {
          out << report::transcript_jsonl(t, a.group());
        }
      }
      return kOk;
    }

    if (*profinite_cmd) {
      auto env = load_file(file);
      std::vector<json> items;
      if (!rset.empty() || !sum.empty()) {
        std::string c = rset.empty() ? sum[0] : rset;
        std::optional<std::string> other;
        if (!sum.empty()) {
          if (!rset.empty() && sum[0] != rset) throw UsageError("--sum must start with the --set name");
          other = sum[1];
        }
        items.push_back(profinite_json(env, c, other, depth));
      } else {
        for (const auto& q : env.queries) {
          if (q.kind != setlang::QueryKind::Profinite) continue;
          std::optional<std::string> other;
          if (q.args.size() > 1) other = q.args[1];
          items.push_back(profinite_json(env, q.args[0], other, profinite_cmd->count("--depth") ? depth : q.count));
        }
        if (items.empty()) throw UsageError("no --set given and the file has no profinite query");
      }
      emit(out, items);
      return kOk;
    }

    if (*enumerate_cmd) {
      auto fam = oracle::EnumerationFamily::parse(family);
      fam.dedup = parse_dedup(dedup);
      fam.max_arcs = max_arcs;
      fam.degenerate_points = points;
      fam.nonempty = !allow_empty;
      oracle::RunOptions opts;
      opts.workers = workers;
      opts.budget = budget;
      auto summary = oracle::run_suite(fam, suite, opts);
      if (format == "tsv") out << summary.to_tsv();
      else out << summary.to_json().dump(2) << "\n";
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "summary.json", summary.to_json().dump(2) + "\n");
        for (const auto& path : oracle::dump_counterexamples(summary, out_dir)) err << "wrote " << path << "\n";
      }
      if (summary.failures() > 0) {
        err << "kneser: " << summary.failures() << " failing checks in " << summary.suite << "\n";
        return kFailure;
      }
      return kOk;
    }

    if (*examples_cmd) return examples_command(out_dir, out, err);
  } catch (const UsageError& e) {
    err << "kneser: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "kneser: " << e.what() << "\n";
    return e.kind() == ErrorKind::ClassificationIncomplete ? kFailure : kUsage;
  } catch (const std::exception& e) {
    err << "kneser: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace kneser::tools
