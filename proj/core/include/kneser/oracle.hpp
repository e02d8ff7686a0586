#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kneser/hybrid.hpp"

namespace kneser::oracle {

enum class Dedup {
  None,
  Simultaneous,  // (A,B) ~ (A+g, B+g)
  Independent,   // (A,B) ~ (A+g, B+h); orbit sizes are carried as weights
};

struct EnumerationFamily {
  enum class Kind { Finite, Hybrid };
  Kind kind = Kind::Finite;
  std::vector<std::uint32_t> moduli{1};
  std::uint32_t q = 1;             // grid denominator, hybrid only
  std::uint32_t max_arcs = 0;      // 0: no limit on positive arcs per fiber
  bool degenerate_points = false;  // grid points as extra fibers pieces
  bool nonempty = true;
  Dedup dedup = Dedup::None;

  // "finite:12", "finite:2x2", "hybrid:2:3", "hybrid:2x2:3"; throws InvalidArgument.
  static EnumerationFamily parse(const std::string& text);
  static EnumerationFamily finite(std::vector<std::uint32_t> moduli);
  static EnumerationFamily hybrid(std::vector<std::uint32_t> moduli, std::uint32_t q);
  std::string to_string() const;
  HybridGroup group() const;
};

inline constexpr std::uint64_t kDefaultBudget = 100000000;

// All sets of the family in a fixed order (before the nonempty filter).
std::vector<HybridSet> family_sets(const EnumerationFamily& family);
// Exact number of pairs; BoundExceeded-free, computed without enumerating.
std::uint64_t family_size(const EnumerationFamily& family);

struct PairRef {
  std::uint64_t index;   // position in the undeduplicated stream
  std::uint64_t weight;  // pairs of the full family this one stands for
  const HybridSet* a;
  const HybridSet* b;
};

// Visits every pair (or orbit representative) in deterministic order.
// Throws BudgetExceeded with the exact family size when it exceeds the budget.
void enumerate_pairs(const EnumerationFamily& family, const std::function<void(const PairRef&)>& visit,
                     std::uint64_t budget = kDefaultBudget);

struct CheckOutcome {
  std::string check;
  bool passed = true;
  std::string detail;
};

std::vector<std::string> suite_names();
std::vector<std::string> suite_checks(const std::string& suite);  // throws InvalidArgument
// Outcomes of the checks that apply to this pair; empty when none apply.
std::vector<CheckOutcome> run_checks(const std::string& suite, const HybridSet& a, const HybridSet& b);

struct CheckCount {
  std::uint64_t evaluated = 0;  // weighted
  std::uint64_t failed = 0;     // weighted
};

struct Counterexample {
  std::uint64_t index;
  std::string check;
  std::string detail;
  std::string program;  // setlang reproduction
};

struct SuiteSummary {
  std::string family, suite;
  std::uint64_t family_pairs = 0;  // full family size
  std::uint64_t visited = 0;       // representatives actually run
  std::uint64_t covered = 0;       // weighted total, equals family_pairs
  std::uint64_t applicable = 0;    // weighted pairs with at least one applicable check
  std::map<std::string, CheckCount> checks;
  std::vector<Counterexample> counterexamples;  // sorted by index, capped

  std::uint64_t failures() const;
  nlohmann::json to_json() const;
  std::string to_tsv() const;
};

struct RunOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  std::size_t max_counterexamples = 20;
};

SuiteSummary run_suite(const EnumerationFamily& family, const std::string& suite, const RunOptions& options = {});

// Writes counterexamples as NNN-<check>.setl files; returns the paths written.
std::vector<std::string> dump_counterexamples(const SuiteSummary& summary, const std::string& dir);

}  // namespace kneser::oracle
