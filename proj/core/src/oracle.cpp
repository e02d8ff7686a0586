#include "kneser/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "kneser/classifier.hpp"
#include "kneser/errors.hpp"
#include "kneser/rational.hpp"
#include "kneser/setlang.hpp"
#include "kneser/structure.hpp"
#include "kneser/transforms.hpp"
#include "kneser/validate.hpp"

namespace kneser::oracle {

namespace {

std::vector<std::uint32_t> parse_moduli(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, 'x')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      fail(ErrorKind::InvalidArgument, "bad group order '" + part + "' in family");
    }
    unsigned long v = std::stoul(part);
    if (v < 1) fail(ErrorKind::InvalidArgument, "group order must be positive");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "family needs a group");
  return out;
}

std::vector<IntervalUnion> fiber_options(const EnumerationFamily& f) {
  if (f.kind == EnumerationFamily::Kind::Finite) return {IntervalUnion::empty_set(), IntervalUnion::full()};
  std::vector<IntervalUnion> out;
  std::set<IntervalUnion> seen;
  const std::uint32_t q = f.q;
  const std::uint64_t point_masks = f.degenerate_points ? (1ull << q) : 1;
  for (std::uint64_t pm = 0; pm < point_masks; ++pm) {
    for (std::uint64_t am = 0; am < (1ull << q); ++am) {
      std::vector<Arc> arcs;
      for (std::uint32_t k = 0; k < q; ++k) {
        if (am >> k & 1) arcs.push_back({Rational(k, q), Rational(1, q)});
        if (pm >> k & 1) arcs.push_back({Rational(k, q), 0});
      }
      for (auto& a : arcs) {
        a.left.canonicalize();
        a.length.canonicalize();
      }
      IntervalUnion u = IntervalUnion::from_arcs(std::move(arcs));
      if (f.max_arcs && u.positive_arc_count() > f.max_arcs) continue;
      if (seen.insert(u).second) out.push_back(std::move(u));
    }
  }
  return out;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

// Filtered sets plus, when deduplicating, the translation action on indices.
struct Plan {
  EnumerationFamily family;
  std::vector<HybridSet> sets;
  std::vector<std::vector<std::uint32_t>> act;  // act[t][i] = index of the t-th translate of set i
  std::vector<std::uint32_t> orbit;             // orbit size per set (independent mode)
  std::vector<std::uint32_t> reps;              // representative sets (independent mode)

  std::uint64_t total() const { return static_cast<std::uint64_t>(sets.size()) * sets.size(); }

  // Calls fn(j, weight) for every pair (i, j) selected in row i.
  template <class Fn>
  void row(std::uint32_t i, Fn&& fn) const {
    const std::uint32_t n = static_cast<std::uint32_t>(sets.size());
    switch (family.dedup) {
      case Dedup::None:
        for (std::uint32_t j = 0; j < n; ++j) fn(j, std::uint64_t{1});
        return;
      case Dedup::Independent:
        if (orbit[i] == 0) return;
        for (auto j : reps) fn(j, static_cast<std::uint64_t>(orbit[i]) * orbit[j]);
        return;
      case Dedup::Simultaneous: {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> images;
        for (std::uint32_t j = 0; j < n; ++j) {
          images.clear();
          bool rep = true;
          for (const auto& t : act) {
            std::pair<std::uint32_t, std::uint32_t> img{t[i], t[j]};
            if (img < std::make_pair(i, j)) {
              rep = false;
              break;
            }
            images.push_back(img);
          }
          if (!rep) continue;
          std::sort(images.begin(), images.end());
          images.erase(std::unique(images.begin(), images.end()), images.end());
          fn(j, static_cast<std::uint64_t>(images.size()));
        }
        return;
      }
    }
  }
};

Plan make_plan(const EnumerationFamily& family, std::uint64_t budget) {
  const std::uint64_t size = family_size(family);
  if (size > budget) {
    fail(ErrorKind::BudgetExceeded, "family " + family.to_string() + " has " + std::to_string(size) +
                                        " pairs, budget is " + std::to_string(budget));
  }
  Plan plan{family, {}, {}, {}, {}};
  for (auto& s : family_sets(family))
    if (!family.nonempty || !s.empty()) plan.sets.push_back(std::move(s));
  if (family.dedup == Dedup::None) return plan;

  std::map<HybridSet, std::uint32_t> index;
  for (std::uint32_t i = 0; i < plan.sets.size(); ++i) index.emplace(plan.sets[i], i);
  const HybridGroup g = family.group();
  const std::uint32_t shifts = g.has_torus() ? family.q : 1;
  for (ElementId e = 0; e < g.finite_order(); ++e) {
    for (std::uint32_t k = 0; k < shifts; ++k) {
      Rational x(k, shifts);
      x.canonicalize();
      std::vector<std::uint32_t> img(plan.sets.size());
      for (std::uint32_t i = 0; i < plan.sets.size(); ++i) {
        auto it = index.find(translate(plan.sets[i], Point{e, x}));
        ensure(it != index.end(), "family is not closed under translation");
        img[i] = it->second;
      }
      plan.act.push_back(std::move(img));
    }
  }
  if (family.dedup == Dedup::Independent) {
    plan.orbit.assign(plan.sets.size(), 0);
    for (std::uint32_t i = 0; i < plan.sets.size(); ++i) {
      std::vector<std::uint32_t> imgs;
      bool rep = true;
      for (const auto& t : plan.act) {
        if (t[i] < i) rep = false;
        imgs.push_back(t[i]);
      }
      if (!rep) continue;
      std::sort(imgs.begin(), imgs.end());
      plan.orbit[i] = static_cast<std::uint32_t>(std::unique(imgs.begin(), imgs.end()) - imgs.begin());
      plan.reps.push_back(i);
    }
  }
  return plan;
}

CheckOutcome outcome(const std::string& name, bool ok, std::string detail = {}) { return {name, ok, std::move(detail)}; }

std::vector<CheckOutcome> subcritical_suite(const HybridSet& a, const HybridSet& b) {
  std::vector<CheckOutcome> out;
  if (a.empty() || b.empty()) return out;
  HybridSet sum = sumset(a, b);
  if (criticality(a, b, sum).kind != CriticalityKind::Subcritical) return out;
  SubcriticalData d{sum, stabilizer(sum)};
  KneserIdentityReport r = kneser_identity_check(a, b, d);
  out.push_back(outcome("kneser-identity", r.compact_open && r.identity,
                        "H=" + r.h.to_string() + " m(A+B)=" + to_string(r.m_sum)));
  out.push_back(outcome("sum-periodic", r.sum_periodic));
  out.push_back(outcome("overspill", overspill_check(a, b, d)));
  out.push_back(outcome("hholes", hholes_check(a, b, d)));
  out.push_back(outcome("difference-set-period", difference_set_period_check(a, b, d)));
  out.push_back(outcome("saturation-identity", saturation_identity_check(a, b, d)));
  return out;
}

std::vector<CheckOutcome> coverage_suite(const HybridSet& a, const HybridSet& b) {
  std::vector<CheckOutcome> out;
  if (sgn(a.measure()) <= 0 || sgn(b.measure()) <= 0) return out;
  if (criticality(a, b).kind != CriticalityKind::Surcritical) return out;
  try {
    ClassificationReport r = classify(a, b);
    std::string tags;
    for (const auto& c : r.conclusions()) tags += (tags.empty() ? "" : ",") + c;
    out.push_back(outcome("classified", true, tags));
    out.push_back(outcome("witnesses-validate", validate::report(a, b, r)));
    if (r.qp) out.push_back(outcome("qp-four", r.qp->qp4));
    out.push_back(outcome("roman-tag", r.roman.has_value()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClassificationIncomplete) throw;
    out.push_back(outcome("classified", false, e.what()));
  }
  return out;
}

std::vector<CheckOutcome> qp_four_suite(const HybridSet& a, const HybridSet& b) {
  std::vector<CheckOutcome> out;
  if (a.empty() || b.empty()) return out;
  if (criticality(a, b).kind != CriticalityKind::Surcritical) return out;
  auto w = check_qp(a, b);
  if (!w) return out;
  out.push_back(outcome("qp-four", qp_four_check(w->decomposition, a, b), "K=" + w->decomposition.k.to_string()));
  return out;
}

bool step_laws(const HybridSet& a, const HybridSet& b, const ETransformStep& s) {
  if (s.be.empty()) return subset(s.ae, unite(a, translate(b, s.e)));
  return subset(sumset(s.ae, s.be), sumset(a, b)) && s.ae.measure() + s.be.measure() == a.measure() + b.measure();
}

std::vector<CheckOutcome> transform_suite(const HybridSet& a, const HybridSet& b) {
  std::vector<CheckOutcome> out;
  if (a.empty() || b.empty()) return out;
  out.push_back(outcome("averaging-identity", overlap_integral(a, b) == a.measure() * b.measure()));
  bool laws = true;
  for (const auto& e : candidate_shifts(a, b)) {
    try {
      if (!step_laws(a, b, e_transform(a, b, e))) laws = false;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::InvariantViolation) throw;
      laws = false;
    }
  }
  out.push_back(outcome("et-laws", laws));
  try {
    auto s = choose_e(a, b, EPolicy::PreferZero);
    Rational bound = (1 - b.measure()) * b.measure();
    out.push_back(outcome("choose-e-bound", s && !s->be.empty() && s->m_be <= bound));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PreconditionViolation && err.kind() != ErrorKind::PreconditionAperiodicity) throw;
  }
  try {
    auto t = transform_sequence(a, b, 4);
    bool ok = true;
    HybridSet pa = a, pb = b;
    for (const auto& s : t.steps) {
      if (!step_laws(pa, pb, s.step)) ok = false;
      pa = s.step.ae;
      pb = s.step.be;
    }
    out.push_back(outcome("transcript-laws", ok, t.stop_reason));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PreconditionViolation && err.kind() != ErrorKind::PreconditionAperiodicity) throw;
  }
  return out;
}

std::vector<CheckOutcome> census_suite(const HybridSet& a, const HybridSet& b) {
  if (a.empty() || b.empty()) return {};
  auto v = criticality(a, b);
  return {outcome(std::string("criticality-") + to_string(v.kind), true)};
}

}  // namespace

EnumerationFamily EnumerationFamily::finite(std::vector<std::uint32_t> moduli) {
  EnumerationFamily f;
  f.kind = Kind::Finite;
  f.moduli = std::move(moduli);
  return f;
}

EnumerationFamily EnumerationFamily::hybrid(std::vector<std::uint32_t> moduli, std::uint32_t q) {
  EnumerationFamily f;
  f.kind = Kind::Hybrid;
  f.moduli = std::move(moduli);
  f.q = q;
  return f;
}

EnumerationFamily EnumerationFamily::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::InvalidArgument, "family must look like finite:N or hybrid:F:q");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "finite") return finite(parse_moduli(rest));
  if (kind == "hybrid") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) fail(ErrorKind::InvalidArgument, "hybrid family needs a grid denominator");
    std::string qs = rest.substr(c2 + 1);
    if (qs.empty() || qs.find_first_not_of("0123456789") != std::string::npos || qs.size() > 2) {
      fail(ErrorKind::InvalidArgument, "bad grid denominator '" + qs + "'");
    }
    unsigned long q = std::stoul(qs);
    if (q < 1 || q > 16) fail(ErrorKind::InvalidArgument, "grid denominator must lie in 1..16");
    return hybrid(parse_moduli(rest.substr(0, c2)), static_cast<std::uint32_t>(q));
  }
  fail(ErrorKind::InvalidArgument, "unknown family kind '" + kind + "'");
}

std::string EnumerationFamily::to_string() const {
  std::string m;
  for (std::size_t i = 0; i < moduli.size(); ++i) m += (i ? "x" : "") + std::to_string(moduli[i]);
  if (kind == Kind::Finite) return "finite:" + m;
  return "hybrid:" + m + ":" + std::to_string(q);
}

HybridGroup EnumerationFamily::group() const {
  std::vector<std::uint32_t> ms;
  for (auto v : moduli)
    if (v > 1) ms.push_back(v);
  return HybridGroup(FiniteAbelianGroup(ms), kind == Kind::Hybrid ? 1 : 0);
}

std::uint64_t family_size(const EnumerationFamily& family) {
  const std::uint64_t c = fiber_options(family).size();
  std::uint64_t sets = 1;
  const std::uint32_t n = family.group().finite_order();
  for (std::uint32_t i = 0; i < n; ++i) sets = sat_mul(sets, c);
  if (family.nonempty && sets != UINT64_MAX) --sets;
  return sat_mul(sets, sets);
}

std::vector<HybridSet> family_sets(const EnumerationFamily& family) {
  const auto options = fiber_options(family);
  const HybridGroup g = family.group();
  const std::uint32_t n = g.finite_order();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count = sat_mul(count, options.size());
    if (count > (1u << 24)) fail(ErrorKind::BudgetExceeded, "family " + family.to_string() + " has too many sets");
  }
  std::vector<HybridSet> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<ElementId> support;
    std::vector<IntervalUnion> fibers;
    std::uint64_t rest = idx;
    for (ElementId e = 0; e < n; ++e) {
      const auto& u = options[rest % options.size()];
      rest /= options.size();
      if (u.empty()) continue;
      support.push_back(e);
      if (g.has_torus()) fibers.push_back(u);
    }
    out.emplace_back(g, std::move(support), std::move(fibers));
  }
  return out;
}

void enumerate_pairs(const EnumerationFamily& family, const std::function<void(const PairRef&)>& visit,
                     std::uint64_t budget) {
  Plan plan = make_plan(family, budget);
  const std::uint64_t n = plan.sets.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    plan.row(i, [&](std::uint32_t j, std::uint64_t w) { visit(PairRef{i * n + j, w, &plan.sets[i], &plan.sets[j]}); });
  }
}

std::vector<std::string> suite_names() {
  return {"subcritical-identities", "classification-coverage", "qp-four", "transform-laws", "criticality-census"};
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (suite == "subcritical-identities")
    return {"kneser-identity", "sum-periodic", "overspill", "hholes", "difference-set-period", "saturation-identity"};
  if (suite == "classification-coverage") return {"classified", "witnesses-validate", "qp-four", "roman-tag"};
  if (suite == "qp-four") return {"qp-four"};
  if (suite == "transform-laws") return {"averaging-identity", "et-laws", "choose-e-bound", "transcript-laws"};
  if (suite == "criticality-census")
    return {"criticality-SUBCRITICAL", "criticality-SURCRITICAL", "criticality-SUPERCRITICAL"};
  fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

std::vector<CheckOutcome> run_checks(const std::string& suite, const HybridSet& a, const HybridSet& b) {
  require_same_group(a, b);
  if (suite == "subcritical-identities") return subcritical_suite(a, b);
  if (suite == "classification-coverage") return coverage_suite(a, b);
  if (suite == "qp-four") return qp_four_suite(a, b);
  if (suite == "transform-laws") return transform_suite(a, b);
  if (suite == "criticality-census") return census_suite(a, b);
  fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

std::uint64_t SuiteSummary::failures() const {
  std::uint64_t f = 0;
  for (const auto& [name, c] : checks) f += c.failed;
  return f;
}

nlohmann::json SuiteSummary::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["suite"] = suite;
  j["familyPairs"] = family_pairs;
  j["visited"] = visited;
  j["covered"] = covered;
  j["applicable"] = applicable;
  j["checks"] = nlohmann::json::object();
  for (const auto& [name, c] : checks) j["checks"][name] = {{"evaluated", c.evaluated}, {"failed", c.failed}};
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : counterexamples)
    j["counterexamples"].push_back({{"index", c.index}, {"check", c.check}, {"detail", c.detail}});
  j["failures"] = failures();
  return j;
}

std::string SuiteSummary::to_tsv() const {
  std::string s = "family\tsuite\tcheck\tevaluated\tfailed\n";
  for (const auto& [name, c] : checks) {
    s += family + "\t" + suite + "\t" + name + "\t" + std::to_string(c.evaluated) + "\t" + std::to_string(c.failed) + "\n";
  }
  return s;
}

SuiteSummary run_suite(const EnumerationFamily& family, const std::string& suite, const RunOptions& options) {
  const auto names = suite_checks(suite);
  Plan plan = make_plan(family, options.budget);
  SuiteSummary summary;
  summary.family = family.to_string();
  summary.suite = suite;
  summary.family_pairs = plan.total();
  for (const auto& n : names) summary.checks[n];

  struct Partial {
    std::uint64_t visited = 0, covered = 0, applicable = 0;
    std::map<std::string, CheckCount> checks;
    std::vector<Counterexample> counterexamples;
  };
  const std::uint32_t rows = static_cast<std::uint32_t>(plan.sets.size());
  const std::uint64_t n = rows;
  std::vector<Partial> parts(rows);
  std::atomic<std::uint32_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto work = [&] {
    while (true) {
      std::uint32_t i = next.fetch_add(1);
      if (i >= rows) return;
      Partial& p = parts[i];
      try {
        plan.row(i, [&](std::uint32_t j, std::uint64_t w) {
          ++p.visited;
          p.covered += w;
          auto results = run_checks(suite, plan.sets[i], plan.sets[j]);
          if (!results.empty()) p.applicable += w;
          for (const auto& r : results) {
            auto& c = p.checks[r.check];
            c.evaluated += w;
            if (r.passed) continue;
            c.failed += w;
            if (p.counterexamples.size() < options.max_counterexamples) {
              std::string prog = "# counterexample for " + r.check + " in " + summary.family + "\n" +
                                 setlang::pair_program(plan.sets[i], plan.sets[j], "check " + suite + " A B");
              p.counterexamples.push_back({i * n + j, r.check, r.detail, std::move(prog)});
            }
          }
        });
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = rows;
        return;
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& p : parts) {
    summary.visited += p.visited;
    summary.covered += p.covered;
    summary.applicable += p.applicable;
    for (const auto& [name, c] : p.checks) {
      summary.checks[name].evaluated += c.evaluated;
      summary.checks[name].failed += c.failed;
    }
    for (auto& c : p.counterexamples) {
      if (summary.counterexamples.size() < options.max_counterexamples) summary.counterexamples.push_back(std::move(c));
    }
  }
  ensure(summary.covered == summary.family_pairs, "enumeration did not cover the family");
  return summary;
}

std::vector<std::string> dump_counterexamples(const SuiteSummary& summary, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t k = 0; k < summary.counterexamples.size(); ++k) {
    const auto& c = summary.counterexamples[k];
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%03zu", k);
    std::string path = (std::filesystem::path(dir) / (std::string(prefix) + "-" + c.check + ".setl")).string();
    std::ofstream out(path);
    out << c.program;
    paths.push_back(path);
  }
  return paths;
}

}  // namespace kneser::oracle
