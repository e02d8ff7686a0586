// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kneser/classifier.hpp"
#include "kneser/errors.hpp"
#include "kneser/oracle.hpp"
#include "kneser/profinite.hpp"
#include "kneser/rational.hpp"
#include "kneser/setlang.hpp"
#include "kneser/structure.hpp"
#include "kneser/validate.hpp"

using namespace kneser;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.note << " [exception: " << e.what() << "]";
  }
  if (!v.pass) ++failures;
  std::printf("%s %s: %s (%.2fs)%s\n", v.pass ? "PASS" : "FAIL", id, title, seconds_since(t0), v.note.str().c_str());
  std::fflush(stdout);
}

using Tags = std::vector<std::string>;

unsigned worker_count() { return std::max(8u, std::thread::hardware_concurrency()); }

std::vector<std::string> sweep_families() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("finite:" + std::to_string(n));
  out.push_back("hybrid:2:3");
  out.push_back("hybrid:3:2");
  return out;
}

oracle::SuiteSummary sweep(const std::string& family, const std::string& suite) {
  auto f = oracle::EnumerationFamily::parse(family);
  f.dedup = oracle::Dedup::Simultaneous;
  oracle::RunOptions opts;
  opts.workers = worker_count();
  return oracle::run_suite(f, suite, opts);
}

std::vector<oracle::SuiteSummary> coverage_runs;  // shared by AC6 and AC7

}  // namespace

int main() {
  std::printf("workers per sweep: %u (hardware threads: %u)\n", worker_count(), std::thread::hardware_concurrency());

  report("AC1", "Z/17 x T extendible pair", [](Verdict& v) {
    auto t0 = Clock::now();
    auto env = setlang::load("group G = Z/17 x T\nset A = {1,3,5,7}x[0,0.8]\nset B = {0,2}x[0,0.9]\n");
    const auto& a = env.set("A");
    const auto& b = env.set("B");
    auto r = classify(a, b);
    v.require(r.m_a == parse_rational("3.2/17"), "m(A) = 3.2/17");
    v.require(r.m_b == parse_rational("1.8/17"), "m(B) = 1.8/17");
    v.require(r.m_sum == Rational(5, 17), "m(A+B) = 5/17");
    v.require(r.conclusions() == Tags{"E"}, "conclusions {E}");
    v.require(r.e && r.e->refinement == ERefinement::E1, "refinement E1");
    v.require(validate::report(a, b, r), "witnesses validate");
    double t = seconds_since(t0);
    v.require(t < 1.0, "runtime under 1 s");
    v.note << " m(A)=" << to_string(r.m_a) << " m(B)=" << to_string(r.m_b) << " m(A+B)=" << to_string(r.m_sum);
  });

  report("AC2", "Z/11 periodic pair", [](Verdict& v) {
    auto env = setlang::load("group G = Z/11\nset A = {0,1}\nset B = {0,3}\n");
    const auto& a = env.set("A");
    const auto& b = env.set("B");
    auto r = classify(a, b);
    v.require(r.sum.support() == std::vector<ElementId>{0, 1, 3, 4}, "A+B = {0,1,3,4}");
    v.require(r.conclusions() == Tags{"P"}, "conclusions {P}");
    v.require(!r.e && !r.qp && !r.k, "no E, QP or K");
    v.require(!a.group().has_torus(), "d = 0");
    v.require(validate::report(a, b, r), "witnesses validate");
  });

  report("AC3", "interval preimages on T", [](Verdict& v) {
    auto env = setlang::load("group G = T\nset A = {0}x[0,1/4]\nset B = {0}x[0,1/3]\n");
    const auto& a = env.set("A");
    const auto& b = env.set("B");
    auto r = classify(a, b);
    v.require(r.conclusions() == Tags{"K"}, "conclusions {K}");
    v.require(r.k && r.k->n == 1 && r.k->psi.is_zero(), "identity character");
    v.require(r.k && r.k->i == IntervalUnion::arc(0, Rational(1, 4)), "I = [0,1/4]");
    v.require(r.k && r.k->j == IntervalUnion::arc(0, Rational(1, 3)), "J = [0,1/3]");
    v.require(validate::report(a, b, r), "witnesses validate");
  });

  report("AC4", "7-adic truncation brackets", [](Verdict& v) {
    auto t0 = Clock::now();
    auto c = seven_adic_example();
    Rational partial = 0;
    const Rational two_thirds(2, 3);
    for (std::uint32_t n = 1; n <= 5; ++n) {
      Rational seventh(1, checked_power(7, n));
      partial += 2 * seventh;
      auto t = truncate(c, n);
      v.require(t.inner_measure == partial, "inner measure at depth " + std::to_string(n));
      v.require(t.outer_measure == partial + seventh, "outer measure at depth " + std::to_string(n));
      auto s = sum_truncations(c, c, n);
      v.require(s.lower <= two_thirds && two_thirds <= s.upper, "2/3 inside bracket at depth " + std::to_string(n));
      v.require(s.upper - s.lower <= seventh, "gap at depth " + std::to_string(n));
      v.require(s.stabilizer_order <= 7, "stabilizer order at depth " + std::to_string(n));
      v.note << " n=" << n << ":[" << to_string(s.lower) << "," << to_string(s.upper) << "],|H|=" << s.stabilizer_order;
    }
    v.require(seconds_since(t0) < 10.0, "runtime under 10 s");
  });

  report("AC5", "subcritical identities over Z/n (n<=12), hybrid Z/2 q=3, hybrid Z/3 q=2", [](Verdict& v) {
    auto t0 = Clock::now();
    std::uint64_t pairs = 0, applicable = 0;
    for (const auto& fam : sweep_families()) {
      auto s = sweep(fam, "subcritical-identities");
      v.require(s.covered == s.family_pairs, fam + " coverage");
      v.require(s.failures() == 0, fam + " has counterexamples");
      pairs += s.covered;
      applicable += s.applicable;
    }
    double t = seconds_since(t0);
    v.require(t < 300.0, "runtime under 5 min");
    v.note << " pairs=" << pairs << " subcritical=" << applicable << " counterexamples=0";
  });

  report("AC6", "classification completeness over the same families", [](Verdict& v) {
    std::uint64_t surcritical = 0, incomplete = 0;
    for (const auto& fam : sweep_families()) {
      auto s = sweep(fam, "classification-coverage");
      v.require(s.covered == s.family_pairs, fam + " coverage");
      auto it = s.checks.find("classified");
      if (it != s.checks.end()) {
        surcritical += it->second.evaluated;
        incomplete += it->second.failed;
      }
      v.require(s.failures() == 0, fam + " coverage failures");
      coverage_runs.push_back(std::move(s));
    }
    v.require(incomplete == 0, "ClassificationIncomplete count is 0");
    v.require(surcritical > 0, "sur-critical pairs exist");
    v.note << " surcritical=" << surcritical << " incomplete=" << incomplete;
  });

  report("AC7", "QP witnesses satisfy the four-term identity", [](Verdict& v) {
    std::uint64_t witnesses = 0, bad = 0;
    for (const auto& s : coverage_runs) {
      auto it = s.checks.find("qp-four");
      if (it == s.checks.end()) continue;
      witnesses += it->second.evaluated;
      bad += it->second.failed;
    }
    for (const auto& fam : {"finite:8", "finite:2x4", "hybrid:2:3", "hybrid:3:2"}) {
      auto s = sweep(fam, "qp-four");
      witnesses += s.checks["qp-four"].evaluated;
      bad += s.checks["qp-four"].failed;
    }
    v.require(coverage_runs.size() == sweep_families().size(), "coverage runs available");
    v.require(witnesses > 0, "witnesses found");
    v.require(bad == 0, "identity holds");
    v.note << " witnesses=" << witnesses;
  });

  report("AC8", "quasi-periodic constructor round trip", [](Verdict& v) {
    // C, D: nonempty unions of cells of the q=4 grid with m(C+D) = m(C)+m(D).
    std::vector<IntervalUnion> cells;
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      std::vector<Arc> arcs;
      for (int k = 0; k < 4; ++k)
        if (mask >> k & 1) arcs.push_back({Rational(k, 4), Rational(1, 4)});
      for (auto& a : arcs) a.left.canonicalize();
      cells.push_back(IntervalUnion::from_arcs(std::move(arcs)));
    }
    std::vector<std::pair<IntervalUnion, IntervalUnion>> cd;
    for (const auto& c : cells)
      for (const auto& d : cells)
        if (torus::sum(c, d).measure() == c.measure() + d.measure()) cd.emplace_back(c, d);

    struct Lift {
      FiniteAbelianGroup f;
      std::vector<ElementId> a, b;
    };
    std::vector<Lift> lifts;
    for (auto moduli : std::vector<std::vector<std::uint32_t>>{{4}, {11}, {2, 2}}) {
      FiniteAbelianGroup f(moduli);
      const std::uint32_t n = f.order();
      for (std::uint32_t ma = 1; ma < (1u << std::min(n, 6u)); ++ma) {
        for (std::uint32_t mb = 1; mb < (1u << std::min(n, 6u)); ++mb) {
          std::vector<ElementId> a, b;
          for (ElementId x = 0; x < n; ++x) {
            if (ma >> x & 1) a.push_back(x);
            if (mb >> x & 1) b.push_back(x);
          }
          if (a.size() + b.size() < 3 || a.size() + b.size() > 6) continue;
          std::vector<bool> hit(n);
          std::size_t size = 0;
          for (ElementId x : a)
            for (ElementId y : b)
              if (!hit[f.add(x, y)]) hit[f.add(x, y)] = true, ++size;
          if (size == a.size() + b.size() - 1) lifts.push_back({f, a, b});
        }
      }
    }

    int built = 0, classified_qp = 0, surcritical = 0, skipped = 0;
    std::size_t per_group[3] = {0, 0, 0};
    // Stride through the candidates so every group and many (C, D) shapes appear.
    for (std::size_t i = 0; built < 100 && i < lifts.size() * cd.size(); ++i) {
      const auto& lift = lifts[(i * 7919) % lifts.size()];
      const auto& [c, d] = cd[(i * 104729) % cd.size()];
      std::pair<HybridSet, HybridSet> ab;
      try {
        ab = construct_qp_pair(lift.f, lift.a, lift.b, c, d);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionViolation) throw;
        ++skipped;
        continue;
      }
      ++built;
      per_group[lift.f.order() == 11 ? 1 : (lift.f.rank() == 2 ? 2 : 0)]++;
      auto r = classify(ab.first, ab.second);
      if (r.sur_critical) ++surcritical;
      auto tags = r.conclusions();
      if (std::find(tags.begin(), tags.end(), "QP") != tags.end() && validate::report(ab.first, ab.second, r))
        ++classified_qp;
    }
    v.require(built == 100, "100 instances built");
    v.require(per_group[0] > 0 && per_group[1] > 0 && per_group[2] > 0, "all three groups used");
    v.require(surcritical == built, "all sur-critical");
    v.require(classified_qp == built, "all classified QP");
    v.note << " built=" << built << " Z/4=" << per_group[0] << " Z/11=" << per_group[1] << " Z/2xZ/2=" << per_group[2]
           << " qp=" << classified_qp << " skipped=" << skipped;
  });

  report("AC9", "e-transform laws", [](Verdict& v) {
    std::map<std::string, oracle::CheckCount> totals;
    for (const auto& fam : {"finite:6", "finite:2x3", "hybrid:1:4", "hybrid:2:3", "hybrid:3:2"}) {
      auto s = sweep(fam, "transform-laws");
      for (const auto& [name, c] : s.checks) {
        totals[name].evaluated += c.evaluated;
        totals[name].failed += c.failed;
      }
    }
    for (const auto& name : oracle::suite_checks("transform-laws")) {
      v.require(totals[name].evaluated > 0, name + " evaluated");
      v.require(totals[name].failed == 0, name + " holds");
      v.note << " " << name << "=" << totals[name].evaluated;
    }
  });

  report("AC10", "P and K witnessed pairs are essentially regular", [](Verdict& v) {
    std::uint64_t witnessed = 0, irregular = 0;
    for (const auto& fam : {"finite:8", "hybrid:1:6", "hybrid:2:3", "hybrid:3:2"}) {
      auto f = oracle::EnumerationFamily::parse(fam);
      f.degenerate_points = f.kind == oracle::EnumerationFamily::Kind::Hybrid && f.q <= 3;
      f.max_arcs = 2;
      f.dedup = oracle::Dedup::Simultaneous;
      oracle::enumerate_pairs(f, [&](const oracle::PairRef& p) {
        if (sgn(p.a->measure()) == 0 || sgn(p.b->measure()) == 0) return;
        if (criticality(*p.a, *p.b).kind != CriticalityKind::Surcritical) return;
        std::optional<ClassificationReport> r;
        try {
          r = classify(*p.a, *p.b);
        } catch (const Error&) {
          return;  // completeness is AC6's business
        }
        if (!r->p && !r->k) return;
        witnessed += p.weight;
        if (!pair_essentially_regular(*p.a, *p.b)) irregular += p.weight;
      });
    }
    v.require(witnessed > 0, "witnessed pairs found");
    v.require(irregular == 0, "all regular");
    v.note << " witnessed=" << witnessed << " irregular=" << irregular;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
