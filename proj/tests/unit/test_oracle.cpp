#include <doctest.h>

#include <filesystem>

#include "kneser/errors.hpp"
#include "kneser/oracle.hpp"
#include "kneser/setlang.hpp"

using namespace kneser;
using oracle::Dedup;
using oracle::EnumerationFamily;

TEST_CASE("family parsing and sizes") {
  auto f = EnumerationFamily::parse("finite:4");
  CHECK(oracle::family_size(f) == 225);
  CHECK(f.to_string() == "finite:4");
  auto h = EnumerationFamily::parse("hybrid:2:3");
  h.nonempty = false;
  CHECK(oracle::family_size(h) == 4096);
  CHECK(EnumerationFamily::parse("finite:2x2").group().finite_order() == 4);
  CHECK_THROWS_AS(EnumerationFamily::parse("finite:"), Error);
  CHECK_THROWS_AS(EnumerationFamily::parse("torus:3"), Error);
}

TEST_CASE("budget is enforced before enumeration") {
  auto f = EnumerationFamily::parse("finite:12");
  try {
    oracle::enumerate_pairs(f, [](const oracle::PairRef&) {}, 1000);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(std::string(e.what()).find("16769025") != std::string::npos);
  }
}

TEST_CASE("deduplicated runs cover the family with the same counts") {
  for (const char* fam : {"finite:6", "hybrid:2:2"}) {
    for (const char* suite : {"subcritical-identities", "criticality-census"}) {
      auto full = EnumerationFamily::parse(fam);
      auto base = oracle::run_suite(full, suite);
      CHECK(base.covered == base.family_pairs);
      CHECK(base.visited == base.family_pairs);
      for (Dedup d : {Dedup::Simultaneous, Dedup::Independent}) {
        auto fd = full;
        fd.dedup = d;
        oracle::RunOptions opts;
        opts.workers = 3;
        auto s = oracle::run_suite(fd, suite, opts);
        CHECK(s.covered == base.family_pairs);
        CHECK(s.visited < base.visited);
        CHECK(s.applicable == base.applicable);
        for (const auto& [name, c] : base.checks) {
          CHECK(s.checks.at(name).evaluated == c.evaluated);
          CHECK(s.checks.at(name).failed == c.failed);
        }
      }
    }
  }
}

TEST_CASE("worker count does not change the summary") {
  auto f = EnumerationFamily::parse("finite:2x2");
  oracle::RunOptions one, four;
  four.workers = 4;
  auto a = oracle::run_suite(f, "classification-coverage", one);
  auto b = oracle::run_suite(f, "classification-coverage", four);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_tsv() == b.to_tsv());
  CHECK(a.failures() == 0);
}

TEST_CASE("small suites pass") {
  for (const char* suite : {"subcritical-identities", "classification-coverage", "qp-four", "transform-laws"}) {
    auto s = oracle::run_suite(EnumerationFamily::parse("hybrid:2:2"), suite);
    CHECK_MESSAGE(s.failures() == 0, suite);
    CHECK(s.applicable > 0);
  }
  CHECK_THROWS_AS(oracle::suite_checks("nope"), Error);
}

TEST_CASE("counterexample dumps reparse") {
  oracle::SuiteSummary s;
  s.suite = "subcritical-identities";
  HybridGroup g(FiniteAbelianGroup({6}), 0);
  auto a = HybridSet::from_elements(g, {0, 3});
  s.counterexamples.push_back({5, "overspill", "synthetic", setlang::pair_program(a, a, "check subcritical-identities A B")});
  auto dir = std::filesystem::temp_directory_path() / "kneser-oracle-test";
  std::filesystem::remove_all(dir);
  auto paths = oracle::dump_counterexamples(s, dir.string());
  REQUIRE(paths.size() == 1);
  CHECK(std::filesystem::exists(paths[0]));
  std::filesystem::remove_all(dir);
}
