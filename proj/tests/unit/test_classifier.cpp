#include <doctest.h>

#include "kneser/classifier.hpp"
#include "kneser/errors.hpp"
#include "kneser/rational.hpp"
#include "kneser/setlang.hpp"
#include "kneser/validate.hpp"

using namespace kneser;

namespace {
Rational r(long p, long q = 1) { return make_rational(p, q); }

ClassificationReport run(const char* program, HybridSet* a_out = nullptr, HybridSet* b_out = nullptr) {
  auto env = setlang::load(program);
  const auto& a = env.set("A");
  const auto& b = env.set("B");
  auto rep = classify(a, b);
  CHECK(validate::report(a, b, rep));
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return rep;
}

using Tags = std::vector<std::string>;
}  // namespace

TEST_CASE("periodic pair in Z/11") {
  auto rep = run("group G = Z/11\nset A = {0,1}\nset B = {0,3}\n");
  CHECK(rep.conclusions() == Tags{"P"});
  CHECK(rep.sum.support() == std::vector<ElementId>{0, 1, 3, 4});
  CHECK(rep.p->k.size() == 1);
  CHECK(*rep.roman == Roman::I);
}

TEST_CASE("interval pair on the circle") {
  auto rep = run("group G = T\nset A = {0}x[0,1/4]\nset B = {0}x[0,1/3]\n");
  CHECK(rep.conclusions() == Tags{"K"});
  CHECK(rep.k->n == 1);
  CHECK(rep.k->i == IntervalUnion::arc(r(0), r(1, 4)));
  CHECK(rep.k->j == IntervalUnion::arc(r(0), r(1, 3)));
}

TEST_CASE("extendible pair over Z/17") {
  auto rep = run("group G = Z/17 x T\nset A = {1,3,5,7}x[0,0.8]\nset B = {0,2}x[0,0.9]\n");
  CHECK(rep.conclusions() == Tags{"E"});
  CHECK(rep.m_a == r(16, 85));
  CHECK(rep.m_b == r(9, 85));
  CHECK(rep.m_sum == r(5, 17));
  CHECK(rep.e->refinement == ERefinement::E1);
  CHECK(measure(rep.e->a_ext) == r(4, 17));
}

TEST_CASE("point and interval over Z/4") {
  auto rep = run("group G = Z/4 x T\nset A = {0}xT | {1}x{0}\nset B = {0}xT | {1}x[0,1/2]\n");
  CHECK(rep.conclusions() == Tags{"QP"});
  CHECK(*rep.roman == Roman::IV);
  CHECK(rep.qp->qp4);
  CHECK_FALSE(rep.diagnostics.empty());
}

TEST_CASE("one partial fiber over Z/5") {
  auto rep = run("group G = Z/5 x T\nset A = {0}xT | {1}x[0,1/2]\nset B = {0,1}xT | {2}x[0,1/4]\n");
  CHECK(rep.conclusions() == Tags{"QP"});
  CHECK(rep.m_sum == r(3, 4));
  CHECK(rep.sum.find(3)->measure() == r(3, 4));
  CHECK(*rep.roman == Roman::II);
}

TEST_CASE("construction over Z/15 is both extendible and quasi-periodic") {
  auto rep = run("group G = Z/15 x T\nset A = {1,3,5}xT | {7}x[0,1/3]\nset B = {0,2}xT | {4}x[0,2/3]\n");
  CHECK(rep.conclusions() == Tags{"E", "QP"});
}

TEST_CASE("preconditions") {
  auto env = setlang::load("group G = Z/6\nset A = {0,3}\nset B = {0,1}\nset E = {}\n");
  CHECK_THROWS_AS(classify(env.set("A"), env.set("A")), Error);  // subcritical
  CHECK_THROWS_AS(classify(env.set("B"), env.set("B")), Error);  // supercritical
  try {
    classify(env.set("E"), env.set("B"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolation);
  }
}

TEST_CASE("witness validators reject tampered witnesses") {
  HybridSet a, b;
  auto rep = run("group G = T\nset A = {0}x[0,1/4]\nset B = {0}x[0,1/3]\n", &a, &b);
  auto w = *rep.k;
  w.i = IntervalUnion::arc(r(0), r(1, 5));
  CHECK_FALSE(validate::k_witness(a, b, w));
  auto rep2 = run("group G = Z/4 x T\nset A = {0}xT | {1}x{0}\nset B = {0}xT | {1}x[0,1/2]\n", &a, &b);
  auto q = *rep2.qp;
  std::swap(q.decomposition.a0, q.decomposition.a1);
  CHECK_FALSE(validate::qp_witness(a, b, q));
}

TEST_CASE("quasi-periodic construction round trip") {
  FiniteAbelianGroup f({4});
  auto c = IntervalUnion::arc(r(0), r(1, 4));
  auto d = IntervalUnion::arc(r(0), r(1, 2));
  auto [a, b] = construct_qp_pair(f, {0, 1}, {0, 1}, c, d);
  auto rep = classify(a, b);
  CHECK(rep.sur_critical);
  CHECK(rep.qp.has_value());
  CHECK(validate::report(a, b, rep));
  CHECK_THROWS_AS(construct_qp_pair(f, {0, 2}, {0, 2}, c, d), Error);  // |A'+B'| != |A'|+|B'|-1
  CHECK_THROWS_AS(construct_qp_pair(f, {0, 1}, {0, 1}, IntervalUnion(), d), Error);
}
