#include <gtest/gtest.h>

#include "algroot/bench.hpp"
#include "algroot/io.hpp"

using namespace algroot;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

bool same(const AlgPoly& a, const AlgPoly& b) {
  return a.alpha().poly() == b.alpha().poly() && a.alpha().lo() == b.alpha().lo() &&
         a.alpha().hi() == b.alpha().hi() && a.bipoly() == b.bipoly();
}

}  // namespace

TEST(GenRandom, Deterministic) {
  EXPECT_TRUE(same(gen_random(2, 3, 10, 1), gen_random(2, 3, 10, 1)));
  EXPECT_FALSE(same(gen_random(2, 3, 10, 1), gen_random(2, 3, 10, 2)));
}

TEST(GenRandom, QuadraticExtensionIsIrrationalReal) {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    AlgPoly B = gen_random(2, 3, 10, s);
    const IntPoly& A = B.alpha().poly();
    ASSERT_EQ(A.degree(), 2);
    Integer disc = A[1] * A[1] - 4 * A[0] * A[2];
    ASSERT_GT(disc, 0);
    ASSERT_FALSE(mpz_perfect_square_p(disc.get_mpz_t()));
    ASSERT_LE(B.eta(), 1);
    ASSERT_EQ(is_square_free(B), SquareFreeness::SquareFree);
  }
}

TEST(GenRandom, ThreeSolversAgree) {
  AlgPoly B = gen_random(3, 10, 10, 7);
  auto a = indirect_isolate(B).first.roots.size();
  EXPECT_EQ(sturm_isolate(B).roots.size(), a);
  EXPECT_EQ(bitstream_isolate(B).roots.size(), a);
}

TEST(IrreducibilityProbe, KnownCases) {
  using detail::probably_irreducible;
  EXPECT_TRUE(probably_irreducible(P({-2, 0, 1})));
  EXPECT_FALSE(probably_irreducible(P({-1, 0, 1})));
  EXPECT_TRUE(probably_irreducible(P({-2, 0, 0, 1})));
  EXPECT_FALSE(probably_irreducible(P({-1, -1, 1}) * P({5, -3, 1})));
  EXPECT_FALSE(probably_irreducible(P({-2, 0, 1}) * P({-3, 0, 1})));
  EXPECT_FALSE(probably_irreducible(P({-2, 0, 1}) * P({1, 1, 0, 1})));
  // x^5 + x - 1 = (x^2 - x + 1)(x^3 + x^2 - 1)
  EXPECT_FALSE(probably_irreducible(P({-1, 1, 0, 0, 0, 1})));
  EXPECT_TRUE(probably_irreducible(P({-1, -1, 0, 0, 0, 1})));
  // irreducible mod 2
  EXPECT_TRUE(probably_irreducible(P({1, 1, 0, 0, 1})));
}

TEST(RationalRoots, Examples) {
  auto r = detail::rational_roots(P({-3, 2}) * P({1, 0, 1}) * P({5, 1}) * P({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], -5);
  EXPECT_EQ(r[1], Rational(3, 2));
}

TEST(GenLaguerre, ClosedForms) {
  AlgPoly L1 = gen_laguerre(2, 1);
  EXPECT_EQ(L1.alpha().poly(), P({2, -4, 1}));
  EXPECT_EQ(L1.coeff(0), P({1, 1}));
  EXPECT_EQ(L1.coeff(1), P({-1}));
  // 2 L_2 = y^2 - 2(alpha + 2) y + (alpha + 1)(alpha + 2), alpha^2 = 4 alpha - 2
  AlgPoly L2 = gen_laguerre(2, 2);
  EXPECT_EQ(L2.coeff(2), P({1}));
  EXPECT_EQ(L2.coeff(1), P({-4, -2}));
  EXPECT_EQ(L2.coeff(0), P({0, 7}));
  EXPECT_EQ(compare(L1.alpha(), make_algebraic(P({2, -4, 1}), 0, 1)), 0);
}

TEST(GenLaguerre, AllRootsPositive) {
  for (int m : {2, 3})
    for (int n : {5, 10}) {
      AlgPoly B = gen_laguerre(m, n);
      auto r = sturm_isolate(B);
      ASSERT_EQ(static_cast<int>(r.roots.size()), n);
      for (const auto& x : r.roots) EXPECT_GE(x.lo, 0);
    }
}

TEST(GenWilkinson, Examples) {
  AlgPoly W1 = gen_wilkinson(2, 1);
  EXPECT_EQ(W1.coeff(0), P({0, -1}));
  EXPECT_EQ(W1.coeff(1), P({1}));
  AlgPoly W2 = gen_wilkinson(2, 2);
  EXPECT_EQ(W2.coeff(0), P({-4, 8}));
  EXPECT_EQ(W2.coeff(1), P({0, -3}));
}

TEST(GenMignotte, Examples) {
  AlgPoly M = gen_mignotte(3, 4);
  EXPECT_EQ(M.alpha().poly(), P({-1, 0, -3, 1}));
  EXPECT_EQ(sign_at_rational(M.alpha().poly(), 3), -1);
  EXPECT_EQ(sign_at_rational(M.alpha().poly(), 4), 1);
  EXPECT_EQ(M.coeff(4), P({1}));
  EXPECT_EQ(M.coeff(3), P({}));
  EXPECT_EQ(M.coeff(2), P({0, 0, -2}));
  EXPECT_EQ(M.coeff(1), P({0, 4}));
  EXPECT_EQ(M.coeff(0), P({-2}));
  EXPECT_EQ(mignotte_k(5), 2);
  EXPECT_THROW(gen_mignotte(2, 4), Error);
}

TEST(InstanceJson, RoundTrip) {
  for (AlgPoly B : {gen_random(3, 4, 10, 3), gen_mignotte(5, 6), gen_laguerre(2, 3)}) {
    json j = to_json(B);
    AlgPoly C = instance_from_json(json::parse(j.dump()));
    EXPECT_TRUE(same(B, C));
  }
}

TEST(InstanceJson, AlternateAlphaForm) {
  json j = json::parse(R"({"alpha":{"A":["-2","0","1"],"I":["1","2"]},"B":[["0","-1"],["1"]]})");
  AlgPoly B = instance_from_json(j);
  EXPECT_EQ(B.n(), 1);
}

TEST(InstanceJson, ValidationErrors) {
  auto kind = [](const char* s) {
    try {
      instance_from_json(json::parse(s));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Timeout;
  };
  EXPECT_EQ(kind(R"({"A":["-2","0","1"],"I":["-2","2"],"B":[["1"]]})"), ErrorKind::NotIsolating);
  EXPECT_EQ(kind(R"({"A":["-2","0","1"],"I":["1","2"]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind(R"({"A":["-2","0","1"],"I":["1","2"],"B":[["1"],["-2","0","1"]]})"),
            ErrorKind::LeadingCoefficientVanishes);
  EXPECT_EQ(kind(R"({"A":["x"],"I":["1","2"],"B":[["1"]]})"), ErrorKind::InvalidInput);
}

TEST(RootJson, Forms) {
  EXPECT_EQ(to_json(RootInterval::exact(Rational(1, 2))).dump(), R"({"kind":"exact","value":"1/2"})");
  EXPECT_EQ(to_json(RootInterval::open(Rational(-3, 4), 2, 1)).dump(),
            R"({"kind":"open","lo":"-3/4","hi":"2","mult":1})");
  auto r = root_from_json(to_json(RootInterval::open(Rational(1, 3), Rational(1, 2), 2)));
  EXPECT_EQ(r.lo, Rational(1, 3));
  EXPECT_EQ(r.multiplicity, 2);
}

TEST(Bench, CsvDeterministic) {
  BenchSpec s;
  s.family = Family::Random;
  s.ms = {2, 3};
  s.ns = {4};
  s.repetitions = 1;
  s.seed = 11;
  EXPECT_EQ(bench_csv(run_benchmark(s)), bench_csv(run_benchmark(s)));
}

TEST(Bench, RowsAgreeAndTimeoutsBecomeRows) {
  BenchSpec s;
  s.family = Family::Wilkinson;
  s.ms = {2};
  s.ns = {3, 5};
  s.repetitions = 2;
  BenchResult r = run_benchmark(s);
  EXPECT_EQ(r.disagreements, 0);
  ASSERT_EQ(r.rows.size(), 6u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.status(), "ok");
    EXPECT_EQ(row.roots, row.n);
  }
  s.timeout_seconds = 1e-9;
  BenchResult t = run_benchmark(s);
  for (const auto& row : t.rows) EXPECT_EQ(row.status(), "timeout");
  EXPECT_NE(bench_timing_table(t).find("timeout"), std::string::npos);
}

TEST(Bench, SpecValidation) {
  BenchSpec s;
  s.family = Family::Mignotte;
  s.ms = {2};
  EXPECT_THROW(run_benchmark(s), Error);
}
