#include <gtest/gtest.h>

#include <random>

#include "algroot/bench.hpp"
#include "algroot/bounds.hpp"

using namespace algroot;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

RealAlgebraic sqrt2() { return make_algebraic(P({-2, 0, 1}), 1, 2); }
RealAlgebraic sqrt3() { return make_algebraic(P({-3, 0, 1}), 1, 2); }

AlgPoly y4_minus_alpha2() { return AlgPoly::make(sqrt3(), {P({0, 0, -1}), P({}), P({}), P({}), P({1})}); }

// sign of k alpha - q, exactly.
int sign_k_alpha_minus(const RealAlgebraic& a, long k, const Rational& q) {
  return a.sign_at(IntPoly{Integer(-q.get_num()), Integer(k * q.get_den())});
}

bool contains_root(const AlgPoly& B, const RootInterval& r) {
  if (r.is_exact()) return endpoint_sign(B, r.lo) == 0;
  return endpoint_sign(B, r.lo) * endpoint_sign(B, r.hi) < 0;
}

void expect_same_roots(const AlgPoly& B, const IsolationResult& a, const IsolationResult& b) {
  ASSERT_EQ(a.roots.size(), b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    RootInterval x = refine_root(B, a.roots[i], 40), y = refine_root(B, b.roots[i], 40);
    EXPECT_LE(std::max(x.lo, y.lo), std::min(x.hi, y.hi)) << i;
  }
}

std::vector<AlgPoly> desk_fixtures() {
  std::vector<AlgPoly> v;
  for (int m : {2, 3})
    for (int n : {3, 6}) {
      v.push_back(gen_laguerre(m, n));
      v.push_back(gen_wilkinson(m, n));
      v.push_back(gen_random(m, n, 10, 5));
    }
  v.push_back(gen_mignotte(3, 6));
  v.push_back(y4_minus_alpha2());
  return v;
}

}  // namespace

TEST(ComputeR, RemarkExample) {
  IntPoly q = P({-3, 0, 0, 0, 1});
  EXPECT_EQ(compute_R(y4_minus_alpha2()), q * q);
}

TEST(ComputeR, LinearAndConstantInAlpha) {
  auto B = AlgPoly::make(sqrt2(), {P({0, -1}), P({1})});
  EXPECT_EQ(compute_R(B), P({-2, 0, 1}));
  auto C = AlgPoly::make(sqrt2(), {P({}), P({1})});
  EXPECT_EQ(compute_R(C), P({0, 0, 1}));
}

TEST(IndirectIsolate, Examples) {
  auto [r1, t1] = indirect_isolate(y4_minus_alpha2());
  ASSERT_EQ(r1.roots.size(), 2u);
  EXPECT_TRUE(r1.roots[0].hull_contains(Rational(-131607, 100000)) ||
              r1.roots[0].hull_contains(Rational(-131608, 100000)));
  EXPECT_EQ(t1.C, P({-3, 0, 0, 0, 1}));

  auto [r2, t2] = indirect_isolate(AlgPoly::make(sqrt2(), {P({0, -1}), P({1})}));
  ASSERT_EQ(r2.roots.size(), 1u);
  ASSERT_EQ(t2.kept.size(), 2u);
  EXPECT_FALSE(t2.kept[0]);
  EXPECT_TRUE(t2.kept[1]);
  EXPECT_GT(r2.roots[0].lo, 0);

  auto [r3, t3] = indirect_isolate(AlgPoly::make(sqrt2(), {P({0, -1}), P({}), P({1})}));
  ASSERT_EQ(r3.roots.size(), 2u);
  for (const auto& r : r3.roots) {
    RootInterval s = refine_root(AlgPoly::make(sqrt2(), {P({0, -1}), P({}), P({1})}), r, 20);
    Rational v = abs(s.lo);
    EXPECT_LT(abs(v - Rational(118920711, 100000000)), Rational(1, 100000));
  }
}

TEST(IndirectIsolate, RejectsNonSquareFree) {
  auto B = AlgPoly::make(sqrt2(), {P({0, 0, 1}), P({0, -2}), P({1})});
  try {
    indirect_isolate(B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquareFree);
  }
}

TEST(IndirectIsolate, TraceInvariants) {
  for (const auto& B : desk_fixtures()) {
    auto [res, tr] = indirect_isolate(B);
    long kept = 0;
    for (bool k : tr.kept) kept += k;
    EXPECT_EQ(kept, static_cast<long>(res.roots.size()));
    EXPECT_LE(tr.C.degree(), B.m() * B.n());
    for (const auto& r : res.roots) EXPECT_TRUE(contains_root(B, r));
  }
}

TEST(IndirectIsolate, KeptIntervalsStraddleZeroUnderEnclosures) {
  for (const auto& B : desk_fixtures()) {
    auto res = indirect_isolate(B).first;
    auto enc = coeff_enclosures(B, 80);
    auto eval = [&](const Rational& q) {
      DyadicInterval x = dyadic_approx(q, 200), v(Dyadic(0));
      for (int i = B.n(); i >= 0; --i) v = v * x + enc[static_cast<std::size_t>(i)];
      return v;
    };
    for (const auto& r : res.roots) {
      if (r.is_exact()) continue;
      DyadicInterval a = eval(r.lo), b = eval(r.hi);
      ASSERT_FALSE(a.contains_zero());
      ASSERT_FALSE(b.contains_zero());
      EXPECT_NE(a.sign(), b.sign());
    }
  }
}

TEST(SturmIsolate, Examples) {
  auto B = AlgPoly::make(sqrt2(), {P({0, -1}), P({}), P({1})});
  auto r = sturm_isolate(B);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_LE(r.roots[0].hi, 0);
  EXPECT_GE(r.roots[1].lo, 0);

  auto C = AlgPoly::make(sqrt2(), {P({0, -1}), P({1})});
  auto s = sturm_isolate(C);
  ASSERT_EQ(s.roots.size(), 1u);
  RootInterval t = refine_root(C, s.roots[0], 30);
  EXPECT_TRUE(t.hull_contains(Rational(1414213562, 1000000000)) ||
              t.hull_contains(Rational(1414213563, 1000000000)));

  auto W = AlgPoly::make(make_algebraic(P({2, -4, 1}), 0, 1),
                         gen_wilkinson(2, 3).bipoly().coeffs());
  auto w = sturm_isolate(W);
  ASSERT_EQ(w.roots.size(), 3u);
  for (long k = 1; k <= 3; ++k) {
    const auto& x = w.roots[static_cast<std::size_t>(k - 1)];
    EXPECT_GT(sign_k_alpha_minus(W.alpha(), k, x.lo), 0);
    EXPECT_LT(sign_k_alpha_minus(W.alpha(), k, x.hi), 0);
  }
}

TEST(SturmCounter, MatchesIndirectOracle) {
  std::mt19937_64 rng(5);
  for (const auto& B : desk_fixtures()) {
    SturmCounter S(B);
    auto oracle = indirect_isolate(B).first;
    std::vector<RootInterval> fine;
    for (const auto& r : oracle.roots) fine.push_back(refine_root(B, r, 20));
    for (int t = 0; t < 10; ++t) {
      Rational a(Integer(static_cast<long>(rng() % 401) - 200), Integer(16));
      Rational b = a + Rational(Integer(static_cast<long>(rng() % 200) + 1), Integer(16));
      a.canonicalize();
      b.canonicalize();
      if (endpoint_sign(B, a) == 0 || endpoint_sign(B, b) == 0) continue;
      int expect = 0;
      bool ambiguous = false;
      for (const auto& r : fine) {
        if (r.hi < a || r.lo > b) continue;
        if (r.lo > a && r.hi < b) {
          ++expect;
          continue;
        }
        ambiguous = true;
      }
      if (ambiguous) continue;
      EXPECT_EQ(S.count_open(a, b), expect);
    }
  }
}

TEST(VariationVerdict, Examples) {
  auto I = [](long a, long b) { return DyadicInterval(Dyadic(a), Dyadic(b)); };
  EXPECT_EQ(variation_verdict({I(1, 2), I(3, 4), I(1, 1)}).kind, VerdictKind::Zero);
  EXPECT_EQ(variation_verdict({I(1, 2), I(-3, -1)}).kind, VerdictKind::One);
  EXPECT_EQ(variation_verdict({I(1, 2), I(-1, 1), I(1, 2)}).kind, VerdictKind::Unknown);
  auto v = variation_verdict({I(1, 2), I(-2, -1), I(1, 2), I(-2, -1)});
  EXPECT_EQ(v.kind, VerdictKind::AtLeast);
  EXPECT_EQ(v.min_variations, 3);
}

TEST(VariationVerdict, CertifiedAgainstSampledPolynomials) {
  // Zero / One must hold for every integer polynomial inside the boxes.
  std::mt19937_64 rng(71);
  for (int t = 0; t < 2000; ++t) {
    int d = 1 + rng() % 5;
    std::vector<DyadicInterval> box;
    for (int i = 0; i <= d; ++i) {
      long a = static_cast<long>(rng() % 11) - 5, w = rng() % 3;
      box.emplace_back(Dyadic(a), Dyadic(a + w));
    }
    Verdict v = variation_verdict(box);
    if (v.kind != VerdictKind::Zero && v.kind != VerdictKind::One) continue;
    for (int s = 0; s < 20; ++s) {
      std::vector<Integer> c;
      for (const auto& b : box) {
        long lo = b.lo().to_rational().get_num().get_si(), hi = b.hi().to_rational().get_num().get_si();
        c.emplace_back(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)));
      }
      ASSERT_EQ(sign_variations(c), v.kind == VerdictKind::Zero ? 0 : 1);
    }
  }
}

TEST(BitstreamIsolate, Examples) {
  auto B = y4_minus_alpha2();
  auto bs = bitstream_isolate(B);
  expect_same_roots(B, bs, indirect_isolate(B).first);

  auto C = AlgPoly::make(sqrt2(), {P({0, -1}), P({}), P({1})});
  auto r = bitstream_isolate(C);
  ASSERT_EQ(r.roots.size(), 2u);
}

TEST(BitstreamIsolate, MignotteClusterSeparated) {
  auto B = gen_mignotte(3, 10);
  auto r = bitstream_isolate(B);
  auto ind = indirect_isolate(B).first;
  EXPECT_EQ(r.roots.size(), ind.roots.size());
  // Two roots within 2h of 1/alpha, h = alpha^-(k(n+2)/2) = alpha^-6.
  auto inv = B.alpha().approximate(80);
  Rational a_lo = inv.lo().to_rational(), a_hi = inv.hi().to_rational();
  Rational h_hi = 1 / (a_lo * a_lo * a_lo * a_lo * a_lo * a_lo);
  int near = 0;
  for (const auto& x : r.roots) {
    RootInterval s = refine_root(B, x, 40);
    if (s.lo > 1 / a_hi - h_hi && s.hi < 1 / a_lo + h_hi) ++near;
  }
  EXPECT_EQ(near, 2);
}

TEST(BitstreamIsolate, AuditZeroOneVerdicts) {
  for (const auto& B : desk_fixtures()) {
    SturmCounter S(B);
    long audited = 0, mismatches = 0;
    BitstreamOptions opt;
    opt.audit = [&](const AuditRecord& a) {
      ++audited;
      int c = S.count_open(a.lo, a.hi);
      if (c != (a.verdict == VerdictKind::Zero ? 0 : 1)) ++mismatches;
    };
    auto res = bitstream_isolate(B, opt);
    EXPECT_GT(audited, 0);
    EXPECT_EQ(mismatches, 0);
  }
}

TEST(BitstreamIsolate, PrecisionCapSignalsViolatedPrecondition) {
  // Square-free check disabled on a double root: the cap must fire.
  auto B = AlgPoly::make(sqrt2(), {P({0, 0, 1}), P({0, -2}), P({1})});
  BitstreamOptions opt;
  opt.solve.verify_square_free = false;
  opt.precision_cap = 512;
  try {
    bitstream_isolate(B, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionCapExceeded);
  }
}

TEST(Solvers, AgreeOnDeskFixtures) {
  for (const auto& B : desk_fixtures()) {
    auto a = indirect_isolate(B).first;
    auto s = sturm_isolate(B);
    auto b = bitstream_isolate(B);
    expect_same_roots(B, a, s);
    expect_same_roots(B, a, b);
    for (const auto* res : {&a, &s, &b})
      for (std::size_t i = 0; i < res->roots.size(); ++i) {
        EXPECT_TRUE(contains_root(B, res->roots[i]));
        if (i) EXPECT_LE(res->roots[i - 1].hi, res->roots[i].lo);
      }
  }
}

TEST(Solvers, AgreeOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    AlgPoly B = gen_random(2 + static_cast<int>(seed % 3), 5 + static_cast<int>(seed % 4), 10, seed);
    auto a = indirect_isolate(B).first;
    expect_same_roots(B, a, sturm_isolate(B));
    expect_same_roots(B, a, bitstream_isolate(B));
  }
}

TEST(Solvers, RationalRootAtBisectionPointIsExact) {
  // y (y - 1/2) (y^2 - alpha): 0 and 1/2 are dyadic subdivision points.
  BiPoly f = BiPoly{IntPoly(), IntPoly::constant(Integer(1))} *
             BiPoly{IntPoly::constant(Integer(-1)), IntPoly::constant(Integer(2))} *
             BiPoly{P({0, -1}), IntPoly(), IntPoly::constant(Integer(1))};
  auto B = AlgPoly::make(sqrt2(), f.coeffs());
  for (Method m : {Method::Indirect, Method::Sturm, Method::Bitstream}) {
    auto r = isolate_roots(B, m);
    ASSERT_EQ(r.roots.size(), 4u) << to_string(m);
    int exact = 0;
    for (const auto& x : r.roots) {
      EXPECT_TRUE(contains_root(B, x));
      exact += x.is_exact();
    }
    EXPECT_EQ(exact, 2) << to_string(m);
  }
}
