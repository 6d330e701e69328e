#include <gtest/gtest.h>

#include <cmath>

#include "algroot/bench.hpp"
#include "algroot/bounds.hpp"

using namespace algroot;

namespace {

IntPoly P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

InstanceParams params(long m, long n, long tau, long sigma, long ell = 1) {
  InstanceParams p;
  p.m = m;
  p.n = n;
  p.tau = tau;
  p.sigma = sigma;
  p.ell = ell;
  return p;
}

}  // namespace

TEST(Clg, ExactCeilings) {
  EXPECT_EQ(clg(1), 0);
  EXPECT_EQ(clg(2), 1);
  EXPECT_EQ(clg(3), 2);
  EXPECT_EQ(clg(8), 3);
  EXPECT_EQ(clg(32), 5);
  EXPECT_EQ(clg(33), 6);
}

TEST(LgBounds, BracketLibmValue) {
  for (long x : {2L, 3L, 5L, 24L, 1000L, 123456789L}) {
    Rational u = lg_upper(Rational(x)), l = lg_lower(Rational(x));
    double v = std::log2(static_cast<double>(x));
    EXPECT_LE(l, u);
    EXPECT_LE(l.get_d(), v + 1e-9);
    EXPECT_GE(u.get_d(), v - 1e-9);
    EXPECT_LT(Rational(u - l).get_d(), 1e-6);
  }
  EXPECT_EQ(lg_lower(Rational(8)), 3);
}

TEST(UnivariateBounds, SqrtTwoExamples) {
  auto r = univariate_bounds(P({-2, 0, 1}));
  EXPECT_EQ(r.at("root_magnitude_log"), 3);  // 2^(tau+1) = 8
  EXPECT_EQ(r.at("neg_log_sep"), 8);
  EXPECT_LE(r.at("neg_log_sep_disc"), Rational(9, 10));
  // -lg(2 sqrt 2) = -1.5 <= bound
  EXPECT_GE(r.at("neg_log_sep_disc"), Rational(-3, 2));
}

TEST(UnivariateBounds, SoundOnRandomPolynomials) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    int d = 2 + rng() % 6;
    std::vector<Integer> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 61) - 30);
    if (c.back() == 0) c.back() = 1;
    IntPoly f(c);
    if (f.degree() < 2) continue;
    IntPoly g = square_free_part(f);
    auto r = univariate_bounds(f);
    auto roots = isolate_squarefree(g).roots;
    std::vector<RootInterval> fine;
    for (const auto& x : roots) fine.push_back(refine(g, x, 60));
    for (const auto& x : fine) {
      EXPECT_LE(abs(x.lo), pow2_rational(r.at("root_magnitude_log").get_num().get_si()));
    }
    for (std::size_t i = 1; i < fine.size(); ++i) {
      Rational gap_hi = fine[i].hi - fine[i - 1].lo;
      // -lg gap >= -lg gap_hi, so gap_hi-based lower estimate must stay below the bounds.
      Rational nlg = -lg_upper(gap_hi);
      EXPECT_LE(nlg, r.at("neg_log_sep"));
      if (r.has("neg_log_sep_disc")) EXPECT_LE(nlg, r.at("neg_log_sep_disc"));
    }
  }
}

TEST(IndirectBounds, Examples) {
  auto r = indirect_bounds(params(2, 4, 2, 2));
  EXPECT_EQ(r.at("resultant_degree"), 8);
  EXPECT_EQ(r.at("neg_log_sep"), 384);
  EXPECT_EQ(indirect_bounds(params(1, 5, 2, 2)).at("resultant_degree"), 5);
}

TEST(DirectBounds, Examples) {
  auto r = direct_bounds(params(2, 4, 2, 2));
  EXPECT_EQ(r.at("neg_log_sep"), 1248);
  EXPECT_EQ(r.at("tau_B"), 28);
  EXPECT_EQ(r.at("root_magnitude_log"), 18);
}

TEST(MultiExtBounds, Examples) {
  EXPECT_EQ(multi_ext_bounds(params(2, 2, 1, 1, 2)).at("neg_log_sep"), 928);
  EXPECT_EQ(multi_ext_bounds(params(2, 1, 1, 1, 3)).at("resultant_degree"), 8);
  for (long m = 2; m < 6; ++m)
    EXPECT_EQ(multi_ext_bounds(params(m, 3, 2, 2, 1)).at("resultant_degree"),
              indirect_bounds(params(m, 3, 2, 2)).at("resultant_degree"));
}

TEST(ResultantSizeBound, Examples) {
  auto r = resultant_size_bound(2, 1, 4, 2, 2);
  EXPECT_EQ(r.degree, 8);
  EXPECT_EQ(r.bitsize, 18);
  auto s = resultant_size_bound(1, 0, 6, 3, 2);
  EXPECT_EQ(s.degree, 6);
  EXPECT_EQ(s.bitsize, 3 + clg(7));
}

TEST(ResultantSizeBound, RemarkInstance) {
  auto alpha = make_algebraic(P({-3, 0, 1}), 1, 2);
  auto B = AlgPoly::make(alpha, {P({0, 0, -1}), P({}), P({}), P({}), P({1})});
  IntPoly R = resultant_bivariate(B.bipoly(), alpha.poly());
  EXPECT_EQ(R.degree(), 8);
  EXPECT_EQ(static_cast<long>(coeff_bitsize(R, SignBit::Included)), 5);
  EXPECT_LE(R.degree(), resultant_size_bound(2, 1, 4, 2, 2).degree);
}

TEST(Bounds, Monotone) {
  auto check = [](auto fn, bool ell_too) {
    for (long m = 2; m <= 5; ++m)
      for (long n = 1; n <= 5; ++n)
        for (long t = 1; t <= 4; ++t)
          for (long s = 1; s <= 4; ++s)
            for (long l = 1; l <= (ell_too ? 3 : 1); ++l) {
              BoundReport a = fn(params(m, n, t, s, l));
              for (auto [dm, dn, dt, ds, dl] : {std::tuple{1, 0, 0, 0, 0}, std::tuple{0, 1, 0, 0, 0},
                                                 std::tuple{0, 0, 1, 0, 0}, std::tuple{0, 0, 0, 1, 0},
                                                 std::tuple{0, 0, 0, 0, ell_too ? 1 : 0}}) {
                BoundReport b = fn(params(m + dm, n + dn, t + dt, s + ds, l + dl));
                for (const auto& [k, v] : a.entries) ASSERT_LE(v, b.at(k)) << k;
              }
            }
  };
  check([](const InstanceParams& p) { return indirect_bounds(p); }, false);
  check([](const InstanceParams& p) { return direct_bounds(p); }, false);
  check([](const InstanceParams& p) { return multi_ext_bounds(p); }, true);
}

TEST(Bounds, ParamValidation) {
  EXPECT_THROW(direct_bounds(params(0, 1, 1, 1)), Error);
  InstanceParams p = params(2, 2, 2, 2);
  p.eta = 2;
  EXPECT_THROW(indirect_bounds(p), Error);
}

TEST(Bounds, SoundOnFixtures) {
  std::vector<AlgPoly> fx;
  for (int m : {2, 3})
    for (int n : {3, 5}) {
      fx.push_back(gen_laguerre(m, n));
      fx.push_back(gen_wilkinson(m, n));
      fx.push_back(gen_random(m, n, 10, 3));
    }
  fx.push_back(gen_mignotte(3, 5));
  for (const auto& B : fx) {
    InstanceParams p = params_of(B);
    IntPoly R = compute_R(B);
    auto rs = resultant_size_bound(p.m, p.eta, p.n, p.sigma, p.tau);
    EXPECT_LE(R.degree(), rs.degree);
    EXPECT_LE(static_cast<long>(coeff_bitsize(R, SignBit::Included)), rs.bitsize);
    auto d = direct_bounds(p), ind = indirect_bounds(p);
    auto roots = sturm_isolate(B).roots;
    std::vector<RootInterval> fine;
    for (const auto& r : roots) fine.push_back(refine_root(B, r, 40));
    for (const auto& r : fine) EXPECT_LE(abs(r.hi) , pow2_rational(d.at("root_magnitude_log").get_num().get_si()));
    for (std::size_t i = 1; i < fine.size(); ++i) {
      Rational nlg = -lg_upper(fine[i].hi - fine[i - 1].lo);
      EXPECT_LE(nlg, d.at("neg_log_sep"));
      EXPECT_LE(nlg, ind.at("neg_log_sep"));
    }
  }
}
