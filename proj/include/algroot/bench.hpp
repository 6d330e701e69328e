#pragma once

// Benchmark instance families and the solver comparison runner.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "algroot/solver_direct.hpp"
#include "algroot/solver_indirect.hpp"

namespace algroot {

enum class Family { Random, Laguerre, Wilkinson, Mignotte };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Random: return "random";
    case Family::Laguerre: return "laguerre";
    case Family::Wilkinson: return "wilkinson";
    case Family::Mignotte: return "mignotte";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "random") return Family::Random;
  if (s == "laguerre") return Family::Laguerre;
  if (s == "wilkinson") return Family::Wilkinson;
  if (s == "mignotte") return Family::Mignotte;
  throw Error(ErrorKind::InvalidInput, "unknown family: " + s);
}

namespace detail {

inline Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// The distinct rational roots of f, ascending. A rational root r of f
/// satisfies lc(f) r in Z, so each isolating interval is refined below
/// 1/|lc| and the integer points k with k/lc inside are tested exactly.
inline std::vector<Rational> rational_roots(const IntPoly& f) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  IntPoly g = square_free_part(f);
  const Integer lc = abs(g.lc());
  for (auto r : isolate_squarefree(g).roots) {
    if (r.is_exact()) {
      out.push_back(r.lo);
      continue;
    }
    long L = static_cast<long>(bitsize(lc)) + 1;
    r = refine(g, r, L);
    if (r.is_exact()) {
      out.push_back(r.lo);
      continue;
    }
    for (Integer k = ceil(r.lo * lc); k <= floor(r.hi * lc); ++k) {
      Rational q(k, lc);
      q.canonicalize();
      if (sign_at_rational(g, q) == 0) out.push_back(q);
    }
  }
  return out;
}

/// A(y - x) as an element of Z[x][y].
inline BiPoly reflect(const IntPoly& A) {
  // (y - x)^i expanded; coefficient of y^j is C(i, j) (-x)^(i-j).
  const int m = A.degree();
  std::vector<std::vector<Integer>> c(static_cast<std::size_t>(m) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(m) + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= i; ++j) {
      Integer t = A[i] * binomial(i, j);
      if ((i - j) % 2) t = -t;
      c[j][i - j] += t;
    }
  std::vector<IntPoly> b;
  for (auto& v : c) b.emplace_back(std::move(v));
  return BiPoly(std::move(b));
}

/// Bounded-effort irreducibility probe: rejects A with a rational root or,
/// through res_x(A(x), A(y - x)), with a proper factor whose roots pair up
/// to a rational sum (every quadratic factor does). Exact for m <= 5 except
/// that symmetric quartics are rejected outright.
inline bool probably_irreducible(const IntPoly& A) {
  if (A.degree() <= 1) return A.degree() == 1;
  if (gcd(A, A.derivative()).degree() >= 1) return false;
  if (!rational_roots(A).empty()) return false;
  if (A.degree() > 5) return true;
  IntPoly R = resultant_bivariate(reflect(A), A);
  for (const auto& s : rational_roots(R)) {
    // A(s - x) scaled to integers.
    RatPoly t = taylor_shift(to_ratpoly(A), s);
    std::vector<Rational> c(t.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    IntPoly As = clear_denominators(RatPoly(std::move(c))).first;
    const int d = gcd(A, As).degree();
    // d = m: A symmetric about s/2, which for m = 4 may hide a factor pair.
    if ((d >= 2 && d < A.degree()) || (d == A.degree() && A.degree() == 4)) return false;
  }
  return true;
}

inline IntPoly random_poly(std::mt19937_64& rng, int deg, int bits, bool nonzero_lc) {
  const long hi = (1L << bits) - 1;
  std::uniform_int_distribution<long> d(-hi, hi);
  std::vector<Integer> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (nonzero_lc)
    while (c.back() == 0) c.back() = d(rng);
  return IntPoly(std::move(c));
}

inline RealAlgebraic pick_root(const IntPoly& A, std::size_t which) {
  auto roots = isolate_squarefree(A).roots;
  const auto& r = roots.at(which);
  return make_algebraic(A, r.lo, r.hi);
}

}  // namespace detail

/// Degrees for which the irreducibility probe of gen_random is complete up to
/// its quadratic-factor coverage; above this only rational roots are ruled out.
inline bool random_probe_is_strong(int m) { return m <= 5; }

/// Random instance: A irreducible (per the probe) of degree m with a real
/// root alpha chosen at random, B with n + 1 random coefficients of degree
/// m - 1, square-free with b_n(alpha) != 0.
inline AlgPoly gen_random(int m, int n, int coeff_bits, std::uint64_t seed) {
  if (m < 2 || n < 1 || coeff_bits < 1 || coeff_bits > 60)
    throw Error(ErrorKind::InvalidInput, "gen_random: need m >= 2, n >= 1, 1 <= bits <= 60");
  std::seed_seq ss{seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(coeff_bits)};
  std::mt19937_64 rng(ss);
  IntPoly A;
  std::size_t nroots = 0;
  while (true) {
    A = detail::random_poly(rng, m, coeff_bits, true);
    if (!detail::probably_irreducible(A)) continue;
    nroots = isolate_squarefree(A).roots.size();
    if (nroots > 0) break;
  }
  RealAlgebraic alpha = detail::pick_root(A, rng() % nroots);
  while (true) {
    std::vector<IntPoly> b;
    for (int i = 0; i <= n; ++i) b.push_back(detail::random_poly(rng, m - 1, coeff_bits, false));
    if (b.back().is_zero() || alpha.sign_at(b.back()) == 0) continue;
    AlgPoly B = AlgPoly::make(alpha, b);
    if (is_square_free(B) == SquareFreeness::SquareFree) return B;
  }
}

/// m! L_m(x), the Laguerre polynomial cleared to integers.
inline IntPoly laguerre_integer(int m) {
  std::vector<Integer> c;
  const Integer mf = detail::factorial(m);
  for (int i = 0; i <= m; ++i) {
    Integer t = detail::binomial(m, i) * (mf / detail::factorial(i));
    c.push_back(i % 2 ? Integer(-t) : t);
  }
  return IntPoly(std::move(c));
}

/// The smallest root of L_m, which all Laguerre and Wilkinson instances use.
inline RealAlgebraic laguerre_alpha(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidInput, "laguerre_alpha: need m >= 2");
  return detail::pick_root(laguerre_integer(m), 0);
}

/// n! L_n^(alpha)(y): the coefficient of y^i is
/// (-1)^i C(n, i) (alpha + i + 1) ... (alpha + n).
inline AlgPoly gen_laguerre(int m, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "gen_laguerre: need n >= 1");
  RealAlgebraic alpha = laguerre_alpha(m);
  std::vector<IntPoly> b;
  for (int i = 0; i <= n; ++i) {
    IntPoly p = IntPoly::constant(detail::binomial(n, i));
    for (int j = i + 1; j <= n; ++j) p *= IntPoly{Integer(j), Integer(1)};
    b.push_back(i % 2 ? -p : p);
  }
  return AlgPoly::make(alpha, b);
}

/// prod_{k=1..n} (y - k alpha).
inline AlgPoly gen_wilkinson(int m, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "gen_wilkinson: need n >= 1");
  RealAlgebraic alpha = laguerre_alpha(m);
  BiPoly W = BiPoly::constant(IntPoly::constant(Integer(1)));
  for (int k = 1; k <= n; ++k) W *= BiPoly{IntPoly{Integer(0), Integer(-k)}, IntPoly::constant(Integer(1))};
  return AlgPoly::make(alpha, W.coeffs());
}

/// x^m - a x^(m-1) - 1.
inline IntPoly mignotte_extension(int m, int a = 3) {
  std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
  c[0] = -1;
  c[m - 1] = -a;
  c[m] = 1;
  return IntPoly(std::move(c));
}

inline int mignotte_k(int m) { return (m - 1) / 2; }

/// y^n - 2 (alpha^k y - 1)^2 with alpha the root of x^m - a x^(m-1) - 1 in
/// (a, a + 1) and k = floor((m - 1) / 2).
inline AlgPoly gen_mignotte(int m, int n, int a = 3) {
  if (m < 3 || n < 3 || a < 3) throw Error(ErrorKind::InvalidInput, "gen_mignotte: need m, n, a >= 3");
  RealAlgebraic alpha = make_algebraic(mignotte_extension(m, a), a, a + 1);
  const int k = mignotte_k(m);
  auto xpow = [](int e, long c) {
    std::vector<Integer> v(static_cast<std::size_t>(e) + 1);
    v[e] = c;
    return IntPoly(std::move(v));
  };
  std::vector<IntPoly> b(static_cast<std::size_t>(n) + 1);
  b[0] = IntPoly::constant(Integer(-2));
  b[1] = xpow(k, 4);
  b[2] = xpow(2 * k, -2);
  b[n] = IntPoly::constant(Integer(1));
  return AlgPoly::make(alpha, b);
}

/// Instance of a family; seed matters for Random only.
inline AlgPoly generate(Family f, int m, int n, int coeff_bits = 10, std::uint64_t seed = 1) {
  switch (f) {
    case Family::Random: return gen_random(m, n, coeff_bits, seed);
    case Family::Laguerre: return gen_laguerre(m, n);
    case Family::Wilkinson: return gen_wilkinson(m, n);
    case Family::Mignotte: return gen_mignotte(m, n);
  }
  throw Error(ErrorKind::InvalidInput, "unknown family");
}

// ---------------------------------------------------------------------------
// Runner

struct BenchSpec {
  Family family = Family::Random;
  std::vector<int> ms{2}, ns{10};
  int coeff_bits = 10;
  std::uint64_t seed = 1;
  int repetitions = 10;
  std::vector<Method> methods{Method::Indirect, Method::Sturm, Method::Bitstream};
  double timeout_seconds = 0;  // 0: none

  void validate() const {
    if (ms.empty() || ns.empty() || methods.empty() || repetitions < 1)
      throw Error(ErrorKind::InvalidInput, "bench: empty grid, method list or repetitions");
    for (int m : ms) {
      if (m < 2) throw Error(ErrorKind::InvalidInput, "bench: m >= 2 required");
      if (family == Family::Mignotte && m < 3) throw Error(ErrorKind::InvalidInput, "mignotte: m >= 3 required");
    }
    for (int n : ns) {
      if (n < 1) throw Error(ErrorKind::InvalidInput, "bench: n >= 1 required");
      if (family == Family::Mignotte && n < 3) throw Error(ErrorKind::InvalidInput, "mignotte: n >= 3 required");
    }
  }
};

struct BenchRow {
  Family family;
  int m, n;
  Method method;
  int runs = 0, timeouts = 0;
  double mean_seconds = 0, median_seconds = 0;
  long roots = -1;  // of the first completed run
  bool agree = true;
  IsolationStats stats;  // of the first completed run

  std::string status() const {
    if (!agree) return "mismatch";
    if (timeouts == runs) return "timeout";
    if (timeouts > 0) return "partial";
    return "ok";
  }
};

struct BenchResult {
  std::vector<BenchRow> rows;
  int disagreements = 0;
};

inline BenchResult run_benchmark(const BenchSpec& spec) {
  spec.validate();
  BenchResult out;
  for (int m : spec.ms)
    for (int n : spec.ns) {
      std::vector<BenchRow> group;
      std::vector<std::vector<double>> times(spec.methods.size());
      for (Method meth : spec.methods) {
        BenchRow r;
        r.family = spec.family;
        r.m = m;
        r.n = n;
        r.method = meth;
        group.push_back(r);
      }
      for (int rep = 0; rep < spec.repetitions; ++rep) {
        AlgPoly B = generate(spec.family, m, n, spec.coeff_bits, spec.seed + static_cast<std::uint64_t>(rep));
        long count = -1;
        for (std::size_t j = 0; j < spec.methods.size(); ++j) {
          BenchRow& row = group[j];
          ++row.runs;
          SolveOptions opt;
          opt.deadline = Deadline::after(spec.timeout_seconds);
          detail::Stopwatch sw;
          try {
            IsolationResult res = isolate_roots(B, spec.methods[j], opt);
            times[j].push_back(sw.lap());
            long c = static_cast<long>(res.roots.size());
            if (row.roots < 0) {
              row.roots = c;
              row.stats = res.stats;
            }
            if (count >= 0 && c != count) {
              for (auto& g : group) g.agree = false;
              ++out.disagreements;
            }
            count = c;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::Timeout) throw;
            ++row.timeouts;
          }
        }
      }
      for (std::size_t j = 0; j < group.size(); ++j) {
        auto& t = times[j];
        if (t.empty()) continue;
        double s = 0;
        for (double x : t) s += x;
        group[j].mean_seconds = s / static_cast<double>(t.size());
        std::sort(t.begin(), t.end());
        group[j].median_seconds =
            t.size() % 2 ? t[t.size() / 2] : (t[t.size() / 2 - 1] + t[t.size() / 2]) / 2;
      }
      for (auto& g : group) out.rows.push_back(std::move(g));
    }
  return out;
}

/// Deterministic table: counts and solver statistics, no timings.
inline std::string bench_csv(const BenchResult& r) {
  std::ostringstream os;
  os << "family,m,n,method,runs,roots,status,nodes,max_depth,max_precision,restarts\n";
  for (const auto& x : r.rows)
    os << to_string(x.family) << ',' << x.m << ',' << x.n << ',' << to_string(x.method) << ',' << x.runs << ','
       << x.roots << ',' << x.status() << ',' << x.stats.nodes << ',' << x.stats.max_depth << ','
       << x.stats.max_precision << ',' << x.stats.restarts << '\n';
  return os.str();
}

/// Timing table: one row per (n, method), one column per m; cells hold
/// mean/median seconds, or "timeout".
inline std::string bench_timing_table(const BenchResult& r) {
  std::vector<int> ms, ns;
  std::vector<Method> meths;
  std::map<std::tuple<int, int, int>, const BenchRow*> cell;
  for (const auto& x : r.rows) {
    if (std::find(ms.begin(), ms.end(), x.m) == ms.end()) ms.push_back(x.m);
    if (std::find(ns.begin(), ns.end(), x.n) == ns.end()) ns.push_back(x.n);
    if (std::find(meths.begin(), meths.end(), x.method) == meths.end()) meths.push_back(x.method);
    cell[{x.n, x.m, static_cast<int>(x.method)}] = &x;
  }
  std::ostringstream os;
  os << "n,method";
  for (int m : ms) os << ",m=" << m << " mean,m=" << m << " median";
  os << '\n';
  for (int n : ns)
    for (Method me : meths) {
      os << n << ',' << to_string(me);
      for (int m : ms) {
        auto it = cell.find({n, m, static_cast<int>(me)});
        if (it == cell.end()) {
          os << ",,";
        } else if (it->second->timeouts == it->second->runs) {
          os << ",timeout,timeout";
        } else {
          os << ',' << it->second->mean_seconds << ',' << it->second->median_seconds;
        }
      }
      os << '\n';
    }
  return os.str();
}

}  // namespace algroot
