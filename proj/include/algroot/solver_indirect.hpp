#pragma once

// Root isolation for B_alpha through the integer polynomial
// R(y) = res_x(B(x, y), A(x)): isolate the real roots of its square-free part
// and keep the candidates across which B_alpha changes sign.

#include <chrono>
#include <utility>
#include <vector>

#include "algroot/extfield.hpp"

namespace algroot {

struct SolveOptions {
  Deadline deadline;
  /// Check is_square_free(B) before solving.
  bool verify_square_free = true;
};

struct IndirectTrace {
  IntPoly R;
  IntPoly C;
  std::vector<SquareFreeFactor> factors;  // Yun factorization of R
  IsolationResult candidates;
  std::vector<bool> kept;
  std::vector<std::pair<int, int>> endpoint_signs;  // (lo, hi); exact roots repeat the value
  double seconds_resultant = 0, seconds_squarefree = 0, seconds_isolate = 0, seconds_filter = 0;
};

/// R(y) = res_x(B(x, y), A(x)).
inline IntPoly compute_R(const AlgPoly& B) {
  IntPoly R = resultant_bivariate(B.bipoly(), B.alpha().poly());
  if (R.is_zero()) throw Error(ErrorKind::ResultantZero, "B(x, y) and A(x) share a factor");
  return R;
}

namespace detail {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - t_).count();
    t_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

inline void require_square_free(const AlgPoly& B, const SolveOptions& opt) {
  if (opt.verify_square_free && is_square_free(B) == SquareFreeness::NotSquareFree)
    throw Error(ErrorKind::NotSquareFree, "B_alpha is not square-free");
}

}  // namespace detail

inline std::pair<IsolationResult, IndirectTrace> indirect_isolate(const AlgPoly& B,
                                                                  const SolveOptions& opt = {}) {
  detail::require_square_free(B, opt);
  IndirectTrace tr;
  detail::Stopwatch sw;
  tr.R = compute_R(B);
  tr.seconds_resultant = sw.lap();
  opt.deadline.check();

  if (tr.R.degree() >= 1) {
    auto sqf = yun_squarefree_factorization(tr.R);
    tr.factors = sqf.factors;
    tr.C = IntPoly::constant(Integer(1));
    for (const auto& f : sqf.factors) tr.C *= f.factor;
  } else {
    tr.C = IntPoly::constant(Integer(1));
  }
  tr.seconds_squarefree = sw.lap();

  IsolationResult out;
  out.stats.engine = "resultant+descartes-bisection";
  if (tr.C.degree() >= 1) tr.candidates = isolate_squarefree(tr.C, opt.deadline);
  tr.seconds_isolate = sw.lap();

  for (const auto& cand : tr.candidates.roots) {
    opt.deadline.check();
    if (cand.is_exact()) {
      int s = endpoint_sign(B, cand.lo);
      tr.endpoint_signs.emplace_back(s, s);
      tr.kept.push_back(s == 0);
      if (s == 0) out.roots.push_back(RootInterval::exact(cand.lo));
      continue;
    }
    // Candidate endpoints are never roots of C, hence never roots of B_alpha.
    int slo = endpoint_sign(B, cand.lo), shi = endpoint_sign(B, cand.hi);
    tr.endpoint_signs.emplace_back(slo, shi);
    bool keep = slo * shi < 0;
    tr.kept.push_back(keep);
    if (keep) out.roots.push_back(RootInterval::open(cand.lo, cand.hi));
  }
  tr.seconds_filter = sw.lap();
  out.stats.nodes = tr.candidates.stats.nodes;
  out.stats.max_depth = tr.candidates.stats.max_depth;
  out.stats.max_endpoint_bits = tr.candidates.stats.max_endpoint_bits;
  return {std::move(out), std::move(tr)};
}

/// Shrinks an isolating interval of a root of B_alpha to width <= 2^-L by
/// bisection with exact endpoint signs.
inline RootInterval refine_root(const AlgPoly& B, const RootInterval& r, long L,
                                const Deadline& deadline = {}) {
  if (r.is_exact()) return r;
  Rational lo = r.lo, hi = r.hi;
  int slo = endpoint_sign(B, lo);
  if (slo == 0) return RootInterval::exact(lo, r.multiplicity);
  const Rational target = pow2_rational(-L);
  while (hi - lo > target) {
    deadline.check();
    Rational m = (lo + hi) / 2;
    int s = endpoint_sign(B, m);
    if (s == 0) return RootInterval::exact(m, r.multiplicity);
    if (s == slo)
      lo = m;
    else
      hi = m;
  }
  return RootInterval::open(lo, hi, r.multiplicity);
}

}  // namespace algroot
