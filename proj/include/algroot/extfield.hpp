#pragma once

// Polynomials B_alpha in Z(alpha)[y] stored as b_i(x) with deg b_i < deg A.

#include <vector>

#include "algroot/algebraic.hpp"

namespace algroot {

namespace detail {

/// Remainder of f by g over Q.
inline RatPoly rat_remainder(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::logic_error("rat_remainder: division by zero");
  std::vector<Rational> r(f.coeffs());
  const int dg = g.degree();
  for (int d = static_cast<int>(r.size()) - 1; d >= dg; --d) {
    if (r[d] == 0) continue;
    Rational c = r[d] / g.lc();
    for (int j = 0; j <= dg; ++j) r[d - dg + j] -= c * g[j];
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(std::max(dg, 0))));
  return RatPoly(std::move(r));
}

}  // namespace detail

/// Replaces every b_i by its remainder modulo A over Q, all scaled by one
/// common positive integer (the lcm of the denominators).
inline std::vector<IntPoly> reduce_mod_A(const std::vector<IntPoly>& raw, const IntPoly& A) {
  if (A.degree() < 1) throw Error(ErrorKind::InvalidInput, "reduce_mod_A: deg A < 1");
  const RatPoly a = to_ratpoly(A);
  std::vector<RatPoly> rem;
  rem.reserve(raw.size());
  Integer l = 1;
  for (const auto& b : raw) {
    rem.push_back(b.degree() < A.degree() ? to_ratpoly(b) : detail::rat_remainder(to_ratpoly(b), a));
    for (const auto& c : rem.back().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<IntPoly> out;
  out.reserve(raw.size());
  for (const auto& r : rem) {
    std::vector<Integer> v;
    for (const auto& c : r.coeffs()) v.push_back(Integer(c.get_num() * (l / c.get_den())));
    out.emplace_back(std::move(v));
  }
  return out;
}

enum class SquareFreeness { SquareFree, NotSquareFree, RequiresIrreducible };

inline const char* to_string(SquareFreeness s) {
  switch (s) {
    case SquareFreeness::SquareFree: return "true";
    case SquareFreeness::NotSquareFree: return "false";
    case SquareFreeness::RequiresIrreducible: return "RequiresIrreducible";
  }
  return "?";
}

class AlgPoly {
 public:
  /// Reduces the coefficients modulo A and checks b_n(alpha) != 0.
  static AlgPoly make(const RealAlgebraic& alpha, const std::vector<IntPoly>& raw) {
    if (raw.empty()) throw Error(ErrorKind::InvalidInput, "B has no coefficients");
    std::vector<IntPoly> b = reduce_mod_A(raw, alpha.poly());
    while (b.size() > 1 && b.back().is_zero()) b.pop_back();
    if (b.back().is_zero()) throw Error(ErrorKind::ZeroPolynomial, "B is zero");
    if (b.size() != raw.size() || alpha.sign_at(b.back()) == 0)
      throw Error(ErrorKind::LeadingCoefficientVanishes, "b_n(alpha) = 0");
    return AlgPoly(alpha, BiPoly(std::move(b)));
  }

  const RealAlgebraic& alpha() const { return alpha_; }
  const BiPoly& bipoly() const { return B_; }
  const IntPoly& coeff(int i) const { return B_[static_cast<std::size_t>(i)]; }
  int n() const { return B_.degree(); }
  int m() const { return alpha_.degree(); }
  /// Max bitsize of the integer coefficients c_ij.
  std::size_t sigma(SignBit s = SignBit::Included) const { return coeff_bitsize(B_, s); }
  /// Max degree in x of the b_i.
  int eta() const { return deg_x(B_); }

 private:
  AlgPoly(RealAlgebraic alpha, BiPoly B) : alpha_(std::move(alpha)), B_(std::move(B)) {}
  RealAlgebraic alpha_;
  BiPoly B_;
};

/// Square-freeness of B_alpha, decided by the discriminant res_y(B, dB/dy)
/// at alpha: it specializes correctly because b_n(alpha) != 0, so no field
/// structure on Q[x]/(A) is needed.
inline SquareFreeness is_square_free(const AlgPoly& B) {
  if (B.n() <= 1) return SquareFreeness::SquareFree;
  IntPoly D = resultant(B.bipoly(), derivative_y(B.bipoly()));
  return B.alpha().sign_at(D) != 0 ? SquareFreeness::SquareFree : SquareFreeness::NotSquareFree;
}

/// Sign of B_alpha(q).
inline int endpoint_sign(const AlgPoly& B, const Rational& q) {
  return B.alpha().sign_at(substitute_y(B.bipoly(), q));
}

namespace detail {

/// Precision for alpha such that the Horner evaluation of a coefficient is
/// accurate to L bits.
inline long alpha_precision(const AlgPoly& B, long L) {
  const IntPoly& A = B.alpha().poly();
  long cb = static_cast<long>(bitsize(ceil(cauchy_root_bound(A))));
  return L + static_cast<long>(B.sigma(SignBit::Excluded)) + ceil_lg(static_cast<long>(A.degree())) +
         (A.degree() - 1) * cb + 2;
}

inline DyadicInterval enclose(const IntPoly& b, const RealAlgebraic& alpha, long L, long& Lx) {
  if (b.degree() <= 0) return DyadicInterval(Dyadic(b.coeff(0)));
  while (true) {
    DyadicInterval X = alpha.approximate(Lx);
    DyadicInterval v = eval_interval(b, X, Lx + 2);
    if (width_at_most(v, L)) return v;
    Lx *= 2;
  }
}

}  // namespace detail

/// Dyadic enclosure of b_i(alpha) of width <= 2^-L.
inline DyadicInterval coeff_enclosure(const AlgPoly& B, int i, long L) {
  if (i < 0 || i > B.n()) throw Error(ErrorKind::InvalidInput, "coeff_enclosure: index out of range");
  long Lx = detail::alpha_precision(B, L);
  return detail::enclose(B.coeff(i), B.alpha(), L, Lx);
}

/// Enclosures of all b_i(alpha), each of width <= 2^-L.
inline std::vector<DyadicInterval> coeff_enclosures(const AlgPoly& B, long L) {
  long Lx = detail::alpha_precision(B, L);
  std::vector<DyadicInterval> out;
  out.reserve(static_cast<std::size_t>(B.n()) + 1);
  for (int i = 0; i <= B.n(); ++i) out.push_back(detail::enclose(B.coeff(i), B.alpha(), L, Lx));
  return out;
}

}  // namespace algroot
