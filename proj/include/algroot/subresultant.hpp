#pragma once

// Subresultant machinery: signed remainder sequences, resultants, gcds and
// square-free decomposition over Z[x] and Z[x][y].

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "algroot/polynomial.hpp"

namespace algroot {

// ---------------------------------------------------------------------------
// Signed subresultant remainder sequence.
//
// T_0 = f, T_1 = g and T_k = -prem(T_{k-2}, T_{k-1}) / kappa_k where kappa_k is
// the Brown-Collins subresultant divisor, so every division is exact in R.
// Over a field the true Sturm sequence U_k = -rem(U_{k-2}, U_{k-1}) satisfies
//
//   U_k = (positive) * s_k * T_k,   s_k = prod_j sign(lc T_j)^(e_kj),
//
// where the exponent parities e_kj are tracked symbolically. In the normal
// case (every degree drop is one) all parities are even. Signs of leading
// coefficients known from R alone (integers, constant polynomials) are folded
// into the stored elements; the rest are kept as sign witnesses to be
// evaluated at the specialization (e.g. x = alpha).

template <class R>
struct SignedRemainderSeq {
  std::vector<Poly<R>> elements;
  /// For each element, coefficients whose signs at a specialization multiply
  /// into the Sturm sign of that element. Empty means the stored sign is
  /// already the Sturm sign.
  std::vector<std::vector<R>> sign_witnesses;
  /// Leading coefficients whose non-vanishing is required for the sequence to
  /// specialize to a remainder sequence (one per element).
  std::vector<R> leading;
  /// Degree drop from the previous element exceeds one.
  std::vector<bool> defective;

  std::size_t size() const { return elements.size(); }
  const Poly<R>& last() const { return elements.back(); }
};

namespace detail {

inline int static_sign(const Integer& a) { return sgn(a); }
inline int static_sign(const Rational& a) { return sgn(a); }
/// Sign of a polynomial that is a nonzero constant; 0 when not determined.
template <class S>
int static_sign(const Poly<S>& p) {
  return p.degree() == 0 ? static_sign(p[0]) : 0;
}

/// Exponent vector over element indices: prod_j lc(T_j)^(e_j).
using LcExponents = std::vector<long>;

inline void add_scaled(LcExponents& acc, const LcExponents& v, long k) {
  if (acc.size() < v.size()) acc.resize(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += k * v[i];
}

}  // namespace detail

template <class R>
SignedRemainderSeq<R> signed_remainder_seq(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "signed_remainder_seq: f = 0");
  if (g.degree() > f.degree())
    throw Error(ErrorKind::InvalidInput, "signed_remainder_seq: deg g > deg f");
  std::vector<Poly<R>> T{f};
  std::vector<bool> defective{false};
  // parity[k]: exponents of lc(T_j) in s_k.
  std::vector<detail::LcExponents> parity{{}};
  if (!g.is_zero()) {
    T.push_back(g);
    defective.push_back(f.degree() - g.degree() > 1);
    parity.push_back({});
  }
  if (T.size() == 2) {
    R gval = RingOne<R>::get(), hval = RingOne<R>::get();
    detail::LcExponents gexp, hexp;  // symbolic g and h
    while (true) {
      const std::size_t k = T.size();
      const Poly<R>& A = T[k - 2];
      const Poly<R>& B = T[k - 1];
      if (B.degree() == 0) break;
      const long delta = A.degree() - B.degree();
      Poly<R> rem = prem(A, B);
      if (rem.is_zero()) break;
      R kappa = gval * power(hval, static_cast<unsigned long>(delta));
      Poly<R> next = -exact_div(rem, kappa);

      // s_k = s_{k-2} * sign(kappa) * sign(lc T_{k-1})^(delta+1)
      detail::LcExponents e = parity[k - 2];
      detail::add_scaled(e, gexp, 1);
      detail::add_scaled(e, hexp, delta);
      if (e.size() < k) e.resize(k, 0);
      e[k - 1] += delta + 1;

      // Brown-Collins update: g = lc(B), h = h^(1-delta) g^delta.
      gval = B.lc();
      gexp.assign(k, 0);
      gexp[k - 1] = 1;
      if (delta == 0) {
        // h unchanged
      } else if (delta == 1) {
        hval = gval;
        hexp = gexp;
      } else {
        hval = exact_div(power(gval, static_cast<unsigned long>(delta)),
                         power(hval, static_cast<unsigned long>(delta - 1)));
        detail::LcExponents nh;
        detail::add_scaled(nh, gexp, delta);
        detail::add_scaled(nh, hexp, -(delta - 1));
        hexp = std::move(nh);
      }

      defective.push_back(B.degree() - next.degree() > 1);
      T.push_back(std::move(next));
      parity.push_back(std::move(e));
    }
  }

  SignedRemainderSeq<R> out;
  out.defective = std::move(defective);
  std::vector<int> fold(T.size(), 1);
  out.sign_witnesses.resize(T.size());
  for (std::size_t k = 0; k < T.size(); ++k) {
    const auto& e = parity[k];
    for (std::size_t j = 0; j < e.size(); ++j) {
      if ((e[j] & 1) == 0) continue;
      int s = detail::static_sign(T[j].lc());
      if (s != 0)
        fold[k] *= s;
      else
        out.sign_witnesses[k].push_back(T[j].lc());
    }
  }
  for (std::size_t k = 0; k < T.size(); ++k) {
    out.leading.push_back(T[k].lc());
    out.elements.push_back(fold[k] < 0 ? -T[k] : T[k]);
  }
  return out;
}

/// Sturm signs s_k of each element at a specialization, given the sign of a
/// coefficient there. Returns an empty vector if some leading coefficient
/// vanishes (the sequence does not specialize).
template <class R, class SignFn>
std::vector<int> sturm_signs(const SignedRemainderSeq<R>& S, SignFn&& sign_of) {
  std::vector<int> s(S.size(), 1);
  for (const auto& l : S.leading)
    if (sign_of(l) == 0) return {};
  for (std::size_t k = 0; k < S.size(); ++k)
    for (const auto& w : S.sign_witnesses[k]) s[k] *= sign_of(w);
  return s;
}

/// Sign variations of a sign sequence, zeros skipped.
inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

enum class Infinity { Minus, Plus };

/// Each element with y = q substituted and denominators cleared by the
/// positive factor den(q)^deg_y: integer polynomials in x.
inline std::vector<IntPoly> eval_seq_at_rational(const SignedRemainderSeq<IntPoly>& S,
                                                 const Rational& q) {
  std::vector<IntPoly> out;
  out.reserve(S.size());
  for (const auto& e : S.elements) out.push_back(substitute_y(e, q));
  return out;
}

/// Polynomials in x whose signs are the signs of the elements at y = +-inf.
inline std::vector<IntPoly> eval_seq_at_rational(const SignedRemainderSeq<IntPoly>& S,
                                                 Infinity at) {
  std::vector<IntPoly> out;
  out.reserve(S.size());
  for (const auto& e : S.elements) {
    bool flip = at == Infinity::Minus && (e.degree() % 2 != 0);
    out.push_back(flip ? -e.lc() : e.lc());
  }
  return out;
}

/// Classical Sturm sequence of integer polynomials (f, g): every sign is
/// already folded in.
inline SignedRemainderSeq<Integer> sturm_sequence(const IntPoly& f, const IntPoly& g) {
  return signed_remainder_seq(f, g);
}

inline std::vector<int> sturm_signs_at(const SignedRemainderSeq<Integer>& S, const Rational& q) {
  std::vector<int> out;
  out.reserve(S.size());
  for (const auto& e : S.elements) out.push_back(sign_at_rational(e, q));
  return out;
}

inline std::vector<int> sturm_signs_at(const SignedRemainderSeq<Integer>& S, Infinity at) {
  std::vector<int> out;
  out.reserve(S.size());
  for (const auto& e : S.elements) {
    int s = sgn(e.lc());
    if (at == Infinity::Minus && e.degree() % 2 != 0) s = -s;
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resultants.

/// res(A, B): the determinant of the Sylvester matrix of A and B, computed by
/// the subresultant algorithm with exact divisions in R.
template <class R>
R resultant(Poly<R> A, Poly<R> B) {
  if (A.is_zero() || B.is_zero()) return R();
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 != 0) && (B.degree() % 2 != 0)) s = -s;
  }
  if (B.degree() == 0) {
    R r = power(B.lc(), static_cast<unsigned long>(A.degree()));
    return s < 0 ? R(-r) : r;
  }
  R g = RingOne<R>::get(), h = RingOne<R>::get();
  while (true) {
    const long delta = A.degree() - B.degree();
    if ((A.degree() % 2 != 0) && (B.degree() % 2 != 0)) s = -s;
    Poly<R> rem = prem(A, B);
    A = std::move(B);
    if (rem.is_zero()) return R();
    B = exact_div(rem, R(g * power(h, static_cast<unsigned long>(delta))));
    g = A.lc();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_div(power(g, static_cast<unsigned long>(delta)),
                    power(h, static_cast<unsigned long>(delta - 1)));
    if (B.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(A.degree());
      R r = exact_div(power(B.lc(), da), power(h, da - 1));
      return s < 0 ? R(-r) : r;
    }
  }
}

/// res_x(B(x, y), A(x)) as a polynomial in y; B is indexed by powers of y.
/// With deg_x B = 0 the Sylvester convention gives B^deg(A).
inline IntPoly resultant_bivariate(const BiPoly& B, const IntPoly& A) {
  if (A.is_zero() || B.is_zero())
    throw Error(ErrorKind::ZeroPolynomial, "resultant_bivariate: zero input");
  if (A.degree() < 1) throw Error(ErrorKind::InvalidInput, "resultant_bivariate: deg A < 1");
  return resultant(swap_variables(B), lift_constant_x(A));
}

// ---------------------------------------------------------------------------
// gcd and square-free machinery over Z[x].

namespace detail {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::vector<u64> reduce_mod(const IntPoly& f, u64 p) {
  std::vector<u64> v(f.size());
  Integer pz;
  mpz_set_ui(pz.get_mpz_t(), p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pz.get_mpz_t());
    v[i] = mpz_get_ui(r.get_mpz_t());
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}
/// Degree of gcd(a, b) over Z/p (a, b nonzero).
inline int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 c = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[off + j] = (a[off + j] + p - mulmod(c, b[j], p)) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace detail

/// True if gcd(f, g) = 1 is certified by a gcd computation modulo a prime not
/// dividing either leading coefficient. False means "not certified".
inline bool certified_coprime(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  static constexpr detail::u64 primes[] = {2305843009213693951ull, 4611686018427387847ull,
                                           1000000000000000003ull};
  for (auto p : primes) {
    auto a = detail::reduce_mod(f, p), b = detail::reduce_mod(g, p);
    if (static_cast<int>(a.size()) - 1 != f.degree() ||
        static_cast<int>(b.size()) - 1 != g.degree())
      continue;
    return detail::gcd_degree_mod(std::move(a), std::move(b), p) == 0;
  }
  return false;
}

/// Primitive gcd with positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(Integer(1));
  if (certified_coprime(a, b)) return IntPoly::constant(Integer(1));
  IntPoly f = primitive_part(a), g = primitive_part(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  auto S = signed_remainder_seq(f, g);
  IntPoly last = S.last();
  if (last.degree() == 0) return IntPoly::constant(Integer(1));
  return primitive_part(last);
}

/// Primitive square-free part f / gcd(f, f') with positive leading coefficient.
inline IntPoly square_free_part(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square_free_part of 0");
  if (f.degree() == 0) return IntPoly::constant(Integer(1));
  IntPoly d = f.derivative();
  if (certified_coprime(f, d)) return primitive_part(f);
  IntPoly g = gcd(f, d);
  return primitive_part(exact_div(primitive_part(f), g));
}

struct SquareFreeFactor {
  IntPoly factor;
  int multiplicity;
};

struct SquareFreeFactorization {
  /// Signed integer content: f = content * prod factor^multiplicity.
  Integer content;
  std::vector<SquareFreeFactor> factors;
};

/// Yun's algorithm. Factors are primitive, square-free, pairwise coprime with
/// positive leading coefficients; multiplicities increase strictly.
inline SquareFreeFactorization yun_squarefree_factorization(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free factorization of 0");
  SquareFreeFactorization out;
  Integer c = content(f);
  if (sgn(f.lc()) < 0) c = -c;
  out.content = c;
  if (f.degree() == 0) return out;
  IntPoly p = exact_div(f, c);
  IntPoly dp = p.derivative();
  IntPoly a0 = gcd(p, dp);
  IntPoly b = exact_div(p, a0);
  IntPoly cc = exact_div(dp, a0);
  IntPoly d = cc - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    b = exact_div(b, a);
    cc = exact_div(d, a);
    d = cc - b.derivative();
  }
  return out;
}

}  // namespace algroot
