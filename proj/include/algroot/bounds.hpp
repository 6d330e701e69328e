#pragma once

// Closed-form root bounds: magnitude, separation and aggregate separation
// for integer polynomials, for B_alpha (directly and through its resultant),
// for several extensions, and resultant size bounds. Log values are exact
// rationals; lg of an integer is its exact ceiling.

#include <string>
#include <utility>
#include <vector>

#include "algroot/extfield.hpp"

namespace algroot {

struct InstanceParams {
  long m = 1, n = 1, tau = 1, sigma = 1, eta = 0, ell = 1;

  void validate() const {
    if (m < 1 || n < 1 || tau < 1 || sigma < 1 || ell < 1 || eta < 0 || eta >= m)
      throw Error(ErrorKind::InvalidInput, "invalid instance parameters");
  }
};

/// Parameters of an instance; bitsizes include the sign bit.
inline InstanceParams params_of(const AlgPoly& B) {
  InstanceParams p;
  p.m = B.m();
  p.n = B.n();
  p.tau = static_cast<long>(coeff_bitsize(B.alpha().poly(), SignBit::Included));
  p.sigma = static_cast<long>(B.sigma(SignBit::Included));
  p.eta = B.eta();
  return p;
}

struct BoundReport {
  std::vector<std::pair<std::string, Rational>> entries;

  void set(const std::string& name, Rational v) {
    for (auto& [k, x] : entries)
      if (k == name) {
        x = std::move(v);
        return;
      }
    entries.emplace_back(name, std::move(v));
  }
  bool has(const std::string& name) const {
    for (const auto& [k, x] : entries)
      if (k == name) return true;
    return false;
  }
  const Rational& at(const std::string& name) const {
    for (const auto& [k, x] : entries)
      if (k == name) return x;
    throw Error(ErrorKind::InvalidInput, "no bound named " + name);
  }
};

/// ceil(lg x) for x >= 1.
inline long clg(long x) { return ceil_lg(x); }

namespace detail {

inline long floor_lg_rational(const Rational& x) {
  long e = static_cast<long>(bitsize(x.get_num())) - static_cast<long>(bitsize(x.get_den()));
  // 2^(e-1) < x < 2^(e+1)
  if (x >= pow2_rational(e)) return e;
  return e - 1;
}

/// Bounds on lg(x), x > 0, accurate to about 2^-frac_bits.
inline Rational lg_bound(const Rational& x, bool upper, int frac_bits = 24) {
  if (sgn(x) <= 0) throw Error(ErrorKind::InvalidInput, "lg of a non-positive number");
  const long e = floor_lg_rational(x);
  const long W = 64;
  Rational y = x / pow2_rational(e);  // [1, 2)
  Integer scale = pow2(W);
  Integer ym = upper ? ceil(y * Rational(scale)) : floor(y * Rational(scale));
  Rational frac = 0;
  for (int j = 1; j <= frac_bits; ++j) {
    Integer sq = ym * ym;
    ym = upper ? shift_right_ceil(sq, W) : shift_left(sq, -W);
    if (ym >= 2 * scale) {
      frac += pow2_rational(-j);
      ym = upper ? shift_right_ceil(ym, 1) : shift_left(ym, -1);
    }
  }
  if (upper) frac += pow2_rational(-frac_bits);
  return Rational(e) + frac;
}

}  // namespace detail

inline Rational lg_upper(const Rational& x) { return detail::lg_bound(x, true); }
inline Rational lg_lower(const Rational& x) { return detail::lg_bound(x, false); }

/// Magnitude, separation and aggregate separation bounds of an integer
/// polynomial, in the (degree, bitsize) form and the discriminant form.
inline BoundReport univariate_bounds(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "univariate_bounds of 0");
  if (f.degree() < 1) throw Error(ErrorKind::InvalidInput, "univariate_bounds: degree < 1");
  BoundReport r;
  const long p = f.degree();
  const long tau = static_cast<long>(coeff_bitsize(f, SignBit::Excluded));
  r.set("root_magnitude_log", Rational(tau + 1));
  r.set("root_magnitude_log_infnorm", lg_upper(Rational(2 * max_abs_coeff(f))));
  if (p < 2) return r;
  r.set("neg_log_sep", Rational(2 * p * clg(p) + p * tau));
  r.set("neg_log_sigma", Rational(3 * p * p + 3 * p * tau + 4 * p * clg(p)));

  IntPoly fr = square_free_part(f);
  if (fr.degree() >= 2) {
    Integer disc = abs(exact_div(resultant(fr, fr.derivative()), fr.lc()));
    Rational lg_norm = lg_upper(Rational(norm2_squared(fr))) / 2;
    Rational lgp = lg_upper(Rational(p));
    r.set("neg_log_sep_disc", -lg_lower(Rational(3 * disc)) / 2 + Rational(p + 2, 2) * lgp +
                                  Rational(p - 1) * lg_norm);
    r.set("neg_log_sigma_disc", -lg_lower(Rational(disc)) / 2 + Rational(p * p - p - 2, 2) +
                                    Rational(2 * p - 1) * lg_norm);
  }
  return r;
}

/// -lg of the separation of C (the resultant route).
inline Integer indirect_neg_log_sep(const InstanceParams& q) {
  const Integer m = q.m, ts = q.tau + q.sigma;
  return Integer(m * m * q.n * (ts + 4 * clg(4 * q.m * q.n)));
}

/// -lg of the separation of B_alpha.
inline Integer direct_neg_log_sep(const InstanceParams& q) {
  const Integer m = q.m;
  return Integer(12 * m * q.n * (q.sigma * clg(q.m * q.n) + q.tau + 5 * clg(q.m)));
}

/// Bounds on the polynomial C whose roots contain those of B_alpha, obtained
/// through the resultant.
inline BoundReport indirect_bounds(const InstanceParams& q) {
  q.validate();
  const Integer m = q.m, n = q.n, ts = q.tau + q.sigma;
  const Integer l = clg(4 * q.m * q.n);
  BoundReport r;
  r.set("resultant_degree", Rational(m * n));
  r.set("resultant_bitsize", Rational(m * ts + 3 * m * l));
  r.set("root_magnitude_log", Rational(m * ts + 2 * m * l));
  r.set("neg_log_sep", Rational(indirect_neg_log_sep(q)));
  r.set("neg_log_sigma", Rational(3 * m * m * n * (n + ts + 6 * l)));
  return r;
}

/// Bounds on the roots of B_alpha itself.
inline BoundReport direct_bounds(const InstanceParams& q) {
  q.validate();
  const Integer m = q.m, n = q.n, tau = q.tau, sigma = q.sigma;
  const Integer lm = clg(q.m), lmn = clg(q.m * q.n), ln = clg(q.n);
  BoundReport r;
  r.set("root_magnitude_log", Rational(m * (tau + sigma + 5 * lm)));
  r.set("neg_log_sep", Rational(direct_neg_log_sep(q)));
  r.set("neg_log_sigma", Rational(14 * m * n * (sigma * lmn + tau + 5 * lm)));
  r.set("tau_B", Rational(2 * m * sigma + 2 * m * tau + 6 * m * lm));
  r.set("Sigma_B", Rational(14 * m * n * (tau + sigma * lmn) + n * ln));
  return r;
}

inline Integer ipow(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

/// Bounds for a polynomial over a tower of ell extensions of degree m each.
inline BoundReport multi_ext_bounds(const InstanceParams& q) {
  q.validate();
  const Integer n = q.n, tau = q.tau, sigma = q.sigma, ell = q.ell;
  const Integer ml = ipow(Integer(q.m), q.ell), m2l = ml * ml;
  const Integer lg = clg(q.m * q.n * q.ell);
  BoundReport r;
  r.set("resultant_degree", Rational(n * ml));
  r.set("resultant_bitsize", Rational(ml * (tau * ell * ell + sigma + 3 * ell * lg)));
  r.set("root_magnitude_log", Rational(ml * (ell * ell * tau + sigma + 2 * ell * lg)));
  r.set("neg_log_sep", Rational(m2l * n * (ell * ell * tau + sigma + 4 * ell * lg)));
  r.set("neg_log_sigma", Rational(m2l * n * (ell * ell * tau + sigma + n + 6 * ell * lg)));
  return r;
}

struct ResultantSize {
  long degree;
  Integer bitsize;
};

/// Degree and bitsize bounds of res_x(B, A), deg A = m, deg_x B = eta,
/// deg_y B = n, bitsizes sigma (B) and tau (A).
inline ResultantSize resultant_size_bound(long m, long eta, long n, long sigma, long tau) {
  if (m < 1 || eta < 0 || n < 0) throw Error(ErrorKind::InvalidInput, "invalid resultant parameters");
  Integer b = Integer(m) * sigma + Integer(eta) * tau + Integer(m) * clg(n + 1) +
              Integer(m + eta) * (m + eta >= 1 ? clg(m + eta) : 0);
  return {m * n, b};
}

/// Everything known for a concrete instance.
inline BoundReport instance_bounds(const AlgPoly& B) {
  InstanceParams p = params_of(B);
  BoundReport r;
  for (const auto& [k, v] : direct_bounds(p).entries) r.set("direct." + k, v);
  for (const auto& [k, v] : indirect_bounds(p).entries) r.set("indirect." + k, v);
  auto rs = resultant_size_bound(p.m, p.eta, p.n, p.sigma, p.tau);
  r.set("resultant.degree", Rational(rs.degree));
  r.set("resultant.bitsize", Rational(rs.bitsize));
  return r;
}

}  // namespace algroot
