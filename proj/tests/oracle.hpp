#pragma once

// Brute-force reference values computed from explicit binomial sums.
// Nothing here calls into the recurrences used by the library.

#include <vector>

#include "sdcodes/exact.hpp"
#include "sdcodes/gleason.hpp"

namespace oracle {

/// Canonical n/d; mpq_class(n, d) alone does not reduce.
inline sdcodes::Rational q(long n, long d) {
  sdcodes::Rational r(n, d);
  r.canonicalize();
  return r;
}

using sdcodes::BigInt;
using sdcodes::binomial;
using sdcodes::FamilyParams;
using sdcodes::Rational;

/// alpha'_{i,j}: coefficient of z^i in (1+z)^(h-4j) z^j (1-z)^(2j).
inline Rational alpha_prime(long i, long j, const FamilyParams& p) {
  BigInt sum = 0;
  for (long k = 0; k <= 2 * j; ++k) {
    const BigInt term = binomial(p.half() - 4 * j, i - j - k) * binomial(2 * j, k);
    sum += (k % 2 == 0) ? term : BigInt(-term);
  }
  return Rational(sum);
}

/// beta'_{i,j}: coefficient of y^(4i+r) in (-1)^j 2^(h-6j) y^(h-4j) (1-y^4)^(2j).
inline Rational beta_prime(long i, long j, const FamilyParams& p) {
  const long t = i - (p.top() - j);
  if (t < 0 || t > 2 * j) return 0;
  Rational scale = 1;
  const long e = p.half() - 6 * j;
  if (e >= 0) {
    scale = Rational(BigInt(1) << static_cast<mp_bitcnt_t>(e));
  } else {
    scale = Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(-e));
  }
  Rational v = scale * Rational(binomial(2 * j, t));
  if ((j + t) % 2 != 0) v = -v;
  return v;
}

inline sdcodes::RationalMatrix alpha_prime_matrix(const FamilyParams& p) {
  const std::size_t c = p.c_count();
  sdcodes::RationalMatrix m(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = alpha_prime(long(i), long(j), p);
  return m;
}

inline sdcodes::RationalMatrix beta_prime_matrix(const FamilyParams& p) {
  const std::size_t c = p.c_count();
  sdcodes::RationalMatrix m(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = beta_prime(long(i), long(j), p);
  return m;
}

/// Full a and b vectors for numeric Gleason coefficients.
inline void expand(const std::vector<Rational>& c, const FamilyParams& p, std::vector<Rational>& a,
                   std::vector<Rational>& b) {
  a.assign(p.a_count(), 0);
  b.assign(p.b_count(), 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c[j] * alpha_prime(long(i), long(j), p);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += c[j] * beta_prime(long(i), long(j), p);
  }
}

}  // namespace oracle
