#include "sdcodes/gleason.hpp"

#include <set>

#include "sdcodes/error.hpp"

namespace sdcodes {

namespace {

Rational pow2(long e) {
  BigInt p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return make_rational(1, p);
}

void check_index(long j, const FamilyParams& params, const char* what) {
  if (j < 0 || j > params.top())
    fail(ErrorKind::InvalidArgument, std::string(what) + ": index " + std::to_string(j) +
                                         " outside 0.." + std::to_string(params.top()));
}

// Generalized binomial coefficient C(top, k) for any integer top and k >= 0,
// rewritten so that the evaluated binomial always has a nonnegative top.
BigInt signed_binomial(long top, long k) {
  if (k < 0) return 0;
  if (top >= 0) return binomial(top, k);
  BigInt v = binomial(k - top - 1, k);
  return (k % 2 == 0) ? v : BigInt(-v);
}

}  // namespace

// ------------------------------------------------------------ FamilyParams

FamilyParams::FamilyParams(long m, int l, int r) : m_(m), l_(l), r_(r) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "FamilyParams: m must be nonnegative");
  if (l < 0 || l > 2) fail(ErrorKind::InvalidArgument, "FamilyParams: l must be in {0,1,2}");
  if (r < 0 || r > 3) fail(ErrorKind::InvalidArgument, "FamilyParams: r must be in {0,1,2,3}");
  if (n() <= 0) fail(ErrorKind::InvalidArgument, "FamilyParams: length must be positive");
}

FamilyParams FamilyParams::from_length(long n) {
  if (n <= 0 || n % 2 != 0)
    fail(ErrorKind::InvalidArgument, "length must be even and positive, got " + std::to_string(n));
  const long half = n / 2;
  const int r = static_cast<int>(half % 4);
  const int l = static_cast<int>(((half - r) / 4) % 3);
  const long m = (half - r - 4 * l) / 12;
  return FamilyParams(m, l, r);
}

// ---------------------------------------------------- ParametricEnumerator

std::vector<std::string> ParametricEnumerator::parameters() const {
  std::set<std::string> names;
  for (const auto* v : {&a, &b})
    for (const auto& f : *v)
      for (const auto& [name, c] : f.terms()) names.insert(name);
  return {names.begin(), names.end()};
}

ParametricEnumerator ParametricEnumerator::substitute(const std::map<std::string, Rational>& values) const {
  ParametricEnumerator out{params, {}, {}};
  out.a.reserve(a.size());
  out.b.reserve(b.size());
  for (const auto& f : a) out.a.push_back(f.substitute(values));
  for (const auto& f : b) out.b.push_back(f.substitute(values));
  return out;
}

// ------------------------------------------------------------ basis pieces

DensePoly code_basis_polynomial(long j, const FamilyParams& params) {
  check_index(j, params, "code_basis_polynomial");
  const long e = params.half() - 4 * j;
  std::vector<Rational> one_plus(static_cast<std::size_t>(e + 1));
  for (long i = 0; i <= e; ++i) one_plus[static_cast<std::size_t>(i)] = binomial(e, i);
  std::vector<Rational> tail(static_cast<std::size_t>(3 * j + 1));
  for (long t = 0; t <= 2 * j; ++t) {
    BigInt v = binomial(2 * j, t);
    tail[static_cast<std::size_t>(j + t)] = (t % 2 == 0) ? v : BigInt(-v);
  }
  return poly_product(DensePoly(std::move(one_plus)), DensePoly(std::move(tail)));
}

std::vector<Rational> shadow_basis_vector(long j, const FamilyParams& params) {
  check_index(j, params, "shadow_basis_vector");
  std::vector<Rational> col(params.b_count());
  const Rational lead = pow2(params.half() - 6 * j) * ((j % 2 == 0) ? 1 : -1);
  const long first = params.top() - j;
  for (long t = 0; t <= 2 * j; ++t) {
    Rational v = lead * binomial(2 * j, t);
    col[static_cast<std::size_t>(first + t)] = (t % 2 == 0) ? v : Rational(-v);
  }
  return col;
}

RationalMatrix code_basis_rows(const FamilyParams& params, std::size_t last_row) {
  const std::size_t cols = params.c_count();
  const std::size_t len = last_row + 1;
  RationalMatrix out(len, cols);

  // Column j+1 = column j * z(1-z)^2 / (1+z)^4, as truncated power series.
  std::vector<BigInt> col(len);
  for (std::size_t i = 0; i < len; ++i) col[i] = binomial(params.half(), static_cast<long>(i));
  for (std::size_t j = 0; j < cols && j < len; ++j) {
    for (std::size_t i = 0; i < len; ++i) out.at(i, j) = col[i];
    if (j + 1 == cols) break;
    for (int pass = 0; pass < 4; ++pass)
      for (std::size_t i = 1; i < len; ++i) col[i] -= col[i - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = len - 1; i >= 1; --i) col[i] -= col[i - 1];
    for (std::size_t i = len - 1; i >= 1; --i) col[i] = col[i - 1];
    col[0] = 0;
  }
  return out;
}

RationalMatrix shadow_basis_rows(const FamilyParams& params, std::size_t last_row) {
  const long top = params.top();
  RationalMatrix out(last_row + 1, params.c_count());
  for (long j = 0; j <= top; ++j) {
    const Rational lead = pow2(params.half() - 6 * j) * ((j % 2 == 0) ? 1 : -1);
    for (long i = top - j; i <= static_cast<long>(last_row); ++i) {
      const long t = i - (top - j);
      if (t > 2 * j) break;
      Rational v = lead * binomial(2 * j, t);
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (t % 2 == 0) ? v : Rational(-v);
    }
  }
  return out;
}

TransformTables build_transform_tables(const FamilyParams& params) {
  const std::size_t size = params.c_count();
  const std::size_t top = size - 1;
  TransformTables t{params, code_basis_rows(params, top), RationalMatrix(size, size),
                    shadow_basis_rows(params, top), RationalMatrix(size, size)};

  // alpha' is unitriangular: forward substitution column by column.
  for (std::size_t j = 0; j < size; ++j) {
    t.alpha.at(j, j) = 1;
    for (std::size_t i = j + 1; i < size; ++i) {
      Rational acc = 0;
      for (std::size_t k = j; k < i; ++k) acc += t.alpha_prime.at(i, k) * t.alpha.at(k, j);
      t.alpha.at(i, j) = -acc;
    }
  }

  // beta' = L * P with P the reversal and L lower triangular (L[i][k] =
  // beta'[i][J-k]); hence beta = P * L^-1.
  auto lower = [&](std::size_t i, std::size_t k) -> const Rational& { return t.beta_prime.at(i, top - k); };
  RationalMatrix inv(size, size);
  for (std::size_t k = 0; k < size; ++k) {
    inv.at(k, k) = 1 / lower(k, k);
    for (std::size_t i = k + 1; i < size; ++i) {
      Rational acc = 0;
      for (std::size_t s = k; s < i; ++s) acc += lower(i, s) * inv.at(s, k);
      inv.at(i, k) = -acc / lower(i, i);
    }
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k) t.beta.at(i, k) = inv.at(top - i, k);
  return t;
}

// ------------------------------------------------------------ closed forms

Rational alpha_i0_closed(long i, long n) {
  const FamilyParams params = FamilyParams::from_length(n);
  if (i < 1 || i > params.top())
    fail(ErrorKind::InvalidArgument, "alpha_i0_closed: need 1 <= i <= " + std::to_string(params.top()));
  const long top = n / 2 + 1 - 6 * i;
  // For top < 0 the factor (1-y)^top is an infinite series; only t <= i-1
  // can reach the coefficient of y^(i-1).
  const long t_max = top >= 0 ? std::min(top, i - 1) : i - 1;
  BigInt sum = 0;
  for (long t = 0; t <= t_max; ++t) {
    if ((t + i) % 2 == 0) continue;
    BigInt term = signed_binomial(top, t) * binomial((n - 7 * i - t - 1) / 2, (i - t - 1) / 2);
    if (t % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return make_rational(-n, 2 * i) * sum;
}

Rational beta_closed(long i, long j, const FamilyParams& params) {
  const long top = params.top();
  if (i < 1 || j < 0 || i + j > top)
    fail(ErrorKind::InvalidArgument, "beta_closed: need 1 <= i, 0 <= j, i + j <= " + std::to_string(top));
  Rational v = pow2(6 * i - params.half()) * make_rational(top - j, i) * binomial(top + i - j - 1, top - i - j);
  return (i % 2 == 0) ? v : Rational(-v);
}

// ------------------------------------------------------------- conversions

GleasonCoefficients c_from_a(std::span<const AffineForm> a, const TransformTables& tables) {
  const std::size_t size = tables.params.c_count();
  if (a.size() < size) fail(ErrorKind::InvalidArgument, "c_from_a: need at least c_count entries of a");
  GleasonCoefficients out;
  out.c.resize(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (tables.alpha.at(i, j) != 0) out.c[i] += a[j] * tables.alpha.at(i, j);
  return out;
}

GleasonCoefficients c_from_b(std::span<const AffineForm> b, const TransformTables& tables) {
  const std::size_t size = tables.params.c_count();
  if (b.size() < size) fail(ErrorKind::InvalidArgument, "c_from_b: need at least c_count entries of b");
  GleasonCoefficients out;
  out.c.resize(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; i + j < size; ++j)
      if (tables.beta.at(i, j) != 0) out.c[i] += b[j] * tables.beta.at(i, j);
  return out;
}

void expand_numeric(std::span<const Rational> c, const FamilyParams& params, std::vector<Rational>& a,
                    std::vector<Rational>& b) {
  const std::size_t size = params.c_count();
  if (c.size() != size) fail(ErrorKind::InvalidArgument, "expand: c must have exactly c_count entries");
  const long top = params.top();

  BigInt den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> num(size);
  for (std::size_t j = 0; j < size; ++j) num[j] = c[j].get_num() * (den / c[j].get_den());

  // Code side: S_k = S_{k-1} (1+z)^4 + N_k z^k (1-z)^(2k), then W_C = (1+z)^r S_J.
  std::vector<BigInt> s{num[0]};
  std::vector<BigInt> y{1};
  s.reserve(params.a_count());
  y.reserve(3 * size + 1);
  for (std::size_t k = 1; k < size; ++k) {
    for (int pass = 0; pass < 4; ++pass) {
      s.emplace_back(0);
      for (std::size_t i = s.size() - 1; i >= 1; --i) s[i] += s[i - 1];
    }
    y.insert(y.begin(), BigInt(0));
    for (int pass = 0; pass < 2; ++pass) {
      y.emplace_back(0);
      for (std::size_t i = y.size() - 1; i >= 1; --i) y[i] -= y[i - 1];
    }
    if (num[k] != 0)
      for (std::size_t i = k; i < y.size(); ++i) mpz_addmul(s[i].get_mpz_t(), num[k].get_mpz_t(), y[i].get_mpz_t());
  }
  for (int pass = 0; pass < params.r(); ++pass) {
    s.emplace_back(0);
    for (std::size_t i = s.size() - 1; i >= 1; --i) s[i] += s[i - 1];
  }
  a.assign(params.a_count(), Rational(0));
  for (std::size_t i = 0; i < s.size() && i < a.size(); ++i) a[i] = make_rational(s[i], den);

  // Shadow side in w = y^4: T_k = T_{k-1} w + d_k (1-w)^(2k), with
  // d_j = (-1)^j c_j 2^(n/2-6j), scaled by 2^extra to stay integral.
  const long extra = std::max<long>(0, 6 * top - params.half());
  std::vector<BigInt> d(size);
  for (std::size_t j = 0; j < size; ++j) {
    const long e = params.half() - 6 * static_cast<long>(j) + extra;
    mpz_mul_2exp(d[j].get_mpz_t(), num[j].get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    if (j % 2 == 1) d[j] = -d[j];
  }
  std::vector<BigInt> t{d[0]};
  std::vector<BigInt> p{1};
  t.reserve(params.b_count());
  p.reserve(params.b_count());
  for (std::size_t k = 1; k < size; ++k) {
    t.insert(t.begin(), BigInt(0));
    for (int pass = 0; pass < 2; ++pass) {
      p.emplace_back(0);
      for (std::size_t i = p.size() - 1; i >= 1; --i) p[i] -= p[i - 1];
    }
    t.resize(p.size());
    if (d[k] != 0)
      for (std::size_t i = 0; i < p.size(); ++i) mpz_addmul(t[i].get_mpz_t(), d[k].get_mpz_t(), p[i].get_mpz_t());
  }
  BigInt bden = den;
  mpz_mul_2exp(bden.get_mpz_t(), bden.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  b.assign(params.b_count(), Rational(0));
  for (std::size_t i = 0; i < t.size() && i < b.size(); ++i) b[i] = make_rational(t[i], bden);
}

ParametricEnumerator enumerators_from_c(const GleasonCoefficients& c, const FamilyParams& params) {
  const std::size_t size = params.c_count();
  if (c.c.size() != size) fail(ErrorKind::InvalidArgument, "enumerators_from_c: c must have c_count entries");

  std::set<std::string> names;
  for (const auto& f : c.c)
    for (const auto& [name, v] : f.terms()) names.insert(name);

  ParametricEnumerator out{params, std::vector<AffineForm>(params.a_count()),
                           std::vector<AffineForm>(params.b_count())};
  std::vector<Rational> comp(size);
  std::vector<Rational> a;
  std::vector<Rational> b;

  for (std::size_t j = 0; j < size; ++j) comp[j] = c.c[j].constant();
  expand_numeric(comp, params, a, b);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out.b[i] = b[i];

  for (const auto& name : names) {
    for (std::size_t j = 0; j < size; ++j) comp[j] = c.c[j].coefficient(name);
    expand_numeric(comp, params, a, b);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += AffineForm::parameter(name, a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) out.b[i] += AffineForm::parameter(name, b[i]);
  }
  return out;
}

}  // namespace sdcodes
