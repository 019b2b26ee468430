#include "sdcodes/shadow_solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sdcodes/error.hpp"

namespace sdcodes {

// ------------------------------------------------------------- families

const char* family_name(Family f) {
  switch (f) {
    case Family::L24m2: return "24m+2";
    case Family::L24m4: return "24m+4";
    case Family::L24m6: return "24m+6";
    case Family::L24m10: return "24m+10";
    case Family::L24m22: return "24m+22";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::L24m2, Family::L24m4, Family::L24m6, Family::L24m10, Family::L24m22})
    if (name == family_name(f)) return f;
  fail(ErrorKind::InvalidArgument,
       "unknown family '" + name + "' (expected 24m+2, 24m+4, 24m+6, 24m+10 or 24m+22)");
}

bool has_closed_form(Family f) { return f == Family::L24m2 || f == Family::L24m4 || f == Family::L24m10; }

FamilyParams FamilyCase::params() const {
  if (m < 0 || (m == 0 && family != Family::L24m22))
    fail(ErrorKind::InvalidArgument, std::string("family ") + family_name(family) + " needs m >= 1");
  switch (family) {
    case Family::L24m2: return {m, 0, 1};
    case Family::L24m4: return {m, 0, 2};
    case Family::L24m6: return {m, 0, 3};
    case Family::L24m10: return {m, 1, 1};
    case Family::L24m22: return {m, 2, 3};
  }
  fail(ErrorKind::InvalidArgument, "bad family");
}

long FamilyCase::min_weight() const { return family == Family::L24m22 ? 4 * m + 4 : 4 * m + 2; }

long rains_bound(long n) {
  if (n <= 0 || n % 2 != 0) fail(ErrorKind::InvalidArgument, "rains_bound: n must be even and positive");
  return 4 * (n / 24) + (n % 24 == 22 ? 6 : 4);
}

int minimal_shadow_r(long n) {
  if (n <= 0 || n % 2 != 0) fail(ErrorKind::InvalidArgument, "minimal_shadow_r: n must be even and positive");
  switch (n % 8) {
    case 0: return 4;
    case 2: return 1;
    case 4: return 2;
    default: return 3;
  }
}

// ---------------------------------------------------------- constraints

ConstraintSet minimal_shadow_constraints(const FamilyCase& fc) {
  const long min_m = fc.family == Family::L24m22 ? 0 : 1;
  if (fc.m < min_m)
    fail(ErrorKind::InvalidArgument, std::string("unsupported case: family ") + family_name(fc.family) +
                                         " needs m >= " + std::to_string(min_m));
  const FamilyParams params = fc.params();
  const long n = params.n();
  const long d = fc.min_weight();
  const long ds = minimal_shadow_r(n);
  const long r = params.r();

  ConstraintSet cs{params, {}, {}, {}, {}};
  cs.pinned_a[0] = 1;
  for (long i = 1; 2 * i < d; ++i) cs.pinned_a[static_cast<std::size_t>(i)] = 0;

  // Shadow weights are 4i + r; nothing lies below d(S).
  const long k0 = (ds - r) / 4;
  for (long i = 0; i < k0; ++i) cs.pinned_b[static_cast<std::size_t>(i)] = 0;

  // Two distinct shadow vectors differ by a nonzero codeword, so their
  // weights sum to at least d. With 2 d(S) < d the minimal shadow vector is
  // unique, and every other shadow vector has weight >= d - d(S).
  std::size_t next_b = static_cast<std::size_t>(k0);
  if (2 * ds < d) {
    cs.pinned_b[next_b++] = 1;
    while (4 * static_cast<long>(next_b) + r < d - ds) cs.pinned_b[next_b++] = 0;
  } else {
    cs.free.push_back({"beta", Side::B, next_b++});
  }

  if (n % 8 == 2 && d % 4 == 2)
    cs.equalities.emplace_back(static_cast<std::size_t>(d / 2), static_cast<std::size_t>((d - 2) / 4));

  const std::size_t count = cs.pinned_a.size() + cs.pinned_b.size() + cs.equalities.size() + cs.free.size();
  if (count < params.c_count() && cs.free.empty()) cs.free.push_back({"beta", Side::B, next_b});
  if (cs.pinned_a.size() + cs.pinned_b.size() + cs.equalities.size() + cs.free.size() < params.c_count())
    fail(ErrorKind::InvalidArgument, std::string("unsupported case: family ") + family_name(fc.family) +
                                         ", m = " + std::to_string(fc.m) + " leaves more than one free direction");
  return cs;
}

// ---------------------------------------------------------------- solve

namespace {

struct Row {
  std::vector<Rational> coeffs;  // over c_0..c_J
  AffineForm rhs;
};

}  // namespace

ParametricEnumerator solve(const ConstraintSet& cs) {
  const FamilyParams& params = cs.params;
  const std::size_t size = params.c_count();
  const std::size_t top = size - 1;

  std::size_t max_a = 0;
  std::size_t max_b = 0;
  for (const auto& [i, v] : cs.pinned_a) max_a = std::max(max_a, i);
  for (const auto& [i, v] : cs.pinned_b) max_b = std::max(max_b, i);
  for (const auto& [p, q] : cs.equalities) {
    max_a = std::max(max_a, p);
    max_b = std::max(max_b, q);
  }
  for (const auto& f : cs.free) {
    std::size_t& bound = f.side == Side::A ? max_a : max_b;
    bound = std::max(bound, f.index);
  }
  if (max_a >= params.a_count() || max_b >= params.b_count())
    fail(ErrorKind::InvalidArgument, "constraint references an index outside the enumerator");

  const RationalMatrix alpha_rows = code_basis_rows(params, max_a);
  const RationalMatrix beta_rows = shadow_basis_rows(params, max_b);

  std::vector<std::optional<AffineForm>> c(size);
  std::vector<Row> residual;

  auto row_of = [&](const RationalMatrix& m, std::size_t i) {
    auto r = m.row(i);
    return std::vector<Rational>(r.begin(), r.end());
  };

  // Pinned prefix a_0..a_p: alpha' is unitriangular, so row i fixes c_i.
  std::map<std::size_t, Rational> pending_a = cs.pinned_a;
  for (std::size_t i = 0; i < size; ++i) {
    auto it = pending_a.find(i);
    if (it == pending_a.end()) break;
    AffineForm v = it->second;
    for (std::size_t j = 0; j < i; ++j)
      if (alpha_rows.at(i, j) != 0) v -= *c[j] * alpha_rows.at(i, j);
    c[i] = std::move(v);
    pending_a.erase(it);
  }

  // Pinned prefix b_0..b_q: beta' row k has its first nonzero at column J-k.
  std::map<std::size_t, Rational> pending_b = cs.pinned_b;
  for (std::size_t k = 0; k < size; ++k) {
    auto it = pending_b.find(k);
    if (it == pending_b.end()) break;
    const std::size_t col = top - k;
    if (c[col]) break;
    AffineForm v = it->second;
    for (std::size_t j = col + 1; j < size; ++j)
      if (beta_rows.at(k, j) != 0) v -= *c[j] * beta_rows.at(k, j);
    c[col] = v * (1 / beta_rows.at(k, col));
    pending_b.erase(it);
  }

  for (const auto& slot : cs.free) {
    const std::size_t col = slot.side == Side::A ? slot.index : top - slot.index;
    if (col > top) fail(ErrorKind::InvalidArgument, "free slot has no leading Gleason term");
    const Rational lead = slot.side == Side::A ? Rational(1) : beta_rows.at(slot.index, col);
    if (!c[col]) {
      c[col] = AffineForm::parameter(slot.name, 1 / lead);
    } else {
      std::vector<Rational> coeffs(size);
      coeffs[col] = lead;
      residual.push_back({std::move(coeffs), AffineForm::parameter(slot.name)});
    }
  }

  for (const auto& [i, v] : pending_a) residual.push_back({row_of(alpha_rows, i), v});
  for (const auto& [k, v] : pending_b) residual.push_back({row_of(beta_rows, k), v});
  for (const auto& [p, q] : cs.equalities) {
    auto coeffs = row_of(alpha_rows, p);
    for (std::size_t j = 0; j < size; ++j) coeffs[j] -= beta_rows.at(q, j);
    residual.push_back({std::move(coeffs), 0});
  }

  std::vector<std::size_t> unknown_cols;
  std::vector<std::string> unknown_names;
  for (std::size_t j = 0; j < size; ++j)
    if (!c[j]) {
      unknown_cols.push_back(j);
      unknown_names.push_back("c" + std::to_string(j));
    }

  RationalMatrix a(residual.size(), unknown_cols.size());
  std::vector<AffineForm> rhs;
  rhs.reserve(residual.size());
  for (std::size_t r = 0; r < residual.size(); ++r) {
    AffineForm v = residual[r].rhs;
    for (std::size_t j = 0; j < size; ++j)
      if (c[j] && residual[r].coeffs[j] != 0) v -= *c[j] * residual[r].coeffs[j];
    for (std::size_t u = 0; u < unknown_cols.size(); ++u) a.at(r, u) = residual[r].coeffs[unknown_cols[u]];
    rhs.push_back(std::move(v));
  }
  LinearSolution sol = parametric_linear_solve(a, rhs, unknown_names);
  for (std::size_t u = 0; u < unknown_cols.size(); ++u) c[unknown_cols[u]] = sol.values.at(unknown_names[u]);

  GleasonCoefficients g;
  g.c.reserve(size);
  for (auto& v : c) g.c.push_back(std::move(*v));
  return enumerators_from_c(g, params);
}

ParametricEnumerator solve(const FamilyCase& fc) { return solve(minimal_shadow_constraints(fc)); }

// ---------------------------------------------------------- closed forms

namespace {

void require_closed_form(const FamilyCase& fc) {
  if (!has_closed_form(fc.family))
    fail(ErrorKind::InvalidArgument,
         std::string("no closed form for family ") + family_name(fc.family) + " (use beta_range)");
  if (fc.m < 1) fail(ErrorKind::InvalidArgument, "closed forms need m >= 1");
}

Rational ratio(long num, long den) { return make_rational(num, den); }

}  // namespace

Rational closed_form_bm(const FamilyCase& fc) {
  require_closed_form(fc);
  const long m = fc.m;
  switch (fc.family) {
    case Family::L24m2: return ratio(4 * (24 * m + 1), 5 * m) * binomial(5 * m, m - 1);
    case Family::L24m4:
      return make_rational(BigInt(2) * (12 * m + 1) * (38 * m + 7), BigInt(5 * m) * (2 * m + 1)) *
             binomial(5 * m, m - 1);
    default: return Rational(binomial(5 * m + 1, m));
  }
}

Rational closed_form_bm1(const FamilyCase& fc) {
  require_closed_form(fc);
  const long m = fc.m;
  const BigInt f = evaluate_f(fc.family, m);
  BigInt den = BigInt(4 * m + 2) * (4 * m + 3) * (4 * m + 4) * (4 * m + 5);
  Rational v;
  switch (fc.family) {
    case Family::L24m2:
      v = make_rational(BigInt(-64) * (24 * m + 1) * f, den * (5 * m - 1)) * binomial(5 * m, m - 1);
      break;
    case Family::L24m4:
      v = make_rational(BigInt(-128) * (12 * m + 1) * f, den * (5 * m - 1) * (4 * m + 6)) * binomial(5 * m, m - 1);
      break;
    default:
      v = make_rational(BigInt(-16) * (5 * m + 2) * f, den * (4 * m + 1)) * binomial(5 * m, m);
      break;
  }
  return v;
}

Rational closed_form_a2m1(long m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "closed_form_a2m1 needs m >= 1");
  const BigInt bin = binomial(5 * m + 1, m);
  const Rational alpha = -ratio(12 * m + 5, 2 * m + 1) * bin;
  const Rational beta = -2 * ratio(3 * m + 1, 2 * m + 1) * bin;
  return (beta - alpha) / 3;
}

NonexistencePolynomial f_poly(Family f) {
  auto coeffs = [](std::initializer_list<long> ascending) {
    std::vector<BigInt> v;
    for (long c : ascending) v.emplace_back(c);
    return v;
  };
  switch (f) {
    case Family::L24m2:
      return {f, coeffs({1, -14, 46, 2812, -14816, 64}),
              "-64(24m+1)/((5m-1)(4m+2)(4m+3)(4m+4)(4m+5)) * C(5m,m-1)"};
    case Family::L24m4:
      return {f, coeffs({6, 88, 1171, 5440, -33020, -212096, 1216}),
              "-128(12m+1)/((5m-1)(4m+2)(4m+3)(4m+4)(4m+5)(4m+6)) * C(5m,m-1)"};
    case Family::L24m10:
      return {f, coeffs({-105, -1511, -7924, -18036, -15040, 64}),
              "-16(5m+2)/((4m+1)(4m+2)(4m+3)(4m+4)(4m+5)) * C(5m,m)"};
    default:
      fail(ErrorKind::InvalidArgument,
           std::string("no nonexistence polynomial for family ") + family_name(f));
  }
}

BigInt evaluate_f(Family f, long m) {
  const auto poly = f_poly(f);
  BigInt acc = 0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) acc = acc * m + *it;
  return acc;
}

std::pair<long, long> largest_root_bracket(Family f) {
  const auto poly = f_poly(f);
  const BigInt& lead = poly.coefficients.back();
  // Cauchy: every real root lies below 1 + max |a_i / a_deg|.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < poly.coefficients.size(); ++i)
    bound = std::max(bound, Rational(abs(poly.coefficients[i]), abs(lead)));
  bound += 1;
  BigInt ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const long start = ceil_bound.get_si();
  const int lead_sign = sgn(lead);

  for (long k = start; k >= 0; --k) {
    if (sgn(evaluate_f(f, k)) * lead_sign <= 0) {
      if (sgn(evaluate_f(f, k + 1)) * lead_sign <= 0 || sgn(evaluate_f(f, 10 * k)) * lead_sign <= 0)
        fail(ErrorKind::Verification, "root bracket sign check failed");
      return {k, k + 1};
    }
  }
  fail(ErrorKind::Verification, "no sign change found above 0");
}

// ---------------------------------------------------------- admissibility

Admissibility admissible(const ParametricEnumerator& e) {
  if (!e.parameters().empty())
    fail(ErrorKind::Precondition, "enumerator has free parameters; use beta_range instead");
  Admissibility out;
  auto check = [&](const std::vector<AffineForm>& v, Side side) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational& x = v[i].constant();
      if (!is_integer(x) || x < 0) {
        out.ok = false;
        out.first_offender = Offender{side, i, x};
        return false;
      }
    }
    return true;
  };
  if (check(e.a, Side::A)) check(e.b, Side::B);
  return out;
}

std::vector<ScanEntry> scan_values(Family f, const std::vector<long>& ms, unsigned jobs) {
  if (!has_closed_form(f))
    fail(ErrorKind::InvalidArgument, std::string("family ") + family_name(f) +
                                         " has a one-parameter enumerator; use beta_range instead of a scan");
  std::vector<ScanEntry> out(ms.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(ms.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < ms.size(); i = next++) {
      try {
        out[i] = {ms[i], admissible(solve(FamilyCase{f, ms[i]}))};
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (!errors[i].empty()) fail(ErrorKind::NoSolution, "scan failed at m = " + std::to_string(ms[i]) + ": " + errors[i]);
  return out;
}

std::vector<ScanEntry> nonexistence_scan(Family f, long m_max, unsigned jobs) {
  if (m_max < 1) fail(ErrorKind::InvalidArgument, "m_max must be at least 1");
  std::vector<long> ms;
  for (long m = 1; m <= m_max; ++m) ms.push_back(m);
  return scan_values(f, ms, jobs);
}

long max_admissible(const std::vector<ScanEntry>& scan) {
  long best = 0;
  for (const auto& e : scan)
    if (e.result.ok) best = std::max(best, e.m);
  return best;
}

// ------------------------------------------------------------ beta ranges

std::pair<long, long> beta_range(const ParametricEnumerator& e, std::size_t shadow_min_index) {
  const auto names = e.parameters();
  if (names.size() != 1 || names.front() != "beta")
    fail(ErrorKind::Precondition, "beta_range needs exactly one free parameter named beta");

  // Nonnegativity bounds first, then check integrality on the candidates.
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty = false;
  auto bound = [&](const AffineForm& f, const Rational& floor_value) {
    const Rational k = f.coefficient("beta");
    const Rational c = f.constant() - floor_value;
    if (k > 0) {
      const Rational v = -c / k;
      if (!lo || v > *lo) lo = v;
    } else if (k < 0) {
      const Rational v = c / -k;
      if (!hi || v < *hi) hi = v;
    } else if (c < 0) {
      empty = true;
    }
  };
  for (const auto& f : e.a) bound(f, 0);
  for (std::size_t i = 0; i < e.b.size(); ++i) bound(e.b[i], i == shadow_min_index ? 1 : 0);
  if (empty) fail(ErrorKind::NoSolution, "beta range is empty");
  if (!lo || !hi) fail(ErrorKind::Precondition, "beta range is unbounded");

  BigInt first;
  BigInt last;
  mpz_cdiv_q(first.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
  mpz_fdiv_q(last.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
  if (first > last) fail(ErrorKind::NoSolution, "beta range is empty");
  if (last - first > 10'000'000) fail(ErrorKind::Limit, "beta range too wide to verify integrality");

  std::optional<long> out_lo;
  long out_hi = 0;
  for (long beta = first.get_si(); beta <= last.get_si(); ++beta) {
    const std::map<std::string, Rational> at{{"beta", Rational(beta)}};
    bool integral = true;
    for (const auto* v : {&e.a, &e.b})
      for (const auto& f : *v)
        if (!is_integer(f.substitute(at).constant())) integral = false;
    if (!integral) {
      if (out_lo) fail(ErrorKind::Verification, "admissible beta values do not form an interval");
      continue;
    }
    if (!out_lo) out_lo = beta;
    out_hi = beta;
  }
  if (!out_lo) fail(ErrorKind::NoSolution, "beta range is empty");
  return {*out_lo, out_hi};
}

std::pair<long, long> beta_range(const FamilyCase& fc) {
  const ParametricEnumerator e = solve(fc);
  const long ds = minimal_shadow_r(fc.length());
  return beta_range(e, static_cast<std::size_t>((ds - fc.params().r()) / 4));
}

}  // namespace sdcodes
