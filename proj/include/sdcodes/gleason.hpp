#pragma once

// Gleason-type expansion of the weight enumerators of a singly even
// self-dual code C and its shadow S. For n = 24m + 8l + 2r and
// J = 3m + l, with z = y^2:
//
//   W_C = sum_j c_j (1+z)^(n/2-4j) (z(1-z)^2)^j
//   W_S = sum_j (-1)^j c_j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j)
//
// a_i is the coefficient of y^(2i) in W_C, b_i the coefficient of y^(4i+r)
// in W_S. The change-of-basis matrices alpha' (code side) and beta' (shadow
// side) and their inverses alpha, beta convert between a, b and c.

#include <cstddef>
#include <string>
#include <vector>

#include "sdcodes/exact.hpp"

namespace sdcodes {

class FamilyParams {
 public:
  FamilyParams(long m, int l, int r);
  /// Unique decomposition of an even n > 0.
  static FamilyParams from_length(long n);

  long m() const { return m_; }
  int l() const { return l_; }
  int r() const { return r_; }
  long n() const { return 24 * m_ + 8 * l_ + 2 * r_; }
  long half() const { return 12 * m_ + 4 * l_ + r_; }
  /// J = 3m + l, the largest Gleason index.
  long top() const { return 3 * m_ + l_; }
  std::size_t c_count() const { return static_cast<std::size_t>(top() + 1); }
  std::size_t a_count() const { return static_cast<std::size_t>(half() + 1); }
  std::size_t b_count() const { return static_cast<std::size_t>(6 * m_ + 2 * l_ + 1); }

  bool operator==(const FamilyParams&) const = default;

 private:
  long m_;
  int l_;
  int r_;
};

struct TransformTables {
  FamilyParams params;
  RationalMatrix alpha_prime;
  RationalMatrix alpha;
  RationalMatrix beta_prime;
  RationalMatrix beta;
};

struct GleasonCoefficients {
  std::vector<AffineForm> c;
};

struct ParametricEnumerator {
  FamilyParams params;
  std::vector<AffineForm> a;  ///< a_i: coefficient of y^(2i), i = 0..n/2
  std::vector<AffineForm> b;  ///< b_i: coefficient of y^(4i+r), i = 0..6m+2l
  std::vector<std::string> parameters() const;
  /// Substitute numeric values for (some of) the parameters.
  ParametricEnumerator substitute(const std::map<std::string, Rational>& values) const;
};

/// (1+z)^(n/2-4j) (z(1-z)^2)^j expanded in z; column j of alpha'.
DensePoly code_basis_polynomial(long j, const FamilyParams& params);

/// Column j of beta': coefficients of (-1)^j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j)
/// at exponents 4i + r, i = 0..6m+2l.
std::vector<Rational> shadow_basis_vector(long j, const FamilyParams& params);

/// Rows 0..last_row of the full alpha' matrix (all J+1 columns), computed by
/// a column recurrence without expanding whole basis polynomials.
RationalMatrix code_basis_rows(const FamilyParams& params, std::size_t last_row);
/// Rows 0..last_row of the full beta' matrix.
RationalMatrix shadow_basis_rows(const FamilyParams& params, std::size_t last_row);

TransformTables build_transform_tables(const FamilyParams& params);

/// Closed-form alpha_{i,0} for 1 <= i <= J.
Rational alpha_i0_closed(long i, long n);
/// Closed-form beta_{i,j} for 1 <= i, 0 <= j, i + j <= J.
Rational beta_closed(long i, long j, const FamilyParams& params);

GleasonCoefficients c_from_a(std::span<const AffineForm> a, const TransformTables& tables);
GleasonCoefficients c_from_b(std::span<const AffineForm> b, const TransformTables& tables);

/// Expands both sums exactly (affinely in any parameters carried by c).
ParametricEnumerator enumerators_from_c(const GleasonCoefficients& c, const FamilyParams& params);

/// Numeric fast path of enumerators_from_c: works in scaled big integers.
void expand_numeric(std::span<const Rational> c, const FamilyParams& params, std::vector<Rational>& a,
                    std::vector<Rational>& b);

}  // namespace sdcodes
