#pragma once

// Exact arithmetic substrate: big integers and rationals (GMP), dense
// univariate polynomials, affine forms over named parameters, rational
// matrices and a parametric linear solver.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sdcodes {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k) for n >= 0; zero when k < 0 or k > n. Negative n is rejected.
BigInt binomial(long n, long k);

Rational make_rational(const BigInt& num, const BigInt& den);

/// Decimal serialization: "19051200", "-9/128".
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& v);

/// Dense polynomial in one formal variable; trailing zeros are always trimmed.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);
  DensePoly(std::initializer_list<long> coeffs);

  static DensePoly constant(const Rational& c);
  static DensePoly monomial(std::size_t exponent, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient at z^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  DensePoly operator+(const DensePoly& rhs) const;
  DensePoly operator-(const DensePoly& rhs) const;
  DensePoly operator*(const Rational& s) const;
  DensePoly pow(unsigned e) const;
  bool operator==(const DensePoly& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

DensePoly poly_product(const DensePoly& p, const DensePoly& q);
inline DensePoly operator*(const DensePoly& p, const DensePoly& q) { return poly_product(p, q); }

/// constant + sum(coeff * name). Zero coefficients are never stored, so
/// structural equality is mathematical equality.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(const Rational& constant) : constant_(constant) {}  // NOLINT(implicit)
  AffineForm(long constant) : constant_(constant) {}             // NOLINT(implicit)

  static AffineForm parameter(const std::string& name, const Rational& coeff = 1);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::string& name) const;
  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  AffineForm& operator+=(const AffineForm& rhs);
  AffineForm& operator-=(const AffineForm& rhs);
  AffineForm& operator*=(const Rational& s);
  AffineForm operator+(const AffineForm& rhs) const { return AffineForm(*this) += rhs; }
  AffineForm operator-(const AffineForm& rhs) const { return AffineForm(*this) -= rhs; }
  AffineForm operator*(const Rational& s) const { return AffineForm(*this) *= s; }
  AffineForm operator-() const { return *this * Rational(-1); }
  bool operator==(const AffineForm& rhs) const;

  /// Replace every parameter found in `values` by its value.
  AffineForm substitute(const std::map<std::string, Rational>& values) const;
  /// Replace parameters by affine forms (composition).
  AffineForm substitute(const std::map<std::string, AffineForm>& values) const;

  /// "35 - 8*beta", "2*beta", "-12 + beta", "0".
  std::string to_string() const;

 private:
  Rational constant_{0};
  std::map<std::string, Rational> terms_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by rational Gauss-Jordan elimination. Throws
/// Error(Singular) for singular input and Error(InvalidArgument) when the
/// matrix is not square.
RationalMatrix matrix_inverse(const RationalMatrix& m);

struct LinearSolution {
  /// Every declared unknown, expressed over the parameters that stay free.
  std::map<std::string, AffineForm> values;
  /// Unknowns the system left undetermined; each is reported as a new
  /// parameter under its own name.
  std::vector<std::string> free_unknowns;
  /// All parameter names the solution depends on (sorted).
  std::vector<std::string> parameters() const;
};

/// Solves A x = rhs where rhs entries may depend affinely on parameters.
/// Throws Error(NoSolution) when some row reduces to 0 = (nonzero form).
LinearSolution parametric_linear_solve(const RationalMatrix& a, std::span<const AffineForm> rhs,
                                       std::span<const std::string> unknowns);

}  // namespace sdcodes
