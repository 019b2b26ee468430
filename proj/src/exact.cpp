#include "sdcodes/exact.hpp"

#include <algorithm>
#include <set>

#include "sdcodes/error.hpp"

namespace sdcodes {

BigInt binomial(long n, long k) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "binomial: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

// ---------------------------------------------------------------- DensePoly

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly::DensePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

DensePoly DensePoly::constant(const Rational& c) { return DensePoly(std::vector<Rational>{c}); }

DensePoly DensePoly::monomial(std::size_t exponent, const Rational& c) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return DensePoly(std::move(v));
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

DensePoly DensePoly::operator+(const DensePoly& rhs) const {
  std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
  return DensePoly(std::move(v));
}

DensePoly DensePoly::operator-(const DensePoly& rhs) const {
  std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
  return DensePoly(std::move(v));
}

DensePoly DensePoly::operator*(const Rational& s) const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c *= s;
  return DensePoly(std::move(v));
}

DensePoly DensePoly::pow(unsigned e) const {
  DensePoly result = constant(1);
  DensePoly base = *this;
  while (e != 0) {
    if (e & 1U) result = poly_product(result, base);
    e >>= 1U;
    if (e != 0) base = poly_product(base, base);
  }
  return result;
}

DensePoly poly_product(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return DensePoly(std::move(out));
}

// --------------------------------------------------------------- AffineForm

AffineForm AffineForm::parameter(const std::string& name, const Rational& coeff) {
  AffineForm f;
  if (coeff != 0) f.terms_.emplace(name, coeff);
  return f;
}

Rational AffineForm::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rational(0) : it->second;
}

AffineForm& AffineForm::operator+=(const AffineForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [name, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(name, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& rhs) { return *this += -rhs; }

AffineForm& AffineForm::operator*=(const Rational& s) {
  if (s == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [name, c] : terms_) c *= s;
  return *this;
}

bool AffineForm::operator==(const AffineForm& rhs) const {
  return constant_ == rhs.constant_ && terms_ == rhs.terms_;
}

AffineForm AffineForm::substitute(const std::map<std::string, Rational>& values) const {
  AffineForm out(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it != values.end())
      out.constant_ += c * it->second;
    else
      out.terms_.emplace(name, c);
  }
  return out;
}

AffineForm AffineForm::substitute(const std::map<std::string, AffineForm>& values) const {
  AffineForm out(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it != values.end())
      out += it->second * c;
    else
      out += parameter(name, c);
  }
  return out;
}

std::string AffineForm::to_string() const {
  std::string out;
  if (constant_ != 0 || terms_.empty()) out = sdcodes::to_string(constant_);
  for (const auto& [name, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string term = mag == 1 ? name : sdcodes::to_string(mag) + "*" + name;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

// ----------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::InvalidArgument, "matrix product: dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

namespace {

// Bit size of |num| * den, used to prefer the simplest available pivot.
std::size_t pivot_cost(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RationalMatrix matrix_inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "matrix_inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = col; r < n; ++r) {
      if (work.at(r, col) == 0) continue;
      if (best == n || pivot_cost(work.at(r, col)) < pivot_cost(work.at(best, col))) best = r;
    }
    if (best == n) fail(ErrorKind::Singular, "matrix_inverse: matrix is singular");
    if (best != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(best, j), work.at(col, j));
        std::swap(inv.at(best, j), inv.at(col, j));
      }
    const Rational scale = 1 / work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Rational f = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// ------------------------------------------------------ parametric solving

std::vector<std::string> LinearSolution::parameters() const {
  std::set<std::string> names;
  for (const auto& [unknown, form] : values)
    for (const auto& [name, c] : form.terms()) names.insert(name);
  return {names.begin(), names.end()};
}

LinearSolution parametric_linear_solve(const RationalMatrix& a, std::span<const AffineForm> rhs,
                                       std::span<const std::string> unknowns) {
  if (rhs.size() != a.rows())
    fail(ErrorKind::InvalidArgument, "parametric_linear_solve: rhs length does not match rows");
  if (unknowns.size() != a.cols())
    fail(ErrorKind::InvalidArgument, "parametric_linear_solve: unknown count does not match columns");

  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RationalMatrix work = a;
  std::vector<AffineForm> b(rhs.begin(), rhs.end());
  std::vector<std::size_t> pivot_col;

  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (work.at(r, col) == 0) continue;
      if (best == rows || pivot_cost(work.at(r, col)) < pivot_cost(work.at(best, col))) best = r;
    }
    if (best == rows) continue;
    if (best != prow) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(work.at(best, j), work.at(prow, j));
      std::swap(b[best], b[prow]);
    }
    const Rational scale = 1 / work.at(prow, col);
    for (std::size_t j = col; j < cols; ++j) work.at(prow, j) *= scale;
    b[prow] *= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || work.at(r, col) == 0) continue;
      const Rational f = work.at(r, col);
      for (std::size_t j = col; j < cols; ++j) work.at(r, j) -= f * work.at(prow, j);
      b[r] -= b[prow] * f;
    }
    pivot_col.push_back(col);
    ++prow;
  }

  for (std::size_t r = prow; r < rows; ++r)
    if (!b[r].is_zero())
      fail(ErrorKind::NoSolution, "linear system is inconsistent: 0 = " + b[r].to_string());

  LinearSolution sol;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : pivot_col) is_pivot[col] = true;
  for (std::size_t col = 0; col < cols; ++col) {
    if (is_pivot[col]) continue;
    sol.free_unknowns.push_back(unknowns[col]);
    sol.values[unknowns[col]] = AffineForm::parameter(unknowns[col]);
  }
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    AffineForm v = b[r];
    for (std::size_t col = pivot_col[r] + 1; col < cols; ++col)
      if (!is_pivot[col] && work.at(r, col) != 0)
        v -= AffineForm::parameter(unknowns[col], work.at(r, col));
    sol.values[unknowns[pivot_col[r]]] = std::move(v);
  }
  return sol;
}

}  // namespace sdcodes
