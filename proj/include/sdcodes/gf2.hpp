#pragma once

// Binary linear codes: bit vectors, canonical generator matrices, duals,
// exhaustive weight distributions, shadows and self-dual neighbors.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdcodes/exact.hpp"
#include "sdcodes/shadow_solver.hpp"

namespace sdcodes {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  /// From a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Standard inner product over GF(2).
  bool dot(const BitVector& rhs) const;
  BitVector& operator^=(const BitVector& rhs);
  BitVector operator^(const BitVector& rhs) const { return BitVector(*this) ^= rhs; }
  bool operator==(const BitVector& rhs) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sorted, 1-based coordinate positions.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> positions);
  /// "1,24,26" (whitespace tolerated).
  static SupportSet parse(std::string_view text);

  const std::vector<std::size_t>& positions() const { return positions_; }
  BitVector to_vector(std::size_t n) const;
  std::string to_string() const;
  bool operator==(const SupportSet&) const = default;

 private:
  std::vector<std::size_t> positions_;
};

/// Linear code given by a generator matrix in reduced row echelon form,
/// so equal codes have identical representations.
class BinaryCode {
 public:
  BinaryCode() = default;
  static BinaryCode from_rows(std::size_t n, const std::vector<BitVector>& rows);

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<BitVector>& generators() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(const BitVector& x) const;
  bool operator==(const BinaryCode&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// k x k matrix whose row i is first_row cyclically shifted right by i.
std::vector<BitVector> circulant(const BitVector& first_row);

BinaryCode build_code(const std::vector<BitVector>& rows);
BinaryCode dual(const BinaryCode& code);
bool is_self_dual(const BinaryCode& code);

enum class ParityClass { DoublyEven, SinglyEven, Neither };
const char* parity_class_name(ParityClass p);
/// Classification of a self-orthogonal code; anything else is Neither.
ParityClass parity_class(const BinaryCode& code);

/// Codeword counts indexed by weight 0..n. Counts fit in 64 bits because
/// enumeration is capped at dimension 28.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
  /// Smallest nonzero weight with a nonzero count; 0 if none.
  std::size_t min_nonzero_weight() const;
  /// Smallest weight with a nonzero count (cosets may lack the zero word).
  std::size_t min_weight() const;
};

inline constexpr std::size_t kDefaultEnumerationCap = 28;

WeightDistribution weight_distribution(const BinaryCode& code, std::size_t cap = kDefaultEnumerationCap);
/// Weight distribution of the coset offset + code.
WeightDistribution coset_weight_distribution(const BinaryCode& code, const BitVector& offset,
                                             std::size_t cap = kDefaultEnumerationCap);
long minimum_distance(const BinaryCode& code);

struct ShadowPartition {
  BinaryCode c0;
  /// t and t + g: S = (t + C0) u (t + g + C0) = t + C.
  BitVector shadow_reps[2];
  WeightDistribution shadow_weights;
  std::size_t min_weight() const { return shadow_weights.min_weight(); }
};

/// Shadow of a singly even self-dual code. Throws Error(Precondition) for
/// anything else.
ShadowPartition shadow(const BinaryCode& code, std::size_t cap = kDefaultEnumerationCap);
bool is_minimal_shadow(const BinaryCode& code);

/// <code ∩ <x>^perp, x> for an even-weight x outside the code.
BinaryCode neighbor(const BinaryCode& code, const BitVector& x);
BinaryCode neighbor(const BinaryCode& code, const SupportSet& x);

/// a_i = count[2i] and b_i = shadow count[4i + r] of an actual code.
struct CodeEnumerators {
  std::vector<Rational> a;
  std::vector<Rational> b;
};
CodeEnumerators code_enumerators(const BinaryCode& code);

/// Unique beta at which the family's parametrized enumerator matches the
/// code's exact weight distributions. Throws Error(Verification) on mismatch.
long extract_beta(const BinaryCode& code, const FamilyCase& fc);

/// 2^(n/2) W(y) == (1+y)^n W((1-y)/(1+y)) checked exactly.
bool macwilliams_fixed_point(const WeightDistribution& w);

/// [I_23 | R] with R circulant on 01011101011100000111110.
BinaryCode c46();
inline constexpr const char* kC46FirstRow = "01011101011100000111110";

struct Table1Row {
  std::size_t index;
  SupportSet support;
  long expected_beta;
  long beta;
  std::size_t n;
  std::size_t k;
  long d;
  bool self_dual;
  bool singly_even;
  bool minimal_shadow;
  bool verified() const {
    return self_dual && singly_even && minimal_shadow && n == 46 && k == 23 && d == 8 && beta == expected_beta;
  }
};

const std::vector<std::pair<SupportSet, long>>& table1_entries();
/// Builds C46 and its ten neighbors and verifies every row; throws
/// Error(Verification) naming the first failing code.
std::vector<Table1Row> reproduce_table1();
Table1Row verify_table1_row(const BinaryCode& base, std::size_t index);

/// Generator file: optional "n k" header, then one row of '0'/'1' per line
/// (whitespace between bits allowed).
BinaryCode parse_generator_text(std::string_view text);
BinaryCode read_generator_file(const std::string& path);
std::string format_generator_text(const BinaryCode& code);
void write_generator_file(const BinaryCode& code, const std::string& path);

}  // namespace sdcodes
