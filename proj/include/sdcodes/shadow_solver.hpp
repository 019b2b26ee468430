#pragma once

// Minimal-shadow constraint systems for singly even self-dual codes, their
// exact solution, the closed-form coefficient formulas for the three
// uniquely determined families, and the admissibility scans.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdcodes/exact.hpp"
#include "sdcodes/gleason.hpp"

namespace sdcodes {

/// Length families, named by their length form.
enum class Family { L24m2, L24m4, L24m6, L24m10, L24m22 };

const char* family_name(Family f);
Family parse_family(const std::string& name);
/// Families with a uniquely determined enumerator and a nonexistence polynomial.
bool has_closed_form(Family f);

struct FamilyCase {
  Family family;
  long m;

  FamilyParams params() const;
  long length() const { return params().n(); }
  /// Target minimum weight: 4m+2, or 4m+4 for the 24m+22 family.
  long min_weight() const;
};

enum class Side { A, B };

/// A free parameter equal to the leading Gleason contribution to one
/// coefficient: for (B, k) that is beta'_{k,J-k} c_{J-k}, for (A, k) it is c_k.
/// When no other Gleason term reaches the slot the parameter is the
/// coefficient itself.
struct FreeSlot {
  std::string name;
  Side side;
  std::size_t index;
};

struct ConstraintSet {
  FamilyParams params;
  std::map<std::size_t, Rational> pinned_a;
  std::map<std::size_t, Rational> pinned_b;
  /// (a-index, b-index) pairs forced equal.
  std::vector<std::pair<std::size_t, std::size_t>> equalities;
  std::vector<FreeSlot> free;
};

ConstraintSet minimal_shadow_constraints(const FamilyCase& fc);

/// Solves an arbitrary constraint set for the Gleason coefficients and
/// expands the enumerators. Unresolved directions surface as extra
/// parameters named "c<i>".
ParametricEnumerator solve(const ConstraintSet& cs);
ParametricEnumerator solve(const FamilyCase& fc);

Rational closed_form_bm(const FamilyCase& fc);
Rational closed_form_bm1(const FamilyCase& fc);
/// a_{2m+1} for the 24m+10 family.
Rational closed_form_a2m1(long m);

struct NonexistencePolynomial {
  Family family;
  std::vector<BigInt> coefficients;  ///< ascending powers of m
  std::string prefactor;             ///< b_{m+1} = prefactor * f(m)
};

NonexistencePolynomial f_poly(Family f);
BigInt evaluate_f(Family f, long m);
/// Unit interval (k, k+1) containing the largest real root of f.
std::pair<long, long> largest_root_bracket(Family f);

struct Offender {
  Side side;
  std::size_t index;
  Rational value;
};

struct Admissibility {
  bool ok = true;
  std::optional<Offender> first_offender;
};

/// Every a_i and b_i a nonnegative integer. Throws Error(Precondition) when
/// the enumerator still has free parameters.
Admissibility admissible(const ParametricEnumerator& e);

struct ScanEntry {
  long m;
  Admissibility result;
};

std::vector<ScanEntry> nonexistence_scan(Family f, long m_max, unsigned jobs = 1);
std::vector<ScanEntry> scan_values(Family f, const std::vector<long>& ms, unsigned jobs = 1);
/// Largest admissible m in a scan, or 0 if none.
long max_admissible(const std::vector<ScanEntry>& scan);

/// Maximal integer interval of the single parameter "beta" on which every
/// coefficient is a nonnegative integer and the minimal-weight shadow
/// coefficient is at least 1.
std::pair<long, long> beta_range(const FamilyCase& fc);
std::pair<long, long> beta_range(const ParametricEnumerator& e, std::size_t shadow_min_index);

long rains_bound(long n);
int minimal_shadow_r(long n);

}  // namespace sdcodes
