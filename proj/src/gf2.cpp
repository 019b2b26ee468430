#include "sdcodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sdcodes/error.hpp"

namespace sdcodes {

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      fail(ErrorKind::Parse, std::string("bit string contains '") + bits[i] + "'");
  }
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector& rhs) const {
  if (n_ != rhs.n_) fail(ErrorKind::InvalidArgument, "inner product of vectors with different lengths");
  unsigned parity = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) parity ^= std::popcount(words_[i] & rhs.words_[i]) & 1U;
  return parity != 0;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  if (n_ != rhs.n_) fail(ErrorKind::InvalidArgument, "sum of vectors with different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

// --------------------------------------------------------------- SupportSet

SupportSet::SupportSet(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end())
    fail(ErrorKind::InvalidArgument, "support set has a repeated position");
  if (!positions_.empty() && positions_.front() == 0)
    fail(ErrorKind::InvalidArgument, "support positions are 1-based");
}

SupportSet SupportSet::parse(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      fail(ErrorKind::Parse, "bad support entry '" + std::string(item) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return SupportSet(std::move(out));
}

BitVector SupportSet::to_vector(std::size_t n) const {
  BitVector v(n);
  for (std::size_t p : positions_) {
    if (p > n) fail(ErrorKind::InvalidArgument, "support position " + std::to_string(p) + " exceeds length");
    v.set(p - 1);
  }
  return v;
}

std::string SupportSet::to_string() const {
  std::string s;
  for (std::size_t p : positions_) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

// --------------------------------------------------------------- BinaryCode

BinaryCode BinaryCode::from_rows(std::size_t n, const std::vector<BitVector>& rows) {
  std::vector<BitVector> work;
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::InvalidArgument, "generator rows have different lengths");
    work.push_back(r);
  }
  BinaryCode code;
  code.n_ = n;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < work.size(); ++col) {
    std::size_t sel = rank;
    while (sel < work.size() && !work[sel].get(col)) ++sel;
    if (sel == work.size()) continue;
    std::swap(work[sel], work[rank]);
    for (std::size_t r = 0; r < work.size(); ++r)
      if (r != rank && work[r].get(col)) work[r] ^= work[rank];
    code.pivots_.push_back(col);
    ++rank;
  }
  work.resize(rank);
  code.rows_ = std::move(work);
  return code;
}

bool BinaryCode::contains(const BitVector& x) const {
  if (x.size() != n_) return false;
  BitVector v = x;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v.is_zero();
}

std::vector<BitVector> circulant(const BitVector& first_row) {
  const std::size_t k = first_row.size();
  if (k == 0) fail(ErrorKind::InvalidArgument, "circulant: empty first row");
  std::vector<BitVector> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitVector row(k);
    for (std::size_t j = 0; j < k; ++j)
      if (first_row.get(j)) row.set((j + i) % k);
    rows.push_back(std::move(row));
  }
  return rows;
}

BinaryCode build_code(const std::vector<BitVector>& rows) {
  if (rows.empty()) fail(ErrorKind::InvalidArgument, "build_code: no generator rows");
  return BinaryCode::from_rows(rows.front().size(), rows);
}

BinaryCode dual(const BinaryCode& code) {
  const std::size_t n = code.length();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : code.pivots()) is_pivot[p] = true;
  std::vector<BitVector> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < code.dimension(); ++i)
      if (code.generators()[i].get(f)) v.set(code.pivots()[i]);
    rows.push_back(std::move(v));
  }
  return BinaryCode::from_rows(n, rows);
}

bool is_self_dual(const BinaryCode& code) { return 2 * code.dimension() == code.length() && dual(code) == code; }

const char* parity_class_name(ParityClass p) {
  switch (p) {
    case ParityClass::DoublyEven: return "doubly even";
    case ParityClass::SinglyEven: return "singly even";
    case ParityClass::Neither: return "neither";
  }
  return "?";
}

namespace {

bool is_self_orthogonal(const BinaryCode& code) {
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (g[i].dot(g[j])) return false;
  return true;
}

void check_cap(const BinaryCode& code, std::size_t cap) {
  if (code.dimension() > cap)
    fail(ErrorKind::Limit, "dimension " + std::to_string(code.dimension()) + " exceeds the enumeration cap of " +
                               std::to_string(cap));
}

}  // namespace

ParityClass parity_class(const BinaryCode& code) {
  if (!is_self_orthogonal(code)) return ParityClass::Neither;
  // On a self-orthogonal code wt(x)/2 mod 2 is linear, so generators decide.
  for (const auto& g : code.generators())
    if (g.weight() % 4 == 2) return ParityClass::SinglyEven;
  return ParityClass::DoublyEven;
}

// ---------------------------------------------------------- enumeration

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

std::size_t WeightDistribution::min_weight() const {
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

WeightDistribution coset_weight_distribution(const BinaryCode& code, const BitVector& offset, std::size_t cap) {
  check_cap(code, cap);
  if (offset.size() != code.length()) fail(ErrorKind::InvalidArgument, "coset offset has the wrong length");
  WeightDistribution out;
  out.counts.assign(code.length() + 1, 0);
  const std::size_t k = code.dimension();
  const std::uint64_t total = std::uint64_t{1} << k;
  const auto& g = code.generators();

  // Gray-code walk: step i flips generator ctz(i).
  if (offset.words().size() == 1) {
    std::vector<std::uint64_t> gw(k);
    for (std::size_t i = 0; i < k; ++i) gw[i] = g[i].words()[0];
    std::uint64_t v = offset.words()[0];
    ++out.counts[static_cast<std::size_t>(std::popcount(v))];
    for (std::uint64_t i = 1; i < total; ++i) {
      v ^= gw[static_cast<std::size_t>(std::countr_zero(i))];
      ++out.counts[static_cast<std::size_t>(std::popcount(v))];
    }
    return out;
  }
  BitVector v = offset;
  ++out.counts[v.weight()];
  for (std::uint64_t i = 1; i < total; ++i) {
    v ^= g[static_cast<std::size_t>(std::countr_zero(i))];
    ++out.counts[v.weight()];
  }
  return out;
}

WeightDistribution weight_distribution(const BinaryCode& code, std::size_t cap) {
  return coset_weight_distribution(code, BitVector(code.length()), cap);
}

long minimum_distance(const BinaryCode& code) {
  return static_cast<long>(weight_distribution(code).min_nonzero_weight());
}

// ----------------------------------------------------------------- shadow

ShadowPartition shadow(const BinaryCode& code, std::size_t cap) {
  if (!is_self_dual(code)) fail(ErrorKind::Precondition, "shadow: code is not self-dual");
  const auto& gens = code.generators();
  auto singly = std::find_if(gens.begin(), gens.end(), [](const BitVector& g) { return g.weight() % 4 == 2; });
  if (singly == gens.end()) fail(ErrorKind::Precondition, "shadow: code is doubly even");
  const BitVector g = *singly;

  std::vector<BitVector> c0_rows;
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    if (it == singly) continue;
    c0_rows.push_back(it->weight() % 4 == 2 ? (*it ^ g) : *it);
  }
  ShadowPartition out;
  out.c0 = BinaryCode::from_rows(code.length(), c0_rows);

  const BinaryCode c0_dual = dual(out.c0);
  auto t = std::find_if(c0_dual.generators().begin(), c0_dual.generators().end(),
                        [&](const BitVector& v) { return !code.contains(v); });
  if (t == c0_dual.generators().end()) fail(ErrorKind::Verification, "shadow: C0-dual equals C");
  out.shadow_reps[0] = *t;
  out.shadow_reps[1] = *t ^ g;
  out.shadow_weights = coset_weight_distribution(code, *t, cap);
  return out;
}

bool is_minimal_shadow(const BinaryCode& code) {
  const ShadowPartition s = shadow(code);
  return static_cast<long>(s.min_weight()) == minimal_shadow_r(static_cast<long>(code.length()));
}

// --------------------------------------------------------------- neighbors

BinaryCode neighbor(const BinaryCode& code, const BitVector& x) {
  if (x.size() != code.length()) fail(ErrorKind::InvalidArgument, "neighbor: vector length does not match code");
  if (x.weight() % 2 != 0) fail(ErrorKind::Precondition, "neighbor: x has odd weight");
  if (code.contains(x)) fail(ErrorKind::Precondition, "neighbor: x lies in the code");
  std::vector<BitVector> rows;
  const BitVector* pivot = nullptr;
  for (const auto& g : code.generators()) {
    if (!g.dot(x)) {
      rows.push_back(g);
    } else if (pivot == nullptr) {
      pivot = &g;
    } else {
      rows.push_back(g ^ *pivot);
    }
  }
  rows.push_back(x);
  return BinaryCode::from_rows(code.length(), rows);
}

BinaryCode neighbor(const BinaryCode& code, const SupportSet& x) { return neighbor(code, x.to_vector(code.length())); }

// ------------------------------------------------------- enumerator match

CodeEnumerators code_enumerators(const BinaryCode& code) {
  const long n = static_cast<long>(code.length());
  const FamilyParams params = FamilyParams::from_length(n);
  const WeightDistribution w = weight_distribution(code);
  const ShadowPartition s = shadow(code);
  CodeEnumerators out;
  for (std::size_t i = 0; i < w.counts.size(); ++i) {
    if (i % 2 == 1 && w.counts[i] != 0) fail(ErrorKind::Precondition, "code has odd-weight words");
    if (i % 2 == 0) out.a.emplace_back(static_cast<unsigned long>(w.counts[i]));
  }
  for (std::size_t i = 0; i < s.shadow_weights.counts.size(); ++i) {
    const auto c = s.shadow_weights.counts[i];
    if (c == 0) continue;
    if (static_cast<long>(i % 4) != params.r())
      fail(ErrorKind::Verification, "shadow weight " + std::to_string(i) + " not congruent to r mod 4");
  }
  for (std::size_t i = 0; i < params.b_count(); ++i)
    out.b.emplace_back(static_cast<unsigned long>(s.shadow_weights.counts[4 * i + static_cast<std::size_t>(params.r())]));
  return out;
}

long extract_beta(const BinaryCode& code, const FamilyCase& fc) {
  if (static_cast<long>(code.length()) != fc.length())
    fail(ErrorKind::InvalidArgument, "extract_beta: code length " + std::to_string(code.length()) +
                                         " does not match family length " + std::to_string(fc.length()));
  const ParametricEnumerator e = solve(fc);
  const CodeEnumerators actual = code_enumerators(code);
  const long r = fc.params().r();

  std::optional<Rational> beta;
  auto probe = [&](const std::vector<AffineForm>& forms, const std::vector<Rational>& values) {
    for (std::size_t i = 0; i < forms.size() && !beta; ++i) {
      const Rational k = forms[i].coefficient("beta");
      if (k != 0) beta = (values[i] - forms[i].constant()) / k;
    }
  };
  probe(e.a, actual.a);
  probe(e.b, actual.b);
  if (!beta) fail(ErrorKind::Verification, "extract_beta: enumerator does not depend on beta");
  if (!is_integer(*beta)) fail(ErrorKind::Verification, "extract_beta: beta = " + to_string(*beta) + " is not an integer");

  const std::map<std::string, Rational> at{{"beta", *beta}};
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    const Rational expect = e.a[i].substitute(at).constant();
    if (expect != actual.a[i])
      fail(ErrorKind::Verification, "extract_beta: mismatch at code weight " + std::to_string(2 * i) + ": expected " +
                                        to_string(expect) + ", found " + to_string(actual.a[i]));
  }
  for (std::size_t i = 0; i < e.b.size(); ++i) {
    const Rational expect = e.b[i].substitute(at).constant();
    if (expect != actual.b[i])
      fail(ErrorKind::Verification, "extract_beta: mismatch at shadow weight " + std::to_string(4 * i + r) +
                                        ": expected " + to_string(expect) + ", found " + to_string(actual.b[i]));
  }
  return beta->get_num().get_si();
}

bool macwilliams_fixed_point(const WeightDistribution& w) {
  const std::size_t n = w.counts.size() - 1;
  if (n % 2 != 0) return false;
  DensePoly lhs;
  {
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = Rational(static_cast<unsigned long>(w.counts[i]));
    BigInt scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), n / 2);
    lhs = DensePoly(std::move(v)) * Rational(scale);
  }
  const DensePoly one_minus{1, -1};
  const DensePoly one_plus{1, 1};
  std::vector<DensePoly> plus_pow{DensePoly::constant(1)};
  for (std::size_t i = 1; i <= n; ++i) plus_pow.push_back(plus_pow.back() * one_plus);
  DensePoly rhs;
  DensePoly minus_pow = DensePoly::constant(1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (w.counts[i] != 0)
      rhs = rhs + (minus_pow * plus_pow[n - i]) * Rational(static_cast<unsigned long>(w.counts[i]));
    minus_pow = minus_pow * one_minus;
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------- C46

BinaryCode c46() {
  const BitVector first = BitVector::from_string(kC46FirstRow);
  const auto r = circulant(first);
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < 23; ++i) {
    BitVector row(46);
    row.set(i);
    for (std::size_t j = 0; j < 23; ++j)
      if (r[i].get(j)) row.set(23 + j);
    rows.push_back(std::move(row));
  }
  return BinaryCode::from_rows(46, rows);
}

const std::vector<std::pair<SupportSet, long>>& table1_entries() {
  static const std::vector<std::pair<SupportSet, long>> entries = {
      {SupportSet({1, 24, 26, 27, 29, 30, 31, 32, 33, 34, 36, 37, 42, 43, 45, 46}), 36},
      {SupportSet({1, 27, 28, 31, 33, 35, 36, 37, 42, 43, 45, 46}), 42},
      {SupportSet({10, 11, 20, 27, 29, 34, 38, 41, 42, 45}), 44},
      {SupportSet({5, 6, 25, 29, 30, 32, 33, 36, 40, 41, 44, 45}), 46},
      {SupportSet({1, 23, 28, 29, 30, 31, 32, 37, 40, 41, 44, 45}), 48},
      {SupportSet({1, 26, 27, 28, 30, 32, 35, 36, 37, 42, 43, 45}), 50},
      {SupportSet({2, 3, 24, 25, 26, 28, 29, 33, 34, 36, 37, 41, 42, 44}), 52},
      {SupportSet({1, 25, 28, 29, 32, 33, 34, 36, 38, 42, 43, 45}), 54},
      {SupportSet({1, 23, 24, 27, 30, 36, 40, 41, 44, 45}), 56},
      {SupportSet({1, 2, 25, 29, 30, 33, 35, 38, 44, 46}), 58},
  };
  return entries;
}

Table1Row verify_table1_row(const BinaryCode& base, std::size_t index) {
  const auto& entries = table1_entries();
  if (index < 1 || index > entries.size()) fail(ErrorKind::InvalidArgument, "neighbor table index out of range");
  const auto& [support, expected] = entries[index - 1];
  const BinaryCode code = neighbor(base, support);
  Table1Row row{index, support, expected, 0, code.length(), code.dimension(), 0, false, false, false};
  row.self_dual = is_self_dual(code);
  row.singly_even = parity_class(code) == ParityClass::SinglyEven;
  if (row.self_dual && row.singly_even) {
    row.d = minimum_distance(code);
    row.minimal_shadow = is_minimal_shadow(code);
    row.beta = extract_beta(code, FamilyCase{Family::L24m22, 1});
  }
  return row;
}

std::vector<Table1Row> reproduce_table1() {
  const BinaryCode base = c46();
  if (!is_self_dual(base) || parity_class(base) != ParityClass::SinglyEven || minimum_distance(base) != 8)
    fail(ErrorKind::Verification, "C46 is not a singly even self-dual [46,23,8] code");
  std::vector<Table1Row> rows;
  for (std::size_t i = 1; i <= table1_entries().size(); ++i) {
    rows.push_back(verify_table1_row(base, i));
    if (!rows.back().verified()) fail(ErrorKind::Verification, "neighbor table verification failed for N46," + std::to_string(i));
  }
  return rows;
}

// ------------------------------------------------------------- file I/O

BinaryCode parse_generator_text(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string raw;
  };
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no)
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back({no, line});
  }
  if (lines.empty()) fail(ErrorKind::Parse, "generator file has no rows");

  auto bits_of = [](const Line& l) {
    std::string bits;
    for (char ch : l.raw) {
      if (ch == '0' || ch == '1')
        bits += ch;
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        fail(ErrorKind::Parse, "line " + std::to_string(l.number) + ": expected only '0'/'1' characters");
    }
    return bits;
  };

  // A first line "n k" is a header when it agrees with the rows after it.
  std::size_t first_row = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  {
    std::istringstream hs(lines.front().raw);
    std::string t1, t2, t3;
    const bool two_numbers = (hs >> t1 >> t2) && !(hs >> t3) &&
                             t1.find_first_not_of("0123456789") == std::string::npos &&
                             t2.find_first_not_of("0123456789") == std::string::npos;
    if (two_numbers) {
      const std::size_t n = std::stoul(t1);
      const std::size_t k = std::stoul(t2);
      const bool plain_digits = lines.front().raw.find_first_of("23456789") != std::string::npos;
      bool matches = lines.size() >= 2 && k == lines.size() - 1;
      if (matches) {
        std::string probe;
        for (char ch : lines[1].raw)
          if (ch == '0' || ch == '1') probe += ch;
        matches = probe.size() == n;
      }
      if (plain_digits || matches) {
        header = {n, k};
        first_row = 1;
      }
    }
  }

  std::vector<BitVector> rows;
  std::size_t width = 0;
  for (std::size_t i = first_row; i < lines.size(); ++i) {
    const std::string bits = bits_of(lines[i]);
    if (rows.empty()) width = bits.size();
    if (bits.size() != width)
      fail(ErrorKind::Parse, "line " + std::to_string(lines[i].number) + ": row has " + std::to_string(bits.size()) +
                                 " bits, expected " + std::to_string(width));
    rows.push_back(BitVector::from_string(bits));
  }
  if (rows.empty()) fail(ErrorKind::Parse, "generator file has no rows");
  if (header) {
    if (header->first != width) fail(ErrorKind::Parse, "line " + std::to_string(lines.front().number) + ": header length n = " + std::to_string(header->first) + " does not match row width " + std::to_string(width));
    if (header->second != rows.size()) fail(ErrorKind::Parse, "line " + std::to_string(lines.front().number) + ": header dimension k = " + std::to_string(header->second) + " does not match row count " + std::to_string(rows.size()));
  }
  return BinaryCode::from_rows(width, rows);
}

BinaryCode read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open generator file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_generator_text(ss.str());
}

std::string format_generator_text(const BinaryCode& code) {
  std::string out = std::to_string(code.length()) + " " + std::to_string(code.dimension()) + "\n";
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  return out;
}

void write_generator_file(const BinaryCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot write generator file '" + path + "'");
  out << format_generator_text(code);
}

}  // namespace sdcodes
