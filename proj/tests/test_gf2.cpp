#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdcodes/error.hpp"
#include "sdcodes/gf2.hpp"
#include "sdcodes/gleason.hpp"

using namespace sdcodes;

namespace {

BitVector bits(const char* s) { return BitVector::from_string(s); }

BinaryCode code_of(std::initializer_list<const char*> rows) {
  std::vector<BitVector> v;
  for (const char* r : rows) v.push_back(bits(r));
  return build_code(v);
}

/// Every codeword by brute force over all 2^k generator combinations.
std::set<std::string> codewords(const BinaryCode& c) {
  std::set<std::string> out;
  const auto& g = c.generators();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    BitVector v(c.length());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mask >> i & 1U) v ^= g[i];
    out.insert(v.to_string());
  }
  return out;
}

/// Direct sum of n/2 copies of the [2,1,2] code.
BinaryCode i2_sum(std::size_t n) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < n; i += 2) {
    BitVector v(n);
    v.set(i);
    v.set(i + 1);
    rows.push_back(v);
  }
  return build_code(rows);
}

/// Random self-dual code of length n reached by a walk of neighbor steps.
BinaryCode random_self_dual(std::size_t n, std::mt19937& rng, int steps) {
  BinaryCode c = i2_sum(n);
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    BitVector x(n);
    for (int t = 0; t < 4; ++t) x.flip(pos(rng));
    if (x.weight() % 2 != 0 || x.is_zero() || c.contains(x)) continue;
    c = neighbor(c, x);
  }
  return c;
}

bool shares_codimension_one(const BinaryCode& a, const BinaryCode& b) {
  std::vector<BitVector> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return build_code(all).dimension() == a.dimension() + 1;
}

void check_shadow_properties(const BinaryCode& c) {
  const auto sp = shadow(c);
  const std::size_t n = c.length();
  const long r = FamilyParams::from_length(long(n)).r();
  REQUIRE(sp.c0.dimension() + 1 == c.dimension());
  REQUIRE(weight_distribution(sp.c0).total() == (std::uint64_t{1} << (c.dimension() - 1)));
  REQUIRE(sp.shadow_weights.total() == (std::uint64_t{1} << (n / 2)));
  for (std::size_t w = 0; w <= n; ++w)
    if (sp.shadow_weights.counts[w]) REQUIRE(long(w) % 4 == r % 4);
  const BinaryCode c0_dual = dual(sp.c0);
  REQUIRE(c0_dual.dimension() == c.dimension() + 1);
  for (const auto& t : sp.shadow_reps) {
    REQUIRE_FALSE(c.contains(t));
    REQUIRE(c0_dual.contains(t));
  }
  for (const auto& g : c.generators()) REQUIRE(c0_dual.contains(g));
}

}  // namespace

TEST_CASE("bit vectors") {
  const auto v = bits("1011");
  CHECK(v.size() == 4);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "1011");
  CHECK(v.dot(bits("1000")));
  CHECK_FALSE(v.dot(bits("1010")));
  CHECK((v ^ v).is_zero());
  CHECK_THROWS_AS(bits("10a1"), Error);
  BitVector big(130);
  big.set(129);
  big.set(64);
  CHECK(big.weight() == 2);
  CHECK(big.get(129));
}

TEST_CASE("support sets") {
  const auto s = SupportSet::parse("3, 1,24");
  CHECK(s.positions() == std::vector<std::size_t>{1, 3, 24});
  CHECK(s.to_string() == "1,3,24");
  CHECK(s.to_vector(24).weight() == 3);
  CHECK(s.to_vector(24).get(0));
  CHECK_THROWS_AS(SupportSet::parse("1,1"), Error);
  CHECK_THROWS_AS(SupportSet::parse("0,2"), Error);
  CHECK_THROWS_AS(SupportSet::parse("1,x"), Error);
  CHECK_THROWS_AS(s.to_vector(20), Error);
}

TEST_CASE("circulant") {
  const auto id = circulant(bits("100"));
  CHECK(id == std::vector<BitVector>{bits("100"), bits("010"), bits("001")});
  CHECK(circulant(bits("01")) == std::vector<BitVector>{bits("01"), bits("10")});
  const auto r = circulant(bits(kC46FirstRow));
  REQUIRE(r.size() == 23);
  CHECK(r[0].to_string() == kC46FirstRow);
  CHECK(r[1].to_string() == "00101110101110000011111");
}

TEST_CASE("canonical form makes equal codes equal") {
  CHECK(code_of({"1100", "0011"}) == code_of({"1111", "0011"}));
  CHECK(code_of({"1100", "1100", "0011"}).dimension() == 2);
  CHECK_FALSE(code_of({"1100"}) == code_of({"0011"}));
}

TEST_CASE("small self-dual codes") {
  const auto c2 = code_of({"11"});
  CHECK(is_self_dual(c2));
  CHECK(parity_class(c2) == ParityClass::SinglyEven);
  CHECK(weight_distribution(c2).counts == std::vector<std::uint64_t>{1, 0, 1});

  const auto c22 = code_of({"1100", "0011"});
  CHECK(is_self_dual(c22));
  CHECK(parity_class(c22) == ParityClass::SinglyEven);
  CHECK(codewords(c22) == std::set<std::string>{"0000", "1100", "0011", "1111"});

  const auto h8 = code_of({"11110000", "00111100", "00001111", "01010101"});
  CHECK(is_self_dual(h8));
  CHECK(parity_class(h8) == ParityClass::DoublyEven);
  CHECK(minimum_distance(h8) == 4);

  CHECK_FALSE(is_self_dual(code_of({"1000"})));
  CHECK(parity_class(code_of({"1000"})) == ParityClass::Neither);
  CHECK(dual(code_of({"1100"})) == code_of({"1100", "0010", "0001"}));
}

TEST_CASE("weight distribution agrees with brute force") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 70;
    const std::size_t k = 1 + trial % 9;
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
      BitVector v(n);
      for (std::size_t j = 0; j < n; ++j)
        if (bit(rng)) v.set(j);
      rows.push_back(v);
    }
    if (std::all_of(rows.begin(), rows.end(), [](const BitVector& v) { return v.is_zero(); })) continue;
    const auto c = build_code(rows);
    std::vector<std::uint64_t> expect(n + 1, 0);
    for (const auto& w : codewords(c)) ++expect[static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'))];
    REQUIRE(weight_distribution(c).counts == expect);
  }
}

TEST_CASE("enumeration cap") {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < 29; ++i) {
    BitVector v(58);
    v.set(2 * i);
    v.set(2 * i + 1);
    rows.push_back(v);
  }
  const auto c = build_code(rows);
  try {
    weight_distribution(c);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Limit);
  }
}

TEST_CASE("shadows of small codes") {
  const auto s2 = shadow(code_of({"11"}));
  CHECK(s2.shadow_weights.counts == std::vector<std::uint64_t>{0, 2, 0});
  CHECK(is_minimal_shadow(code_of({"11"})));

  const auto c22 = code_of({"1100", "0011"});
  const auto s4 = shadow(c22);
  CHECK(s4.min_weight() == 2);
  CHECK(s4.shadow_weights.counts == std::vector<std::uint64_t>{0, 0, 4, 0, 0});
  CHECK(is_minimal_shadow(c22));

  const auto h8 = code_of({"11110000", "00111100", "00001111", "01010101"});
  try {
    shadow(h8);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
  CHECK_THROWS_AS(shadow(code_of({"1000"})), Error);
}

TEST_CASE("neighbor construction") {
  const auto c22 = code_of({"1100", "0011"});
  const auto nb = neighbor(c22, SupportSet::parse("1,3"));
  CHECK(codewords(nb) == std::set<std::string>{"0000", "1111", "1010", "0101"});
  CHECK(is_self_dual(nb));
  CHECK(shares_codimension_one(c22, nb));
  try {
    neighbor(c22, SupportSet::parse("1,2"));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
  CHECK_THROWS_AS(neighbor(c22, SupportSet::parse("1")), Error);
}

TEST_CASE("random self-dual codes satisfy the structural properties") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 * (2 + trial % 12);
    CAPTURE(n);
    const auto c = random_self_dual(n, rng, 12);
    REQUIRE(is_self_dual(c));
    REQUIRE(c.dimension() == n / 2);
    REQUIRE(parity_class(c) != ParityClass::Neither);
    REQUIRE(macwilliams_fixed_point(weight_distribution(c)));
    if (parity_class(c) == ParityClass::SinglyEven) check_shadow_properties(c);

    // Neighbor of a neighbor, stepping back with a word not orthogonal to x.
    BitVector x(n);
    x.set(0);
    x.set(1 + trial % (n - 1));
    if (c.contains(x)) continue;
    const auto nb = neighbor(c, x);
    REQUIRE(is_self_dual(nb));
    REQUIRE(shares_codimension_one(c, nb));
    const auto back = std::find_if(c.generators().begin(), c.generators().end(),
                                   [&](const BitVector& g) { return g.dot(x); });
    REQUIRE(back != c.generators().end());
    const auto nb2 = neighbor(nb, *back);
    REQUIRE(is_self_dual(nb2));
    REQUIRE(shares_codimension_one(nb, nb2));
  }
}

TEST_CASE("MacWilliams identity rejects non-self-dual distributions") {
  CHECK(macwilliams_fixed_point(weight_distribution(code_of({"11"}))));
  CHECK_FALSE(macwilliams_fixed_point(weight_distribution(code_of({"1100"}))));
  CHECK_FALSE(macwilliams_fixed_point(weight_distribution(code_of({"111100", "001111"}))));
}

TEST_CASE("C46") {
  const auto c = c46();
  CHECK(c.length() == 46);
  CHECK(c.dimension() == 23);
  CHECK(is_self_dual(c));
  CHECK(parity_class(c) == ParityClass::SinglyEven);
  CHECK(minimum_distance(c) == 8);
  CHECK(macwilliams_fixed_point(weight_distribution(c)));
  check_shadow_properties(c);
}

TEST_CASE("shift direction is fixed by the neighbor betas") {
  // Left shifts give R transposed; that code also validates as [46,23,8],
  // but its neighbors do not reproduce the tabulated betas.
  const auto right = circulant(bits(kC46FirstRow));
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < 23; ++i) {
    BitVector v(46);
    v.set(i);
    for (std::size_t j = 0; j < 23; ++j)
      if (right[j].get(i)) v.set(23 + j);
    rows.push_back(v);
  }
  const auto left = build_code(rows);
  CHECK(is_self_dual(left));
  CHECK(minimum_distance(left) == 8);
  std::size_t matches = 0;
  for (std::size_t i = 1; i <= table1_entries().size(); ++i) {
    try {
      matches += verify_table1_row(left, i).verified() ? 1 : 0;
    } catch (const Error&) {
    }
  }
  CHECK(matches < table1_entries().size());
}

TEST_CASE("C46 neighbor rows") {
  const auto base = c46();
  const auto n1 = neighbor(base, table1_entries()[0].first);
  const auto sp = shadow(n1);
  CHECK(sp.min_weight() == 3);
  CHECK(sp.shadow_weights.counts[7] == 26);
  CHECK(extract_beta(n1, {Family::L24m22, 1}) == 36);
  CHECK(weight_distribution(n1).counts[8] == 72);
  CHECK(weight_distribution(n1).counts[10] == 884 - 72);

  CHECK(table1_entries()[1].first == SupportSet::parse("1,27,28,31,33,35,36,37,42,43,45,46"));
  CHECK(table1_entries()[8].first == SupportSet::parse("1,23,24,27,30,36,40,41,44,45"));
  const long expected[] = {36, 42, 44, 46, 48, 50, 52, 54, 56, 58};
  for (std::size_t i = 1; i <= 10; ++i) {
    CAPTURE(i);
    const auto row = verify_table1_row(base, i);
    CHECK(row.verified());
    CHECK(row.beta == expected[i - 1]);
    CHECK(row.d == 8);
    CHECK(row.minimal_shadow);
  }
  CHECK_THROWS_AS(verify_table1_row(base, 0), Error);
  CHECK_THROWS_AS(verify_table1_row(base, 11), Error);
}

TEST_CASE("C46 neighbors: structure, MacWilliams and transform consistency") {
  const auto base = c46();
  const auto tables = build_transform_tables(FamilyParams::from_length(46));
  for (const auto& [support, beta] : table1_entries()) {
    CAPTURE(beta);
    const auto nb = neighbor(base, support);
    REQUIRE(shares_codimension_one(base, nb));
    REQUIRE(macwilliams_fixed_point(weight_distribution(nb)));
    check_shadow_properties(nb);

    const auto e = code_enumerators(nb);
    std::vector<AffineForm> a(e.a.begin(), e.a.end());
    std::vector<AffineForm> b(e.b.begin(), e.b.end());
    const auto c_a = c_from_a(a, tables);
    const auto c_b = c_from_b(b, tables);
    REQUIRE(c_a.c == c_b.c);
    const auto predicted = enumerators_from_c(c_a, tables.params);
    REQUIRE(predicted.b == b);
    REQUIRE(predicted.a == a);
  }
}

TEST_CASE("extract_beta reports mismatches") {
  // The [2,1,2]^23 sum is self-dual of length 46 but has no minimal shadow match.
  try {
    extract_beta(i2_sum(46), {Family::L24m22, 1});
    FAIL("expected a verification error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Verification);
  }
  CHECK_THROWS_AS(extract_beta(c46(), {Family::L24m22, 2}), Error);
}

TEST_CASE("generator files") {
  const auto c = c46();
  const auto text = format_generator_text(c);
  CHECK(text.rfind("46 23\n", 0) == 0);
  CHECK(parse_generator_text(text) == c);

  CHECK(parse_generator_text("1 1 0 0\n0 0 1 1\n") == code_of({"1100", "0011"}));
  CHECK(parse_generator_text("4 2\n1100\n0011\n") == code_of({"1100", "0011"}));
  CHECK(parse_generator_text("\n11\n\n") == code_of({"11"}));

  auto parse_error = [](const char* t) -> std::string {
    try {
      parse_generator_text(t);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      return e.what();
    }
    return "";
  };
  CHECK(parse_error("1100\n01x1\n").find("line 2") != std::string::npos);
  CHECK(parse_error("1100\n011\n").find("line 2") != std::string::npos);
  CHECK(parse_error("5 2\n1100\n0011\n").find("line 1") != std::string::npos);
  CHECK_FALSE(parse_error("").empty());

  const auto path = std::filesystem::temp_directory_path() / "sdcodes_test_c46.txt";
  write_generator_file(c, path.string());
  CHECK(read_generator_file(path.string()) == c);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_generator_file("/nonexistent/dir/file.txt"), Error);
}
