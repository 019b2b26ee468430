#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "sdcodes/sdcodes.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sdc_string_free(s);
  return out;
}

std::string coefficient(const sdc_enumerator* e, sdc_side side, size_t i) {
  char* s = nullptr;
  REQUIRE(sdc_enumerator_coefficient(e, side, i, &s) == SDC_OK);
  return take(s);
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(sdc_version()) == "1.0.0");
  CHECK(std::string(sdc_status_string(SDC_OK)) == "ok");
  CHECK(std::string(sdc_status_string(SDC_E_VERIFICATION)) == "verification failed");
  sdc_string_free(nullptr);
}

TEST_CASE("families") {
  sdc_family f{};
  REQUIRE(sdc_family_parse("24m+22", &f) == SDC_OK);
  CHECK(f == SDC_FAMILY_24M22);
  CHECK(std::string(sdc_family_name(f)) == "24m+22");
  CHECK(sdc_family_parse("24m+8", &f) == SDC_E_INVALID_ARGUMENT);
  CHECK(std::strlen(sdc_last_error()) > 0);
  CHECK(sdc_family_parse(nullptr, &f) == SDC_E_INVALID_ARGUMENT);

  long n = 0;
  CHECK(sdc_family_length(SDC_FAMILY_24M10, 1, &n) == SDC_OK);
  CHECK(n == 34);
  CHECK(sdc_family_length(static_cast<sdc_family>(42), 1, &n) == SDC_E_INVALID_ARGUMENT);
  long d = 0;
  CHECK(sdc_family_min_weight(SDC_FAMILY_24M22, 2, &d) == SDC_OK);
  CHECK(d == 12);
  long bound = 0;
  CHECK(sdc_rains_bound(22, &bound) == SDC_OK);
  CHECK(bound == 6);
  int r = 0;
  CHECK(sdc_minimal_shadow_r(46, &r) == SDC_OK);
  CHECK(r == 3);
  CHECK(sdc_minimal_shadow_r(45, &r) == SDC_E_INVALID_ARGUMENT);
}

TEST_CASE("solve, substitute and admissibility") {
  sdc_enumerator* e = nullptr;
  REQUIRE(sdc_solve(SDC_FAMILY_24M6, 1, &e) == SDC_OK);
  CHECK(sdc_enumerator_length(e) == 30);
  CHECK(sdc_enumerator_r(e) == 3);
  CHECK(sdc_enumerator_count(e, SDC_SIDE_CODE) == 16);
  CHECK(sdc_enumerator_count(e, SDC_SIDE_SHADOW) == 7);
  CHECK(coefficient(e, SDC_SIDE_CODE, 3) == "35 - 8*beta");
  CHECK(coefficient(e, SDC_SIDE_SHADOW, 0) == "beta");
  REQUIRE(sdc_enumerator_parameter_count(e) == 1);
  char* name = nullptr;
  REQUIRE(sdc_enumerator_parameter(e, 0, &name) == SDC_OK);
  CHECK(take(name) == "beta");
  char* dummy = nullptr;
  CHECK(sdc_enumerator_coefficient(e, SDC_SIDE_CODE, 99, &dummy) == SDC_E_INVALID_ARGUMENT);

  int ok = 0;
  CHECK(sdc_enumerator_admissible(e, &ok, nullptr, nullptr, nullptr) == SDC_E_PRECONDITION);

  sdc_enumerator* at3 = nullptr;
  REQUIRE(sdc_enumerator_substitute(e, "beta", "3", &at3) == SDC_OK);
  CHECK(coefficient(at3, SDC_SIDE_CODE, 3) == "11");
  REQUIRE(sdc_enumerator_admissible(at3, &ok, nullptr, nullptr, nullptr) == SDC_OK);
  CHECK(ok == 1);

  sdc_enumerator* at5 = nullptr;
  REQUIRE(sdc_enumerator_substitute(e, "beta", "5", &at5) == SDC_OK);
  sdc_side side{};
  size_t index = 0;
  char* value = nullptr;
  REQUIRE(sdc_enumerator_admissible(at5, &ok, &side, &index, &value) == SDC_OK);
  CHECK(ok == 0);
  CHECK(side == SDC_SIDE_CODE);
  CHECK(index == 3);
  CHECK(take(value) == "-5");

  sdc_enumerator* bad = nullptr;
  CHECK(sdc_enumerator_substitute(e, "beta", "x/y", &bad) == SDC_E_PARSE);
  CHECK(bad == nullptr);

  sdc_enumerator_free(at5);
  sdc_enumerator_free(at3);
  sdc_enumerator_free(e);
  sdc_enumerator_free(nullptr);
}

TEST_CASE("beta range, closed forms and brackets") {
  long lo = 0;
  long hi = 0;
  REQUIRE(sdc_beta_range(SDC_FAMILY_24M22, 2, &lo, &hi) == SDC_OK);
  CHECK(lo == 104);
  CHECK(hi == 4841);
  CHECK(sdc_beta_range(SDC_FAMILY_24M2, 1, &lo, &hi) != SDC_OK);

  char* s = nullptr;
  REQUIRE(sdc_closed_form_bm(SDC_FAMILY_24M2, 1, &s) == SDC_OK);
  CHECK(take(s) == "20");
  REQUIRE(sdc_closed_form_bm1(SDC_FAMILY_24M10, 1, &s) == SDC_OK);
  CHECK(take(s) == "1576");
  REQUIRE(sdc_closed_form_a2m1(2, &s) == SDC_OK);
  CHECK(take(s) == "55");
  REQUIRE(sdc_evaluate_f(SDC_FAMILY_24M2, 1, &s) == SDC_OK);
  CHECK(take(s) == "-11907");
  REQUIRE(sdc_f_coefficients(SDC_FAMILY_24M2, &s) == SDC_OK);
  CHECK(take(s) == "1,-14,46,2812,-14816,64");
  REQUIRE(sdc_largest_root_bracket(SDC_FAMILY_24M4, &lo, &hi) == SDC_OK);
  CHECK(lo == 174);
  CHECK(hi == 175);
}

TEST_CASE("scans through the C interface") {
  std::vector<int> flags(5, -1);
  long best = 0;
  REQUIRE(sdc_scan(SDC_FAMILY_24M4, 5, 2, flags.data(), &best) == SDC_OK);
  CHECK(best == 5);
  for (int f : flags) CHECK(f == 1);
  const long ms[] = {154, 155};
  int pair[2] = {-1, -1};
  REQUIRE(sdc_scan_values(SDC_FAMILY_24M2, ms, 2, 2, pair) == SDC_OK);
  CHECK(pair[0] == 1);
  CHECK(pair[1] == 0);
  CHECK(sdc_scan(SDC_FAMILY_24M6, 5, 1, flags.data(), &best) != SDC_OK);
}

TEST_CASE("transform tables") {
  sdc_tables* t = nullptr;
  REQUIRE(sdc_tables_create(26, &t) == SDC_OK);
  CHECK(sdc_tables_size(t) == 4);
  char* s = nullptr;
  REQUIRE(sdc_tables_entry(t, SDC_ALPHA, 1, 0, &s) == SDC_OK);
  CHECK(take(s) == "-13");
  REQUIRE(sdc_tables_entry(t, SDC_BETA, 1, 0, &s) == SDC_OK);
  CHECK(take(s) == "-9/128");
  CHECK(sdc_tables_entry(t, SDC_BETA, 4, 0, &s) == SDC_E_INVALID_ARGUMENT);
  size_t bad = 99;
  REQUIRE(sdc_tables_check_alpha_closed(t, &bad) == SDC_OK);
  CHECK(bad == 0);
  REQUIRE(sdc_tables_check_beta_closed(t, &bad) == SDC_OK);
  CHECK(bad == 0);
  sdc_tables_free(t);
  CHECK(sdc_tables_create(27, &t) == SDC_E_INVALID_ARGUMENT);
}

TEST_CASE("codes") {
  const char* rows[] = {"1100", "0011"};
  sdc_code* c = nullptr;
  REQUIRE(sdc_code_from_rows(rows, 2, &c) == SDC_OK);
  CHECK(sdc_code_length(c) == 4);
  CHECK(sdc_code_dimension(c) == 2);
  int flag = 0;
  REQUIRE(sdc_code_is_self_dual(c, &flag) == SDC_OK);
  CHECK(flag == 1);
  sdc_parity parity{};
  REQUIRE(sdc_code_parity(c, &parity) == SDC_OK);
  CHECK(parity == SDC_SINGLY_EVEN);
  uint64_t counts[5] = {};
  REQUIRE(sdc_code_weight_distribution(c, counts) == SDC_OK);
  CHECK(counts[0] == 1);
  CHECK(counts[2] == 2);
  CHECK(counts[4] == 1);
  long ds = 0;
  int minimal = 0;
  REQUIRE(sdc_code_shadow(c, counts, &ds, &minimal) == SDC_OK);
  CHECK(ds == 2);
  CHECK(minimal == 1);
  const size_t support[] = {1, 3};
  sdc_code* nb = nullptr;
  REQUIRE(sdc_code_neighbor(c, support, 2, &nb) == SDC_OK);
  char* row = nullptr;
  REQUIRE(sdc_code_row(nb, 0, &row) == SDC_OK);
  CHECK(take(row).size() == 4);
  const size_t inside[] = {1, 2};
  sdc_code* none = nullptr;
  CHECK(sdc_code_neighbor(c, inside, 2, &none) == SDC_E_PRECONDITION);
  sdc_code_free(nb);
  sdc_code_free(c);

  const char* ragged[] = {"110", "0011"};
  CHECK(sdc_code_from_rows(ragged, 2, &c) == SDC_E_INVALID_ARGUMENT);
  const char* junk[] = {"11x0"};
  CHECK(sdc_code_from_rows(junk, 1, &c) == SDC_E_PARSE);
}

TEST_CASE("C46 and its neighbor table through the C interface") {
  sdc_code* c = nullptr;
  REQUIRE(sdc_code_c46(&c) == SDC_OK);
  long d = 0;
  REQUIRE(sdc_code_min_distance(c, &d) == SDC_OK);
  CHECK(d == 8);
  int ok = 0;
  REQUIRE(sdc_code_macwilliams_ok(c, &ok) == SDC_OK);
  CHECK(ok == 1);

  const auto path = (std::filesystem::temp_directory_path() / "sdcodes_capi_c46.txt").string();
  REQUIRE(sdc_code_write_file(c, path.c_str()) == SDC_OK);
  sdc_code* again = nullptr;
  REQUIRE(sdc_code_read_file(path.c_str(), &again) == SDC_OK);
  CHECK(sdc_code_dimension(again) == 23);
  std::filesystem::remove(path);
  sdc_code* missing = nullptr;
  CHECK(sdc_code_read_file("/nonexistent/c46.txt", &missing) == SDC_E_PARSE);

  const size_t support[] = {1, 24, 26, 27, 29, 30, 31, 32, 33, 34, 36, 37, 42, 43, 45, 46};
  sdc_code* n1 = nullptr;
  REQUIRE(sdc_code_neighbor(again, support, 16, &n1) == SDC_OK);
  long beta = 0;
  REQUIRE(sdc_code_extract_beta(n1, SDC_FAMILY_24M22, 1, &beta) == SDC_OK);
  CHECK(beta == 36);
  CHECK(sdc_code_extract_beta(c, SDC_FAMILY_24M22, 1, &beta) == SDC_E_VERIFICATION);

  REQUIRE(sdc_table1_count() == 10);
  sdc_table1_row row{};
  REQUIRE(sdc_table1_row_verify(10, &row) == SDC_OK);
  CHECK(row.verified == 1);
  CHECK(row.beta == 58);
  CHECK(row.expected_beta == 58);
  CHECK(row.support_len > 0);
  CHECK(row.support[0] == 1);
  CHECK(sdc_table1_row_verify(0, &row) == SDC_E_INVALID_ARGUMENT);

  sdc_code_free(n1);
  sdc_code_free(again);
  sdc_code_free(c);
}
