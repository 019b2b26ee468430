#include "sdcodes/sdcodes.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sdcodes/error.hpp"
#include "sdcodes/gf2.hpp"
#include "sdcodes/gleason.hpp"
#include "sdcodes/shadow_solver.hpp"

struct sdc_enumerator {
  sdcodes::ParametricEnumerator value;
};

struct sdc_tables {
  sdcodes::TransformTables value;
};

struct sdc_code {
  sdcodes::BinaryCode value;
};

namespace {

thread_local std::string g_last_error;

sdc_status status_of(sdcodes::ErrorKind kind) {
  using sdcodes::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return SDC_E_INVALID_ARGUMENT;
    case ErrorKind::Parse: return SDC_E_PARSE;
    case ErrorKind::Precondition: return SDC_E_PRECONDITION;
    case ErrorKind::NoSolution: return SDC_E_NO_SOLUTION;
    case ErrorKind::Singular: return SDC_E_SINGULAR;
    case ErrorKind::Limit: return SDC_E_LIMIT;
    case ErrorKind::Verification: return SDC_E_VERIFICATION;
  }
  return SDC_E_INTERNAL;
}

template <class F>
sdc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SDC_OK;
  } catch (const sdcodes::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SDC_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SDC_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sdcodes::Family to_family(sdc_family f) {
  switch (f) {
    case SDC_FAMILY_24M2: return sdcodes::Family::L24m2;
    case SDC_FAMILY_24M4: return sdcodes::Family::L24m4;
    case SDC_FAMILY_24M6: return sdcodes::Family::L24m6;
    case SDC_FAMILY_24M10: return sdcodes::Family::L24m10;
    case SDC_FAMILY_24M22: return sdcodes::Family::L24m22;
  }
  sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "unknown family value");
}

const std::vector<sdcodes::AffineForm>& side_of(const sdc_enumerator* e, sdc_side side) {
  return side == SDC_SIDE_CODE ? e->value.a : e->value.b;
}

const sdcodes::RationalMatrix& table_of(const sdc_tables* t, sdc_table which) {
  switch (which) {
    case SDC_ALPHA_PRIME: return t->value.alpha_prime;
    case SDC_ALPHA: return t->value.alpha;
    case SDC_BETA_PRIME: return t->value.beta_prime;
    case SDC_BETA: return t->value.beta;
  }
  sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "unknown table");
}

}  // namespace

extern "C" {

const char* sdc_version(void) { return "1.0.0"; }

const char* sdc_status_string(sdc_status status) {
  switch (status) {
    case SDC_OK: return "ok";
    case SDC_E_INVALID_ARGUMENT: return "invalid argument";
    case SDC_E_PARSE: return "parse error";
    case SDC_E_PRECONDITION: return "precondition violated";
    case SDC_E_NO_SOLUTION: return "no solution";
    case SDC_E_SINGULAR: return "singular matrix";
    case SDC_E_LIMIT: return "limit exceeded";
    case SDC_E_VERIFICATION: return "verification failed";
    case SDC_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sdc_last_error(void) { return g_last_error.c_str(); }

void sdc_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------- families

sdc_status sdc_family_parse(const char* name, sdc_family* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = static_cast<sdc_family>(static_cast<int>(sdcodes::parse_family(name)));
  });
}

const char* sdc_family_name(sdc_family family) {
  if (family < SDC_FAMILY_24M2 || family > SDC_FAMILY_24M22) return "?";
  return sdcodes::family_name(to_family(family));
}

sdc_status sdc_family_length(sdc_family family, long m, long* n) {
  return guarded([&] {
    require(n, "n");
    *n = sdcodes::FamilyCase{to_family(family), m}.length();
  });
}

sdc_status sdc_family_min_weight(sdc_family family, long m, long* d) {
  return guarded([&] {
    require(d, "d");
    *d = sdcodes::FamilyCase{to_family(family), m}.min_weight();
  });
}

sdc_status sdc_rains_bound(long n, long* out) {
  return guarded([&] {
    require(out, "out");
    *out = sdcodes::rains_bound(n);
  });
}

sdc_status sdc_minimal_shadow_r(long n, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = sdcodes::minimal_shadow_r(n);
  });
}

// ---------------------------------------------------------- enumerators

sdc_status sdc_solve(sdc_family family, long m, sdc_enumerator** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sdc_enumerator{sdcodes::solve(sdcodes::FamilyCase{to_family(family), m})};
  });
}

sdc_status sdc_enumerator_substitute(const sdc_enumerator* e, const char* name, const char* value,
                                     sdc_enumerator** out) {
  return guarded([&] {
    require(e, "enumerator");
    require(name, "name");
    require(value, "value");
    require(out, "out");
    *out = new sdc_enumerator{e->value.substitute({{name, sdcodes::parse_rational(value)}})};
  });
}

void sdc_enumerator_free(sdc_enumerator* e) { delete e; }

long sdc_enumerator_length(const sdc_enumerator* e) { return e ? e->value.params.n() : 0; }

int sdc_enumerator_r(const sdc_enumerator* e) { return e ? e->value.params.r() : 0; }

size_t sdc_enumerator_count(const sdc_enumerator* e, sdc_side side) { return e ? side_of(e, side).size() : 0; }

sdc_status sdc_enumerator_coefficient(const sdc_enumerator* e, sdc_side side, size_t i, char** out) {
  return guarded([&] {
    require(e, "enumerator");
    require(out, "out");
    const auto& v = side_of(e, side);
    if (i >= v.size()) sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "coefficient index out of range");
    *out = dup_string(v[i].to_string());
  });
}

size_t sdc_enumerator_parameter_count(const sdc_enumerator* e) { return e ? e->value.parameters().size() : 0; }

sdc_status sdc_enumerator_parameter(const sdc_enumerator* e, size_t i, char** out) {
  return guarded([&] {
    require(e, "enumerator");
    require(out, "out");
    const auto names = e->value.parameters();
    if (i >= names.size()) sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "parameter index out of range");
    *out = dup_string(names[i]);
  });
}

sdc_status sdc_enumerator_admissible(const sdc_enumerator* e, int* ok, sdc_side* bad_side, size_t* bad_index,
                                     char** bad_value) {
  return guarded([&] {
    require(e, "enumerator");
    require(ok, "ok");
    const auto result = sdcodes::admissible(e->value);
    *ok = result.ok ? 1 : 0;
    if (result.first_offender) {
      if (bad_side) *bad_side = result.first_offender->side == sdcodes::Side::A ? SDC_SIDE_CODE : SDC_SIDE_SHADOW;
      if (bad_index) *bad_index = result.first_offender->index;
      if (bad_value) *bad_value = dup_string(sdcodes::to_string(result.first_offender->value));
    } else if (bad_value) {
      *bad_value = nullptr;
    }
  });
}

sdc_status sdc_beta_range(sdc_family family, long m, long* lo, long* hi) {
  return guarded([&] {
    require(lo, "lo");
    require(hi, "hi");
    const auto range = sdcodes::beta_range(sdcodes::FamilyCase{to_family(family), m});
    *lo = range.first;
    *hi = range.second;
  });
}

// ------------------------------------------------- closed forms, scans

sdc_status sdc_closed_form_bm(sdc_family family, long m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(sdcodes::to_string(sdcodes::closed_form_bm({to_family(family), m})));
  });
}

sdc_status sdc_closed_form_bm1(sdc_family family, long m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(sdcodes::to_string(sdcodes::closed_form_bm1({to_family(family), m})));
  });
}

sdc_status sdc_closed_form_a2m1(long m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(sdcodes::to_string(sdcodes::closed_form_a2m1(m)));
  });
}

sdc_status sdc_evaluate_f(sdc_family family, long m, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(sdcodes::to_string(sdcodes::evaluate_f(to_family(family), m)));
  });
}

sdc_status sdc_f_coefficients(sdc_family family, char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto& c : sdcodes::f_poly(to_family(family)).coefficients) {
      if (!s.empty()) s += ',';
      s += sdcodes::to_string(c);
    }
    *out = dup_string(s);
  });
}

sdc_status sdc_largest_root_bracket(sdc_family family, long* lo, long* hi) {
  return guarded([&] {
    require(lo, "lo");
    require(hi, "hi");
    const auto b = sdcodes::largest_root_bracket(to_family(family));
    *lo = b.first;
    *hi = b.second;
  });
}

sdc_status sdc_scan(sdc_family family, long m_max, unsigned jobs, int* admissible, long* max_admissible) {
  return guarded([&] {
    require(admissible, "admissible");
    const auto scan = sdcodes::nonexistence_scan(to_family(family), m_max, jobs);
    for (std::size_t i = 0; i < scan.size(); ++i) admissible[i] = scan[i].result.ok ? 1 : 0;
    if (max_admissible) *max_admissible = sdcodes::max_admissible(scan);
  });
}

sdc_status sdc_scan_values(sdc_family family, const long* ms, size_t count, unsigned jobs, int* admissible) {
  return guarded([&] {
    require(ms, "ms");
    require(admissible, "admissible");
    const auto scan = sdcodes::scan_values(to_family(family), std::vector<long>(ms, ms + count), jobs);
    for (std::size_t i = 0; i < scan.size(); ++i) admissible[i] = scan[i].result.ok ? 1 : 0;
  });
}

// ------------------------------------------------------ transform tables

sdc_status sdc_tables_create(long n, sdc_tables** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sdc_tables{sdcodes::build_transform_tables(sdcodes::FamilyParams::from_length(n))};
  });
}

void sdc_tables_free(sdc_tables* t) { delete t; }

size_t sdc_tables_size(const sdc_tables* t) { return t ? t->value.params.c_count() : 0; }

sdc_status sdc_tables_entry(const sdc_tables* t, sdc_table which, size_t i, size_t j, char** out) {
  return guarded([&] {
    require(t, "tables");
    require(out, "out");
    const auto& m = table_of(t, which);
    if (i >= m.rows() || j >= m.cols()) sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "table index out of range");
    *out = dup_string(sdcodes::to_string(m.at(i, j)));
  });
}

sdc_status sdc_tables_check_alpha_closed(const sdc_tables* t, size_t* mismatches) {
  return guarded([&] {
    require(t, "tables");
    require(mismatches, "mismatches");
    const auto& p = t->value.params;
    std::size_t bad = 0;
    for (long i = 1; i <= p.top(); ++i)
      if (sdcodes::alpha_i0_closed(i, p.n()) != t->value.alpha.at(static_cast<std::size_t>(i), 0)) ++bad;
    *mismatches = bad;
  });
}

sdc_status sdc_tables_check_beta_closed(const sdc_tables* t, size_t* mismatches) {
  return guarded([&] {
    require(t, "tables");
    require(mismatches, "mismatches");
    const auto& p = t->value.params;
    std::size_t bad = 0;
    for (long i = 1; i <= p.top(); ++i)
      for (long j = 0; i + j <= p.top(); ++j)
        if (sdcodes::beta_closed(i, j, p) != t->value.beta.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
          ++bad;
    *mismatches = bad;
  });
}

// ----------------------------------------------------------------- codes

sdc_status sdc_code_from_rows(const char* const* rows, size_t k, sdc_code** out) {
  return guarded([&] {
    require(rows, "rows");
    require(out, "out");
    std::vector<sdcodes::BitVector> v;
    for (size_t i = 0; i < k; ++i) {
      require(rows[i], "row");
      v.push_back(sdcodes::BitVector::from_string(rows[i]));
    }
    *out = new sdc_code{sdcodes::build_code(v)};
  });
}

sdc_status sdc_code_read_file(const char* path, sdc_code** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sdc_code{sdcodes::read_generator_file(path)};
  });
}

sdc_status sdc_code_write_file(const sdc_code* c, const char* path) {
  return guarded([&] {
    require(c, "code");
    require(path, "path");
    sdcodes::write_generator_file(c->value, path);
  });
}

sdc_status sdc_code_c46(sdc_code** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sdc_code{sdcodes::c46()};
  });
}

void sdc_code_free(sdc_code* c) { delete c; }

size_t sdc_code_length(const sdc_code* c) { return c ? c->value.length() : 0; }

size_t sdc_code_dimension(const sdc_code* c) { return c ? c->value.dimension() : 0; }

sdc_status sdc_code_row(const sdc_code* c, size_t i, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    if (i >= c->value.dimension()) sdcodes::fail(sdcodes::ErrorKind::InvalidArgument, "row index out of range");
    *out = dup_string(c->value.generators()[i].to_string());
  });
}

sdc_status sdc_code_is_self_dual(const sdc_code* c, int* out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = sdcodes::is_self_dual(c->value) ? 1 : 0;
  });
}

sdc_status sdc_code_parity(const sdc_code* c, sdc_parity* out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    switch (sdcodes::parity_class(c->value)) {
      case sdcodes::ParityClass::DoublyEven: *out = SDC_DOUBLY_EVEN; break;
      case sdcodes::ParityClass::SinglyEven: *out = SDC_SINGLY_EVEN; break;
      case sdcodes::ParityClass::Neither: *out = SDC_NEITHER; break;
    }
  });
}

sdc_status sdc_code_weight_distribution(const sdc_code* c, uint64_t* counts) {
  return guarded([&] {
    require(c, "code");
    require(counts, "counts");
    const auto w = sdcodes::weight_distribution(c->value);
    std::copy(w.counts.begin(), w.counts.end(), counts);
  });
}

sdc_status sdc_code_min_distance(const sdc_code* c, long* d) {
  return guarded([&] {
    require(c, "code");
    require(d, "d");
    *d = sdcodes::minimum_distance(c->value);
  });
}

sdc_status sdc_code_shadow(const sdc_code* c, uint64_t* counts, long* shadow_min_weight, int* minimal) {
  return guarded([&] {
    require(c, "code");
    const auto s = sdcodes::shadow(c->value);
    if (counts) std::copy(s.shadow_weights.counts.begin(), s.shadow_weights.counts.end(), counts);
    const long ds = static_cast<long>(s.min_weight());
    if (shadow_min_weight) *shadow_min_weight = ds;
    if (minimal) *minimal = ds == sdcodes::minimal_shadow_r(static_cast<long>(c->value.length())) ? 1 : 0;
  });
}

sdc_status sdc_code_neighbor(const sdc_code* c, const size_t* support, size_t count, sdc_code** out) {
  return guarded([&] {
    require(c, "code");
    require(support, "support");
    require(out, "out");
    const sdcodes::SupportSet s(std::vector<std::size_t>(support, support + count));
    *out = new sdc_code{sdcodes::neighbor(c->value, s)};
  });
}

sdc_status sdc_code_extract_beta(const sdc_code* c, sdc_family family, long m, long* beta) {
  return guarded([&] {
    require(c, "code");
    require(beta, "beta");
    *beta = sdcodes::extract_beta(c->value, sdcodes::FamilyCase{to_family(family), m});
  });
}

sdc_status sdc_code_macwilliams_ok(const sdc_code* c, int* ok) {
  return guarded([&] {
    require(c, "code");
    require(ok, "ok");
    *ok = sdcodes::macwilliams_fixed_point(sdcodes::weight_distribution(c->value)) ? 1 : 0;
  });
}

// --------------------------------------------------------- neighbor table

size_t sdc_table1_count(void) { return sdcodes::table1_entries().size(); }

sdc_status sdc_table1_row_verify(size_t index, sdc_table1_row* out) {
  return guarded([&] {
    require(out, "out");
    const auto row = sdcodes::verify_table1_row(sdcodes::c46(), index);
    *out = sdc_table1_row{};
    out->index = row.index;
    const auto& pos = row.support.positions();
    out->support_len = std::min<std::size_t>(pos.size(), 46);
    std::copy(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(out->support_len), out->support);
    out->expected_beta = row.expected_beta;
    out->beta = row.beta;
    out->n = row.n;
    out->k = row.k;
    out->d = row.d;
    out->self_dual = row.self_dual ? 1 : 0;
    out->singly_even = row.singly_even ? 1 : 0;
    out->minimal_shadow = row.minimal_shadow ? 1 : 0;
    out->verified = row.verified() ? 1 : 0;
  });
}

}  // extern "C"
