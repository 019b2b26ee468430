// sdcodes: command-line front end over the C interface.
//
// Exit status: 0 success, 1 a checked claim did not hold, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdcodes/sdcodes.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct CallError : std::runtime_error {
  sdc_status status;
  CallError(sdc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(sdc_status s) {
  if (s != SDC_OK) throw CallError(s, sdc_last_error());
}

int exit_code_for(sdc_status s) {
  switch (s) {
    case SDC_E_INVALID_ARGUMENT:
    case SDC_E_PARSE:
    case SDC_E_PRECONDITION:
      return kExitUsage;
    default:
      return kExitVerification;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sdc_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
};

using Enumerator = Handle<sdc_enumerator, sdc_enumerator_free>;
using Tables = Handle<sdc_tables, sdc_tables_free>;
using Code = Handle<sdc_code, sdc_code_free>;

enum class Format { Json, Text };

struct Options {
  std::string family;
  long m = 1;
  long m_max = 1;
  std::optional<long> beta;
  unsigned jobs = 1;
  Format format = Format::Json;
  std::string gen_file;
  std::string support;
  std::string out;
  std::size_t max_size = 64;
};

sdc_family family_of(const std::string& name) {
  sdc_family f{};
  check(sdc_family_parse(name.c_str(), &f));
  return f;
}

bool is_beta_family(sdc_family f) { return f == SDC_FAMILY_24M6 || f == SDC_FAMILY_24M22; }

/// Family and m whose length is n, if n falls in one of the five families.
std::optional<std::pair<sdc_family, long>> family_for_length(long n) {
  for (int i = SDC_FAMILY_24M2; i <= SDC_FAMILY_24M22; ++i) {
    const auto f = static_cast<sdc_family>(i);
    long n1 = 0;
    check(sdc_family_length(f, 1, &n1));
    const long base = n1 - 24;
    if (n >= base && (n - base) % 24 == 0) {
      const long m = (n - base) / 24;
      if (m >= 1 || f == SDC_FAMILY_24M22) return std::pair{f, m};
    }
  }
  return std::nullopt;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// ----------------------------------------------------------- enumerators

json side_pairs(const sdc_enumerator* e, sdc_side side) {
  const int r = sdc_enumerator_r(e);
  json out = json::array();
  const std::size_t count = sdc_enumerator_count(e, side);
  for (std::size_t i = 0; i < count; ++i) {
    char* s = nullptr;
    check(sdc_enumerator_coefficient(e, side, i, &s));
    const long exponent = side == SDC_SIDE_CODE ? static_cast<long>(2 * i) : static_cast<long>(4 * i) + r;
    out.push_back(json::array({exponent, take(s)}));
  }
  return out;
}

void print_prefix(const char* label, const json& pairs) {
  std::cout << label << ':';
  const std::size_t shown = std::min<std::size_t>(pairs.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    std::cout << (i ? " + " : " ") << '(' << pairs[i][1].get<std::string>() << ")y^" << pairs[i][0].get<long>();
  }
  if (pairs.size() > shown) std::cout << " + ...";
  std::cout << '\n';
}

int cmd_solve(const Options& o) {
  const sdc_family f = family_of(o.family);
  if (o.beta && !is_beta_family(f)) throw CallError(SDC_E_INVALID_ARGUMENT, "--beta applies only to 24m+6 and 24m+22");
  long n = 0;
  check(sdc_family_length(f, o.m, &n));

  Enumerator solved;
  check(sdc_solve(f, o.m, solved.out()));
  json doc;
  doc["family"] = sdc_family_name(f);
  doc["m"] = o.m;
  doc["n"] = n;

  const sdc_enumerator* shown = solved.p;
  Enumerator substituted;
  if (o.beta) {
    check(sdc_enumerator_substitute(solved.p, "beta", std::to_string(*o.beta).c_str(), substituted.out()));
    shown = substituted.p;
    long lo = 0;
    long hi = 0;
    bool in_range = false;
    if (sdc_beta_range(f, o.m, &lo, &hi) == SDC_OK) {
      in_range = lo <= *o.beta && *o.beta <= hi;
      doc["beta_range"] = {std::to_string(lo), std::to_string(hi)};
    }
    doc["beta"] = std::to_string(*o.beta);
    doc["beta_out_of_range"] = !in_range;
  }
  json params = json::array();
  for (std::size_t i = 0; i < sdc_enumerator_parameter_count(shown); ++i) {
    char* s = nullptr;
    check(sdc_enumerator_parameter(shown, i, &s));
    params.push_back(take(s));
  }
  doc["parameters"] = params;
  doc["code"] = side_pairs(shown, SDC_SIDE_CODE);
  doc["shadow"] = side_pairs(shown, SDC_SIDE_SHADOW);

  if (o.format == Format::Text) {
    std::cout << "n = " << n << " (" << sdc_family_name(f) << ", m = " << o.m << ")\n";
    print_prefix("W_C", doc["code"]);
    print_prefix("W_S", doc["shadow"]);
    if (o.beta && doc["beta_out_of_range"].get<bool>())
      std::cout << "warning: beta = " << *o.beta << " lies outside the admissible range\n";
  } else {
    emit(doc);
  }
  return kExitOk;
}

int cmd_scan(const Options& o) {
  const sdc_family f = family_of(o.family);
  if (is_beta_family(f))
    throw CallError(SDC_E_INVALID_ARGUMENT, std::string(sdc_family_name(f)) + " has a free parameter; use beta-range");
  if (o.m_max < 1) throw CallError(SDC_E_INVALID_ARGUMENT, "--m-max must be positive");
  std::vector<int> flags(static_cast<std::size_t>(o.m_max), 0);
  long best = 0;
  check(sdc_scan(f, o.m_max, o.jobs, flags.data(), &best));

  if (o.format == Format::Text) {
    std::cout << "family " << sdc_family_name(f) << ", m = 1.." << o.m_max << '\n';
    std::cout << "max admissible m: " << best << '\n';
    long first_bad = 0;
    for (std::size_t i = 0; i < flags.size() && first_bad == 0; ++i)
      if (!flags[i]) first_bad = static_cast<long>(i) + 1;
    if (first_bad) std::cout << "first inadmissible m: " << first_bad << '\n';
    return kExitOk;
  }
  json doc;
  doc["family"] = sdc_family_name(f);
  doc["m_max"] = o.m_max;
  doc["max_admissible"] = best;
  json entries = json::array();
  for (std::size_t i = 0; i < flags.size(); ++i)
    entries.push_back({{"m", static_cast<long>(i) + 1}, {"admissible", flags[i] != 0}});
  doc["scan"] = entries;
  emit(doc);
  return kExitOk;
}

int cmd_beta_range(const Options& o) {
  const sdc_family f = family_of(o.family);
  long lo = 0;
  long hi = 0;
  long n = 0;
  check(sdc_family_length(f, o.m, &n));
  check(sdc_beta_range(f, o.m, &lo, &hi));
  if (o.format == Format::Text) {
    std::cout << "n = " << n << ": " << lo << " <= beta <= " << hi << '\n';
  } else {
    emit({{"family", sdc_family_name(f)}, {"m", o.m}, {"n", n}, {"beta_min", std::to_string(lo)},
          {"beta_max", std::to_string(hi)}});
  }
  return kExitOk;
}

int cmd_root_bracket(const Options& o) {
  const sdc_family f = family_of(o.family);
  long lo = 0;
  long hi = 0;
  check(sdc_largest_root_bracket(f, &lo, &hi));
  char* coeffs = nullptr;
  check(sdc_f_coefficients(f, &coeffs));
  const std::string list = take(coeffs);
  if (o.format == Format::Text) {
    std::cout << "largest real root of f in (" << lo << ", " << hi << ")\n";
  } else {
    json c = json::array();
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) c.push_back(item);
    emit({{"family", sdc_family_name(f)}, {"f_coefficients", c}, {"bracket", {lo, hi}}});
  }
  return kExitOk;
}

int cmd_tables(const Options& o) {
  const sdc_family f = family_of(o.family);
  long n = 0;
  check(sdc_family_length(f, o.m, &n));
  Tables t;
  check(sdc_tables_create(n, t.out()));
  const std::size_t size = sdc_tables_size(t.p);
  if (size > o.max_size)
    throw CallError(SDC_E_INVALID_ARGUMENT,
                    "tables have " + std::to_string(size) + " rows; raise --max-size to print them");
  std::size_t alpha_bad = 0;
  std::size_t beta_bad = 0;
  check(sdc_tables_check_alpha_closed(t.p, &alpha_bad));
  check(sdc_tables_check_beta_closed(t.p, &beta_bad));

  const std::pair<const char*, sdc_table> names[] = {
      {"alpha_prime", SDC_ALPHA_PRIME}, {"alpha", SDC_ALPHA}, {"beta_prime", SDC_BETA_PRIME}, {"beta", SDC_BETA}};
  json doc;
  doc["family"] = sdc_family_name(f);
  doc["m"] = o.m;
  doc["n"] = n;
  for (const auto& [name, which] : names) {
    json rows = json::array();
    for (std::size_t i = 0; i < size; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < size; ++j) {
        char* s = nullptr;
        check(sdc_tables_entry(t.p, which, i, j, &s));
        row.push_back(take(s));
      }
      rows.push_back(row);
    }
    doc[name] = rows;
  }
  doc["alpha_closed_form_mismatches"] = alpha_bad;
  doc["beta_closed_form_mismatches"] = beta_bad;

  if (o.format == Format::Text) {
    for (const auto& [name, which] : names) {
      std::cout << name << ":\n";
      for (const auto& row : doc[name]) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "\t" : "  ") << row[j].get<std::string>();
        std::cout << '\n';
      }
    }
    std::cout << "alpha closed form " << (alpha_bad ? "MISMATCH" : "OK") << ", beta closed form "
              << (beta_bad ? "MISMATCH" : "OK") << '\n';
  } else {
    emit(doc);
  }
  return alpha_bad || beta_bad ? kExitVerification : kExitOk;
}

// ----------------------------------------------------------------- codes

void load_code(const Options& o, Code& c) {
  if (o.gen_file.empty()) throw CallError(SDC_E_INVALID_ARGUMENT, "--gen-file is required");
  check(sdc_code_read_file(o.gen_file.c_str(), c.out()));
}

json counts_json(const std::vector<std::uint64_t>& counts) {
  json out = json::array();
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w]) out.push_back(json::array({static_cast<long>(w), std::to_string(counts[w])}));
  return out;
}

const char* parity_name(sdc_parity p) {
  switch (p) {
    case SDC_DOUBLY_EVEN: return "doubly even";
    case SDC_SINGLY_EVEN: return "singly even";
    case SDC_NEITHER: return "not self-orthogonal";
  }
  return "?";
}

json describe_code(const sdc_code* c) {
  const std::size_t n = sdc_code_length(c);
  std::vector<std::uint64_t> counts(n + 1);
  check(sdc_code_weight_distribution(c, counts.data()));
  long d = 0;
  check(sdc_code_min_distance(c, &d));
  int self_dual = 0;
  check(sdc_code_is_self_dual(c, &self_dual));
  sdc_parity parity{};
  check(sdc_code_parity(c, &parity));
  return {{"n", n},
          {"k", sdc_code_dimension(c)},
          {"d", d},
          {"self_dual", self_dual != 0},
          {"parity", parity_name(parity)},
          {"weight_distribution", counts_json(counts)}};
}

int cmd_code_verify(const Options& o) {
  Code c;
  load_code(o, c);
  json doc = describe_code(c.p);
  if (o.format == Format::Text) {
    std::cout << '[' << doc["n"] << ", " << doc["k"] << ", " << doc["d"] << "] "
              << (doc["self_dual"].get<bool>() ? "self-dual" : "not self-dual") << ", "
              << doc["parity"].get<std::string>() << '\n';
  } else {
    emit(doc);
  }
  return kExitOk;
}

int cmd_code_shadow(const Options& o) {
  Code c;
  load_code(o, c);
  const std::size_t n = sdc_code_length(c.p);
  std::vector<std::uint64_t> counts(n + 1);
  long ds = 0;
  int minimal = 0;
  check(sdc_code_shadow(c.p, counts.data(), &ds, &minimal));
  if (o.format == Format::Text) {
    std::cout << "d(S) = " << ds << (minimal ? ", minimal shadow" : ", shadow not minimal") << '\n';
    for (std::size_t w = 0; w <= n; ++w)
      if (counts[w]) std::cout << "  " << w << '\t' << counts[w] << '\n';
  } else {
    emit({{"n", n}, {"shadow_min_weight", ds}, {"minimal_shadow", minimal != 0},
          {"shadow_distribution", counts_json(counts)}});
  }
  return kExitOk;
}

int cmd_code_neighbor(const Options& o) {
  Code c;
  load_code(o, c);
  if (o.support.empty()) throw CallError(SDC_E_INVALID_ARGUMENT, "--support is required");
  std::vector<std::size_t> support;
  std::stringstream ss(o.support);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      support.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw CallError(SDC_E_PARSE, "bad support entry '" + item + "'");
    }
  }
  Code nb;
  check(sdc_code_neighbor(c.p, support.data(), support.size(), nb.out()));
  if (!o.out.empty()) check(sdc_code_write_file(nb.p, o.out.c_str()));

  json doc = describe_code(nb.p);
  std::vector<std::uint64_t> shadow_counts(sdc_code_length(nb.p) + 1);
  long ds = 0;
  int minimal = 0;
  const bool singly = doc["parity"] == "singly even" && doc["self_dual"].get<bool>();
  if (singly) {
    check(sdc_code_shadow(nb.p, shadow_counts.data(), &ds, &minimal));
    doc["shadow_min_weight"] = ds;
    doc["minimal_shadow"] = minimal != 0;
  }
  std::optional<long> beta;
  if (singly && minimal) {
    if (const auto fm = family_for_length(static_cast<long>(sdc_code_length(nb.p))); fm && is_beta_family(fm->first)) {
      long b = 0;
      check(sdc_code_extract_beta(nb.p, fm->first, fm->second, &b));
      beta = b;
      doc["beta"] = std::to_string(b);
    }
  }
  if (!o.out.empty()) doc["written"] = o.out;
  if (o.format == Format::Text) {
    std::cout << '[' << doc["n"] << ", " << doc["k"] << ", " << doc["d"] << "] " << doc["parity"].get<std::string>();
    if (beta) std::cout << ", beta = " << *beta;
    std::cout << '\n';
  } else {
    emit(doc);
  }
  return kExitOk;
}

int cmd_code_table1(const Options& o) {
  const std::size_t count = sdc_table1_count();
  std::size_t ok = 0;
  json rows = json::array();
  for (std::size_t i = 1; i <= count; ++i) {
    sdc_table1_row row{};
    const sdc_status s = sdc_table1_row_verify(i, &row);
    if (s != SDC_OK && s != SDC_E_VERIFICATION) check(s);
    json support = json::array();
    for (std::size_t j = 0; j < row.support_len; ++j) support.push_back(row.support[j]);
    ok += row.verified ? 1 : 0;
    rows.push_back({{"index", i},
                    {"support", support},
                    {"n", row.n},
                    {"k", row.k},
                    {"d", row.d},
                    {"self_dual", row.self_dual != 0},
                    {"singly_even", row.singly_even != 0},
                    {"minimal_shadow", row.minimal_shadow != 0},
                    {"beta", std::to_string(row.beta)},
                    {"expected_beta", std::to_string(row.expected_beta)},
                    {"verified", row.verified != 0}});
  }
  const std::string summary = std::to_string(ok) + "/" + std::to_string(count) + " verified";
  if (o.format == Format::Text) {
    for (const auto& r : rows)
      std::cout << "N46," << r["index"] << ": [" << r["n"] << ", " << r["k"] << ", " << r["d"]
                << "] beta = " << r["beta"].get<std::string>() << (r["verified"].get<bool>() ? "  ok" : "  FAILED")
                << '\n';
    std::cout << summary << '\n';
  } else {
    emit({{"rows", rows}, {"summary", summary}});
  }
  return ok == count ? kExitOk : kExitVerification;
}

int cmd_code_c46(const Options& o) {
  Code c;
  check(sdc_code_c46(c.out()));
  if (!o.out.empty()) {
    check(sdc_code_write_file(c.p, o.out.c_str()));
  } else {
    std::cout << sdc_code_length(c.p) << ' ' << sdc_code_dimension(c.p) << '\n';
    for (std::size_t i = 0; i < sdc_code_dimension(c.p); ++i) {
      char* s = nullptr;
      check(sdc_code_row(c.p, i, &s));
      std::cout << take(s) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight enumerators and codes for singly even self-dual codes with minimal shadow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sdc_version()));

  Options o;
  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Length family: 24m+2, 24m+4, 24m+6, 24m+10, 24m+22")->required();
  };

  int (*handler)(const Options&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&handler, fn] { handler = fn; }); };

  auto* scan = app.add_subcommand("scan", "Admissibility scan over m = 1..m_max");
  add_family(scan);
  scan->add_option("--m-max", o.m_max, "Last m to scan")->required();
  scan->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  add_format(scan);
  bind(scan, cmd_scan);

  auto* solve = app.add_subcommand("solve", "Weight enumerators of code and shadow");
  add_family(solve);
  solve->add_option("--m", o.m, "Family index m")->required();
  solve->add_option("--beta", o.beta, "Substitute an integer value for beta");
  add_format(solve);
  bind(solve, cmd_solve);

  auto* range = app.add_subcommand("beta-range", "Admissible beta interval");
  add_family(range);
  range->add_option("--m", o.m, "Family index m")->required();
  add_format(range);
  bind(range, cmd_beta_range);

  auto* root = app.add_subcommand("root-bracket", "Unit interval containing the largest root of f");
  add_family(root);
  add_format(root);
  bind(root, cmd_root_bracket);

  auto* tables = app.add_subcommand("tables", "Transform matrices and closed-form checks");
  add_family(tables);
  tables->add_option("--m", o.m, "Family index m")->required();
  tables->add_option("--max-size", o.max_size, "Largest matrix size to print");
  add_format(tables);
  bind(tables, cmd_tables);

  auto* code = app.add_subcommand("code", "Binary code operations");
  code->require_subcommand(1);
  auto* verify = code->add_subcommand("verify", "Parameters, self-duality and parity");
  verify->add_option("--gen-file,gen-file", o.gen_file, "Generator matrix file");
  add_format(verify);
  bind(verify, cmd_code_verify);
  auto* shadow = code->add_subcommand("shadow", "Shadow weight distribution");
  shadow->add_option("--gen-file,gen-file", o.gen_file, "Generator matrix file");
  add_format(shadow);
  bind(shadow, cmd_code_shadow);
  auto* neighbor = code->add_subcommand("neighbor", "Neighbor <C ∩ x^perp, x> and its beta");
  neighbor->add_option("--gen-file,gen-file", o.gen_file, "Generator matrix file");
  neighbor->add_option("--support,support", o.support, "Comma-separated 1-based support of x");
  neighbor->add_option("--out", o.out, "Write the neighbor's generator matrix here");
  add_format(neighbor);
  bind(neighbor, cmd_code_neighbor);
  auto* table1 = code->add_subcommand("table1", "Rebuild and verify the ten C46 neighbors");
  add_format(table1);
  bind(table1, cmd_code_table1);
  auto* c46 = code->add_subcommand("c46", "Generator matrix of the circulant code C46");
  c46->add_option("--out", o.out, "Output file (stdout if omitted)");
  bind(c46, cmd_code_c46);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  o.format = format == "text" ? Format::Text : Format::Json;

  try {
    return handler(o);
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}
