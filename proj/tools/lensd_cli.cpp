// lensd: command-line front end over the lensd C API.
//
//   lensd dtable P Q [--format json|csv|plain] [--reverse-orientation]
//   lensd classify P Q1 Q2 [--require-spin-compat true|false] [--format ...]
//   lensd sbar P Q [--format ...]
//   lensd verify SUITE [--pmax N] [--profile quick|full] [--format ...]
//
// Payload goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 counterexample (or internal failure), 2 usage error.

#include "lensd/lensd.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// Thrown for API failures; carries the exit code to use.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(lensd_status status) {
  if (status == LENSD_OK) return;
  const int code = status == LENSD_INTERNAL_ERROR ? kExitCounterexample : kExitUsage;
  throw CommandError{code, lensd_last_error()};
}

template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
};

using TableHandle = Handle<lensd_dtable, lensd_dtable_destroy>;
using VerdictHandle = Handle<lensd_verdict, lensd_verdict_destroy>;
using SbarHandle = Handle<lensd_sbar, lensd_sbar_destroy>;
using ReportHandle = Handle<lensd_report, lensd_report_destroy>;

std::string approx_text(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const std::string& command, Json params, Json payload) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["payload"] = std::move(payload);
  doc["version"] = lensd_version();
  return doc.dump(2) + "\n";
}

std::string space_name(std::int64_t p, std::int64_t q) {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// ---- dtable ---------------------------------------------------------------

std::string cmd_dtable(std::int64_t p, std::int64_t q, bool reverse, const std::string& format) {
  TableHandle base;
  check(lensd_dtable_create(p, q, &base.ptr));
  TableHandle reversed;
  const lensd_dtable* table = base.ptr;
  if (reverse) {
    check(lensd_dtable_reverse(base.ptr, &reversed.ptr));
    table = reversed.ptr;
  }
  const std::string orientation = reverse ? "reversed" : "standard";

  struct Row {
    std::int64_t label;
    std::string value;
    double approx;
    bool spin;
  };
  std::vector<Row> rows;
  for (std::int64_t i = 0; i < p; ++i) {
    Row row{i, "", 0.0, false};
    const char* text = nullptr;
    int spin = 0;
    check(lensd_dtable_value(table, i, &text));
    check(lensd_dtable_value_approx(table, i, &row.approx));
    check(lensd_dtable_is_spin(table, i, &spin));
    row.value = text;
    row.spin = spin != 0;
    rows.push_back(row);
  }

  std::ostringstream out;
  if (format == "json") {
    Json list = Json::array();
    for (const Row& r : rows) {
      list.push_back(Json{{"label", r.label}, {"d", r.value}, {"d_approx", r.approx},
                          {"spin", r.spin}});
    }
    return render_json("dtable", Json{{"p", p}, {"q", q}, {"orientation", orientation}},
                       Json{{"space", space_name(p, q)}, {"rows", list}});
  }
  if (format == "csv") {
    out << "label,d,d_approx,spin\n";
    for (const Row& r : rows) {
      out << r.label << "," << r.value << "," << approx_text(r.approx) << ","
          << (r.spin ? "spin" : "") << "\n";
    }
    return out.str();
  }
  out << space_name(p, q) << " orientation=" << orientation << "\n";
  out << "label\td\td_approx\tspin\n";
  for (const Row& r : rows) {
    out << r.label << "\t" << r.value << "\t" << approx_text(r.approx) << "\t"
        << (r.spin ? "*" : "") << "\n";
  }
  return out.str();
}

// ---- classify -------------------------------------------------------------

std::string cmd_classify(std::int64_t p, std::int64_t q1, std::int64_t q2, bool spin_compat,
                         const std::string& format) {
  VerdictHandle verdict;
  check(lensd_classify(p, q1, q2, &verdict.ptr));
  const bool homeo = lensd_verdict_homeomorphic(verdict.ptr) != 0;
  const int only_spin = spin_compat ? 1 : 0;
  const bool iso = lensd_verdict_witness_count(verdict.ptr, only_spin) > 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> witnesses;
  for (std::int64_t k = 0; k < lensd_verdict_witness_count(verdict.ptr, only_spin); ++k) {
    std::int64_t c = 0;
    std::int64_t u = 0;
    check(lensd_verdict_witness(verdict.ptr, only_spin, k, &c, &u));
    witnesses.emplace_back(c, u);
  }
  const bool agree = homeo == iso;

  std::ostringstream out;
  if (format == "json") {
    Json list = Json::array();
    for (const auto& [c, u] : witnesses) list.push_back(Json{{"c", c}, {"u", u}});
    return render_json(
        "classify",
        Json{{"p", p}, {"q1", q1}, {"q2", q2}, {"require_spin_compat", spin_compat}},
        Json{{"homeomorphic", homeo},
             {"d_iso_exists", iso},
             {"agreement", agree},
             {"witness_count", static_cast<std::int64_t>(witnesses.size())},
             {"witnesses", list}});
  }
  if (format == "csv") {
    out << "field,value\n";
    out << "homeomorphic," << (homeo ? "true" : "false") << "\n";
    out << "d_iso_exists," << (iso ? "true" : "false") << "\n";
    out << "agreement," << (agree ? "true" : "false") << "\n";
    for (const auto& [c, u] : witnesses) out << "witness,c=" << c << " u=" << u << "\n";
    return out.str();
  }
  out << space_name(p, q1) << " vs " << space_name(p, q2) << "\n";
  out << "homeomorphic: " << (homeo ? "true" : "false") << "\n";
  out << "d_iso_exists: " << (iso ? "true" : "false")
      << (spin_compat ? " (spin-compatible)" : " (any)") << "\n";
  out << "agreement: " << (agree ? "true" : "false") << "\n";
  out << "witnesses:";
  for (const auto& [c, u] : witnesses) out << " (c=" << c << ",u=" << u << ")";
  out << "\n";
  return out.str();
}

// ---- sbar -----------------------------------------------------------------

std::string cmd_sbar(std::int64_t p, std::int64_t q, const std::string& format) {
  SbarHandle sbar;
  check(lensd_sbar_create(p, q, &sbar.ptr));
  const bool prime = lensd_sbar_is_prime(sbar.ptr) != 0;
  const int characterization = lensd_sbar_characterization(sbar.ptr);
  std::vector<std::pair<std::int64_t, std::int64_t>> members;
  for (std::int64_t k = 0; k < lensd_sbar_member_count(sbar.ptr); ++k) {
    std::int64_t a = 0;
    std::int64_t count = 0;
    check(lensd_sbar_member(sbar.ptr, k, &a, &count));
    members.emplace_back(a, count);
  }
  const std::string flag = characterization < 0 ? "not-applicable"
                           : characterization == 1 ? "match"
                                                   : "mismatch";

  std::ostringstream out;
  if (format == "json") {
    Json list = Json::array();
    for (const auto& [a, count] : members) list.push_back(Json{{"member", a}, {"multiplicity", count}});
    return render_json("sbar", Json{{"p", p}, {"q", q}},
                       Json{{"space", space_name(p, q)},
                            {"prime", prime},
                            {"spin", lensd_sbar_spin(sbar.ptr)},
                            {"size", static_cast<std::int64_t>(members.size())},
                            {"members", list},
                            {"characterization", flag}});
  }
  if (format == "csv") {
    out << "member,multiplicity\n";
    for (const auto& [a, count] : members) out << a << "," << count << "\n";
    return out.str();
  }
  out << space_name(p, q) << (prime ? " (p prime)" : " (p composite)") << "\n";
  out << "members:";
  for (const auto& [a, count] : members) out << " " << a << ":" << count;
  out << "\n";
  out << "characterization: " << flag << "\n";
  return out.str();
}

// ---- verify ---------------------------------------------------------------

std::string cmd_verify(const std::string& suite, const std::string& profile, std::int64_t p_max,
                       const std::string& format, bool& passed) {
  ReportHandle report;
  check(lensd_verify(suite.c_str(), profile.c_str(), p_max, &report.ptr));
  passed = lensd_report_passed(report.ptr) != 0;
  const std::int64_t total = lensd_report_counterexample_count(report.ptr);
  const std::int64_t stored = lensd_report_stored_counterexamples(report.ptr);

  struct Row {
    std::string param;
    std::int64_t checked;
    std::int64_t passed;
  };
  std::vector<Row> rows;
  for (std::int64_t k = 0; k < lensd_report_row_count(report.ptr); ++k) {
    const char* param = nullptr;
    Row row{"", 0, 0};
    check(lensd_report_row(report.ptr, k, &param, &row.checked, &row.passed));
    row.param = param;
    rows.push_back(row);
  }
  std::vector<std::pair<std::string, std::string>> notes;
  for (std::int64_t k = 0; k < lensd_report_note_count(report.ptr); ++k) {
    const char* key = nullptr;
    const char* value = nullptr;
    check(lensd_report_note(report.ptr, k, &key, &value));
    notes.emplace_back(key, value);
  }
  std::vector<std::string> failures;
  for (std::int64_t k = 0; k < stored; ++k) failures.emplace_back(lensd_report_counterexample(report.ptr, k));
  if (total > stored) {
    failures.push_back(std::to_string(total - stored) + " further counterexamples not shown");
  }

  Json params{{"suite", suite}, {"profile", profile}};
  if (p_max > 0) params["pmax"] = p_max;

  std::ostringstream out;
  if (format == "json") {
    Json row_list = Json::array();
    for (const Row& r : rows) {
      row_list.push_back(Json{{"param", r.param}, {"checked", r.checked}, {"passed", r.passed}});
    }
    Json note_obj = Json::object();
    for (const auto& [key, value] : notes) note_obj[key] = value;
    return render_json("verify", params,
                       Json{{"passed", passed},
                            {"counterexample_count", total},
                            {"rows", row_list},
                            {"notes", note_obj},
                            {"counterexamples", failures}});
  }
  if (format == "csv") {
    out << "kind,param,checked,passed,detail\n";
    for (const Row& r : rows) {
      out << "row," << csv_field(r.param) << "," << r.checked << "," << r.passed << ",\n";
    }
    for (const auto& [key, value] : notes) out << "note," << csv_field(key) << ",,," << csv_field(value) << "\n";
    for (const auto& f : failures) out << "counterexample,,,," << csv_field(f) << "\n";
    return out.str();
  }
  out << "suite " << suite << " profile=" << profile;
  if (p_max > 0) out << " pmax=" << p_max;
  out << "\n";
  for (const Row& r : rows) {
    out << r.param << " checked=" << r.checked << " passed=" << r.passed << "\n";
  }
  for (const auto& [key, value] : notes) out << "note " << key << ": " << value << "\n";
  for (const auto& f : failures) out << "COUNTEREXAMPLE " << f << "\n";
  out << "RESULT " << (passed ? "PASS" : "FAIL") << " counterexamples=" << total << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact d-invariants and homology cobordism classification of lens spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lensd_version());

  std::string format = "plain";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t q2 = 0;
  bool reverse = false;
  bool spin_compat = true;
  std::string suite;
  std::string profile = "full";
  std::int64_t p_max = 0;

  auto* dtable = app.add_subcommand("dtable", "Table of d-invariants of L(p,q)");
  dtable->add_option("p", p)->required();
  dtable->add_option("q", q)->required();
  dtable->add_flag("--reverse-orientation", reverse, "Tabulate -L(p,q) instead");
  add_format(dtable);

  auto* classify = app.add_subcommand("classify", "Compare L(p,q1) and L(p,q2)");
  classify->add_option("p", p)->required();
  classify->add_option("q1", q)->required();
  classify->add_option("q2", q2)->required();
  classify->add_option("--require-spin-compat", spin_compat,
                       "Only count isomorphisms carrying spin structures to spin structures")
      ->default_str("true");
  add_format(classify);

  auto* sbar = app.add_subcommand("sbar", "Image of the relative invariant mod p");
  sbar->add_option("p", p)->required();
  sbar->add_option("q", q)->required();
  add_format(sbar);

  auto* verify = app.add_subcommand("verify", "Run a finite verification sweep");
  verify->add_option("suite", suite,
                     "shift|spin|lemma3|theorem1|keyeq|theorem2|lemma4|lemma5|all")
      ->required();
  verify->add_option("--pmax", p_max, "Upper bound on p for the selected suites")
      ->check(CLI::PositiveNumber);
  verify->add_option("--profile", profile, "Built-in caps")
      ->check(CLI::IsMember({"quick", "full"}));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dtable->parsed()) {
      std::cout << cmd_dtable(p, q, reverse, format);
    } else if (classify->parsed()) {
      std::cout << cmd_classify(p, q, q2, spin_compat, format);
    } else if (sbar->parsed()) {
      std::cout << cmd_sbar(p, q, format);
    } else if (verify->parsed()) {
      if (!lensd_is_suite_name(suite.c_str())) {
        std::cerr << "error: unknown suite '" << suite << "'\n" << verify->help();
        return kExitUsage;
      }
      bool passed = false;
      std::cout << cmd_verify(suite, profile, p_max, format, passed);
      return passed ? kExitOk : kExitCounterexample;
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitOk;
}
