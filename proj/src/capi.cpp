#include "lensd/lensd.h"

#include "lensd/classify.hpp"
#include "lensd/dinvariants.hpp"
#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "lensd/residues.hpp"
#include "lensd/sweeps.hpp"

#include <memory>
#include <new>
#include <string>
#include <vector>

struct lensd_dtable {
  lensd::DInvTable table;
  lensd::SpinSet spins;
  std::vector<std::string> text;
};

struct lensd_verdict {
  lensd::ClassificationVerdict verdict;
};

struct lensd_sbar {
  lensd::SbarSet sbar;
  std::vector<std::int64_t> members;
  int characterization = -1;
};

struct lensd_report {
  lensd::SweepReport report;
};

namespace {

thread_local std::string g_last_error;

lensd_status set_error(lensd_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
lensd_status guarded(Fn&& fn) {
  try {
    fn();
    return LENSD_OK;
  } catch (const lensd::NotCoprime& e) {
    return set_error(LENSD_NOT_COPRIME, e.what());
  } catch (const lensd::InvalidArgument& e) {
    return set_error(LENSD_INVALID_ARGUMENT, e.what());
  } catch (const lensd::InternalInconsistency& e) {
    return set_error(LENSD_INTERNAL_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LENSD_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LENSD_INTERNAL_ERROR, e.what());
  }
}

lensd_status null_pointer() { return set_error(LENSD_NULL_POINTER, "null pointer argument"); }

lensd_status out_of_range(std::int64_t index) {
  g_last_error = "index " + std::to_string(index) + " out of range";
  return LENSD_OUT_OF_RANGE;
}

std::unique_ptr<lensd_dtable> wrap_table(lensd::DInvTable table) {
  lensd::SpinSet spins = lensd::spin_structures(table.space());
  std::vector<std::string> text;
  text.reserve(table.values().size());
  for (const auto& v : table.values()) text.push_back(v.str());
  return std::unique_ptr<lensd_dtable>(
      new lensd_dtable{std::move(table), std::move(spins), std::move(text)});
}

}  // namespace

extern "C" {

const char* lensd_version(void) { return "1.0.0"; }

const char* lensd_status_name(lensd_status status) {
  switch (status) {
    case LENSD_OK: return "ok";
    case LENSD_INVALID_ARGUMENT: return "invalid argument";
    case LENSD_NOT_COPRIME: return "not coprime";
    case LENSD_OUT_OF_RANGE: return "out of range";
    case LENSD_INTERNAL_ERROR: return "internal error";
    case LENSD_NULL_POINTER: return "null pointer";
  }
  return "unknown status";
}

const char* lensd_last_error(void) { return g_last_error.c_str(); }

/* d-tables */

lensd_status lensd_dtable_create(int64_t p, int64_t q, lensd_dtable** out) {
  if (out == nullptr) return null_pointer();
  *out = nullptr;
  return guarded([&] { *out = wrap_table(lensd::d_table(lensd::LensSpace(p, q))).release(); });
}

lensd_status lensd_dtable_reverse(const lensd_dtable* table, lensd_dtable** out) {
  if (table == nullptr || out == nullptr) return null_pointer();
  *out = nullptr;
  return guarded(
      [&] { *out = wrap_table(lensd::reverse_orientation_table(table->table)).release(); });
}

void lensd_dtable_destroy(lensd_dtable* table) { delete table; }

int64_t lensd_dtable_p(const lensd_dtable* table) {
  return table == nullptr ? 0 : table->table.space().p();
}

int64_t lensd_dtable_q(const lensd_dtable* table) {
  return table == nullptr ? 0 : table->table.space().q();
}

int lensd_dtable_is_reversed(const lensd_dtable* table) {
  return table != nullptr && table->table.reversed() ? 1 : 0;
}

lensd_status lensd_dtable_value(const lensd_dtable* table, int64_t label, const char** value) {
  if (table == nullptr || value == nullptr) return null_pointer();
  *value = table->text[static_cast<std::size_t>(lensd::rep(label, table->table.space().p()))]
               .c_str();
  return LENSD_OK;
}

lensd_status lensd_dtable_value_approx(const lensd_dtable* table, int64_t label, double* value) {
  if (table == nullptr || value == nullptr) return null_pointer();
  *value = table->table[label].to_double();
  return LENSD_OK;
}

lensd_status lensd_dtable_is_spin(const lensd_dtable* table, int64_t label, int* is_spin) {
  if (table == nullptr || is_spin == nullptr) return null_pointer();
  *is_spin = table->spins.contains(lensd::rep(label, table->table.space().p())) ? 1 : 0;
  return LENSD_OK;
}

/* classification */

lensd_status lensd_classify(int64_t p, int64_t q1, int64_t q2, lensd_verdict** out) {
  if (out == nullptr) return null_pointer();
  *out = nullptr;
  return guarded([&] { *out = new lensd_verdict{lensd::classify(p, q1, q2)}; });
}

void lensd_verdict_destroy(lensd_verdict* verdict) { delete verdict; }

int lensd_verdict_homeomorphic(const lensd_verdict* verdict) {
  return verdict != nullptr && verdict->verdict.homeomorphic ? 1 : 0;
}

int lensd_verdict_d_iso_exists(const lensd_verdict* verdict) {
  return verdict != nullptr && verdict->verdict.d_iso_exists ? 1 : 0;
}

int lensd_verdict_consistent(const lensd_verdict* verdict) {
  return verdict != nullptr && verdict->verdict.consistent() ? 1 : 0;
}

int64_t lensd_verdict_witness_count(const lensd_verdict* verdict, int spin_compatible_only) {
  if (verdict == nullptr) return 0;
  const auto& list = spin_compatible_only ? verdict->verdict.spin_compatible_witnesses
                                          : verdict->verdict.witnesses;
  return static_cast<int64_t>(list.size());
}

lensd_status lensd_verdict_witness(const lensd_verdict* verdict, int spin_compatible_only,
                                   int64_t index, int64_t* offset, int64_t* unit) {
  if (verdict == nullptr || offset == nullptr || unit == nullptr) return null_pointer();
  const auto& list = spin_compatible_only ? verdict->verdict.spin_compatible_witnesses
                                          : verdict->verdict.witnesses;
  if (index < 0 || index >= static_cast<int64_t>(list.size())) return out_of_range(index);
  *offset = list[static_cast<std::size_t>(index)].offset;
  *unit = list[static_cast<std::size_t>(index)].unit;
  return LENSD_OK;
}

/* sbar */

lensd_status lensd_sbar_create(int64_t p, int64_t q, lensd_sbar** out) {
  if (out == nullptr) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    auto holder = std::make_unique<lensd_sbar>();
    holder->sbar = lensd::sbar(p, q);
    holder->members = holder->sbar.members();
    if (p != 2 && lensd::is_prime(p)) {
      holder->characterization = holder->members == lensd::residue_characterization(p, q) ? 1 : 0;
    }
    *out = holder.release();
  });
}

void lensd_sbar_destroy(lensd_sbar* sbar) { delete sbar; }

int lensd_sbar_is_prime(const lensd_sbar* sbar) {
  return sbar != nullptr && sbar->sbar.prime ? 1 : 0;
}

int64_t lensd_sbar_spin(const lensd_sbar* sbar) { return sbar == nullptr ? 0 : sbar->sbar.spin; }

int64_t lensd_sbar_member_count(const lensd_sbar* sbar) {
  return sbar == nullptr ? 0 : static_cast<int64_t>(sbar->members.size());
}

lensd_status lensd_sbar_member(const lensd_sbar* sbar, int64_t index, int64_t* value,
                               int64_t* multiplicity) {
  if (sbar == nullptr || value == nullptr || multiplicity == nullptr) return null_pointer();
  if (index < 0 || index >= static_cast<int64_t>(sbar->members.size())) return out_of_range(index);
  *value = sbar->members[static_cast<std::size_t>(index)];
  *multiplicity = sbar->sbar.multiplicity.at(*value);
  return LENSD_OK;
}

int lensd_sbar_characterization(const lensd_sbar* sbar) {
  return sbar == nullptr ? -1 : sbar->characterization;
}

/* verification */

int lensd_is_suite_name(const char* suite) {
  return suite != nullptr && lensd::is_suite_name(suite) ? 1 : 0;
}

lensd_status lensd_verify(const char* suite, const char* profile, int64_t p_max,
                          lensd_report** out) {
  if (suite == nullptr || out == nullptr) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    if (!lensd::is_suite_name(suite)) {
      throw lensd::InvalidArgument(std::string("unknown suite '") + suite + "'");
    }
    lensd::SweepCaps caps = lensd::SweepCaps::profile(profile == nullptr ? "full" : profile);
    if (p_max > 0) caps = caps.with_all(p_max);
    *out = new lensd_report{lensd::run_suite(suite, caps)};
  });
}

void lensd_report_destroy(lensd_report* report) { delete report; }

const char* lensd_report_suite(const lensd_report* report) {
  return report == nullptr ? "" : report->report.suite.c_str();
}

int lensd_report_passed(const lensd_report* report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

int64_t lensd_report_counterexample_count(const lensd_report* report) {
  return report == nullptr ? 0 : report->report.counterexample_count;
}

int64_t lensd_report_stored_counterexamples(const lensd_report* report) {
  return report == nullptr ? 0 : static_cast<int64_t>(report->report.counterexamples.size());
}

const char* lensd_report_counterexample(const lensd_report* report, int64_t index) {
  if (report == nullptr || index < 0 ||
      index >= static_cast<int64_t>(report->report.counterexamples.size())) {
    return nullptr;
  }
  return report->report.counterexamples[static_cast<std::size_t>(index)].c_str();
}

int64_t lensd_report_row_count(const lensd_report* report) {
  return report == nullptr ? 0 : static_cast<int64_t>(report->report.rows.size());
}

lensd_status lensd_report_row(const lensd_report* report, int64_t index, const char** param,
                              int64_t* checked, int64_t* passed) {
  if (report == nullptr || param == nullptr || checked == nullptr || passed == nullptr) {
    return null_pointer();
  }
  if (index < 0 || index >= static_cast<int64_t>(report->report.rows.size())) {
    return out_of_range(index);
  }
  const auto& row = report->report.rows[static_cast<std::size_t>(index)];
  *param = row.param.c_str();
  *checked = row.checked;
  *passed = row.passed;
  return LENSD_OK;
}

int64_t lensd_report_note_count(const lensd_report* report) {
  return report == nullptr ? 0 : static_cast<int64_t>(report->report.notes.size());
}

lensd_status lensd_report_note(const lensd_report* report, int64_t index, const char** key,
                               const char** value) {
  if (report == nullptr || key == nullptr || value == nullptr) return null_pointer();
  if (index < 0 || index >= static_cast<int64_t>(report->report.notes.size())) {
    return out_of_range(index);
  }
  const auto& note = report->report.notes[static_cast<std::size_t>(index)];
  *key = note.first.c_str();
  *value = note.second.c_str();
  return LENSD_OK;
}

}  // extern "C"
