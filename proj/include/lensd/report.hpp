#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lensd {

// Outcome of a finite verification sweep. Rows are per-parameter tallies in
// sweep order; counterexamples are human-readable one-liners.
struct SweepReport {
  struct Row {
    std::string param;
    std::int64_t checked = 0;
    std::int64_t passed = 0;
  };

  static constexpr std::size_t kMaxStoredCounterexamples = 64;

  std::string suite;
  std::vector<Row> rows;
  std::int64_t counterexample_count = 0;
  std::vector<std::string> counterexamples;  // at most kMaxStoredCounterexamples
  std::vector<std::pair<std::string, std::string>> notes;

  bool passed() const { return counterexample_count == 0; }

  void fail(std::string message) {
    ++counterexample_count;
    if (counterexamples.size() < kMaxStoredCounterexamples) {
      counterexamples.push_back(std::move(message));
    }
  }

  void note(std::string key, std::string value) {
    notes.emplace_back(std::move(key), std::move(value));
  }

  // Appends rows, counterexamples and notes of `other`.
  void absorb(const SweepReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    for (const auto& c : other.counterexamples) {
      if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(c);
    }
    counterexample_count += other.counterexample_count;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace lensd
