#include "lensd/sweeps.hpp"

#include "lensd/classify.hpp"
#include "lensd/dinvariants.hpp"
#include "lensd/errors.hpp"
#include "lensd/lemma_oracles.hpp"
#include "lensd/modarith.hpp"
#include "lensd/relative.hpp"
#include "lensd/residues.hpp"

#include <algorithm>
#include <functional>

namespace lensd {

SweepCaps SweepCaps::quick() {
  SweepCaps caps;
  caps.shift = 60;
  caps.spin = 60;
  caps.lemma3 = 60;
  caps.theorem1 = 20;
  caps.keyeq = 40;
  caps.theorem2 = 101;
  caps.lemma4 = 30;
  caps.lemma5 = 12;
  return caps;
}

SweepCaps SweepCaps::profile(const std::string& name) {
  if (name == "quick") return quick();
  if (name == "full") return full();
  throw InvalidArgument("unknown profile '" + name + "' (expected quick or full)");
}

SweepCaps SweepCaps::with_all(std::int64_t p_max) const {
  SweepCaps caps;
  caps.shift = caps.spin = caps.lemma3 = caps.theorem1 = p_max;
  caps.keyeq = caps.theorem2 = caps.lemma4 = caps.lemma5 = p_max;
  return caps;
}

namespace {

// Calls body for every L(p, q) with p_min <= p <= p_max, one row per p.
void for_each_lens_space(
    SweepReport& report, std::int64_t p_min, std::int64_t p_max,
    const std::function<bool(const LensSpace&, SweepReport&)>& body) {
  for (std::int64_t p = p_min; p <= p_max; ++p) {
    SweepReport::Row row{"p=" + std::to_string(p), 0, 0};
    for (std::int64_t q = p == 1 ? 0 : 1; q < std::max<std::int64_t>(p, 1); ++q) {
      if (p > 1 && !is_unit(q, p)) continue;
      const LensSpace space(p, q);
      ++row.checked;
      bool ok = false;
      try {
        ok = body(space, report);
      } catch (const InternalInconsistency& e) {
        report.fail(space.name() + ": " + e.what());
      }
      if (ok) ++row.passed;
    }
    report.rows.push_back(row);
  }
}

}  // namespace

SweepReport verify_shift(std::int64_t p_max) {
  SweepReport report;
  report.suite = "shift";
  for_each_lens_space(report, 1, p_max, [](const LensSpace& space, SweepReport& r) {
    const DInvTable table = d_table(space);
    bool ok = true;
    if (auto bad = shift_relation_violation(table)) {
      ok = false;
      r.fail(space.name() + ": shift relation fails at label " + std::to_string(*bad));
    }
    // Two anchors so that a wrong value at a single label cannot hide.
    for (std::int64_t anchor : {std::int64_t{0}, space.p() / 2}) {
      if (d_table_by_shift(space, anchor) != table) {
        ok = false;
        r.fail(space.name() + ": recursion and shift propagation from label " +
               std::to_string(anchor) + " disagree");
      }
    }
    return ok;
  });
  return report;
}

SweepReport verify_spin(std::int64_t p_max) {
  SweepReport report;
  report.suite = "spin";
  for_each_lens_space(report, 2, p_max, [](const LensSpace& space, SweepReport& r) {
    const std::int64_t p = space.p();
    const DInvTable table = d_table(space);
    const SpinSet spins = spin_structures(space);
    bool ok = true;
    const std::size_t expected = p % 2 == 0 ? 2 : 1;
    if (spins.size() != expected) {
      ok = false;
      r.fail(space.name() + ": " + std::to_string(spins.size()) + " spin structures, expected " +
             std::to_string(expected));
    }
    for (std::int64_t s : spins.labels) {
      if (rep(2 * s - (space.q() - 1), p) != 0) {
        ok = false;
        r.fail(space.name() + ": spin label " + std::to_string(s) + " does not solve 2s = q-1");
      }
      if (auto bad = conjugation_violation(table, s)) {
        ok = false;
        r.fail(space.name() + ": d(s+n) != d(s-n) at s=" + std::to_string(s) +
               ", n=" + std::to_string(*bad));
      }
      for (std::int64_t i = 0; i < p; ++i) {
        if (conjugate_label(space, s, conjugate_label(space, s, i)) != i) {
          ok = false;
          r.fail(space.name() + ": conjugation about " + std::to_string(s) +
                 " is not an involution");
          break;
        }
      }
    }
    return ok;
  });
  return report;
}

SweepReport verify_relative_identities(std::int64_t p_max) {
  SweepReport report;
  report.suite = "lemma3";
  for_each_lens_space(report, 2, p_max, [](const LensSpace& space, SweepReport& r) {
    const DInvTable table = d_table(space);
    bool ok = true;
    for (std::int64_t s : spin_structures(space).labels) {
      // rel_f_table throws on non-integral entries; the identities are rechecked
      // here so that the report names the failing one.
      const RelFnTable f = rel_f_table(table, s);
      const std::string where = space.name() + ", s=" + std::to_string(s);
      if (f[0] != 0) {
        ok = false;
        r.fail(where + ": f(s,0) != 0");
      }
      if (auto c = check_rel_recursion(f); !c.passed) {
        ok = false;
        r.fail(where + ": step rule fails at n=" + std::to_string(*c.first_failure));
      }
      if (auto c = check_rel_congruence(f); !c.passed) {
        ok = false;
        r.fail(where + ": f != -n^2 q mod p at n=" + std::to_string(*c.first_failure));
      }
    }
    return ok;
  });
  return report;
}

SweepReport verify_key_equivalence(std::int64_t p_max) {
  SweepReport report;
  report.suite = "keyeq";
  std::int64_t tuples = 0;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    SweepReport::Row row{"p=" + std::to_string(p), 0, 0};
    std::vector<std::int64_t> units;
    std::vector<SpinSet> spins(static_cast<std::size_t>(p));
    for (std::int64_t q = 1; q < p; ++q) {
      if (!is_unit(q, p)) continue;
      units.push_back(q);
      spins[static_cast<std::size_t>(q)] = spin_structures(LensSpace(p, q));
    }
    for (std::int64_t q : units) {
      for (std::int64_t u : units) {
        const std::int64_t q2 = mul_mod(mul_mod(u, u, p), q, p);
        ++row.checked;
        bool ok = true;
        for (std::int64_t s1 : spins[static_cast<std::size_t>(q)].labels) {
          for (std::int64_t s2 : spins[static_cast<std::size_t>(q2)].labels) {
            for (std::int64_t m = 0; m < p; ++m) {
              ++tuples;
              if (key_identity_holds(p, q, u, s1, s2, m) !=
                  threshold_equivalence_holds(p, q, u, s1, s2, m)) {
                ok = false;
                report.fail("(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                            ", u=" + std::to_string(u) + ", s1=" + std::to_string(s1) +
                            ", s2=" + std::to_string(s2) + ", m=" + std::to_string(m) +
                            "): key identity and threshold equivalence differ");
              }
            }
          }
        }
        if (ok) ++row.passed;
      }
    }
    report.rows.push_back(row);
  }
  report.note("tuples_checked", std::to_string(tuples));
  return report;
}

SweepReport verify_step_functions(std::int64_t p_max) {
  SweepReport report;
  report.suite = "lemma4";
  for (std::int64_t p = 4; p <= p_max; ++p) report.absorb(check_step_function_grid(p));
  return report;
}

SweepReport verify_affine_pairs(std::int64_t p_max) {
  SweepReport report;
  report.suite = "lemma5";
  for (std::int64_t p = 4; p <= p_max; ++p) report.absorb(check_affine_pair_grid(p));
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"shift",  "spin",     "lemma3", "theorem1",
                                              "keyeq",  "theorem2", "lemma4", "lemma5"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

SweepReport run_suite(const std::string& name, const SweepCaps& caps) {
  if (name == "shift") return verify_shift(caps.shift);
  if (name == "spin") return verify_spin(caps.spin);
  if (name == "lemma3") return verify_relative_identities(caps.lemma3);
  if (name == "theorem1") return verify_classification(caps.theorem1);
  if (name == "keyeq") return verify_key_equivalence(caps.keyeq);
  if (name == "theorem2") return verify_residue_image(caps.theorem2);
  if (name == "lemma4") return verify_step_functions(caps.lemma4);
  if (name == "lemma5") return verify_affine_pairs(caps.lemma5);
  if (name == "all") {
    SweepReport all;
    all.suite = "all";
    for (const std::string& suite : suite_names()) {
      SweepReport part = run_suite(suite, caps);
      for (auto& row : part.rows) row.param = suite + " " + row.param;
      for (auto& c : part.counterexamples) c = suite + ": " + c;
      for (auto& [key, value] : part.notes) key = suite + " " + key;
      all.absorb(part);
    }
    return all;
  }
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace lensd
