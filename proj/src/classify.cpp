#include "lensd/classify.hpp"

#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "lensd/relative.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lensd {

std::int64_t TorsorIso::apply(std::int64_t label) const {
  return rep(offset + mul_mod(unit, label, modulus), modulus);
}

TorsorIso TorsorIso::after(const TorsorIso& first) const {
  if (first.modulus != modulus) throw InvalidArgument("cannot compose maps of different moduli");
  return TorsorIso{modulus, apply(first.offset), mul_mod(unit, first.unit, modulus)};
}

bool homeomorphic(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  // Constructing the spaces validates the parameters.
  LensSpace first(p, q1);
  LensSpace second(p, q2);
  return rep(q1 - q2, p) == 0 || mul_mod(q1, q2, p) == rep(1, p);
}

namespace {

// Replace each rational by a small integer id shared between both tables, so
// the search compares machine integers.
std::pair<std::vector<int>, std::vector<int>> encode_jointly(const DInvTable& a,
                                                             const DInvTable& b) {
  std::map<Rational, int> ids;
  for (const auto* t : {&a, &b}) {
    for (const Rational& v : t->values()) ids.emplace(v, 0);
  }
  int next = 0;
  for (auto& [value, id] : ids) id = next++;
  auto encode = [&](const DInvTable& t) {
    std::vector<int> out;
    out.reserve(t.values().size());
    for (const Rational& v : t.values()) out.push_back(ids.at(v));
    return out;
  };
  return {encode(a), encode(b)};
}

}  // namespace

bool maps_spin_to_spin(const TorsorIso& iso, const SpinSet& from, const SpinSet& to) {
  return std::all_of(from.labels.begin(), from.labels.end(),
                     [&](std::int64_t s) { return to.contains(iso.apply(s)); });
}

std::vector<TorsorIso> torsor_iso_search(const DInvTable& first, const DInvTable& second,
                                         bool require_spin_compat) {
  const std::int64_t p = first.space().p();
  if (second.space().p() != p) {
    throw InvalidArgument("only lens spaces with the same p can be compared");
  }
  const auto [d1, d2] = encode_jointly(first, second);
  const SpinSet spin1 = spin_structures(first.space());
  const SpinSet spin2 = spin_structures(second.space());

  std::vector<TorsorIso> found;
  for (std::int64_t u = 0; u < p; ++u) {
    if (!is_unit(u, p)) continue;
    for (std::int64_t c = 0; c < p; ++c) {
      bool preserves = true;
      std::int64_t image = c;  // [c + u i]_p, advanced by u per step
      for (std::int64_t i = 0; i < p && preserves; ++i) {
        preserves = d2[static_cast<std::size_t>(image)] == d1[static_cast<std::size_t>(i)];
        image += u;
        if (image >= p) image -= p;
      }
      if (!preserves) continue;
      TorsorIso iso{p, c, u};
      if (require_spin_compat && !maps_spin_to_spin(iso, spin1, spin2)) continue;
      found.push_back(iso);
    }
  }
  return found;
}

std::vector<TorsorIso> torsor_iso_search(std::int64_t p, std::int64_t q1, std::int64_t q2,
                                         bool require_spin_compat) {
  return torsor_iso_search(d_table(LensSpace(p, q1)), d_table(LensSpace(p, q2)),
                           require_spin_compat);
}

ClassificationVerdict classify(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  ClassificationVerdict v;
  v.p = p;
  v.q1 = q1;
  v.q2 = q2;
  v.homeomorphic = homeomorphic(p, q1, q2);
  const LensSpace first(p, q1);
  const LensSpace second(p, q2);
  v.witnesses = torsor_iso_search(d_table(first), d_table(second), false);
  const SpinSet spin1 = spin_structures(first);
  const SpinSet spin2 = spin_structures(second);
  for (const TorsorIso& iso : v.witnesses) {
    if (maps_spin_to_spin(iso, spin1, spin2)) v.spin_compatible_witnesses.push_back(iso);
  }
  v.d_iso_exists = !v.spin_compatible_witnesses.empty();
  return v;
}

bool unit_constraint_check(std::int64_t p, std::int64_t q1, std::int64_t q2, const TorsorIso& iso) {
  return rep(q2, p) == mul_mod(mul_mod(iso.unit, iso.unit, p), q1, p);
}

bool unit_has_homeomorphism_form(std::int64_t p, std::int64_t q1, const TorsorIso& iso) {
  const std::int64_t one = rep(1, p);
  const std::int64_t minus_one = rep(-1, p);
  const std::int64_t u = rep(iso.unit, p);
  const std::int64_t uq = mul_mod(iso.unit, q1, p);
  return u == one || u == minus_one || uq == one || uq == minus_one;
}

namespace {

std::string pair_name(std::int64_t p, std::int64_t q1, std::int64_t q2) {
  return "(p=" + std::to_string(p) + ", q1=" + std::to_string(q1) + ", q2=" + std::to_string(q2) +
         ")";
}

std::string iso_name(const TorsorIso& iso) {
  return "(c=" + std::to_string(iso.offset) + ", u=" + std::to_string(iso.unit) + ")";
}

}  // namespace

SweepReport verify_classification(std::int64_t p_max) {
  SweepReport report;
  report.suite = "theorem1";
  std::int64_t witness_total = 0;
  std::int64_t spin_flag_changes = 0;
  std::string spin_flag_examples;

  for (std::int64_t p = 2; p <= p_max; ++p) {
    std::vector<std::int64_t> units;
    std::vector<DInvTable> tables;
    for (std::int64_t q = 1; q < p; ++q) {
      if (!is_unit(q, p)) continue;
      units.push_back(q);
      tables.push_back(d_table(LensSpace(p, q)));
    }
    SweepReport::Row row{"p=" + std::to_string(p), 0, 0};

    for (std::size_t a = 0; a < units.size(); ++a) {
      const std::int64_t q1 = units[a];
      const SpinSet spin1 = spin_structures(tables[a].space());
      for (std::size_t b = 0; b < units.size(); ++b) {
        const std::int64_t q2 = units[b];
        const SpinSet spin2 = spin_structures(tables[b].space());
        ++row.checked;
        bool ok = true;

        const std::vector<TorsorIso> all = torsor_iso_search(tables[a], tables[b], false);
        std::vector<TorsorIso> compatible;
        for (const TorsorIso& iso : all) {
          if (maps_spin_to_spin(iso, spin1, spin2)) compatible.push_back(iso);
        }
        const bool homeo = homeomorphic(p, q1, q2);
        if (homeo != !compatible.empty()) {
          ok = false;
          report.fail(pair_name(p, q1, q2) + ": homeomorphic=" + (homeo ? "true" : "false") +
                      " but spin-compatible witnesses=" + std::to_string(compatible.size()));
        }
        if (compatible.empty() != all.empty()) {
          ++spin_flag_changes;
          if (spin_flag_examples.size() < 200) spin_flag_examples += pair_name(p, q1, q2) + " ";
        }
        witness_total += static_cast<std::int64_t>(compatible.size());

        for (const TorsorIso& iso : compatible) {
          if (!unit_constraint_check(p, q1, q2, iso)) {
            ok = false;
            report.fail(pair_name(p, q1, q2) + " witness " + iso_name(iso) +
                        " violates q2 = u^2 q1");
          }
          if (!unit_has_homeomorphism_form(p, q1, iso)) {
            ok = false;
            report.fail(pair_name(p, q1, q2) + " witness " + iso_name(iso) +
                        " has u != +-1 and u q1 != +-1");
          }
          for (std::int64_t s1 : spin1.labels) {
            const std::int64_t s2 = iso.apply(s1);
            for (std::int64_t m = 0; m < p; ++m) {
              const bool key = key_identity_holds(p, q1, iso.unit, s1, s2, m);
              const bool threshold = threshold_equivalence_holds(p, q1, iso.unit, s1, s2, m);
              if (!key || !threshold) {
                ok = false;
                report.fail(pair_name(p, q1, q2) + " witness " + iso_name(iso) +
                            ": key identity or threshold equivalence fails at m=" +
                            std::to_string(m));
                break;
              }
            }
          }
        }
        if (ok) ++row.passed;
      }
    }
    report.rows.push_back(row);
  }
  report.note("spin_compatible_witnesses", std::to_string(witness_total));
  report.note("pairs_where_spin_requirement_changes_verdict", std::to_string(spin_flag_changes));
  if (!spin_flag_examples.empty()) report.note("spin_requirement_examples", spin_flag_examples);
  return report;
}

}  // namespace lensd
