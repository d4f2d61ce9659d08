#include "lensd/residues.hpp"

#include "lensd/dinvariants.hpp"
#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"
#include "lensd/relative.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace lensd {

std::vector<std::int64_t> SbarSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(multiplicity.size());
  for (const auto& [a, count] : multiplicity) out.push_back(a);
  return out;
}

SbarSet sbar(std::int64_t p, std::int64_t q) {
  const LensSpace space(p, q);
  const SpinSet spins = spin_structures(space);
  const RelFnTable f = rel_f_table(space, spins.labels.front());

  SbarSet out;
  out.p = p;
  out.q = q;
  out.spin = f.spin();
  out.prime = is_prime(p);
  std::map<std::int64_t, std::int64_t> congruence;
  for (std::int64_t n = 0; n < p; ++n) {
    ++out.multiplicity[rep(f[n], p)];
    ++congruence[rep(-mul_mod(mul_mod(n, n, p), q, p), p)];
  }
  if (congruence != out.multiplicity) {
    throw InternalInconsistency("image of f mod p disagrees with -n^2 q for " + space.name());
  }
  return out;
}

std::vector<std::int64_t> residue_characterization(std::int64_t p, std::int64_t q) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidArgument("residue characterization needs an odd prime, got " +
                          std::to_string(p));
  }
  if (!is_unit(q, p)) throw NotCoprime("p and q must be coprime");
  const int target = legendre(q, p);
  std::vector<std::int64_t> out{0};
  for (std::int64_t a = 1; a < p; ++a) {
    if (legendre(-a, p) == target) out.push_back(a);
  }
  return out;
}

namespace {

std::string pq_name(std::int64_t p, std::int64_t q) {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

SweepReport verify_residue_image(std::int64_t p_max) {
  SweepReport report;
  report.suite = "theorem2";

  // p = 2: the image is all of Z/2Z, so the (p+1)/2 count does not apply.
  {
    SweepReport::Row row{"p=2", 1, 0};
    const SbarSet two = sbar(2, 1);
    if (two.members() == std::vector<std::int64_t>{0, 1}) {
      ++row.passed;
    } else {
      report.fail("sbar(L(2,1)) is not Z/2Z");
    }
    report.rows.push_back(row);
  }

  std::int64_t primes = 0;
  for (std::int64_t p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    ++primes;
    SweepReport::Row row{"p=" + std::to_string(p), 0, 0};
    std::vector<std::int64_t> residue_image;
    std::vector<std::int64_t> nonresidue_image;
    for (std::int64_t q = 1; q < p; ++q) {
      ++row.checked;
      bool ok = true;
      const SbarSet s = sbar(p, q);
      const std::vector<std::int64_t> members = s.members();
      if (members != residue_characterization(p, q)) {
        ok = false;
        report.fail(pq_name(p, q) + ": image differs from the Legendre characterization");
      }
      if (static_cast<std::int64_t>(members.size()) != (p + 1) / 2) {
        ok = false;
        report.fail(pq_name(p, q) + ": image has " + std::to_string(members.size()) +
                    " elements, expected " + std::to_string((p + 1) / 2));
      }
      for (const auto& [a, count] : s.multiplicity) {
        const std::int64_t expected = a == 0 ? 1 : 2;
        if (count != expected) {
          ok = false;
          report.fail(pq_name(p, q) + ": member " + std::to_string(a) + " hit " +
                      std::to_string(count) + " times, expected " + std::to_string(expected));
        }
      }
      if (legendre(q, p) == 1 && residue_image.empty()) residue_image = members;
      if (legendre(q, p) == -1 && nonresidue_image.empty()) nonresidue_image = members;
      if (ok) ++row.passed;
    }

    ++row.checked;
    std::vector<std::int64_t> both;
    std::vector<std::int64_t> either;
    std::set_intersection(residue_image.begin(), residue_image.end(), nonresidue_image.begin(),
                          nonresidue_image.end(), std::back_inserter(both));
    std::set_union(residue_image.begin(), residue_image.end(), nonresidue_image.begin(),
                   nonresidue_image.end(), std::back_inserter(either));
    if (both == std::vector<std::int64_t>{0} && static_cast<std::int64_t>(either.size()) == p) {
      ++row.passed;
    } else {
      report.fail("p=" + std::to_string(p) +
                  ": residue and non-residue images do not split Z/pZ around {0}");
    }
    report.rows.push_back(row);
  }
  report.note("odd_primes_checked", std::to_string(primes));
  return report;
}

}  // namespace lensd
