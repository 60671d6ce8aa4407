#include "critmin/phi.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace critmin {

namespace {

// Floor/ceil of a/b for b > 0, exact over the full signed range.
long long floor_div(long long a, long long b) {
  assert(b > 0);
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long ceil_div(long long a, long long b) {
  assert(b > 0);
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

void require_even(long long chi, const char* which) {
  if (chi % 2 != 0)
    raise(errc::invalid_argument,
          std::string(which) + " Euler characteristic must be even");
}

void require_hyperbolic_target(long long chi_tgt) {
  if (chi_tgt > -2)
    raise(errc::target_not_hyperbolic,
          "target Euler characteristic must be at most -2");
}

// Degree interval [lo, hi] of the branching system at a fixed k; empty when
// lo > hi. Denominators are negated so both divisions run over positive b.
struct DegreeInterval {
  long long lo;
  long long hi;
};

DegreeInterval degree_interval(long long chi_src, long long chi_tgt,
                               long long k) {
  long long lo = ceil_div(k - chi_src, k - chi_tgt);
  long long hi = floor_div(-(chi_src + k), -chi_tgt);
  return {std::max<long long>(lo, 1), hi};
}

// The greedy split of lambda into k parts, each at most d - 2, largest
// parts first; translates to multiplicities m_i = d - lambda_i. Fewest
// distinct multiplicities among all splits.
RamificationProfile greedy_profile(long long degree, long long k,
                                   long long lambda) {
  std::vector<long long> multiplicities;
  multiplicities.reserve(static_cast<std::size_t>(k));
  long long remaining = lambda;
  for (long long i = 0; i < k; ++i) {
    long long part = std::min(degree - 2, remaining);
    remaining -= part;
    multiplicities.push_back(degree - part);
  }
  assert(remaining == 0);
  return RamificationProfile(std::move(multiplicities));
}

CoveringData witness_at(long long chi_src, long long chi_tgt, long long k) {
  DegreeInterval range = degree_interval(chi_src, chi_tgt, k);
  assert(range.lo <= range.hi);
  long long d = range.lo;
  long long lambda = d * (k - chi_tgt) + chi_src - k;
  Surface target(genus_from_euler(chi_tgt));
  return CoveringData(d, greedy_profile(d, k, lambda), target, chi_src);
}

}  // namespace

PhiResult PhiResult::finite(long long k, std::optional<CoveringData> witness) {
  if (k < 0)
    raise(errc::invalid_argument, "critical point count must be non-negative");
  if (witness &&
      static_cast<long long>(witness->profile().size()) != k)
    raise(errc::invalid_argument,
          "witness profile size must equal the critical point count");
  PhiResult r;
  r.finite_ = true;
  r.k_ = k;
  r.witness_ = std::move(witness);
  return r;
}

PhiResult PhiResult::infinite(int case_tag) {
  if (case_tag != 1 && case_tag != 4)
    raise(errc::invalid_argument, "infinite case tag must be 1 or 4");
  PhiResult r;
  r.finite_ = false;
  r.case_ = case_tag;
  return r;
}

long long PhiResult::k() const {
  if (!finite_)
    raise(errc::invalid_argument, "k() called on an infinite result");
  return k_;
}

const std::optional<CoveringData>& PhiResult::witness() const {
  if (!finite_)
    raise(errc::invalid_argument, "witness() called on an infinite result");
  return witness_;
}

int PhiResult::infinite_case() const {
  if (finite_)
    raise(errc::invalid_argument, "infinite_case() called on a finite result");
  return case_;
}

DivisionForm division_form(long long chi_src, long long chi_tgt) {
  if (chi_tgt == 0)
    raise(errc::invalid_argument, "division form needs a nonzero target");
  long long a = std::llabs(chi_src) / std::llabs(chi_tgt);
  long long b = std::llabs(chi_src) % std::llabs(chi_tgt);
  return {a, b};
}

bool admits_degree(long long chi_src, long long chi_tgt, long long k) {
  require_hyperbolic_target(chi_tgt);
  require_even(chi_src, "source");
  require_even(chi_tgt, "target");
  if (k < 0)
    raise(errc::invalid_argument, "critical point count must be non-negative");
  DegreeInterval range = degree_interval(chi_src, chi_tgt, k);
  return range.lo <= range.hi;
}

PhiResult minimal_k(long long chi_src, long long chi_tgt) {
  require_hyperbolic_target(chi_tgt);
  require_even(chi_src, "source");
  require_even(chi_tgt, "target");

  if (chi_src == chi_tgt) {
    Surface target(genus_from_euler(chi_tgt));
    return PhiResult::finite(
        0, CoveringData(1, RamificationProfile(), target, chi_src));
  }
  if (chi_src <= 2 * chi_tgt) {
    for (long long k = 0;; ++k) {
      if (admits_degree(chi_src, chi_tgt, k))
        return PhiResult::finite(k, witness_at(chi_src, chi_tgt, k));
      // The closed form bounds the answer, so the scan terminates.
      assert(k <= -chi_src);
    }
  }
  if (chi_src > chi_tgt) return PhiResult::infinite(1);
  return PhiResult::infinite(4);  // 2 + 2*chi <= chi' < chi
}

long long closed_form_phi(long long chi_src, long long chi_tgt) {
  require_hyperbolic_target(chi_tgt);
  require_even(chi_src, "source");
  require_even(chi_tgt, "target");
  DivisionForm form = division_form(chi_src, chi_tgt);
  if (form.quotient < 2)
    raise(errc::out_of_domain,
          "closed form needs |chi_src| >= 2 |chi_tgt|");
  return ceil_div(form.remainder, form.quotient - 1);
}

PhiResult phi(const Surface& source, const Surface& target) {
  const long long chi_src = source.euler_char();

  if (target.genus() == 0) {
    if (source.genus() == 0)
      return PhiResult::finite(
          0, CoveringData(1, RamificationProfile(), target, 2));
    // chi' <= 0: three critical points, realized by the full-cycle cover of
    // degree d = 3 + |chi'| (odd) with profile [d, d, d].
    long long d = 3 - chi_src;
    return PhiResult::finite(
        3, CoveringData(d, RamificationProfile({d, d, d}), target, chi_src));
  }

  if (target.genus() == 1) {
    if (source.genus() == 1)
      return PhiResult::finite(
          0, CoveringData(1, RamificationProfile(), target, 0));
    if (source.genus() == 0) return PhiResult::infinite(1);
    // One critical point: the degree 2G-1 cover of the torus with a single
    // ramification point of full multiplicity.
    long long d = 2 * source.genus() - 1;
    return PhiResult::finite(
        1, CoveringData(d, RamificationProfile({d}), target, chi_src));
  }

  return minimal_k(chi_src, target.euler_char());
}

std::vector<PhiTableRow> phi_table(long long target_genus,
                                   long long max_source_genus) {
  if (max_source_genus < 0)
    raise(errc::invalid_argument, "max source genus must be non-negative");
  Surface target(target_genus);
  std::vector<PhiTableRow> rows;
  rows.reserve(static_cast<std::size_t>(max_source_genus) + 1);
  for (long long g = 0; g <= max_source_genus; ++g)
    rows.push_back({g, phi(Surface(g), target)});
  return rows;
}

}  // namespace critmin
