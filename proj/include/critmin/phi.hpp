#pragma once

#include <optional>
#include <vector>

#include "critmin/surface.hpp"

namespace critmin {

// Outcome of a minimal-critical-point computation: a finite count with an
// optional witness covering, or a certified infinite answer. The infinite
// case tag records which of the two infinity criteria fired:
//   1  source characteristic exceeds the target's (chi' > chi)
//   4  the gap range 2 + 2*chi <= chi' < chi <= -2
class PhiResult {
 public:
  static PhiResult finite(long long k, std::optional<CoveringData> witness);
  static PhiResult infinite(int case_tag);

  bool is_finite() const noexcept { return finite_; }
  long long k() const;
  const std::optional<CoveringData>& witness() const;
  int infinite_case() const;

 private:
  PhiResult() = default;

  bool finite_ = false;
  long long k_ = 0;
  std::optional<CoveringData> witness_;
  int case_ = 0;
};

// |chi_src| = quotient * |chi_tgt| + remainder with 0 <= remainder < |chi_tgt|.
struct DivisionForm {
  long long quotient;
  long long remainder;
};
DivisionForm division_form(long long chi_src, long long chi_tgt);

// True iff some integer degree d >= 1 satisfies
//   (chi_src - k) / (chi_tgt - k) <= d <= (chi_src + k) / chi_tgt,
// which is exactly solvability of the branching system
//   0 <= d(k - chi) + chi' - k = lambda <= k(d - 2)
// for a cover with k critical points. Exact integer arithmetic throughout.
// Requires chi_tgt <= -2.
bool admits_degree(long long chi_src, long long chi_tgt, long long k);

// Least k >= 0 passing admits_degree, with a witness covering built from the
// smallest admissible degree; or the certified infinite answer when no k
// works. Requires chi_tgt <= -2.
PhiResult minimal_k(long long chi_src, long long chi_tgt);

// ceil(b / (a - 1)) where |chi_src| = a|chi_tgt| + b. Closed form for the
// minimal k, valid when a >= 2 (|chi_src| >= 2|chi_tgt|) and chi_tgt <= -2.
long long closed_form_phi(long long chi_src, long long chi_tgt);

// Minimal number of critical points of a smooth map source -> target, over
// all pairs of closed orientable surfaces.
PhiResult phi(const Surface& source, const Surface& target);

struct PhiTableRow {
  long long source_genus;
  PhiResult result;
};

// One row per source genus G in 0..max_source_genus, each equal to
// phi(Surface(G), Surface(target_genus)).
std::vector<PhiTableRow> phi_table(long long target_genus,
                                   long long max_source_genus);

}  // namespace critmin
