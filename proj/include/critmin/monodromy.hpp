#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "critmin/permutation.hpp"
#include "critmin/surface.hpp"

namespace critmin {

// Permutation description of a degree-d branched cover of the genus-g
// surface: handle pairs (a_i, b_i) and one branch permutation s_j per
// critical point. A certificate is valid when
//   [a_1,b_1] * ... * [a_g,b_g] * s_1 * ... * s_k = identity,
// the entries generate a transitive subgroup of S_d, and each s_j has cycle
// type (m_j, 1, ..., 1) with {m_j} matching the declared profile.
// Products follow the left-to-right convention of Permutation.
struct MonodromyCertificate {
  long long degree = 1;
  long long target_genus = 0;
  std::vector<std::pair<Permutation, Permutation>> handles;
  std::vector<Permutation> branch;
  RamificationProfile declared_profile;
};

enum class Violation {
  handle_count_mismatch,
  product_not_identity,
  not_transitive,
  profile_mismatch,
};

const char* to_string(Violation v) noexcept;

struct VerificationReport {
  bool valid = false;
  std::vector<Violation> violations;
  // chi' = d(2 - 2g) - sum_j (d - c_j) with c_j the cycle count of s_j,
  // fixed points included. Computed even when the certificate is invalid.
  long long computed_source_euler = 0;
};

// Checks every certificate invariant and reports all violations, not just
// the first. Throws malformed_permutation when an entry is not a degree-d
// permutation.
VerificationReport verify_certificate(const MonodromyCertificate& cert);

struct SearchBudget {
  std::uint64_t max_evaluations = 1'000'000;
  std::uint64_t seed = 1;
};

enum class InfeasibleReason {
  degree_too_small,     // some m_i exceeds d
  parity_violation,     // genus >= 1 target with odd total branching
  sphere_euler_bound,   // k <= 2 points over the sphere with chi' <= 0
};

const char* to_string(InfeasibleReason r) noexcept;

// Three-way search outcome. not_found never asserts nonexistence; only
// infeasible does.
class RealizeResult {
 public:
  enum class Kind { certificate, infeasible, not_found };

  static RealizeResult found(MonodromyCertificate cert);
  static RealizeResult infeasible(InfeasibleReason reason);
  static RealizeResult not_found();

  Kind kind() const noexcept { return kind_; }
  const MonodromyCertificate& certificate() const;
  InfeasibleReason reason() const;

 private:
  RealizeResult() = default;
  Kind kind_ = Kind::not_found;
  std::optional<MonodromyCertificate> certificate_;
  std::optional<InfeasibleReason> reason_;
};

// Searches for a certificate of a degree-d cover of the target with the
// given profile. Exhaustive (deterministic, first certificate in a fixed
// canonical order) for d <= 6; seeded random sampling above that. The
// budget counts candidate tuple evaluations across both modes.
RealizeResult realize(const Surface& target, long long degree,
                      const RamificationProfile& profile,
                      const SearchBudget& budget = {});

// Independent upper-bound search for the minimal critical point count:
// scans k = 0..k_max over the enumerated covering data with d <= d_max,
// accepting the first k with a datum that is feasible (genus >= 1 target)
// or realized by certificate search (sphere target). nullopt when no k in
// range is witnessed.
std::optional<long long> oracle_phi(const Surface& source,
                                    const Surface& target, long long k_max,
                                    long long d_max,
                                    const SearchBudget& budget = {});

}  // namespace critmin
