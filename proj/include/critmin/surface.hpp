#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "critmin/errors.hpp"

namespace critmin {

// chi = 2 - 2g for the closed orientable surface of genus g.
long long euler_char(long long genus);

// Inverse of euler_char; chi must be even and at most 2.
long long genus_from_euler(long long chi);

// Closed orientable surface, identified by its genus.
class Surface {
 public:
  explicit Surface(long long genus);

  long long genus() const noexcept { return genus_; }
  long long euler_char() const noexcept { return 2 - 2 * genus_; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  long long genus_;
};

// Multiset of ramification orders, one entry per critical point of a
// covering map. Entries are >= 2 (order-1 points are regular and never
// recorded); stored non-increasing. Empty profile = unramified cover.
class RamificationProfile {
 public:
  RamificationProfile() = default;
  explicit RamificationProfile(std::vector<long long> multiplicities);

  const std::vector<long long>& multiplicities() const noexcept {
    return multiplicities_;
  }
  std::size_t size() const noexcept { return multiplicities_.size(); }
  bool empty() const noexcept { return multiplicities_.empty(); }

  // 1 for the empty profile, so `d >= max_multiplicity()` degenerates to
  // the plain degree constraint d >= 1.
  long long max_multiplicity() const noexcept;

  // sum of (m_i - 1)
  long long branching_total() const noexcept;

  friend bool operator==(const RamificationProfile&,
                         const RamificationProfile&) = default;
  friend auto operator<=>(const RamificationProfile&,
                          const RamificationProfile&) = default;

 private:
  std::vector<long long> multiplicities_;
};

// chi' = d*chi - sum(m_i - 1): Euler characteristic of the source of a
// degree-d cover with the given ramification profile.
long long hurwitz_euler(long long target_chi, long long degree,
                        const RamificationProfile& profile);

// A candidate branched cover. Construction validates d >= max m_i, the
// per-point bounds 0 <= d - m_i <= d - 2, and that source_euler satisfies
// the Hurwitz identity d(k - chi) = k - chi' + lambda.
class CoveringData {
 public:
  CoveringData(long long degree, RamificationProfile profile, Surface target,
               long long source_euler);

  long long degree() const noexcept { return degree_; }
  const RamificationProfile& profile() const noexcept { return profile_; }
  const Surface& target() const noexcept { return target_; }
  long long source_euler() const noexcept { return source_euler_; }

  // lambda = sum of (d - m_i)
  long long lambda_total() const noexcept;

  friend bool operator==(const CoveringData&, const CoveringData&) = default;

 private:
  long long degree_;
  RamificationProfile profile_;
  Surface target_;
  long long source_euler_;
};

}  // namespace critmin
