#include "critmin/patterson.hpp"

#include <algorithm>
#include <cassert>

namespace critmin {

namespace {

// Multiset splits of `total` into exactly `parts` summands in [0, cap],
// emitted in non-increasing order so each multiset appears once.
void splits_into(long long total, long long parts, long long cap,
                 std::vector<long long>& current,
                 std::vector<std::vector<long long>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  long long ceiling = current.empty() ? cap : std::min(cap, current.back());
  if (total > ceiling * parts) return;
  for (long long part = std::min(ceiling, total); part >= 0; --part) {
    if (part * parts < total) break;
    current.push_back(part);
    splits_into(total - part, parts - 1, cap, current, out);
    current.pop_back();
  }
}

}  // namespace

bool patterson_feasible(const Surface& target, long long degree,
                        const RamificationProfile& profile) {
  if (target.genus() < 1)
    raise(errc::sphere_target_not_covered,
          "the existence criterion applies to targets of genus >= 1 only");
  if (degree < 1)
    raise(errc::invalid_argument, "degree must be positive");
  return profile.branching_total() % 2 == 0 &&
         degree >= profile.max_multiplicity();
}

std::vector<EnumeratedCovering> enumerate_covering_data(long long chi_src,
                                                        const Surface& target,
                                                        long long k,
                                                        long long d_max) {
  if (d_max < 1)
    raise(errc::invalid_argument, "degree cap must be at least 1");
  if (k < 0)
    raise(errc::invalid_argument, "critical point count must be non-negative");
  if (chi_src % 2 != 0)
    raise(errc::invalid_argument,
          "source Euler characteristic must be even");

  const long long chi = target.euler_char();
  const Realizability tag = target.genus() >= 1
                                ? Realizability::patterson_guaranteed
                                : Realizability::requires_monodromy_check;

  std::vector<EnumeratedCovering> result;
  for (long long d = 1; d <= d_max; ++d) {
    const long long lambda = d * (k - chi) + chi_src - k;
    if (lambda < 0 || lambda > k * (d - 2)) continue;

    std::vector<std::vector<long long>> splits;
    std::vector<long long> current;
    splits_into(lambda, k, std::max<long long>(d - 2, 0), current, splits);

    std::vector<RamificationProfile> profiles;
    profiles.reserve(splits.size());
    for (const auto& split : splits) {
      std::vector<long long> multiplicities;
      multiplicities.reserve(split.size());
      for (long long part : split) multiplicities.push_back(d - part);
      profiles.emplace_back(std::move(multiplicities));
    }
    std::sort(profiles.begin(), profiles.end());

    for (auto& profile : profiles) {
      // Even chi and chi' force even total branching on every datum.
      assert(profile.branching_total() % 2 == 0);
      result.push_back(
          {CoveringData(d, std::move(profile), target, chi_src), tag});
    }
  }
  return result;
}

}  // namespace critmin
