#pragma once

#include <vector>

#include "critmin/surface.hpp"

namespace critmin {

// Existence test for a branched cover of a positive-genus target with the
// prescribed degree and ramification orders: true iff sum(m_i - 1) is even
// and d >= max m_i. Sufficient for existence when the target has genus >= 1;
// genus-0 targets are rejected (existence there needs a monodromy search).
bool patterson_feasible(const Surface& target, long long degree,
                        const RamificationProfile& profile);

enum class Realizability {
  // Target genus >= 1: every enumerated datum is realizable.
  patterson_guaranteed,
  // Sphere target: the branching arithmetic alone does not decide existence.
  requires_monodromy_check,
};

struct EnumeratedCovering {
  CoveringData data;
  Realizability realizability;
};

// All covering data with 1 <= d <= d_max and exactly k critical points whose
// branching budget lambda = d(k - chi) + chi' - k lies in [0, k(d - 2)],
// one entry per multiset split of lambda into k parts bounded by d - 2.
// Sorted by (degree, profile); each multiset appears once.
std::vector<EnumeratedCovering> enumerate_covering_data(long long chi_src,
                                                        const Surface& target,
                                                        long long k,
                                                        long long d_max);

}  // namespace critmin
