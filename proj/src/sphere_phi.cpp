#include "critmin/sphere_phi.hpp"

namespace critmin {

const char* to_string(SpherePhi::Status s) noexcept {
  switch (s) {
    case SpherePhi::Status::exact: return "exact";
    case SpherePhi::Status::exactly_infinite: return "infinite";
    case SpherePhi::Status::at_least: return "at-least";
    case SpherePhi::Status::unknown: return "unknown";
  }
  return "unknown";
}

SpherePhi classify_sphere_pair(long long m, long long n) {
  if (n < 2 || m < n)
    raise(errc::out_of_range, "sphere pairs require m >= n >= 2");

  auto is_pair = [m, n](long long pm, long long pn) {
    return m == pm && n == pn;
  };

  if (m == n) return {SpherePhi::Status::exact, 0, "identity"};

  // The three smooth sphere fibrations: (3,2), (7,4), (15,8).
  if (is_pair(3, 2) || is_pair(7, 4) || is_pair(15, 8))
    return {SpherePhi::Status::exact, 0, "hopf-fibration"};

  // Doubled cones over those fibrations give two critical points, and a
  // single one is impossible below codimension n-1.
  if (is_pair(4, 3) || is_pair(8, 5) || is_pair(16, 9))
    return {SpherePhi::Status::exact, 2, "suspended-hopf"};

  if (m <= 2 * n - 3)
    return {SpherePhi::Status::exactly_infinite, 0,
            "codimension-obstruction"};

  if (m == 2 * n - 2) {
    if (n != 2 && n != 3 && n != 5 && n != 9)
      return {SpherePhi::Status::exactly_infinite, 0,
              "finiteness-restriction"};
    // Unreachable for m >= n: every such pair is caught above. Kept so the
    // dispatch stays total if the guards ever change.
    return {SpherePhi::Status::at_least, 2, "low-codimension-bound"};
  }

  if (m == 2 * n - 1)
    // Fibrations exist only at the pairs handled above, so at least one
    // critical point; finiteness is open.
    return {SpherePhi::Status::at_least, 1, "fibration-classification"};

  return {SpherePhi::Status::unknown, 0, "unclassified"};
}

}  // namespace critmin
