#include "critmin/surface.hpp"

#include <algorithm>
#include <functional>

namespace critmin {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::odd_euler: return "odd_euler";
    case errc::not_a_surface: return "not_a_surface";
    case errc::degree_too_small: return "degree_too_small";
    case errc::target_not_hyperbolic: return "target_not_hyperbolic";
    case errc::out_of_domain: return "out_of_domain";
    case errc::sphere_target_not_covered: return "sphere_target_not_covered";
    case errc::zero_target_volume: return "zero_target_volume";
    case errc::out_of_range: return "out_of_range";
    case errc::malformed_permutation: return "malformed_permutation";
    case errc::malformed_certificate: return "malformed_certificate";
  }
  return "unknown";
}

long long euler_char(long long genus) {
  if (genus < 0)
    raise(errc::invalid_argument, "genus must be non-negative");
  return 2 - 2 * genus;
}

long long genus_from_euler(long long chi) {
  if (chi % 2 != 0)
    raise(errc::odd_euler,
          "no closed orientable surface has odd Euler characteristic");
  if (chi > 2)
    raise(errc::not_a_surface, "Euler characteristic exceeds 2");
  return (2 - chi) / 2;
}

Surface::Surface(long long genus) : genus_(genus) {
  if (genus < 0)
    raise(errc::invalid_argument, "genus must be non-negative");
}

RamificationProfile::RamificationProfile(std::vector<long long> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
  for (long long m : multiplicities_) {
    if (m < 2)
      raise(errc::invalid_argument,
            "ramification orders must be at least 2 (order 1 is a regular "
            "point)");
  }
  std::sort(multiplicities_.begin(), multiplicities_.end(),
            std::greater<long long>());
}

long long RamificationProfile::max_multiplicity() const noexcept {
  return multiplicities_.empty() ? 1 : multiplicities_.front();
}

long long RamificationProfile::branching_total() const noexcept {
  long long total = 0;
  for (long long m : multiplicities_) total += m - 1;
  return total;
}

long long hurwitz_euler(long long target_chi, long long degree,
                        const RamificationProfile& profile) {
  if (degree < 1)
    raise(errc::invalid_argument, "degree must be positive");
  if (target_chi % 2 != 0)
    raise(errc::invalid_argument,
          "target Euler characteristic must be even");
  if (profile.max_multiplicity() > degree)
    raise(errc::degree_too_small,
          "degree is smaller than a ramification order");
  return degree * target_chi - profile.branching_total();
}

CoveringData::CoveringData(long long degree, RamificationProfile profile,
                           Surface target, long long source_euler)
    : degree_(degree),
      profile_(std::move(profile)),
      target_(target),
      source_euler_(source_euler) {
  // hurwitz_euler re-checks degree >= 1 and degree >= max m_i; the
  // remaining bound 0 <= d - m_i <= d - 2 follows from m_i in [2, d].
  if (hurwitz_euler(target_.euler_char(), degree_, profile_) != source_euler_)
    raise(errc::invalid_argument,
          "source Euler characteristic violates the Hurwitz identity");
}

long long CoveringData::lambda_total() const noexcept {
  long long lambda = 0;
  for (long long m : profile_.multiplicities()) lambda += degree_ - m;
  return lambda;
}

}  // namespace critmin
