#include "critmin/volume.hpp"

#include <numeric>

namespace critmin {

long long simplicial_volume(const Surface& s) {
  if (s.genus() <= 1) return 0;
  return 4 * s.genus() - 4;
}

RatioMod1 volume_ratio(const Surface& source, const Surface& target) {
  if (target.genus() <= 1)
    raise(errc::zero_target_volume,
          "volume ratio needs a target of nonzero simplicial volume "
          "(genus >= 2)");
  if (source.genus() <= 1) return {0, 1};

  const long long den = target.genus() - 1;
  long long num = (source.genus() - 1) % den;
  if (num == 0) return {0, 1};
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace critmin
