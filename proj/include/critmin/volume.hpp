#pragma once

#include "critmin/surface.hpp"

namespace critmin {

// Exact rational in [0, 1): numerator/denominator reduced, numerator <
// denominator, denominator >= 1. Zero is {0, 1}.
struct RatioMod1 {
  long long numerator = 0;
  long long denominator = 1;

  friend bool operator==(const RatioMod1&, const RatioMod1&) = default;
};

// Gromov norm of the surface: 0 in genus 0 (simply connected) and genus 1
// (amenable fundamental group), 4g - 4 in genus g >= 2.
long long simplicial_volume(const Surface& s);

// The simplicial-volume ratio of the pair, taken mod 1: the fractional part
// of (G - 1)/(g - 1) when both surfaces are hyperbolic, and exactly 0 when
// the source volume vanishes (source genus <= 1). Defined only for targets
// of genus >= 2.
RatioMod1 volume_ratio(const Surface& source, const Surface& target);

}  // namespace critmin
