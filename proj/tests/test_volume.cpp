#include "critmin/volume.hpp"

#include <numeric>

#include "doctest.h"

#include "critmin/phi.hpp"

using namespace critmin;

TEST_CASE("simplicial volume of surfaces") {
  CHECK(simplicial_volume(Surface(0)) == 0);
  CHECK(simplicial_volume(Surface(1)) == 0);
  CHECK(simplicial_volume(Surface(2)) == 4);
  CHECK(simplicial_volume(Surface(3)) == 8);
  CHECK(simplicial_volume(Surface(10)) == 36);
}

TEST_CASE("volume ratio mod one") {
  CHECK(volume_ratio(Surface(5), Surface(3)) == RatioMod1{0, 1});
  CHECK(volume_ratio(Surface(6), Surface(3)) == RatioMod1{1, 2});
  CHECK(volume_ratio(Surface(3), Surface(3)) == RatioMod1{0, 1});
  CHECK(volume_ratio(Surface(9), Surface(4)) == RatioMod1{2, 3});
  // vanishing source volume
  CHECK(volume_ratio(Surface(0), Surface(3)) == RatioMod1{0, 1});
  CHECK(volume_ratio(Surface(1), Surface(2)) == RatioMod1{0, 1});
  for (long long target : {0LL, 1LL}) {
    bool rejected = false;
    try {
      volume_ratio(Surface(5), Surface(target));
    } catch (const Error& e) {
      rejected = e.code() == errc::zero_target_volume;
    }
    CHECK(rejected);
  }
}

TEST_CASE("ratios are exact reduced rationals in [0, 1)") {
  for (long long g = 2; g <= 8; ++g) {
    for (long long G = 0; G <= 40; ++G) {
      RatioMod1 r = volume_ratio(Surface(G), Surface(g));
      CHECK(r.denominator >= 1);
      CHECK(r.numerator >= 0);
      CHECK(r.numerator < r.denominator);
      CHECK(std::gcd(r.numerator, r.denominator) == 1);
    }
  }
}

TEST_CASE("unramified covers have vanishing ratio and multiplicative volume") {
  for (long long g = 2; g <= 5; ++g) {
    for (long long G = g; G <= 30; ++G) {
      PhiResult r = phi(Surface(G), Surface(g));
      if (!(r.is_finite() && r.k() == 0)) continue;
      CHECK(volume_ratio(Surface(G), Surface(g)) == RatioMod1{0, 1});
      // the covering degree scales the volume exactly
      CHECK(simplicial_volume(Surface(G)) ==
            r.witness()->degree() * simplicial_volume(Surface(g)));
    }
  }
}

TEST_CASE("vanishing ratio characterizes unramified covers") {
  for (long long g = 2; g <= 5; ++g) {
    for (long long G = g; G <= 30; ++G) {
      bool ratio_zero =
          volume_ratio(Surface(G), Surface(g)) == RatioMod1{0, 1};
      PhiResult r = phi(Surface(G), Surface(g));
      bool phi_zero = r.is_finite() && r.k() == 0;
      CHECK(ratio_zero == phi_zero);
    }
  }
}
