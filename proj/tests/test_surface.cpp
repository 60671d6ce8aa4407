#include "critmin/surface.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"

using namespace critmin;

namespace {

bool throws_with(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("euler characteristic of small genera") {
  CHECK(euler_char(0) == 2);
  CHECK(euler_char(1) == 0);
  CHECK(euler_char(3) == -4);
  CHECK(throws_with(errc::invalid_argument, [] { euler_char(-1); }));
}

TEST_CASE("genus from euler characteristic") {
  CHECK(genus_from_euler(2) == 0);
  CHECK(genus_from_euler(-10) == 6);
  CHECK(throws_with(errc::odd_euler, [] { genus_from_euler(3); }));
  CHECK(throws_with(errc::odd_euler, [] { genus_from_euler(-7); }));
  CHECK(throws_with(errc::not_a_surface, [] { genus_from_euler(4); }));
}

TEST_CASE("euler_char and genus_from_euler invert each other") {
  for (long long g = 0; g <= 200; ++g) CHECK(genus_from_euler(euler_char(g)) == g);
  for (long long chi = 2; chi >= -400; chi -= 2)
    CHECK(euler_char(genus_from_euler(chi)) == chi);
}

TEST_CASE("ramification profiles reject regular points and sort") {
  CHECK(throws_with(errc::invalid_argument,
                    [] { RamificationProfile({3, 1}); }));
  CHECK(throws_with(errc::invalid_argument, [] { RamificationProfile({0}); }));
  RamificationProfile p({2, 5, 3, 5});
  CHECK(p.multiplicities() == std::vector<long long>{5, 5, 3, 2});
  CHECK(p.size() == 4);
  CHECK(p.max_multiplicity() == 5);
  CHECK(p.branching_total() == 4 + 4 + 2 + 1);
  CHECK(RamificationProfile().max_multiplicity() == 1);
  CHECK(RamificationProfile().branching_total() == 0);
}

TEST_CASE("hurwitz source euler characteristic") {
  // degree 3 over the torus with one full ramification point: genus 2
  CHECK(hurwitz_euler(0, 3, RamificationProfile({3})) == -2);
  CHECK(genus_from_euler(-2) == 2);
  // identity map of the sphere
  CHECK(hurwitz_euler(2, 1, RamificationProfile()) == 2);
  // double cover of genus 2 with two simple critical points
  CHECK(hurwitz_euler(-2, 2, RamificationProfile({2, 2})) == -6);
  CHECK(throws_with(errc::degree_too_small,
                    [] { hurwitz_euler(0, 2, RamificationProfile({3})); }));
  CHECK(throws_with(errc::invalid_argument,
                    [] { hurwitz_euler(1, 2, RamificationProfile()); }));
  CHECK(throws_with(errc::invalid_argument,
                    [] { hurwitz_euler(0, 0, RamificationProfile()); }));
}

TEST_CASE("covering data validates the branching identity") {
  Surface torus(1);
  CoveringData data(3, RamificationProfile({3}), torus, -2);
  CHECK(data.lambda_total() == 0);
  CHECK(throws_with(errc::invalid_argument, [&] {
    CoveringData(3, RamificationProfile({3}), torus, 0);
  }));
  CHECK(throws_with(errc::degree_too_small, [&] {
    CoveringData(2, RamificationProfile({3}), torus, -2);
  }));
}

TEST_CASE("d(k - chi) = k - chi' + lambda on random covering data") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    long long genus = rng() % 4;
    long long d = 1 + rng() % 9;
    long long k = rng() % 5;
    std::vector<long long> ms;
    for (long long i = 0; i < k; ++i) ms.push_back(2 + rng() % std::max<long long>(d - 1, 1));
    if (!ms.empty() && *std::max_element(ms.begin(), ms.end()) > d) continue;
    RamificationProfile profile(ms);
    Surface target(genus);
    long long chi = target.euler_char();
    long long chi_src = hurwitz_euler(chi, d, profile);
    CoveringData data(d, profile, target, chi_src);
    // the two bookkeeping identities agree
    CHECK(d * (k - chi) == k - chi_src + data.lambda_total());
    CHECK((data.profile().branching_total() % 2 == 0) ==
          (chi_src % 2 == 0));
  }
}
