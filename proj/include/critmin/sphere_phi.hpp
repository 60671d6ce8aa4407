#pragma once

#include <string_view>

#include "critmin/errors.hpp"

namespace critmin {

// Classification of the minimal critical point count for maps S^m -> S^n,
// m >= n >= 2. Exact answers exist only where a theorem pins them down;
// the rest is an honest lower bound or an explicit unknown. provenance
// names the governing fact so callers can surface it.
struct SpherePhi {
  enum class Status { exact, exactly_infinite, at_least, unknown };

  Status status;
  long long value = 0;  // meaningful for exact and at_least
  std::string_view provenance;
};

const char* to_string(SpherePhi::Status s) noexcept;

SpherePhi classify_sphere_pair(long long m, long long n);

}  // namespace critmin
