#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "critmin/monodromy.hpp"

namespace critmin {

// Certificate file format: a JSON object with exactly the fields
//   degree        integer >= 1
//   target_genus  integer >= 0
//   handles       array of [a_i, b_i] pairs of permutations
//   branch        array of permutations
//   profile       array of integers, non-increasing, entries >= 2
//   convention    the string "left-to-right"
// where a permutation is an array of 0-based images. Integers only; the
// convention field pins the composition order and is rejected if it
// disagrees.
nlohmann::ordered_json certificate_to_json(const MonodromyCertificate& cert);
MonodromyCertificate certificate_from_json(const nlohmann::json& j);

std::string certificate_to_string(const MonodromyCertificate& cert);
MonodromyCertificate certificate_from_string(const std::string& text);

void write_certificate(const std::filesystem::path& path,
                       const MonodromyCertificate& cert);
MonodromyCertificate read_certificate(const std::filesystem::path& path);

}  // namespace critmin
