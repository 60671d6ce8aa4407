#include "critmin/certificate_io.hpp"

#include <fstream>

namespace critmin {

namespace {

nlohmann::ordered_json permutation_to_json(const Permutation& p) {
  return nlohmann::ordered_json(p.images());
}

Permutation permutation_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    raise(errc::malformed_certificate, "permutation must be an array");
  std::vector<int> images;
  images.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      raise(errc::malformed_certificate,
            "permutation entries must be integers");
    images.push_back(entry.get<int>());
  }
  return Permutation(std::move(images));
}

long long integer_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer())
    raise(errc::malformed_certificate,
          std::string("missing or non-integer field: ") + name);
  return j[name].get<long long>();
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const MonodromyCertificate& cert) {
  nlohmann::ordered_json j;
  j["degree"] = cert.degree;
  j["target_genus"] = cert.target_genus;
  j["handles"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : cert.handles)
    j["handles"].push_back({permutation_to_json(a), permutation_to_json(b)});
  j["branch"] = nlohmann::ordered_json::array();
  for (const Permutation& s : cert.branch)
    j["branch"].push_back(permutation_to_json(s));
  j["profile"] = cert.declared_profile.multiplicities();
  j["convention"] = "left-to-right";
  return j;
}

MonodromyCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    raise(errc::malformed_certificate, "certificate must be a JSON object");

  MonodromyCertificate cert;
  cert.degree = integer_field(j, "degree");
  cert.target_genus = integer_field(j, "target_genus");
  if (cert.degree < 1)
    raise(errc::malformed_certificate, "degree must be positive");
  if (cert.target_genus < 0)
    raise(errc::malformed_certificate, "target_genus must be non-negative");

  if (!j.contains("convention") || !j["convention"].is_string() ||
      j["convention"].get<std::string>() != "left-to-right")
    raise(errc::malformed_certificate,
          "convention field must be the string \"left-to-right\"");

  if (!j.contains("handles") || !j["handles"].is_array())
    raise(errc::malformed_certificate, "handles must be an array");
  for (const auto& pair : j["handles"]) {
    if (!pair.is_array() || pair.size() != 2)
      raise(errc::malformed_certificate,
            "each handle must be a pair of permutations");
    cert.handles.emplace_back(permutation_from_json(pair[0]),
                              permutation_from_json(pair[1]));
  }

  if (!j.contains("branch") || !j["branch"].is_array())
    raise(errc::malformed_certificate, "branch must be an array");
  for (const auto& s : j["branch"])
    cert.branch.push_back(permutation_from_json(s));

  if (!j.contains("profile") || !j["profile"].is_array())
    raise(errc::malformed_certificate, "profile must be an array");
  std::vector<long long> multiplicities;
  long long previous = 0;
  bool first = true;
  for (const auto& entry : j["profile"]) {
    if (!entry.is_number_integer())
      raise(errc::malformed_certificate, "profile entries must be integers");
    long long m = entry.get<long long>();
    if (m < 2)
      raise(errc::malformed_certificate, "profile entries must be >= 2");
    if (!first && m > previous)
      raise(errc::malformed_certificate, "profile must be non-increasing");
    previous = m;
    first = false;
    multiplicities.push_back(m);
  }
  cert.declared_profile = RamificationProfile(std::move(multiplicities));

  return cert;
}

std::string certificate_to_string(const MonodromyCertificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

MonodromyCertificate certificate_from_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    raise(errc::malformed_certificate, "certificate is not valid JSON");
  return certificate_from_json(j);
}

void write_certificate(const std::filesystem::path& path,
                       const MonodromyCertificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    raise(errc::invalid_argument,
          "cannot open certificate file for writing: " + path.string());
  out << certificate_to_string(cert);
}

MonodromyCertificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(errc::invalid_argument,
          "cannot open certificate file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return certificate_from_string(text);
}

}  // namespace critmin
