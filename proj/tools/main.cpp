// critmin command line tool. One subcommand per library operation, with
// tsv (default), csv, and json output. Exit codes: 0 success, 1 domain
// error, 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "critmin/certificate_io.hpp"
#include "critmin/monodromy.hpp"
#include "critmin/patterson.hpp"
#include "critmin/phi.hpp"
#include "critmin/sphere_phi.hpp"
#include "critmin/volume.hpp"

namespace {

using nlohmann::ordered_json;

// Grammar-checked by the option validator, so stoll cannot fail here.
std::vector<long long> parse_profile(const std::string& text) {
  std::vector<long long> values;
  if (text.empty()) return values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(std::stoll(item));
  return values;
}

const CLI::Validator kProfileGrammar(
    [](std::string& text) -> std::string {
      if (text.empty()) return {};
      bool expect_digit = true;
      for (char c : text) {
        if (c == ',') {
          if (expect_digit) return "profile must be m1,m2,... with integers";
          expect_digit = true;
        } else if (c >= '0' && c <= '9') {
          expect_digit = false;
        } else {
          return "profile must be m1,m2,... with integers";
        }
      }
      return expect_digit ? "profile must be m1,m2,... with integers"
                          : std::string{};
    },
    "PROFILE");

std::string witness_text(const std::optional<critmin::CoveringData>& witness) {
  if (!witness) return "-";
  std::string out = "d=" + std::to_string(witness->degree()) + " profile=";
  if (witness->profile().empty()) return out + "-";
  bool first = true;
  for (long long m : witness->profile().multiplicities()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out;
}

ordered_json witness_json(const critmin::CoveringData& witness) {
  ordered_json j;
  j["degree"] = witness.degree();
  j["profile"] = witness.profile().multiplicities();
  j["target_genus"] = witness.target().genus();
  j["source_euler"] = witness.source_euler();
  return j;
}

ordered_json phi_json(const critmin::PhiResult& result) {
  ordered_json j;
  if (result.is_finite()) {
    j["status"] = "finite";
    j["k"] = result.k();
    if (result.witness())
      j["witness"] = witness_json(*result.witness());
    else
      j["witness"] = nullptr;
  } else {
    j["status"] = "infinite";
    j["case"] = result.infinite_case();
  }
  return j;
}

// csv fields holding a comma or quote are quoted per the usual rules.
std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct Options {
  std::string format = "tsv";

  long long source_genus = 0;
  long long target_genus = 0;
  bool witness = false;

  long long max_source_genus = 0;

  long long degree = 1;
  std::string profile_text;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  std::string out_path;

  std::string cert_path;

  long long sphere_m = 2;
  long long sphere_n = 2;

  long long max_k = 0;
  long long max_degree = 1;
};

void add_format_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format: tsv, csv or json")
      ->check(CLI::IsMember({"tsv", "csv", "json"}))
      ->capture_default_str();
}

int run_phi(const Options& opt) {
  critmin::PhiResult result =
      critmin::phi(critmin::Surface(opt.source_genus),
                   critmin::Surface(opt.target_genus));
  if (opt.format == "json") {
    std::cout << phi_json(result).dump() << "\n";
    if (opt.witness && !result.is_finite()) return 1;
    return 0;
  }
  if (result.is_finite()) {
    std::cout << result.k() << "\n";
    if (opt.witness) std::cout << witness_text(result.witness()) << "\n";
    return 0;
  }
  std::cout << "infinite (case " << result.infinite_case() << ")\n";
  // A witness was requested but none can exist.
  return opt.witness ? 1 : 0;
}

int run_table(const Options& opt) {
  auto rows = critmin::phi_table(opt.target_genus, opt.max_source_genus);
  if (opt.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json item;
      item["G"] = row.source_genus;
      item["phi"] = phi_json(row.result);
      j.push_back(item);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  const char sep = opt.format == "csv" ? ',' : '\t';
  auto field = [&](const std::string& text) {
    return opt.format == "csv" ? csv_field(text) : text;
  };
  std::cout << "G" << sep << "phi" << sep << "witness\n";
  for (const auto& row : rows) {
    std::string value, witness;
    if (row.result.is_finite()) {
      value = std::to_string(row.result.k());
      witness = witness_text(row.result.witness());
    } else {
      value = "infinite(" + std::to_string(row.result.infinite_case()) + ")";
      witness = "-";
    }
    std::cout << row.source_genus << sep << field(value) << sep
              << field(witness) << "\n";
  }
  return 0;
}

int run_realize(const Options& opt) {
  critmin::SearchBudget budget{opt.budget, opt.seed};
  critmin::RealizeResult result = critmin::realize(
      critmin::Surface(opt.target_genus), opt.degree,
      critmin::RamificationProfile(parse_profile(opt.profile_text)), budget);
  switch (result.kind()) {
    case critmin::RealizeResult::Kind::certificate:
      if (opt.out_path.empty())
        std::cout << critmin::certificate_to_string(result.certificate());
      else
        critmin::write_certificate(opt.out_path, result.certificate());
      return 0;
    case critmin::RealizeResult::Kind::infeasible:
      std::cerr << "error: infeasible (" << to_string(result.reason())
                << ")\n";
      return 1;
    case critmin::RealizeResult::Kind::not_found:
      std::cerr << "error: not-found (search budget exhausted)\n";
      return 1;
  }
  return 1;
}

int run_verify(const Options& opt) {
  critmin::MonodromyCertificate cert =
      critmin::read_certificate(opt.cert_path);
  critmin::VerificationReport report = critmin::verify_certificate(cert);
  if (opt.format == "json") {
    ordered_json j;
    j["valid"] = report.valid;
    j["violations"] = ordered_json::array();
    for (auto v : report.violations) j["violations"].push_back(to_string(v));
    j["computed_source_euler"] = report.computed_source_euler;
    std::cout << j.dump() << "\n";
    return report.valid ? 0 : 1;
  }
  if (report.valid) {
    std::cout << "valid computed_source_euler="
              << report.computed_source_euler << "\n";
    return 0;
  }
  std::cout << "invalid violations=";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    if (i > 0) std::cout << ",";
    std::cout << to_string(report.violations[i]);
  }
  std::cout << " computed_source_euler=" << report.computed_source_euler
            << "\n";
  return 1;
}

int run_sphere_phi(const Options& opt) {
  critmin::SpherePhi result =
      critmin::classify_sphere_pair(opt.sphere_m, opt.sphere_n);
  if (opt.format == "json") {
    ordered_json j;
    j["status"] = to_string(result.status);
    if (result.status == critmin::SpherePhi::Status::exact ||
        result.status == critmin::SpherePhi::Status::at_least)
      j["value"] = result.value;
    j["provenance"] = std::string(result.provenance);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << to_string(result.status);
  if (result.status == critmin::SpherePhi::Status::exact ||
      result.status == critmin::SpherePhi::Status::at_least)
    std::cout << " " << result.value;
  std::cout << " (" << result.provenance << ")\n";
  return 0;
}

int run_volume_ratio(const Options& opt) {
  critmin::RatioMod1 ratio =
      critmin::volume_ratio(critmin::Surface(opt.source_genus),
                            critmin::Surface(opt.target_genus));
  if (opt.format == "json") {
    ordered_json j;
    j["numerator"] = ratio.numerator;
    j["denominator"] = ratio.denominator;
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (ratio.numerator == 0)
    std::cout << "0\n";
  else
    std::cout << ratio.numerator << "/" << ratio.denominator << "\n";
  return 0;
}

int run_oracle_phi(const Options& opt) {
  critmin::SearchBudget budget{opt.budget, opt.seed};
  std::optional<long long> k = critmin::oracle_phi(
      critmin::Surface(opt.source_genus), critmin::Surface(opt.target_genus),
      opt.max_k, opt.max_degree, budget);
  if (opt.format == "json") {
    ordered_json j;
    j["found"] = k.has_value();
    if (k)
      j["k"] = *k;
    else {
      j["max_k"] = opt.max_k;
      j["max_degree"] = opt.max_degree;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (k)
    std::cout << *k << "\n";
  else
    std::cout << "none-found-within max-k=" << opt.max_k
              << " max-degree=" << opt.max_degree << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimal critical points of smooth maps between closed orientable "
      "surfaces, with branched-covering witnesses and permutation "
      "monodromy certificates."};
  app.require_subcommand(1);
  Options opt;

  CLI::App* phi_cmd = app.add_subcommand(
      "phi", "Minimal critical point count for source -> target");
  phi_cmd->add_option("--source-genus", opt.source_genus, "Source genus")
      ->required();
  phi_cmd->add_option("--target-genus", opt.target_genus, "Target genus")
      ->required();
  phi_cmd->add_flag("--witness", opt.witness,
                    "Also print the witness covering (fails if infinite)");
  add_format_option(phi_cmd, opt);

  CLI::App* table_cmd = app.add_subcommand(
      "table", "Tabulate phi over source genus 0..N for a fixed target");
  table_cmd->add_option("--target-genus", opt.target_genus, "Target genus")
      ->required();
  table_cmd
      ->add_option("--max-source-genus", opt.max_source_genus,
                   "Largest source genus")
      ->required();
  add_format_option(table_cmd, opt);

  CLI::App* realize_cmd = app.add_subcommand(
      "realize", "Search for a monodromy certificate of a branched cover");
  realize_cmd->add_option("--target-genus", opt.target_genus, "Target genus")
      ->required();
  realize_cmd->add_option("--degree", opt.degree, "Covering degree")
      ->required();
  realize_cmd
      ->add_option(
          "--profile", opt.profile_text,
          "Comma-separated ramification orders, e.g. 3,2,2 (empty = unramified)")
      ->check(kProfileGrammar);
  realize_cmd->add_option("--seed", opt.seed, "Random search seed")
      ->capture_default_str();
  realize_cmd
      ->add_option("--budget", opt.budget,
                   "Maximum candidate tuple evaluations")
      ->capture_default_str();
  realize_cmd->add_option("--out", opt.out_path,
                          "Write the certificate to this file");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-cert", "Verify a monodromy certificate file");
  verify_cmd->add_option("file", opt.cert_path, "Certificate JSON file")
      ->required();
  add_format_option(verify_cmd, opt);

  CLI::App* sphere_cmd = app.add_subcommand(
      "sphere-phi", "Classify the minimal critical point count for S^m -> S^n");
  sphere_cmd->add_option("m", opt.sphere_m, "Source sphere dimension")
      ->required();
  sphere_cmd->add_option("n", opt.sphere_n, "Target sphere dimension")
      ->required();
  add_format_option(sphere_cmd, opt);

  CLI::App* volume_cmd = app.add_subcommand(
      "volume-ratio", "Simplicial volume ratio mod 1 for a surface pair");
  volume_cmd->add_option("G", opt.source_genus, "Source genus")->required();
  volume_cmd->add_option("g", opt.target_genus, "Target genus")->required();
  add_format_option(volume_cmd, opt);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-phi", "Independent bounded search for the minimal count");
  oracle_cmd->add_option("G", opt.source_genus, "Source genus")->required();
  oracle_cmd->add_option("g", opt.target_genus, "Target genus")->required();
  oracle_cmd->add_option("--max-k", opt.max_k, "Largest critical point count")
      ->required();
  oracle_cmd->add_option("--max-degree", opt.max_degree, "Largest degree")
      ->required();
  oracle_cmd->add_option("--seed", opt.seed, "Random search seed")
      ->capture_default_str();
  oracle_cmd
      ->add_option("--budget", opt.budget,
                   "Maximum candidate tuple evaluations per search")
      ->capture_default_str();
  add_format_option(oracle_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(phi_cmd)) return run_phi(opt);
    if (app.got_subcommand(table_cmd)) return run_table(opt);
    if (app.got_subcommand(realize_cmd)) return run_realize(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify(opt);
    if (app.got_subcommand(sphere_cmd)) return run_sphere_phi(opt);
    if (app.got_subcommand(volume_cmd)) return run_volume_ratio(opt);
    if (app.got_subcommand(oracle_cmd)) return run_oracle_phi(opt);
  } catch (const critmin::Error& e) {
    std::cerr << "error: " << e.what() << " [" << to_string(e.code())
              << "]\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
