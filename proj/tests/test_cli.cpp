#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "critmin/phi.hpp"
#include "critmin/sphere_phi.hpp"
#include "critmin/volume.hpp"
#include "support/subprocess.hpp"

#ifndef CRITMIN_CLI_PATH
#error "CRITMIN_CLI_PATH must point at the built binary"
#endif

namespace {

const std::string kCli = CRITMIN_CLI_PATH;

testing::ProcessResult cli(const std::string& args) {
  return testing::run_process(kCli + " " + args + " 2>/dev/null");
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("phi subcommand") {
  auto r = cli("phi --source-genus 2 --target-genus 0 --witness");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\nd=5 profile=5,5,5\n");

  r = cli("phi --source-genus 3 --target-genus 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n");

  r = cli("phi --source-genus 1 --target-genus 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "infinite (case 1)\n");

  // a witness was requested but none can exist
  r = cli("phi --source-genus 1 --target-genus 2 --witness");
  CHECK(r.exit_code == 1);
}

TEST_CASE("table subcommand formats") {
  auto r = cli("table --target-genus 1 --max-source-genus 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "G\tphi\twitness\n"
        "0\tinfinite(1)\t-\n"
        "1\t0\td=1 profile=-\n"
        "2\t1\td=3 profile=3\n"
        "3\t1\td=5 profile=5\n");

  r = cli("table --target-genus 0 --max-source-genus 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "G,phi,witness\n"
        "0,0,d=1 profile=-\n"
        "1,3,\"d=3 profile=3,3,3\"\n");
}

TEST_CASE("table json output re-parses to the library values") {
  auto r = cli("table --target-genus 2 --max-source-genus 12 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json rows = nlohmann::json::parse(r.output);
  auto expected = critmin::phi_table(2, 12);
  REQUIRE(rows.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(rows[i]["G"].get<long long>() == expected[i].source_genus);
    const critmin::PhiResult& want = expected[i].result;
    if (want.is_finite()) {
      CHECK(rows[i]["phi"]["status"] == "finite");
      CHECK(rows[i]["phi"]["k"].get<long long>() == want.k());
      REQUIRE(want.witness().has_value());
      CHECK(rows[i]["phi"]["witness"]["degree"].get<long long>() ==
            want.witness()->degree());
    } else {
      CHECK(rows[i]["phi"]["status"] == "infinite");
      CHECK(rows[i]["phi"]["case"].get<int>() == want.infinite_case());
    }
  }
}

TEST_CASE("sphere-phi subcommand") {
  auto r = cli("sphere-phi 4 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "exact 2 (suspended-hopf)\n");

  r = cli("sphere-phi 5 4");
  CHECK(r.output == "infinite (codimension-obstruction)\n");

  r = cli("sphere-phi 9 5 --format json");
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["status"] == "at-least");
  CHECK(j["value"] == 1);

  r = cli("sphere-phi 2 3");
  CHECK(r.exit_code == 1);  // m < n
}

TEST_CASE("volume-ratio subcommand") {
  auto r = cli("volume-ratio 6 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2\n");

  r = cli("volume-ratio 5 3");
  CHECK(r.output == "0\n");

  r = cli("volume-ratio 6 3 --format json");
  nlohmann::json j = nlohmann::json::parse(r.output);
  critmin::RatioMod1 want =
      critmin::volume_ratio(critmin::Surface(6), critmin::Surface(3));
  CHECK(j["numerator"].get<long long>() == want.numerator);
  CHECK(j["denominator"].get<long long>() == want.denominator);

  r = cli("volume-ratio 5 1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("oracle-phi subcommand") {
  auto r = cli("oracle-phi 6 3 --max-k 4 --max-degree 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n");

  r = cli("oracle-phi 1 2 --max-k 4 --max-degree 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "none-found-within max-k=4 max-degree=6\n");
}

TEST_CASE("realize writes certificates that verify-cert accepts") {
  auto path = temp_file("critmin_cli_test_cert.json");
  auto r = cli("realize --target-genus 1 --degree 3 --profile 3 --out " +
               path.string());
  REQUIRE(r.exit_code == 0);

  r = cli("verify-cert " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "valid computed_source_euler=-2\n");

  r = cli("verify-cert " + path.string() + " --format json");
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["valid"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["computed_source_euler"] == -2);

  // tamper with the declared profile: still parses, no longer verifies
  std::ifstream in(path);
  nlohmann::json cert = nlohmann::json::parse(in);
  in.close();
  cert["profile"] = {2};
  std::ofstream out(path);
  out << cert.dump() << "\n";
  out.close();
  r = cli("verify-cert " + path.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("invalid") == 0);
  CHECK(r.output.find("profile_mismatch") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("realize reports impossible requests on stderr with exit 1") {
  auto r = cli("realize --target-genus 1 --degree 2 --profile 3");
  CHECK(r.exit_code == 1);
  CHECK(r.output.empty());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("").exit_code == 2);
  CHECK(cli("no-such-command").exit_code == 2);
  CHECK(cli("phi --source-genus 2").exit_code == 2);
  CHECK(cli("phi --source-genus 2 --target-genus 0 --bogus").exit_code == 2);
  CHECK(cli("table --target-genus 1 --max-source-genus 3 --format xml")
            .exit_code == 2);
  CHECK(cli("realize --target-genus 1 --degree 3 --profile 3,x").exit_code ==
        2);
  CHECK(cli("realize --target-genus 1 --degree 3 --profile 3,").exit_code ==
        2);
  CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("phi json matches the library result byte-for-byte") {
  auto r = cli("phi --source-genus 6 --target-genus 3 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  critmin::PhiResult want =
      critmin::phi(critmin::Surface(6), critmin::Surface(3));
  CHECK(j["status"] == "finite");
  CHECK(j["k"].get<long long>() == want.k());
  CHECK(j["witness"]["degree"].get<long long>() == want.witness()->degree());
  CHECK(j["witness"]["profile"].get<std::vector<long long>>() ==
        want.witness()->profile().multiplicities());

  // genus 4 over genus 3 sits in the certified-infinite gap range
  r = cli("phi --source-genus 4 --target-genus 3 --format json");
  j = nlohmann::json::parse(r.output);
  CHECK(j["status"] == "infinite");
  CHECK(j["case"] == 4);
}
