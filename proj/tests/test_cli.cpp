#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    std::string cmd = std::string(GRING_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path tmpdir() {
    auto d = fs::temp_directory_path() / "gring_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("verify subcommand writes reports and exits zero") {
    auto dir = tmpdir();
    auto json = (dir / "out.json").string();
    auto md = (dir / "out.md").string();
    REQUIRE(run("verify --group psl27 --lemma 2.3 --json " + json + " --md " + md) == 0);
    auto j = nlohmann::json::parse(slurp(json));
    REQUIRE(j.at("schema") == "report-v1");
    REQUIRE(j.at("reports").size() == 1);
    REQUIRE(j.at("reports")[0].at("id") == "2.3");
    REQUIRE(slurp(md).find("2.3") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("identical config produces byte-identical outputs") {
    auto dir = tmpdir();
    auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
    REQUIRE(run("verify --group psl27 --lemma 2.4 --seed 7 --json " + a) == 0);
    REQUIRE(run("verify --group psl27 --lemma 2.4 --seed 7 --json " + b) == 0);
    REQUIRE(slurp(a) == slurp(b));
    fs::remove_all(dir);
}

TEST_CASE("certificates export and check round trip") {
    auto dir = tmpdir();
    auto certs = (dir / "certs").string();
    REQUIRE(run("certificates --group psl27 --lemma 2.1 --certs " + certs) == 0);
    REQUIRE(run("check --certs " + certs) == 0);

    // tampering makes check fail with nonzero status
    fs::path victim;
    for (const auto& e : fs::directory_iterator(certs)) {
        auto j = nlohmann::json::parse(slurp(e.path()));
        if (j.at("provenance") == "solver") {
            victim = e.path();
            break;
        }
    }
    REQUIRE(!victim.empty());
    auto j = nlohmann::json::parse(slurp(victim));
    j["witness"][0][1]["coeffs"][0] = "5/777";
    std::ofstream(victim) << j.dump(1);
    REQUIRE(run("check --certs " + certs) == 1);
    fs::remove_all(dir);

    // certificates without a directory is a usage error
    REQUIRE(run("certificates --group psl27 --lemma 2.3") == 2);
}

TEST_CASE("skip-heavy runs the 504 suite quickly and exits zero") {
    REQUIRE(run("verify --group psl28 --lemma 3.2 --skip-heavy") == 0);
}

TEST_CASE("modlab subcommand") {
    auto dir = tmpdir();
    auto json = (dir / "lab.json").string();
    REQUIRE(run("modlab --group psl27 --prime 43 --module regular --modlab-json " + json) == 0);
    auto j = nlohmann::json::parse(slurp(json));
    REQUIRE(j[0].at("isotypic_dims") == nlohmann::json::array({1, 9, 9, 36, 49, 64}));

    // a prime dividing the group order is rejected
    REQUIRE(run("modlab --group psl27 --prime 7") == 2);

    REQUIRE(run("modlab --group a6 --prime 31 --prop45 --modlab-json " + json) == 0);
    auto p = nlohmann::json::parse(slurp(json));
    REQUIRE(p[0].at("passed").get<bool>());
    fs::remove_all(dir);
}
