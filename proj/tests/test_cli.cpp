#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with stderr discarded; stdout is the contract.
CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PETRIAL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "PETRIAL_BIN must point at the cli binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return (dir ? std::string(dir) : std::string("/tmp")) + "/" + name;
}

} // namespace

TEST_CASE("cli polynomial evaluation") {
    CliResult r = run_cli("poly --mode both --word \"1 2 1 2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "z + 3*z^2\nEQUAL\n");

    r = run_cli("poly --mode corank --edges \"3 3  0 1  0 2  1 2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "z + 4*z^2 + 3*z^3\n");

    r = run_cli("poly --word \"1 2 1 2 | 2\""); // default mode is tracing
    CHECK(r.exit_code == 0);
    CHECK(r.out == "z + 3*z^2\n");

    r = run_cli("--format json poly --mode corank --edges \"2 1 0 1\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "corank");
    CHECK(j["input"] == "graph");
    CHECK(j["extension"] == "corank-sum");
    CHECK(j["polynomial"]["1"] == "1");
    CHECK(j["polynomial"]["2"] == "3");
    CHECK(j["polynomial"]["n"] == 2);
}

TEST_CASE("cli input validation exit codes") {
    CHECK(run_cli("poly --word \"1 2 1\"").exit_code == 2);          // odd word
    CHECK(run_cli("poly --edges \"2 1 0 0\"").exit_code == 2);        // loop
    CHECK(run_cli("poly").exit_code == 2);                            // no input
    CHECK(run_cli("poly --word \"1 1\" --edges \"2 0\"").exit_code == 2);
    CHECK(run_cli("poly --mode tracing --edges \"2 1 0 1\"").exit_code == 2);
    CHECK(run_cli("poly --definitely-not-a-flag").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                                // no subcommand
    CHECK(run_cli("check-theorem --shard 0/2").exit_code == 2);
    CHECK(run_cli("check-theorem --shard 3/2").exit_code == 2);
    CHECK(run_cli("check-theorem --shard nonsense").exit_code == 2);
}

TEST_CASE("cli resource guard exit code") {
    CliResult r = run_cli("--max-n 3 poly --word \"1 2 3 4 1 2 3 4\"");
    CHECK(r.exit_code == 3);
    CHECK(run_cli("--max-n 12 check-theorem --scope grafts").exit_code == 3);
}

TEST_CASE("cli genus and trace") {
    CHECK(run_cli("genus --word \"1 1\"").out == "v=1 e=1 f=2 chi=2 genus=0\n");
    CHECK(run_cli("genus --word \"1 1\" --twist 1").out == "v=1 e=1 f=1 chi=1 genus=1\n");
    CHECK(run_cli("genus --word \"1 2 1 2\"").out == "v=1 e=2 f=1 chi=0 genus=2\n");

    CliResult r = run_cli("trace --word \"1 1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "boundaries: 2\nwalk: 0- 1+\nwalk: 0+ 1-\n");

    r = run_cli("--format json trace --word \"1 2 1 2\"");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["boundaries"] == 1);
    CHECK(j["walks"].size() == 1);
    CHECK(j["walks"][0].size() == 8);
}

TEST_CASE("cli witness round trip") {
    const std::string cert = temp_path("petrial_test_cert.json");
    CliResult made = run_cli("witness make --edges \"3 3  0 1  0 2  1 2\" --cert " + cert);
    CHECK(made.exit_code == 0);
    CHECK(made.out.empty());

    CliResult checked = run_cli("witness check --cert " + cert);
    CHECK(checked.exit_code == 0);
    CHECK(checked.out == "PASS corank=2 steps=1\n");

    // tamper: unmark everything
    {
        std::ifstream in(cert);
        nlohmann::json j = nlohmann::json::parse(in);
        j["initial"]["marks"] = nlohmann::json::array();
        std::ofstream out(cert);
        out << j.dump();
    }
    CliResult bad = run_cli("witness check --cert " + cert);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.substr(0, 4) == "FAIL");

    CHECK(run_cli("witness check --cert /nonexistent.json").exit_code == 2);
    std::remove(cert.c_str());

    // make on a path emits a path witness to stdout
    CliResult path = run_cli("witness make --edges \"2 1 0 1\"");
    CHECK(path.exit_code == 0);
    auto j = nlohmann::json::parse(path.out);
    CHECK(j["kind"] == "path-witness");
    CHECK(j["sequence"] == nlohmann::json::array({0}));
}

TEST_CASE("cli theorem scopes report instance counts") {
    CliResult r = run_cli("check-theorem --scope lemma3 --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "command: check-theorem lemma3\ninstances: 135\nfailures: 0\n");

    r = run_cli("--format json check-theorem --scope paths --max-n 6");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "check-theorem paths");
    CHECK(j["instances"] == 6);
    CHECK(j["failures"] == 0);
    CHECK(j["first_failure"].is_null());

    r = run_cli("--format json check-theorem --max-n 2");
    auto all = nlohmann::json::parse(r.out);
    REQUIRE(all.is_array());
    REQUIRE(all.size() == 4);
    CHECK(all[0]["command"] == "check-theorem paths");
    CHECK(all[3]["command"] == "check-theorem lemma3");

    // shards of the matching sweep partition the full run
    auto count = [&](const std::string& flags) {
        CliResult shard = run_cli("--format json check-theorem --scope lemma3 --max-n 4 " + flags);
        CHECK(shard.exit_code == 0);
        return nlohmann::json::parse(shard.out)["instances"].get<std::uint64_t>();
    };
    CHECK(count("--shard 1/3") + count("--shard 2/3") + count("--shard 3/3") == count(""));
}

TEST_CASE("cli version") {
    CliResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "petrial 1.0.0\n");
}
