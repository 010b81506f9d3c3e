#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <hhodge/serialize.hpp>

using namespace hhodge;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("HHODGE_CLI");
    REQUIRE(bin != nullptr);
    RunResult r;
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool cli_available() { return std::getenv("HHODGE_CLI") != nullptr; }

}  // namespace

TEST_CASE("three-point subcommand") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    CHECK(run("three-point --group s4 zeta zeta one").out == "1/8\n");
    CHECK(run("three-point --group a4 s1 s2 zeta").out == "1\n");
    CHECK(run("three-point --group z2z2 z1 z1 z2").out == "0\n");
    CHECK(run("three-point --group a4 bogus s2 zeta").exit_code == 2);
    CHECK(run("three-point --group nope z1 z1 z2").exit_code == 2);
}

TEST_CASE("expand emits the documented values") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult r = run("expand --group z2z2 --order 4");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("group") == "z2z2");
    CHECK(j.at("order") == 4);
    bool found111 = false, found400 = false;
    for (const auto& row : j.at("integrals")) {
        const auto& ins = row.at("insertions");
        if (ins.size() == 3 && ins.value("z1", 0) == 1 && ins.value("z2", 0) == 1 &&
            ins.value("z3", 0) == 1) {
            CHECK(row.at("value") == "1/4");
            found111 = true;
        }
        if (ins.size() == 1 && ins.value("z1", 0) == 4) {
            CHECK(row.at("value") == "-1/4");
            found400 = true;
        }
    }
    CHECK(found111);
    CHECK(found400);

    const RunResult a = run("expand --group a4 --order 3");
    const auto ja = ordered_json::parse(a.out);
    bool found_s1 = false;
    for (const auto& row : ja.at("integrals"))
        if (row.at("insertions").size() == 1 && row.at("insertions").value("s1", 0) == 3) {
            CHECK(row.at("value") == "4/3");
            found_s1 = true;
        }
    CHECK(found_s1);
}

TEST_CASE("expand output is byte-deterministic and round-trips") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult r1 = run("expand --group a4 --order 5");
    const RunResult r2 = run("expand --group a4 --order 5");
    CHECK(r1.out == r2.out);

    const TableDump parsed = table_from_json(ordered_json::parse(r1.out));
    const HurwitzTable direct = extract_table(build_explicit(Group::A4, 5), Group::A4);
    CHECK(parsed.rows == direct.entries);
    CHECK(parsed.order == direct.order);
}

TEST_CASE("expand csv") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult r = run("expand --group z2z2 --order 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("group,z1,z2,z3,value\n", 0) == 0);
    CHECK(r.out.find("z2z2,1,1,1,1/4\n") != std::string::npos);
}

TEST_CASE("s4 expand carries the auxiliary families") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult r = run("expand --group s4 --order 6");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    bool tau2sigma = false, taurho = false;
    for (const auto& row : j.at("integrals")) {
        const auto& ins = row.at("insertions");
        if (ins.value("tau", 0) == 2 && ins.value("sigma", 0) == 1 && ins.size() == 2) {
            CHECK(row.at("value") == "1");  // <tau^2 sigma>
            tau2sigma = true;
        }
        if (ins.value("tau", 0) == 1 && ins.value("rho", 0) == 1 && ins.value("sigma", 0) == 1 &&
            ins.size() == 3) {
            CHECK(row.at("value") == "1");  // <tau sigma rho>
            taurho = true;
        }
    }
    CHECK(tau2sigma);
    CHECK(taurho);
}

TEST_CASE("verify subcommand exit codes and flags") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult ok = run("verify --check trig --order 6");
    CHECK(ok.exit_code == 0);
    const auto j = ordered_json::parse(ok.out);
    CHECK(j.at("pass") == true);

    CHECK(run("verify --check nonsense").exit_code == 2);
    CHECK(run("verify --check trig --order 99").exit_code == 2);
    CHECK(run("verify --check trig --order 17 --max-order 18").exit_code == 0);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify recursion emits solver stages") {
    if (!cli_available()) SKIP("HHODGE_CLI not set");
    const RunResult r = run("verify --check recursion --order 5");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("solver").at("z2z2").size() == 2);  // lengths 4 and 5
    for (const auto& st : j.at("solver").at("z2z2"))
        CHECK(st.at("equations").get<int>() > st.at("unknowns").get<int>());
    CHECK(j.at("solver").at("s4").at("branch_root_other") == "-1/3");
}
