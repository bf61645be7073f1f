#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "noether/json_io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(std::string const& args)
{
    std::string const cmd = std::string(NOETHER_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int const status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(std::string const& name)
{
    return std::filesystem::temp_directory_path() / ("noether_cli_test_" + name);
}

}  // namespace

TEST_CASE("usage errors exit 1")
{
    CHECK(run("").code == 1);
    CHECK(run("classify 6").code == 1);
    CHECK(run("classify").code == 1);
    CHECK(run("bounds 3").code == 1);
    CHECK(run("lemma 5 0").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("verify /nonexistent/cert.json").code == 1);
    CHECK(run("--bound 11 certify 5").code == 1);
    CHECK(run("--help").code == 0);
}

TEST_CASE("classify")
{
    auto const r = run("classify 59");
    CHECK(r.code == 0);
    CHECK(r.out.find("Eliminated") != std::string::npos);

    auto const j = run("--json classify 7");
    REQUIRE(j.code == 0);
    auto const env = noether::Json::parse(j.out);
    CHECK(env.at("command") == "classify");
    CHECK(env.at("result").at("status") == "InR_Certified");
    CHECK(env.at("tool_version") == noether::tool_version);
}

TEST_CASE("certify then verify, and a tampered certificate fails")
{
    auto const path = temp_file("cert5.json");
    auto const c = run("certify 5 --out " + path.string());
    REQUIRE(c.code == 0);
    std::ifstream f(path);
    std::string const text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    auto const cert = noether::parse_certificate(text);
    CHECK(cert.p == 5);
    CHECK(cert.conductor == 4);

    CHECK(run("verify " + path.string()).code == 0);
    auto const v = run("--json verify " + path.string());
    CHECK(noether::Json::parse(v.out).at("result").at("valid") == true);

    auto j = noether::Json::parse(text);
    j["norm"] = "-5";
    auto const bad = temp_file("cert5_bad.json");
    std::ofstream(bad) << j.dump();
    CHECK(run("verify " + bad.string()).code == 3);

    std::ofstream(bad) << "{\"p\": 5,";
    CHECK(run("verify " + bad.string()).code == 1);

    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("certify to stdout")
{
    auto const r = run("certify 71");
    REQUIRE(r.code == 0);
    auto const cert = noether::parse_certificate(r.out);
    CHECK(noether::verify_certificate(cert));
}

TEST_CASE("certify failure outside R exits 3")
{
    CHECK(run("--budget 50 certify 47").code == 3);
}

TEST_CASE("corollary, lemma, bounds, cutoff")
{
    CHECK(run("corollary 45").out == "true\n");
    auto const c8 = run("corollary 8");
    CHECK(c8.code == 0);
    CHECK(c8.out.rfind("false", 0) == 0);
    CHECK(c8.out.find("2^3") != std::string::npos);

    auto const l = run("lemma 11 2");
    CHECK(l.code == 0);
    CHECK(l.out.rfind("NoNormElement", 0) == 0);
    CHECK(run("lemma 5 2").out.rfind("NotApplicable", 0) == 0);

    auto const b = run("--json bounds 59");
    CHECK(noether::Json::parse(b.out).at("result").at("elimination") == "Mod7");

    auto const cut = run("cutoff");
    CHECK(cut.code == 0);
    CHECK(cut.out.find("(a)") != std::string::npos);
    CHECK(cut.out.find("(c)") != std::string::npos);
}

TEST_CASE("scan output is identical across job counts")
{
    auto const a = run("--json --no-timing --probe-budget 200 --jobs 1 scan --max 80");
    auto const b = run("--json --no-timing --probe-budget 200 --jobs 4 scan --max 80");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto const env = noether::Json::parse(a.out);
    CHECK(env.at("timing_ms") == 0);
    CHECK(env.at("result").at("summary").at("InR") == 17);
}
