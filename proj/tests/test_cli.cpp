#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run(const std::string& args) {
    const std::string cmd = std::string(LINFPT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos;
         p = hay.find(needle, p + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("prob-finite prints the frozen value") {
    const auto r = run("prob-finite --a 1 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 9) == "0.2699996");
}

TEST_CASE("sample output is deterministic and well formed") {
    const auto r1 = run("sample --a 1 --b 1 --n 3 --seed 7");
    const auto r2 = run("sample --a 1 --b 1 --n 3 --seed 7");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("index,outcome,time\n") == 0);
    CHECK(r1.out.find("# finite_fraction=") != std::string::npos);
}

TEST_CASE("sample json round-trips the record count") {
    const auto r = run("sample --a 1 --b 1 --n 25 --seed 9 --format json");
    CHECK(r.exit_code == 0);
    CHECK(count(r.out, "\"index\":") == 25);
    CHECK(r.out.find("\"summary\"") != std::string::npos);
}

TEST_CASE("unsupported boundary exits 3") {
    CHECK(run("sample --a 1 --b 0 --n 1 --seed 1").exit_code == 3);
}

TEST_CASE("bad arguments exit 2") {
    CHECK(run("sample --a 1 --b 1 --n 0 --seed 1").exit_code == 2);
    CHECK(run("sample --a 1 --b 1 --n 5").exit_code == 2);  // seed mandatory
    CHECK(run("cdf --a 1 --b 1 --t nope").exit_code == 2);
    CHECK(run("cdf --a 0 --b 1 --t 1").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("cdf emits one row per time") {
    const auto r = run("cdf --a 1 --b 1 --t 0.5,1,2");
    CHECK(r.exit_code == 0);
    CHECK(count(r.out, "\n") == 4);  // header + 3 rows
    CHECK(r.out.find("t,cdf,conditional_cdf\n") == 0);
    CHECK(r.out.find("0.18081171") != std::string::npos);
}

TEST_CASE("envelope reports zero violations") {
    const auto r = run("envelope --a 1 --b 1 --grid 512");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"violations\":0") != std::string::npos);
    CHECK(r.out.find("\"rate\":0.5") != std::string::npos);
}

TEST_CASE("validate passes on a healthy run") {
    const auto r = run("validate --a 1 --b 1 --n 4000 --seed 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("oracle output has a censored-fraction trailer") {
    const auto r =
        run("oracle --a 1 --b 1 --dt 0.01 --horizon 2 --n 500 --seed 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("time,empirical_cdf\n") == 0);
    CHECK(r.out.find("# censored_fraction=") != std::string::npos);
}
