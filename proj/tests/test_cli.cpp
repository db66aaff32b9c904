#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SHUFFLEKIT_CLI_PATH
#error "SHUFFLEKIT_CLI_PATH must name the command-line binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SHUFFLEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("word subcommand") {
    auto r = run("word pshuffle term hoes");
    CHECK(r.code == 0);
    CHECK(r.out == "theorems\n");
    r = run("word bdr friend");
    CHECK(r.out == "finder\n");
    r = run("word ss 01");
    CHECK(r.code == 0);
    CHECK(r.out == "0011\n0101\n");
    r = run("word shuffle-many 0 1");
    CHECK(r.out == "01\n10\n");
    r = run("word pshuffle abc x");
    CHECK(r.code == 2);
    r = run("word frobnicate 01");
    CHECK(r.code == 2);
    r = run("word reverse 0#1");
    CHECK(r.code == 2);
    r = run("word reverse 012 --k 2");
    CHECK(r.code == 2);
}

TEST_CASE("member subcommand") {
    auto r = run("member self 0110");
    CHECK(r.code == 1);
    CHECK(r.out == "no\n");
    r = run("member self 01001101");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("yes\nroot 0101\nassignment ", 0) == 0);
    r = run("member self-rev 012012");
    CHECK(r.code == 1);
    r = run("member self-rev 0110");
    CHECK(r.code == 0);
    r = run("member interleave theorems term hoes");
    CHECK(r.code == 0);
    CHECK(r.out == "yes\nassignment 12121212\n");
    r = run("member triple 0000000000000000");
    CHECK(r.code == 3);
    r = run("member triple 001001001");
    CHECK(r.code == 0);
    r = run("member abelian 012012");
    CHECK(r.code == 0);
    CHECK(r.out == "yes\n");
    r = run("member abelian 010");
    CHECK(r.code == 1);
}

TEST_CASE("enum subcommand") {
    auto r = run("enum a --k 2 --n 5");
    CHECK(r.code == 0);
    CHECK(r.out == "320\n");
    r = run("enum b --k 2 --n 3 --row");
    CHECK(r.out == "1\n2\n6\n20\n");
    r = run("enum b --k 2 --n 4 --json");
    CHECK(r.out == "{\"kind\":\"b\",\"k\":2,\"n\":4,\"count\":\"70\"}\n");
    r = run("enum a --k 2 --n 60");
    CHECK(r.code == 3);
    r = run("enum c --k 2 --n 2");
    CHECK(r.code == 2);
    r = run("enum a --n 2");
    CHECK(r.code == 2);
}

TEST_CASE("nfa subcommand") {
    const auto dir = std::filesystem::temp_directory_path() / "shufflekit_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.json";
    const auto b = dir / "b.json";
    const auto c = dir / "c.json";
    const auto dot = dir / "c.dot";

    auto r = run("nfa trim --regex '0+10+' --k 2 --out " + a.string());
    REQUIRE(r.code == 0);
    r = run("nfa enum --in " + a.string() + " --max-len 4");
    CHECK(r.code == 0);
    CHECK(r.out == "0010\n010\n0100\n");

    r = run("nfa reverse --regex '1*' --k 2 --out " + b.string());
    REQUIRE(r.code == 0);
    r = run("nfa shuffle --regex '0*' --in2 " + b.string() + " --k 2 --out " + c.string() + " --dot " + dot.string());
    REQUIRE(r.code == 0);
    CHECK(slurp(dot).find("digraph") != std::string::npos);
    r = run("nfa enum --in " + c.string() + " --max-len 2");
    CHECK(r.out == "\n0\n00\n01\n1\n10\n11\n");

    r = run("nfa image --regex '(00|11)+' --k 2 --op bd --max-len 4");
    CHECK(r.out == "00\n0000\n0101\n1010\n11\n1111\n");
    r = run("nfa pss --regex 01 --k 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"transitions\"") != std::string::npos);

    std::ofstream(dir / "bad.json") << R"({"k":2,"states":1,"initial":[0],"final":[0],"transitions":[[0,"7",0]]})";
    r = run("nfa trim --in " + (dir / "bad.json").string());
    CHECK(r.code == 2);
    r = run("nfa trim --in " + (dir / "missing.json").string());
    CHECK(r.code == 2);
    r = run("nfa enum --regex '.*' --k 2 --max-len 25");
    CHECK(r.code == 3);
    r = run("nfa frobnicate --regex 0");
    CHECK(r.code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify words");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run("verify nonsense");
    CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("--help").code == 0);
}
