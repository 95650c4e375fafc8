#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "comprelie/lincomb.hpp"
#include "comprelie/ptree.hpp"
#include "doctest.h"

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(COMPRELIE_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char ch : s) n += ch == '\n';
    return n;
}

}  // namespace

TEST_CASE("documented invocations") {
    auto e = cli("enum --n 3 --labels 1 --mode partitioned");
    CHECK(e.code == 0);
    CHECK(count_lines(e.out) == 5);

    auto v = cli("eval --algebra cp --op prelie \"{[d]}\" \"{[e]}\"");
    CHECK(v.code == 0);
    CHECK(v.out == "1*{[d([e])]}\n");

    auto k = cli("kerdelta --degree 4 --labels 2");
    CHECK(k.code == 0);
    CHECK(k.out == "25\n");
}

TEST_CASE("enumeration output re-parses to itself") {
    auto e = cli("enum --n 4 --labels 2 --mode partitioned --max-counter 1");
    REQUIRE(e.code == 0);
    std::size_t start = 0, seen = 0;
    while (start < e.out.size()) {
        std::size_t end = e.out.find('\n', start);
        std::string line = e.out.substr(start, end - start);
        CHECK(comprelie::parse_forest(line).key() == line);
        start = end + 1;
        ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("linear combination output re-parses") {
    auto r = cli("eval --algebra ucp --op prelie \"{[d([e]),d:1]}\" \"{[f],[d]}\"");
    REQUIRE(r.code == 0);
    std::string line = r.out.substr(0, r.out.size() - 1);
    auto parsed = comprelie::parse_lincomb<comprelie::PForest>(line, comprelie::parse_forest);
    CHECK(comprelie::to_string(parsed) == line);
}

TEST_CASE("identical invocations give identical bytes") {
    const std::string args = "check --algebra cp --maxdeg 3 --labels 2 --jobs 2";
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto s1 = cli("check --algebra tvf --maxdeg 4 --sampled 10 --seed 3");
    auto s2 = cli("check --algebra tvf --maxdeg 4 --sampled 10 --seed 3");
    CHECK(s1.out == s2.out);
}

TEST_CASE("exit codes") {
    CHECK(cli("eval \"{[d\" \"{[e]}\"").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("enum --n 3 --mode sideways").code == 2);
    CHECK(cli("kerdelta --degree 6").code == 3);
    CHECK(cli("check --algebra cp --maxdeg 3 --mutate drop-prelie-term").code == 1);
    CHECK(cli("check --algebra degneg1 --hyperboloid 1,1,1 --maxdeg 3").code == 1);
    CHECK(cli("check --algebra degneg1 --hyperboloid 1,0,5 --maxdeg 3").code == 0);
}

TEST_CASE("environment guard") {
    std::string cmd = std::string("COMPRELIE_MAXDEG=2 ") + COMPRELIE_CLI + " enum --n 3 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
