#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PIFORMULA_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("cli verify exit codes partition outcomes", "[cli]") {
    CHECK(run("verify thm-2.1 --params 1,0 --digits 30").exit_code == 0);
    CHECK(run("verify chu --params 0,1,0").exit_code == 2);
    CHECK(run("verify no-such-family --params 0").exit_code == 4);
    CHECK(run("verify thm-2.1 --params 1,0 --digits 0").exit_code == 4);
    CHECK(run("verify thm-2.1 --params 1,0 --digits 1001").exit_code == 4);
    CHECK(run("").exit_code == 4);
    CHECK(run("no-such-command").exit_code == 4);
}

TEST_CASE("cli verify accepts printed-series labels", "[cli]") {
    auto r = run("verify surprising --digits 25");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("cli sweep", "[cli]") {
    auto r = run("sweep thm-3.dd --bound 1 --digits 20 --format structured");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) >= 5);
    CHECK(r.out.find("\"verdict\":\"verified\"") != std::string::npos);
    CHECK(r.out.find("\"schema\":\"piformula.report.v1\"") != std::string::npos);
    CHECK(r.out.find("failed") == std::string::npos);
}

TEST_CASE("cli structured reports are byte-identical across runs and jobs", "[cli]") {
    std::string args = "sweep thm-3.dd --bound 1 --digits 20 --format structured";
    auto a = run(args);
    auto b = run(args);
    auto c = run(args + " --jobs 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("cli identity checks", "[cli]") {
    CHECK(run("identity-check dougall --s-max 3").exit_code == 0);
    CHECK(run("identity-check chu7f6 --s-max 3").exit_code == 0);
    CHECK(run("identity-check chu7f6 --s-max 0").exit_code == 0);
    CHECK(run("identity-check euler").exit_code == 4);
}

TEST_CASE("cli listing", "[cli]") {
    auto r = run("list");
    CHECK(r.exit_code == 0);
    for (const char* id : {"thm-2.1", "thm-2.7", "thm-3.aa", "thm-3.jj", "thm-3.a",
                           "thm-3.o", "chu", "liu", "eq-1", "surprising"})
        CHECK(r.out.find(id) != std::string::npos);

    auto s = run("list --format structured");
    CHECK(s.exit_code == 0);
    CHECK(count_lines(s.out) == 33 + 17);
}

TEST_CASE("cli latex catalog is structurally balanced", "[cli]") {
    auto r = run("list --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\\documentclass") != std::string::npos);
    CHECK(r.out.find("\\end{document}") != std::string::npos);
    long depth = 0;
    bool ok = true;
    for (size_t i = 0; i < r.out.size(); ++i) {
        if (r.out[i] == '{') ++depth;
        if (r.out[i] == '}') --depth;
        if (depth < 0) ok = false;
    }
    CHECK(ok);
    CHECK(depth == 0);
    size_t begins = 0, ends = 0;
    for (size_t pos = 0; (pos = r.out.find("\\begin{", pos)) != std::string::npos; ++pos)
        ++begins;
    for (size_t pos = 0; (pos = r.out.find("\\end{", pos)) != std::string::npos; ++pos)
        ++ends;
    CHECK(begins == ends);
}

TEST_CASE("cli render", "[cli]") {
    auto r = run("render eq-1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "sum_{k>=0} k!/(2k+1)!! = pi/2\n");
    auto l = run("render thm-2.7 --params 0,0,0 --format latex");
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("\\frac{3k+2}{4^{k}}") != std::string::npos);
}

TEST_CASE("cli bench", "[cli]") {
    auto empty = run("bench --digits 20");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());

    auto r = run("bench --families thm-2.1,thm-2.7 --digits 30 --format structured");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 2);
    CHECK(r.out.find("\"strategy\":\"geometric\"") != std::string::npos);
}
