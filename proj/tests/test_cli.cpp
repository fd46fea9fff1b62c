#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

std::string bin() {
    const char* b = std::getenv("TTOWER_BIN");
    REQUIRE(b != nullptr);
    return b;
}

int run(const std::string& args, std::string* output = nullptr) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int rc = pclose(pipe);
    if (output) *output = out;
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("ingest validates and lists curves") {
    std::string out;
    std::string fixtures = std::getenv("TTOWER_FIXTURES");
    int rc = run("ingest " + fixtures + "/curves.jsonl", &out);
    CHECK(rc == 0);
    CHECK(out.find("20736c1") != std::string::npos);
    CHECK(out.find("32a2") != std::string::npos);
}

TEST_CASE("divpoly prints over Q and mod q") {
    std::string out;
    CHECK(run("divpoly 20736c1 3", &out) == 0);
    CHECK(out.find("deg 4") != std::string::npos);
    CHECK(run("divpoly 20736c1 11 --mod 101", &out) == 0);
    CHECK(out.find("deg 60") != std::string::npos);
}

TEST_CASE("certify + recheck round trip") {
    std::string dir = "/tmp/ttower_cli_test";
    std::string cert = dir + "/cert.json";
    std::system(("mkdir -p " + dir).c_str());
    std::string out;
    int rc = run("certify 121a1 11 --field layer:5.1 --out " + cert, &out);
    CHECK(rc == 0);
    rc = run("recheck " + cert, &out);
    CHECK(rc == 0);
    CHECK(out.find("OK") != std::string::npos);
    // unknown lemma / missing input paths exit with the configuration code
    rc = run("verify no.such.lemma", &out);
    CHECK(rc == 3);
}

TEST_CASE("verify single lemma") {
    std::string out;
    int rc = run("verify S4.order25", &out);
    CHECK(rc == 0);
    CHECK(out.find("PASS") != std::string::npos);
    rc = run("verify S5.p11.deg33", &out);
    CHECK(rc == 0);
    rc = run("torsion 20a3 --field Q", &out);
    CHECK(rc == 0);
    CHECK(out.find("Z/2") != std::string::npos);
}
