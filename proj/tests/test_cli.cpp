// End-to-end checks of the command-line interface: spawns the built binary
// and inspects stdout and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZHAT_CLI_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("spec emits the six-point listing") {
    RunResult r = run_cli("spec --primes 2,3,5");
    CHECK(r.status == 0);
    CHECK(r.out.find(R"({"prime":2,"level":"minimal")") != std::string::npos);
    CHECK(r.out.find(R"("generator":["1","3","1"])") != std::string::npos);
}

TEST_CASE("eval and truthset") {
    RunResult sum = run_cli(R"(eval --op add '["1","2","3"]' '["1","1","2"]' --primes 2,3,5)");
    CHECK(sum.status == 0);
    CHECK(sum.out.find(R"("components":["2","3","5"])") != std::string::npos);

    RunResult inv = run_cli(R"(eval --op inv '["1","2","63"]' --primes 2,3,5 --precision 4)");
    CHECK(inv.status == 0);
    CHECK(inv.out.find(R"("components":["1","41","377"])") != std::string::npos);

    RunResult ts = run_cli(R"(truthset '["0","3","1"]' --predicate maximal --primes 2,3,5)");
    CHECK(ts.status == 0);
    CHECK(ts.out.find(R"("members":[2,3])") != std::string::npos);

    RunResult zero = run_cli(R"(truthset '["0","3","1"]' --predicate zero --primes 2,3,5)");
    CHECK(zero.out.find(R"("certain":false)") != std::string::npos);

    RunResult val = run_cli(R"(eval --op valuation '["0","18","7"]' --primes 2,3,5)");
    CHECK(val.status == 0);
    CHECK(val.out.find(R"({"prime":2,"valuation":">=N"})") != std::string::npos);
    CHECK(val.out.find(R"({"prime":3,"valuation":"2"})") != std::string::npos);
    CHECK(val.out.find(R"({"prime":5,"valuation":"0"})") != std::string::npos);
}

TEST_CASE("ideal classification and membership") {
    RunResult r = run_cli(
        R"(ideal --generators '[["1","0","1"]]' --member '["1","0","4"]' --primes 2,3,5)");
    CHECK(r.status == 0);
    CHECK(r.out.find(R"("prime":{"prime":3,"level":"minimal"})") != std::string::npos);
    CHECK(r.out.find(R"("member":true)") != std::string::npos);

    RunResult unit_ideal = run_cli(R"(ideal --generators '[["1","1","1"]]' --primes 2,3,5)");
    CHECK(unit_ideal.status == 0);
    CHECK(unit_ideal.out.find(R"("proper":false)") != std::string::npos);
    CHECK(unit_ideal.out.find(R"("prime":null)") != std::string::npos);
}

TEST_CASE("quotient, localize, sections, stalk") {
    RunResult q = run_cli(R"(quotient --at 3 --level maximal --map '["0","1","0"]' --primes 2,3,5)");
    CHECK(q.status == 0);
    CHECK(q.out.find(R"("kind":"residue-field")") != std::string::npos);
    CHECK(q.out.find(R"("image":1)") != std::string::npos);

    RunResult l = run_cli(
        R"(localize --at 2 --level minimal --num '["2","1"]' --den '["4","1"]' --primes 2,3)");
    CHECK(l.status == 0);
    CHECK(l.out.find(R"("exp":-1)") != std::string::npos);

    RunResult ld = run_cli(
        R"(localize --prime '{"prime":2,"level":"minimal"}' --num '["2","1"]' --den '["4","1"]' --primes 2,3)");
    CHECK(ld.out == l.out);

    RunResult s = run_cli(
        R"(sections --open '[{"prime":2,"level":"minimal"},{"prime":3,"level":"minimal"},{"prime":3,"level":"maximal"}]' --primes 2,3)");
    CHECK(s.status == 0);
    CHECK(s.out.find(R"({"prime":2,"kind":"field"})") != std::string::npos);
    CHECK(s.out.find(R"({"prime":3,"kind":"integral"})") != std::string::npos);

    RunResult st = run_cli("stalk --at 3 --level minimal --primes 2,3,5");
    CHECK(st.status == 0);
    CHECK(st.out.find(R"("kind":"field")") != std::string::npos);
}

TEST_CASE("adele subcommands") {
    RunResult spec = run_cli("adele spec --primes 2,3,5");
    CHECK(spec.status == 0);
    CHECK(spec.out.find(R"({"prime":2,"minimal":true,"maximal":true})") != std::string::npos);

    RunResult frac = run_cli(
        R"(adele fraction --element '["1","1"]' --denominator 6 --primes 2,3 --precision 4)");
    CHECK(frac.status == 0);
    CHECK(frac.out.find(R"({"exp":-1,"unit":"11"})") != std::string::npos);

    RunResult quot = run_cli(
        R"(adele quotient --at 3 --map '{"components":[{"exp":0,"unit":"1"},{"exp":-2,"unit":"7"},{"zero":true}]}' --primes 2,3,5)");
    CHECK(quot.status == 0);
    CHECK(quot.out.find(R"("image":{"p":3,"N":24,"exp":-2,"unit":"7"})") != std::string::npos);

    RunResult loc = run_cli(
        R"(adele localize --at 2 --num '{"components":[{"exp":1,"unit":"1"},{"exp":0,"unit":"1"}]}' --den '{"components":[{"exp":2,"unit":"1"},{"exp":0,"unit":"1"}]}' --primes 2,3)");
    CHECK(loc.status == 0);
    CHECK(loc.out.find(R"("image":{"p":2,"N":24,"exp":-1,"unit":"1"})") != std::string::npos);
}

TEST_CASE("asymptotic subcommand") {
    RunResult cmp = run_cli(R"(asymptotic --op compare --lhs '[0,0,1]' --rhs '[0,5]')");
    CHECK(cmp.status == 0);
    CHECK(cmp.out.find(R"("compare":"greater")") != std::string::npos);

    RunResult galois = run_cli("asymptotic --op galois --delta standard");
    CHECK(galois.status == 0);
    CHECK(galois.out.find(R"("identity":true)") != std::string::npos);

    RunResult member = run_cli("asymptotic --op member --delta standard --lhs '[0,1]'");
    CHECK(member.status == 0);
    CHECK(member.out.find(R"("member":false)") != std::string::npos);
    CHECK(member.out.find(R"("in-prime":true)") != std::string::npos);
}

TEST_CASE("verify: pass, filtered, corrupted, deterministic") {
    RunResult one = run_cli("verify --suite pm-ring --primes 2,3,5,7");
    CHECK(one.status == 0);
    CHECK(one.out.find("pass  pm-ring") != std::string::npos);

    RunResult corrupted =
        run_cli("verify --suite hensel-lifting --corrupt hensel-lifting");
    CHECK(corrupted.status == 1);
    CHECK(corrupted.out.find("FAIL") != std::string::npos);

    RunResult a = run_cli("verify --suite unit-criterion --suite adele-spec --json --seed 42");
    RunResult b = run_cli("verify --suite unit-criterion --suite adele-spec --json --seed 42");
    CHECK(a.status == 0);
    CHECK(a.out == b.out); // byte-for-byte reproducible
}

TEST_CASE("config file supplies defaults") {
    std::string path = std::string(ZHAT_TEST_TMPDIR) + "/cli_config.json";
    {
        std::ofstream out(path);
        out << R"({"primes": [2, 3], "precision": 6, "seed": 9})";
    }
    RunResult r = run_cli("spec --config " + path);
    CHECK(r.status == 0);
    CHECK(r.out.find(R"({"prime":3,"level":"maximal")") != std::string::npos);
    CHECK(r.out.find("\"prime\":5") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("ideal --generators 'not json' --primes 2,3").status == 2);
    CHECK(run_cli("spec --primes 2,4").status == 2);
    CHECK(run_cli("spec --precision 2").status == 2);
    CHECK(run_cli(R"(sections --open '[{"prime":2,"level":"maximal"}]' --primes 2,3)").status ==
          2); // not generization-closed
    CHECK(run_cli("verify --suite no-such-suite").status == 2);
}

TEST_SUITE_END();
