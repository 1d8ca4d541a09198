#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef GALDEF_CLI_PATH
#define GALDEF_CLI_PATH "galdef"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string outfile = std::string(GALDEF_CLI_BUILD_DIR) + "/cli_test_out.txt";
    std::string cmd = std::string(GALDEF_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(outfile, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (rc != -1) code = WEXITSTATUS(rc);
    return {code, ss.str()};
}

} // namespace

TEST_CASE("numerology subcommand reproduces the worked value") {
    RunResult r = run("numerology --b 5 --N 2 --degF 1 --mu-parity same --T-ell 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"generators\": 4") != std::string::npos);
    CHECK(r.output.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("screen subcommand reproduces the flagship exclusion set") {
    RunResult r = run("screen --curve 0,0,1,-1,0 --cm-disc -4 --sigma 2,37 --N 2");
    CHECK(r.exit_code == 0);
    // the sorted global set
    CHECK(r.output.find("2,\n      3,\n      5,\n      19,\n      37") != std::string::npos);
}

TEST_CASE("identical configuration produces byte-identical reports") {
    RunResult a = run("tame --problem lr --N 2,3 --q 2 --l 7 --seed 42");
    RunResult b = run("tame --problem lr --N 2,3 --q 2 --l 7 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run("fl --fplus 1,2 --N 2 --l 5 --seed 9");
    RunResult d = run("fl --fplus 1,2 --N 2 --l 5 --seed 9");
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("reports do not depend on the thread budget") {
    RunResult a = run("fl --fplus 2 --N 2,3 --l 5,7 --seed 3");
    std::string saved = a.output;
    setenv("GALDEF_THREADS", "1", 1);
    RunResult b = run("fl --fplus 2 --N 2,3 --l 5,7 --seed 3");
    unsetenv("GALDEF_THREADS");
    CHECK(a.exit_code == 0);
    CHECK(saved == b.output);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("screen --curve 0,0,1 --cm-disc -4 --sigma 2 --N 2").exit_code == 1);
    CHECK(run("numerology --b 5").exit_code == 1); // missing required flags
    CHECK(run("screen --curve 0,0,1,-1,0 --cm-disc -4 --sigma 2 --N 2").exit_code == 1);
}

TEST_CASE("selftest subcommand runs a fast criterion and reports verdicts") {
    RunResult r = run("selftest --seed 7 --criterion 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags win") {
    std::string cfg = std::string(GALDEF_CLI_BUILD_DIR) + "/cli_test_cfg.ini";
    {
        std::ofstream out(cfg);
        out << "b=5\nN=2\ndegF=1\nmu-parity=same\nT-ell=1\n";
    }
    RunResult r = run("numerology --config " + cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"generators\": 4") != std::string::npos);
    // a flag overrides the file
    RunResult r2 = run("numerology --config " + cfg + " --b 6");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("\"generators\": 5") != std::string::npos);
}

TEST_CASE("satake subcommand checks the split example") {
    RunResult r = run("satake --kind split --l 7 --alpha 3,5 --alpha2 5,3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"unitary_polynomial_identity\": true") != std::string::npos);
    CHECK(r.output.find("\"split_constant\": 1") != std::string::npos);
}
