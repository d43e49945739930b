#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// run the verification binary through the shell and capture stdout+stderr
RunResult run(const std::string& args) {
    static int serial = 0;
    std::string tmp = "/tmp/ca_cli_out_" + std::to_string(++serial) + ".txt";
    std::string cmd = std::string(CA_CLI_BIN) + " " + args + " > " + tmp + " 2>&1";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(tmp.c_str());
    return r;
}

std::string data_path(const std::string& rel) { return std::string(CA_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("appendix verification exits clean") {
    RunResult r = run("verify appendix --k 2 --m 1 --pretty");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"failed\": 0") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("representation tower against golden data") {
    RunResult r = run("af1 --p 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("golden e1") != std::string::npos);
    CHECK(r.out.find("golden e2") != std::string::npos);

    // a wrong golden directory must surface as a failure, not a crash
    RunResult bad = run("af1 --p 3 --golden-dir /tmp");
    CHECK(bad.code != 0);
}

TEST_CASE("hopf subcommands") {
    CHECK(run("hopf check taft").code == 0);
    CHECK(run("hopf check qsl2 --q 2/3").code == 0);
    RunResult r = run("hopf check af1 --trunc 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"suite\"") != std::string::npos);
}

TEST_CASE("growth decisions from algebra files") {
    RunResult t2 = run("pgrowth decide " + data_path("algebras/t2.json"));
    CHECK(t2.code == 0);
    CHECK(t2.out.find("POLY_GROWTH") != std::string::npos);

    RunResult m2 = run("pgrowth decide " + data_path("algebras/m2.json"));
    CHECK(m2.code == 0);
    CHECK(m2.out.find("NOT_POLY_GROWTH") != std::string::npos);
    CHECK(m2.out.find("QUOTIENT_NONCOMMUTATIVE") != std::string::npos);

    RunResult gauss = run("pgrowth decide " + data_path("algebras/qx2p1.json"));
    CHECK(gauss.code == 0);
    CHECK(gauss.out.find("SPECTRUM_NOT_REAL") != std::string::npos);

    RunResult tensor = run("pgrowth tensor " + data_path("algebras/t2.json") + " " +
                           data_path("algebras/t2.json") + " --pretty");
    CHECK(tensor.code == 0);
    CHECK(tensor.out.find("\"dim\": 9") != std::string::npos);
}

TEST_CASE("malformed input is an input error") {
    std::string broken = "/tmp/ca_cli_broken.json";
    std::ofstream(broken) << "{ not json";
    RunResult r = run("pgrowth decide " + broken);
    CHECK(r.code == 2);
    CHECK(r.out.find("input error") != std::string::npos);
    std::remove(broken.c_str());

    CHECK(run("pgrowth decide /tmp/ca_cli_no_such_file.json").code == 2);
}

TEST_CASE("reports are deterministic across workers") {
    std::string tmp1 = "/tmp/ca_cli_det1.txt", tmp2 = "/tmp/ca_cli_det2.txt";
    std::string base = std::string(CA_CLI_BIN) + " verify appendix --k 2 --m 1";
    CHECK(std::system(("CA_WORKERS=1 " + base + " > " + tmp1 + " 2>&1").c_str()) == 0);
    CHECK(std::system(("CA_WORKERS=4 " + base + " > " + tmp2 + " 2>&1").c_str()) == 0);
    std::ifstream f1(tmp1), f2(tmp2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
}
