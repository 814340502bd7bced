#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("RUNCORR_CLI");
    REQUIRE_MESSAGE(env != nullptr, "RUNCORR_CLI must point at the built binary");
    return env;
}

RunOutput run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    RunOutput result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string record_value(const std::string& records, const std::string& key) {
    const std::string needle = key + "=";
    std::size_t pos = 0;
    while (pos < records.size()) {
        const std::size_t end = records.find('\n', pos);
        const std::string line = records.substr(pos, end - pos);
        if (line.rfind(needle, 0) == 0) return line.substr(needle.size());
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return {};
}

}  // namespace

TEST_CASE("analyze records are exact") {
    const RunOutput r = run("analyze \"+:7,3,3\" --output records");
    CHECK(r.exit_code == 0);
    CHECK(record_value(r.out, "sequence") == "+++++++---+++");
    CHECK(record_value(r.out, "rle") == "+:7,3,3");
    CHECK(record_value(r.out, "n") == "13");
    CHECK(record_value(r.out, "gamma") == "3");
    CHECK(record_value(r.out, "aperiodic") == "13,8,3,-2,-1,0,1,0,1,2,3,2,1,0");
    CHECK(record_value(r.out, "run_vector") == "0,0,-3,0,0,1,-1,0,0,1,0,0");
    CHECK(record_value(r.out, "merit_exact") == "169/196");
    CHECK(record_value(r.out, "merit") == "0.862245");
    CHECK(record_value(r.out, "psl") == "8");
    CHECK(record_value(r.out, "barker") == "0");
    CHECK(r.out.find("=fail") == std::string::npos);
}

TEST_CASE("analyze text output") {
    const RunOutput r = run("analyze \"+:6,7\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("run vector R  0,0,0,0,0,-1,-1,0,0,0,0,0") != std::string::npos);
    CHECK(r.out.find("merit factor  169/572") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("analyze reads stdin") {
    const RunOutput r = run("analyze --output records < /dev/null");
    CHECK(r.exit_code == 1);  // no input
}

TEST_CASE("analyze periodic run vector") {
    const RunOutput r = run("analyze \"+:3,6,3,3\" --output records");
    CHECK(r.exit_code == 0);
    CHECK(record_value(r.out, "periodic_run_vector") == "0,0,-3,0,0,1,0,0,1,0,0,-3,0,0");
}

TEST_CASE("analyze single element") {
    const RunOutput r = run("analyze \"+\" --output records");
    CHECK(r.exit_code == 0);
    CHECK(record_value(r.out, "n") == "1");
    CHECK(record_value(r.out, "gamma") == "1");
    CHECK(record_value(r.out, "aperiodic") == "1,0");
    CHECK(record_value(r.out, "merit_exact") == "undefined");
    CHECK(record_value(r.out, "psl") == "undefined");
}

TEST_CASE("analyze round trip") {
    const RunOutput first = run("analyze \"+:7,3,3\" --output records");
    REQUIRE(first.exit_code == 0);
    const std::string sequence = record_value(first.out, "sequence");
    REQUIRE_FALSE(sequence.empty());
    const RunOutput second = run("analyze \"" + sequence + "\" --format signs --output records");
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("exit code contract") {
    CHECK(run("analyze \"+:7,3,3\"").exit_code == 0);
    CHECK(run("analyze \"++x\"").exit_code == 1);          // parse error
    CHECK(run("analyze \"\"").exit_code == 1);             // no input
    CHECK(run("selftest --max-n 4 --samples 5").exit_code == 0);
    CHECK(run("selftest --max-n 4 --samples 5 --inject-bug").exit_code == 2);
}

TEST_CASE("selftest is deterministic under a fixed seed") {
    const RunOutput a = run("selftest --max-n 5 --samples 20 --seed 99");
    const RunOutput b = run("selftest --max-n 5 --samples 20 --seed 99");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("selftest reports a counterexample for an injected bug") {
    const RunOutput r = run("selftest --max-n 4 --samples 0 --inject-bug");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("counterexample") != std::string::npos);
    CHECK(r.out.find("n=3") != std::string::npos);  // smallest length the identity covers
}

TEST_CASE("convert") {
    CHECK(run("convert \"+++------+++---\"").out == "+:3,6,3,3\n");
    CHECK(run("convert \"+:3,6,3,3\"").out == "+++------+++---\n");
    CHECK(run("convert \"+:3,6,3,3\" --to bits").out == "111000000111000\n");
    CHECK(run("convert \"1101\" --format bits --to rle").out == "+:2,1,1\n");
}

TEST_CASE("skew enumeration order") {
    const RunOutput r = run("skew enum --gamma 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "+:1,1,3\n+:2,2,1\n+:1,2,2\n+:3,1,1\n");
    const RunOutput expanded = run("skew enum --gamma 2 --expand-signs");
    CHECK(expanded.out == "+--\n-++\n++-\n--+\n");
}

TEST_CASE("skew facts and check") {
    const RunOutput facts = run("skew facts \"+++++--++-+-+\" --output records");
    CHECK(facts.exit_code == 0);
    CHECK(record_value(facts.out, "barker") == "1");
    CHECK(record_value(facts.out, "odd_lags_zero") == "pass");

    const RunOutput check = run("skew check \"+:1,1,3\" --output records");
    CHECK(check.exit_code == 0);
    CHECK(record_value(check.out, "skew") == "1");
    CHECK(record_value(check.out, "balanced") == "1");
    CHECK(record_value(check.out, "reduction") == "+:1,2");

    CHECK(run("skew facts \"++\"").exit_code == 1);  // not skew-symmetric
}

TEST_CASE("search command") {
    const RunOutput r = run("search 13 --objective psl --method both --output records");
    CHECK(r.exit_code == 0);
    CHECK(record_value(r.out, "best_psl") == "1");
    CHECK(r.out.find("optimum=+++++--++-+-+") != std::string::npos);

    const RunOutput merit = run("search 5 --objective merit --output records");
    CHECK(merit.exit_code == 0);
    CHECK_FALSE(record_value(merit.out, "best_merit_exact").empty());

    CHECK(run("search 25").exit_code == 1);  // over the size limit
}

TEST_CASE("bench asserts the addition count") {
    const RunOutput r = run("bench --sizes 64,128 --trials 2 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("direct_mult") != std::string::npos);
}
