#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return std::getenv("RAINBOW_CLI"); }

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout.
RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_file(const std::string& name, const std::string& contents) {
    fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with code 2") {
    const char* cli = cli_path();
    if (!cli) return;
    CHECK(run(std::string(cli) + " 2>/dev/null").exit_code == 2);
    CHECK(run(std::string(cli) + " frobnicate 2>/dev/null").exit_code == 2);
    CHECK(run(std::string(cli) + " generate --family cycle --n 5 --wat 2>/dev/null").exit_code == 2);
    CHECK(run(std::string(cli) + " --help >/dev/null 2>&1").exit_code == 0);
}

TEST_CASE("generate emits the edge list with a provenance header") {
    const char* cli = cli_path();
    if (!cli) return;
    RunResult r = run(std::string(cli) + " generate --family cycle --n 4 --order adversarial");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "# family=cycle n=4 order=adversarial\n1 2\n2 3\n3 4\n4 1\n");
}

TEST_CASE("color traces the stream and reports colors_used") {
    const char* cli = cli_path();
    if (!cli) return;
    fs::path edges = temp_file("rainbow_cli_c4.txt", "1 2\n2 3\n3 4\n4 1\n");
    RunResult r = run(std::string(cli) + " color " + edges.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"u\":\"1\",\"v\":\"2\",\"color\":1,\"case\":\"FirstEdge\"}\n"
                   "{\"u\":\"2\",\"v\":\"3\",\"color\":2,\"case\":\"FreshAdjOne\"}\n"
                   "{\"u\":\"3\",\"v\":\"4\",\"color\":3,\"case\":\"FreshAdjOne\"}\n"
                   "{\"u\":\"4\",\"v\":\"1\",\"color\":1,\"case\":\"ReuseLru\"}\n"
                   "{\"colors_used\":3}\n");
    fs::remove(edges);
}

TEST_CASE("generate pipes into color") {
    const char* cli = cli_path();
    if (!cli) return;
    RunResult r = run(std::string(cli) + " generate --family complete --n 4 --order adversarial | " +
                      cli + " color -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("{\"colors_used\":3}\n") != std::string::npos);
}

TEST_CASE("rc reports the exact value with a witness") {
    const char* cli = cli_path();
    if (!cli) return;
    fs::path edges = temp_file("rainbow_cli_k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    RunResult r = run(std::string(cli) + " rc " + edges.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.starts_with("{\"rc\":1,\"witness\":"));
    fs::remove(edges);
}

TEST_CASE("check reports the first failing pair") {
    const char* cli = cli_path();
    if (!cli) return;
    fs::path graph = temp_file("rainbow_cli_p3.txt", "a b\nb c\n");
    fs::path coloring = temp_file("rainbow_cli_p3.json",
                                  R"({"edges":[{"u":"a","v":"b","color":1},)"
                                  R"({"u":"b","v":"c","color":1}],"colors_used":1})");
    RunResult bad = run(std::string(cli) + " check " + graph.string() + " " + coloring.string());
    CHECK(bad.exit_code == 0);
    CHECK(bad.out == "{\"pass\":false,\"pair\":[\"a\",\"c\"]}\n");

    fs::path fixed = temp_file("rainbow_cli_p3_ok.json",
                               R"({"edges":[{"u":"a","v":"b","color":1},)"
                               R"({"u":"b","v":"c","color":2}],"colors_used":2})");
    RunResult good = run(std::string(cli) + " check " + graph.string() + " " + fixed.string());
    CHECK(good.exit_code == 0);
    CHECK(good.out == "{\"pass\":true}\n");
    fs::remove(graph);
    fs::remove(coloring);
    fs::remove(fixed);
}

TEST_CASE("domain errors exit 1 with a machine-parsable line") {
    const char* cli = cli_path();
    if (!cli) return;
    fs::path bad = temp_file("rainbow_cli_selfloop.txt", "1 2\n3 3\n");
    RunResult r = run(std::string(cli) + " color " + bad.string() + " 2>&1 1>/dev/null");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error: code=SelfLoop line=2") != std::string::npos);
    fs::remove(bad);

    RunResult empty = run("printf '' | " + std::string(cli) + " color - 2>&1 1>/dev/null");
    CHECK(empty.exit_code == 1);
    CHECK(empty.out.find("code=EmptyStream") != std::string::npos);

    RunResult dis = run("printf '1 2\\n3 4\\n' | " + std::string(cli) + " color - 2>&1 1>/dev/null");
    CHECK(dis.exit_code == 1);
    CHECK(dis.out.find("code=DisconnectedPrefix line=2") != std::string::npos);

    RunResult rc_empty = run("printf '' | " + std::string(cli) + " rc - 2>&1 1>/dev/null");
    CHECK(rc_empty.exit_code == 1);
    CHECK(rc_empty.out.find("code=EmptyStream") != std::string::npos);

    RunResult over = run(std::string(cli) + " generate --family complete --n 7 | " +
                         std::string(cli) + " rc - 2>&1 1>/dev/null");
    CHECK(over.exit_code == 1);
    CHECK(over.out.find("code=BudgetExceeded") != std::string::npos);
}

TEST_CASE("ratio prints a single-instance report") {
    const char* cli = cli_path();
    if (!cli) return;
    RunResult r = run(std::string(cli) + " ratio --family cycle --n 4 --order adversarial");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"colors_online\": 3") != std::string::npos);
    CHECK(r.out.find("\"rc\": 2") != std::string::npos);
    CHECK(r.out.find("\"within_bound\": true") != std::string::npos);

    RunResult conflict = run(std::string(cli) + " ratio --config x --family cycle 2>/dev/null");
    CHECK(conflict.exit_code == 2); // mutually exclusive pair
}

TEST_CASE("ratio --config runs a sweep to CSV") {
    const char* cli = cli_path();
    if (!cli) return;
    fs::path config = temp_file("rainbow_cli_sweep.cfg",
                                "families = cycle\nn = 4..6\norders = adversarial\n");
    RunResult r = run(std::string(cli) + " ratio --config " + config.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("family,n,params,order,seed,") == 0);
    CHECK(r.out.find("cycle,4,") != std::string::npos);
    CHECK(r.out.find("cycle,6,") != std::string::npos);
    fs::remove(config);
}

TEST_CASE("verify-theorems emits rows and an overall verdict") {
    const char* cli = cli_path();
    if (!cli) return;
    RunResult r = run(std::string(cli) + " verify-theorems --theorem T2-cycle --n-lo 4 --n-hi 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("theorem,family,") == 0);
    CHECK(r.out.find("# overall: PASS\n") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const char* cli = cli_path();
    if (!cli) return;
    for (const std::string& cmd :
         {std::string(cli) + " generate --family tree --n 8 --order random --seed 3",
          std::string(cli) + " ratio --family wheel --n 5 --order random --seed 9"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

} // TEST_SUITE
