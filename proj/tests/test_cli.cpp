#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

// End-to-end checks of the command-line tool; the binary path is injected
// by the build.
#ifndef GORDIAN_CLI_PATH
#error "GORDIAN_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    std::string out_path = "cli_stdout.tmp";
    std::string cmd = std::string(GORDIAN_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    RunResult r{code, slurp(out_path)};
    std::remove(out_path.c_str());
    std::remove("cli_stderr.tmp");
    return r;
}

std::string strip_duration(const std::string& text) {
    static const std::regex duration_re("\"duration_ms\": [0-9.e+-]+");
    return std::regex_replace(text, duration_re, "\"duration_ms\": 0");
}

}  // namespace

TEST_CASE("cli invariant on braid and PD inputs") {
    RunResult r = run("invariant --braid \"1 1 1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("conway: 1 + 1*z^2") != std::string::npos);
    CHECK(r.out.find("a2: 1") != std::string::npos);

    RunResult empty = run("invariant --pd \"\"");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("conway: 1\n") != std::string::npos);
    CHECK(empty.out.find("a2: 0") != std::string::npos);

    RunResult json = run("invariant --braid \"1 -2 1 -2\" --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"a2\": -1") != std::string::npos);
}

TEST_CASE("cli invariant rejects bad input with a diagnostic exit code") {
    RunResult r = run("invariant --braid \"0\"");
    CHECK(r.exit_code == 2);
    RunResult pd = run("invariant --pd \"X(1,2,3)\"");
    CHECK(pd.exit_code == 2);
    RunResult both = run("invariant --braid \"1\" --pd \"\"");
    CHECK(both.exit_code == 2);
}

TEST_CASE("cli distance between classes, braids, and mixtures") {
    RunResult r = run("distance --class \"[1,0,1]\" --class \"[1,0,3,0,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta-distance: 2") != std::string::npos);

    RunResult same = run("distance --class \"[1]\" --class \"[1]\"");
    CHECK(same.out.find("delta-distance: 0") != std::string::npos);
    CHECK(same.out.find("{0}") != std::string::npos);

    RunResult braids = run("distance --braid \"1 1 1\" --braid \"1 -2 1 -2\"");
    CHECK(braids.out.find("delta-distance: 2") != std::string::npos);
    CHECK(braids.out.find("{1, 2}") != std::string::npos);

    RunResult wrong = run("distance --class \"[1]\"");
    CHECK(wrong.exit_code == 2);
}

TEST_CASE("cli universe emits a loadable file and audits consume it") {
    RunResult u = run("universe --a2 -2:2 --depth 2 --coeff 1 --out cli_u.json");
    CHECK(u.exit_code == 0);
    std::string file = slurp("cli_u.json");
    CHECK(file.find("\"vertex_count\": 15") != std::string::npos);
    CHECK(file.find("\"edge_count\": 36") != std::string::npos);

    RunResult bad = run("universe --a2 0:0 --depth 1 --coeff 0");
    CHECK(bad.exit_code == 2);

    for (const char* kind : {"slim", "fourpoint", "qi", "triangle-free"}) {
        RunResult audit = run(std::string("audit ") + kind + " --universe cli_u.json --strict");
        CHECK(audit.exit_code == 0);
        CHECK(audit.out.find("\"pass\": true") != std::string::npos);
    }

    RunResult missing = run("audit slim --universe nope.json");
    CHECK(missing.exit_code == 2);
    std::remove("cli_u.json");
}

TEST_CASE("cli audit reports are byte-identical modulo duration") {
    RunResult u = run("universe --a2 -1:1 --depth 2 --coeff 1 --out cli_det.json");
    REQUIRE(u.exit_code == 0);
    RunResult a = run("audit slim --universe cli_det.json --out cli_r1.json");
    RunResult b = run("audit slim --universe cli_det.json --out cli_r2.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(strip_duration(slurp("cli_r1.json")) == strip_duration(slurp("cli_r2.json")));
    std::remove("cli_det.json");
    std::remove("cli_r1.json");
    std::remove("cli_r2.json");
}

TEST_CASE("cli delta-walk") {
    RunResult r = run("delta-walk --braid \"1 2\" --steps 5 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);

    RunResult csv = run("delta-walk --braid \"1 2\" --steps 3 --seed 7 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("step,a2\n0,0\n", 0) == 0);

    RunResult zero = run("delta-walk --braid \"1 2\" --steps 0 --seed 1 --format text");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("a2 trace: 0") != std::string::npos);

    // a 2-strand closure leaves no room for a Delta-move site
    RunResult nosite = run("delta-walk --braid \"1\" --steps 1 --seed 1");
    CHECK(nosite.exit_code == 2);
}

TEST_CASE("cli plot renders SVG and CSV") {
    RunResult u = run("universe --a2 0:2 --depth 2 --coeff 1 --out cli_plot_u.json");
    REQUIRE(u.exit_code == 0);

    RunResult svg = run("plot --universe cli_plot_u.json --out cli_plot.svg");
    CHECK(svg.exit_code == 0);
    std::string image = slurp("cli_plot.svg");
    CHECK(image.find("<svg") != std::string::npos);
    // 9 vertices and 18 edges
    std::size_t circles = 0, lines = 0;
    for (std::size_t pos = 0; (pos = image.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
    for (std::size_t pos = 0; (pos = image.find("<line", pos)) != std::string::npos; ++pos) ++lines;
    CHECK(circles == 9);
    CHECK(lines == 18);

    RunResult tri = run("plot --universe cli_plot_u.json --format svg "
                        "--highlight-triangle \"[1];[1,0,1,0,1];[1,0,2]\" --out cli_plot_tri.svg");
    CHECK(tri.exit_code == 0);
    std::string tri_image = slurp("cli_plot_tri.svg");
    std::size_t polylines = 0;
    for (std::size_t pos = 0; (pos = tri_image.find("<polyline", pos)) != std::string::npos; ++pos)
        ++polylines;
    CHECK(polylines == 3);

    RunResult csv = run("plot --universe cli_plot_u.json --format csv --highlight-ball \"[1]:1\"");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("type,id,a2,slot,class,source,target,highlight\n", 0) == 0);
    CHECK(csv.out.find("ball") != std::string::npos);

    std::remove("cli_plot_u.json");
    std::remove("cli_plot.svg");
    std::remove("cli_plot_tri.svg");
}

TEST_CASE("cli twist emits the braid family") {
    RunResult r = run("twist 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"text\": \"1 + 1*z^2\"") != std::string::npos);
    RunResult neg = run("--format json twist -- -1");
    CHECK(neg.exit_code == 0);
    CHECK(neg.out.find("\"text\": \"1 - 1*z^2\"") != std::string::npos);
}

TEST_CASE("GORDIAN_CAP environment variable tightens resource limits") {
    std::string cmd = std::string("GORDIAN_CAP=2 ") + GORDIAN_CLI_PATH +
                      " invariant --braid \"1 1 1\" > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);

    std::string flag_wins = std::string("GORDIAN_CAP=2 ") + GORDIAN_CLI_PATH +
                            " --cap 24 invariant --braid \"1 1 1\" > /dev/null 2>&1";
    status = std::system(flag_wins.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("cli rejects formats that do not fit the subcommand") {
    CHECK(run("invariant --braid \"1 1 1\" --format svg").exit_code == 2);
    CHECK(run("plot --universe missing.json --format text").exit_code == 2);
}

TEST_CASE("cli sampled audits require a sample size and honor seeds") {
    RunResult u = run("universe --a2 -2:2 --depth 2 --coeff 1 --out cli_s.json");
    REQUIRE(u.exit_code == 0);
    CHECK(run("audit slim --universe cli_s.json --sampled --seed 3").exit_code == 2);
    RunResult a =
        run("audit slim --universe cli_s.json --sampled --seed 3 --sample-size 200 --out cli_s1.json");
    RunResult b =
        run("audit slim --universe cli_s.json --sampled --seed 3 --sample-size 200 --out cli_s2.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(strip_duration(slurp("cli_s1.json")) == strip_duration(slurp("cli_s2.json")));
    std::remove("cli_s.json");
    std::remove("cli_s1.json");
    std::remove("cli_s2.json");
}
