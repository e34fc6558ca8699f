// End-to-end checks of the command-line contract: forms, exit codes, files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string cli;
std::filesystem::path dir;

#define REQUIRE_MSG(cond, msg)                                        \
    do {                                                              \
        if (!(cond)) {                                                \
            std::printf("[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg); \
            ++failures;                                               \
        }                                                             \
    } while (0)

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = cli + " " + args;
    cmd += stdout_file.empty() ? " >/dev/null" : " >" + (dir / stdout_file).string();
    cmd += " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& name) {
    std::ifstream in(dir / name, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: test_cli <path-to-qh>\n");
        return 1;
    }
    cli = argv[1];
    dir = std::filesystem::temp_directory_path() / "qh_cli_test";
    std::filesystem::create_directories(dir);

    REQUIRE_MSG(run("--version") == 0, "--version should exit 0");
    REQUIRE_MSG(run("--help") == 0, "--help should exit 0");

    REQUIRE_MSG(run("gen --len 16 --form signs", "signs.txt") == 0, "gen signs failed");
    REQUIRE_MSG(slurp("signs.txt") == "+ + + + + - + - + + - - + - - +\n",
                "gen signs output mismatch");

    REQUIRE_MSG(run("gen --len 4 --form letters", "letters.txt") == 0, "gen letters failed");
    REQUIRE_MSG(slurp("letters.txt") == "+a +b +c +d\n", "gen letters output mismatch");

    REQUIRE_MSG(run("gen --len 1 --form signs", "one.txt") == 0, "gen len 1 failed");
    REQUIRE_MSG(slurp("one.txt") == "+\n", "gen len 1 output mismatch");

    REQUIRE_MSG(run("gen --len 5 --form digits", "digits.txt") == 0, "gen digits failed");
    REQUIRE_MSG(slurp("digits.txt") == "0\n1\n2\n3\n10\n", "gen digits output mismatch");

    // usage errors exit 2
    REQUIRE_MSG(run("gen") == 2, "missing --len should exit 2");
    REQUIRE_MSG(run("gen --len 0 --form signs") == 2, "len 0 should exit 2");
    REQUIRE_MSG(run("gen --len 4 --form bogus") == 2, "bad form should exit 2");
    REQUIRE_MSG(run("bogus") == 2, "unknown subcommand should exit 2");
    REQUIRE_MSG(run("bounds --nmax 64 --window 16") == 2, "bad window syntax should exit 2");
    REQUIRE_MSG(run("bounds --nmax 64 --window 20:16") == 2, "empty window should exit 2");
    REQUIRE_MSG(run("bounds --nmax 10 --window 4:16") == 2,
                "window past nmax should exit 2");
    REQUIRE_MSG(run("bounds --nmax 64 --window 99999999999999999999:3") == 2,
                "overflowing window bound should exit 2");

    // verification failure exits 1 and names the first mismatch
    REQUIRE_MSG(run("selfcheck --len 4096") == 0, "selfcheck should pass");
    REQUIRE_MSG(run("selfcheck --len 256 --corrupt-index 100", "corrupt.json") == 1,
                "corrupted run should exit 1");
    std::string corrupt = slurp("corrupt.json");
    REQUIRE_MSG(corrupt.find("\"outcome\": \"fail\"") != std::string::npos,
                "corrupted run should report fail");
    REQUIRE_MSG(corrupt.find("\"first_mismatch\": 100") != std::string::npos,
                "corrupted run should carry the witness index");

    // I/O failure exits 3
    REQUIRE_MSG(run("export --kind curve --format csv --out /nonexistent-dir/x/y.csv") == 3,
                "unwritable sink should exit 3");

    REQUIRE_MSG(run("bounds --nmax 256 --window 16:64 --out " + (dir / "bounds.json").string()) ==
                    0,
                "bounds failed");
    std::string bj = slurp("bounds.json");
    REQUIRE_MSG(bj.find("\"min_sq_dist\": 4") != std::string::npos, "window minimum missing");
    REQUIRE_MSG(bj.find("\"m\": 22") != std::string::npos && bj.find("\"m\": 214") != std::string::npos,
                "cited pairs missing from the bounds report");

    REQUIRE_MSG(run("lemmas --scan-max 512 --out " + (dir / "lemmas.json").string()) == 0,
                "lemmas failed");
    std::string lem = slurp("lemmas.json");
    REQUIRE_MSG(lem.find("\"pass\": true") != std::string::npos, "lemma two should pass");
    REQUIRE_MSG(lem.find("\"b_upper\"") != std::string::npos, "constants missing");

    REQUIRE_MSG(run("export --kind central --format json --samples 17 --tmin 1 --tmax 16 --out " +
                    (dir / "central.json").string()) == 0,
                "central export failed");
    std::string cj = slurp("central.json");
    REQUIRE_MSG(cj.find("\"version\": \"0.1.0\"") != std::string::npos, "meta missing");

    REQUIRE_MSG(run("export --kind projective --format csv --steps 16 --out " +
                    (dir / "proj.csv").string()) == 0,
                "projective export failed");
    REQUIRE_MSG(slurp("proj.csv").rfind("n,x0,x1,x2,x3\n", 0) == 0, "projective header");

    // QH_THREADS is the --threads default and never changes output bytes
    {
        std::string a = (dir / "env_a.json").string(), b = (dir / "env_b.json").string();
        std::string base = " bounds --nmax 128 --window 4:16 --out ";
        int rc1 = std::system(("QH_THREADS=8 " + cli + base + a + " 2>/dev/null").c_str());
        int rc2 = std::system((cli + " --threads 1" + base + b + " 2>/dev/null").c_str());
        REQUIRE_MSG(WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0, "env-threaded runs failed");
        REQUIRE_MSG(slurp("env_a.json") == slurp("env_b.json"),
                    "QH_THREADS changed the output bytes");
    }

    REQUIRE_MSG(run("density --nmax 256 --grid 6", "density.json") == 0, "density failed");
    std::string dj = slurp("density.json");
    REQUIRE_MSG(dj.find("\"fraction\":") != std::string::npos, "coverage fraction missing");
    REQUIRE_MSG(dj.find("\"largest_empty_cap_radians\":") != std::string::npos,
                "empty cap estimate missing");

    if (failures == 0) std::printf("cli contract: all checks passed\n");
    return failures;
}
