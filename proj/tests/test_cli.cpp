#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _WIN32
#error "CLI tests assume a POSIX shell"
#endif
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(FLEETCAP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("fleetcap_test_" + tag + "_" +
                                            std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("") == 1);
    CHECK(run("frobnicate") == 1);
    CHECK(run("measure --format yaml --seed-data") == 1);
    CHECK(run("measure") == 1);  // neither --input nor --seed-data
    CHECK(run("simulate --seed-data") == 1);  // missing --rates
    CHECK(run("--help") == 0);
}

TEST_CASE("empty input CSV exits with code 2 and leaves no partial outputs") {
    TempDir tmp("empty");
    const fs::path input = tmp.path / "empty.csv";
    std::ofstream(input) << "province,year,vessels,tonnage,power,labor,catch\n";
    const fs::path out = tmp.path / "out";
    CHECK(run("measure --input " + input.string() + " --out " + out.string()) == 2);
    CHECK(!fs::exists(out));
}

TEST_CASE("malformed input CSV exits with code 2") {
    TempDir tmp("bad");
    const fs::path input = tmp.path / "bad.csv";
    std::ofstream(input) << "North,1999,10,abc,200,50,100\n";
    CHECK(run("measure --input " + input.string() + " --out " +
              (tmp.path / "out").string()) == 2);
}

TEST_CASE("measure over the bundled fixtures is byte-identical across reruns") {
    TempDir tmp("idem");
    const fs::path out1 = tmp.path / "a", out2 = tmp.path / "b";
    REQUIRE(run("measure --seed-data --out " + out1.string()) == 0);
    REQUIRE(run("measure --seed-data --out " + out2.string()) == 0);
    for (const char* name : {"capacity_tables.csv", "peer_weights.csv",
                             "national_series.csv"}) {
        CHECK(fs::exists(out1 / name));
        CHECK(slurp(out1 / name) == slurp(out2 / name));
    }
}

TEST_CASE("the full subcommand surface runs on the bundled fixtures") {
    TempDir tmp("all");
    CHECK(run("fit --seed-data --out " + (tmp.path / "fit").string()) == 0);
    CHECK(fs::exists(tmp.path / "fit" / "equations.txt"));

    CHECK(run("fit --seed-data --format json --out " + (tmp.path / "fitj").string()) == 0);
    CHECK(fs::exists(tmp.path / "fitj" / "equations.json"));

    CHECK(run("simulate --seed-data --rates 100 --out " + (tmp.path / "sim").string()) == 0);
    CHECK(fs::exists(tmp.path / "sim" / "trajectory_tau100.csv"));

    CHECK(run("sweep --seed-data --rates 5,40,60,80 --out " +
              (tmp.path / "sweep").string()) == 0);
    CHECK(fs::exists(tmp.path / "sweep" / "sweep.csv"));

    CHECK(run("report --seed-data --plots --out " + (tmp.path / "rep").string()) == 0);
    for (const char* name : {"fig1_capacity_output.csv", "fig1_practical_catch.csv",
                             "fig2_capacity_utilization.csv", "fig3_simulated_capacity.csv",
                             "fig1.svg", "fig2.svg", "fig3.svg"})
        CHECK(fs::exists(tmp.path / "rep" / name));

    CHECK(run("validate --seed-data --out " + (tmp.path / "val").string()) == 0);
    CHECK(fs::exists(tmp.path / "val" / "findings.csv"));
}

TEST_CASE("year range filters the measured panel") {
    TempDir tmp("years");
    const fs::path out = tmp.path / "out";
    REQUIRE(run("measure --seed-data --start-year 1994 --end-year 1995 --out " +
                out.string()) == 0);
    const std::string table = slurp(out / "capacity_tables.csv");
    CHECK(table.find("1994,") != std::string::npos);
    CHECK(table.find("1995,") != std::string::npos);
    CHECK(table.find("1993,") == std::string::npos);
    CHECK(table.find("1996,") == std::string::npos);
}
