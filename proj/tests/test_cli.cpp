#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/cli.hpp"

using casimir::format_g17;
using casimir::run_cli;

namespace {

struct CliOut {
    int code;
    std::string out;
    std::string err;
};

CliOut cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

// rows of a CSV body, skipping '#' comments; first row is the header
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : split(text, '\n'))
        if (!line.empty() && line[0] != '#') rows.push_back(split(line, ','));
    return rows;
}

}  // namespace

TEST_CASE("energy command") {
    SUBCASE("C60 preset with hydrogen at contact distance") {
        const CliOut r = cli({"energy", "--atom", "hydrogen", "--c60", "--d", "0.053",
                              "--format", "csv", "--magnitude"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 2);
        const double e = std::stod(rows[1][1]);
        CHECK(std::abs(e - 3.8) / 3.8 <= 0.10);
        CHECK(e > 0.0);  // --magnitude
        CHECK(rows[1][5] == "1");
    }
    SUBCASE("zero coupling prints exactly zero") {
        const CliOut r = cli({"energy", "--R", "1", "--Omega", "0", "--d", "1", "--atom",
                              "hydrogen", "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(csv_rows(r.out)[1][1] == "0");
    }
    SUBCASE("negative distance exits 1 with a diagnostic") {
        const CliOut r = cli({"energy", "--R", "1", "--Q", "1", "--d", "-1", "--atom",
                              "hydrogen"});
        CHECK(r.code == 1);
        CHECK(r.err.find("d must be positive") != std::string::npos);
        CHECK(r.out.empty());
    }
    SUBCASE("boyer flag strengthens the result") {
        const CliOut full =
            cli({"energy", "--c60", "--d", "0.1", "--format", "csv", "--magnitude"});
        const CliOut boyer = cli({"energy", "--c60", "--d", "0.1", "--boyer", "--format", "csv",
                                  "--magnitude"});
        REQUIRE(full.code == 0);
        REQUIRE(boyer.code == 0);
        CHECK(std::stod(csv_rows(boyer.out)[1][1]) > std::stod(csv_rows(full.out)[1][1]));
    }
    SUBCASE("pretty format mentions convergence") {
        const CliOut r = cli({"energy", "--c60", "--d", "0.5"});
        CHECK(r.code == 0);
        CHECK(r.out.find("converged    = yes") != std::string::npos);
    }
}

TEST_CASE("sweep command") {
    SUBCASE("single point agrees with the energy command") {
        const CliOut sw = cli({"sweep", "--c60", "--dmin", "0.053", "--dmax", "0.053",
                               "--points", "1"});
        const CliOut en = cli({"energy", "--c60", "--d", "0.053", "--format", "csv"});
        REQUIRE(sw.code == 0);
        const auto srows = csv_rows(sw.out);
        REQUIRE(srows.size() == 2);
        CHECK(srows[0] == std::vector<std::string>{"d_nm", "E_full_eV", "E_boyer_eV",
                                                   "E_plate_eV", "E_near_eV", "E_far_eV",
                                                   "S_omega"});
        CHECK(srows[1][1] == csv_rows(en.out)[1][1]);  // identical formatted energy
    }
    SUBCASE("byte-identical output on repeated invocation") {
        const std::vector<std::string> args = {"sweep", "--c60", "--dmin", "0.06", "--dmax",
                                               "0.3",   "--points", "5"};
        const CliOut a = cli(args);
        const CliOut b = cli(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
    SUBCASE("column subset") {
        const CliOut r = cli({"sweep", "--c60", "--dmin", "0.1", "--dmax", "0.2", "--points",
                              "2", "--columns", "d_nm,S_omega"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        CHECK(rows[0] == std::vector<std::string>{"d_nm", "S_omega"});
        CHECK(rows.size() == 3);
        CHECK(rows[1].size() == 2);
    }
    SUBCASE("rows ascend in d and descend in |E|") {
        const CliOut r = cli({"sweep", "--c60", "--dmin", "0.06", "--dmax", "0.24", "--points",
                              "4", "--spacing", "log"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 5);
        for (std::size_t i = 2; i < rows.size(); ++i) {
            CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
            CHECK(std::abs(std::stod(rows[i][1])) < std::abs(std::stod(rows[i - 1][1])));
        }
    }
    SUBCASE("bad grids exit 1") {
        CHECK(cli({"sweep", "--c60", "--dmin", "0.2", "--dmax", "0.1", "--points", "3"}).code ==
              1);
        CHECK(cli({"sweep", "--c60", "--dmin", "0.1", "--dmax", "0.2", "--points", "0"}).code ==
              1);
        CHECK(cli({"sweep", "--c60", "--dmin", "0.1", "--dmax", "0.2", "--points", "3",
                   "--columns", "nope"})
                  .code == 1);
    }
}

TEST_CASE("plate command covers the S crossover") {
    const CliOut r = cli({"plate", "--vmin", "1e-3", "--vmax", "1e3", "--points", "25"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == std::vector<std::string>{"v", "S", "E_plate_eV"});
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double s = std::stod(rows[i][1]);
        CHECK(s > prev);
        prev = s;
    }
    CHECK(std::abs(prev - 1.0) <= 1e-3);
}

TEST_CASE("asymptote command emits regime rows and the validity header") {
    const CliOut r = cli({"asymptote", "--c60", "--dmin", "0.06", "--dmax", "0.12", "--points",
                          "2", "--regime", "near"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# far-field law assumes") != std::string::npos);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][1] == "near");
    CHECK(std::stod(rows[1][4]) >= 0.0);
}

TEST_CASE("bessel command") {
    const CliOut r = cli({"bessel", "--l", "0..3", "--x", "1"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(std::stod(rows[1][2]) == doctest::Approx(1.1752012).epsilon(1e-7));
    CHECK(std::stod(rows[1][4]) == doctest::Approx(0.3678794).epsilon(1e-7));
    CHECK(cli({"bessel", "--l", "3..1", "--x", "1"}).code == 1);
    CHECK(cli({"bessel", "--l", "abc", "--x", "1"}).code == 1);
    CHECK(cli({"bessel", "--l", "2", "--x", "-1"}).code == 1);
}

TEST_CASE("atom model files") {
    const std::string path = "cli_test_atom.dat";
    {
        std::ofstream f(path);
        f << "# single oscillator, hydrogen numbers\n";
        f.precision(17);
        f << std::sqrt(4.50 * 1.482e-4) * 11.65 << " 11.65\n";
    }
    const CliOut file_run =
        cli({"energy", "--c60", "--atom", "file:" + path, "--d", "0.2", "--format", "csv"});
    const CliOut preset_run =
        cli({"energy", "--c60", "--atom", "hydrogen", "--d", "0.2", "--format", "csv"});
    REQUIRE(file_run.code == 0);
    CHECK(csv_rows(file_run.out)[1][1] == csv_rows(preset_run.out)[1][1]);
    std::remove(path.c_str());

    CHECK(cli({"energy", "--c60", "--atom", "file:/missing.dat", "--d", "0.2"}).code == 1);
    CHECK(cli({"energy", "--c60", "--atom", "argon", "--d", "0.2"}).code == 1);
}

TEST_CASE("flag validation") {
    CHECK(cli({"energy", "--d", "0.1"}).code == 1);                      // no shell
    CHECK(cli({"energy", "--R", "1", "--d", "0.1"}).code == 1);          // no coupling
    CHECK(cli({"energy", "--c60", "--R", "1", "--Q", "1", "--d", "1"}).code == 1);
    CHECK(cli({"energy", "--c60"}).code == 1);                           // missing --d
    CHECK(cli({"energy", "--c60", "--d", "0.1", "--format", "xml"}).code == 1);
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"--help"}).code == 0);
    const CliOut r = cli({"energy", "--c60", "--d", "0.1", "--lmax", "9000"});
    CHECK(r.code == 1);  // beyond the supported order
}

TEST_CASE("full-precision round trip in CSV cells") {
    const CliOut r = cli({"energy", "--c60", "--d", "0.137", "--format", "csv"});
    REQUIRE(r.code == 0);
    const std::string cell = csv_rows(r.out)[1][1];
    CHECK(format_g17(std::stod(cell)) == cell);
}

TEST_CASE("selftest subcommand passes") {
    const CliOut r = cli({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
