// Exit-code contract of the command-line tool: 0 when a result was computed
// (feasible or not), 2 on any input problem, nothing else.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MINVIABLE_CLI_PATH
#define MINVIABLE_CLI_PATH ""
#endif

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + MINVIABLE_CLI_PATH + "\" " +
                            args + " > /dev/null 2> /dev/null";
    const int status = std::system(cmd.c_str());
    if (status < 0 || (status & 0x7f) != 0) return -1;
    return (status >> 8) & 0xff;
}

}  // namespace

TEST_CASE("estimate exits 0 whether or not the case is feasible") {
    REQUIRE(run_cli("estimate --cases 1000 --base-rate 0.1 --tp-benefit 50 "
                    "--fp-cost 5 --min-roi 100") == 0);
    // Target beyond the perfect-model bound: still a computed result.
    REQUIRE(run_cli("estimate --cases 100 --base-rate 0.5 --tp-benefit 1 "
                    "--fp-cost 1 --min-roi 1000") == 0);
}

TEST_CASE("invalid input exits 2") {
    REQUIRE(run_cli("estimate --cases 1000 --base-rate 1.5 --tp-benefit 50 "
                    "--fp-cost 5 --min-roi 100") == 2);
    REQUIRE(run_cli("estimate --cases 1000") == 2);       // incomplete case
    REQUIRE(run_cli("estimate --case-file /nonexistent/x.json") == 2);
    REQUIRE(run_cli("bogus-subcommand") == 2);
    REQUIRE(run_cli("sweep --dimension sideways --out /tmp/x.csv") == 2);
    REQUIRE(run_cli("sweep --dimension base-rate --points 2 --samples 1 "
                    "--out /nonexistent-dir/x.csv") == 2);
    REQUIRE(run_cli("surface --out /nonexistent-dir/x.csv") == 2);
}

TEST_CASE("help exits 0") {
    REQUIRE(run_cli("--help") == 0);
    REQUIRE(run_cli("estimate --help") == 0);
}

TEST_CASE("surface defaults emit the documented 20x20 grid") {
    REQUIRE(run_cli("surface --out cli_default_surface.csv") == 0);
    std::ifstream in("cli_default_surface.csv");
    REQUIRE(in.good());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    REQUIRE(lines == 401);  // header + 400 cells
}

TEST_CASE("csv estimate format is accepted") {
    REQUIRE(run_cli("estimate --cases 1000 --base-rate 0.1 --tp-benefit 50 "
                    "--fp-cost 5 --min-roi 100 --format csv") == 0);
    REQUIRE(run_cli("estimate --cases 1000 --base-rate 0.1 --tp-benefit 50 "
                    "--fp-cost 5 --min-roi 100 --format yaml") == 2);
}
