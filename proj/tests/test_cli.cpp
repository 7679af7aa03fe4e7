// End-to-end tests of the udgtool binary: spawns the real executable and
// checks exit codes, outputs and file artifacts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udg/dataset.hpp"
#include "udg/graph.hpp"
#include "test_util.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path kDir = [] {
    fs::path d = fs::temp_directory_path() / "udgtool-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}();

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    REQUIRE(out.good());
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::string& args) {
    const std::string cmd = std::string(UDGTOOL_PATH) + " " + args + " > " +
                            (kDir / "stdout.txt").string() + " 2> " + (kDir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string out_text() { return slurp(kDir / "stdout.txt"); }

fs::path path(const std::string& name) { return kDir / name; }

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("build") {
    write(path("one.pts"), "((0,0,0,0),(0,0,0,0))\n");
    REQUIRE(run("build --points " + q(path("one.pts")) + " --out " + q(path("one.json"))) == 0);
    CHECK(udg::load_graph(path("one.json").string()).num_vertices() == 1);

    // Sum of two unit segments at 60 degrees: the 5-edge rhombus.
    write(path("seg_a.pts"), "((0,0,0,0),(0,0,0,0))\n((1,0,0,0),(0,0,0,0))\n");
    write(path("seg_b.pts"), "((0,0,0,0),(0,0,0,0))\n((1/2,0,0,0),(0,1/2,0,0))\n");
    REQUIRE(run("build --points " + q(path("seg_a.pts")) + " --minkowski-with " +
                q(path("seg_b.pts")) + " --out " + q(path("rhombus.json"))) == 0);
    udg::UDGraph rhomb = udg::load_graph(path("rhombus.json").string());
    CHECK(rhomb.num_vertices() == 4);
    CHECK(rhomb.num_edges() == 5);

    // Unparsable point file: generic error exit.
    write(path("bad.pts"), "((1,2),(3,4))\n");
    CHECK(run("build --points " + q(path("bad.pts")) + " --out " + q(path("bad.json"))) == 1);
}

TEST_CASE("dataset through the CLI") {
    write(path("final102.pts"), udg::final_102_text());
    REQUIRE(run("build --points " + q(path("final102.pts")) + " --out " + q(path("g102.json"))) == 0);
    CHECK(out_text().find("102 vertices") != std::string::npos);

    REQUIRE(run("transform --graph " + q(path("g102.json")) + " --op circle --out " +
                q(path("g607.json"))) == 0);
    CHECK(out_text().find("607 vertices") != std::string::npos);
}

TEST_CASE("transform: trim, spindle, exit codes") {
    REQUIRE(run("transform --graph " + q(path("rhombus.json")) + " --op trim --r2 1000 --out " +
                q(path("trimmed.json"))) == 0);
    CHECK(udg::load_graph(path("trimmed.json").string()).num_vertices() == 4);

    // Far diagonal of the rhombus (canonical indices 0 and 3): Moser spindle.
    REQUIRE(run("transform --graph " + q(path("rhombus.json")) +
                " --op spindle --u 0 --v 3 --out " + q(path("moser.json"))) == 0);
    udg::UDGraph moser = udg::load_graph(path("moser.json").string());
    CHECK(moser.num_vertices() == 7);
    CHECK(moser.num_edges() == 11);

    // d^2 = 2 leaves the field: exit 3.
    write(path("diag.pts"), "((0,0,0,0),(0,0,0,0))\n((1,0,0,0),(1,0,0,0))\n");
    REQUIRE(run("build --points " + q(path("diag.pts")) + " --out " + q(path("diag.json"))) == 0);
    CHECK(run("transform --graph " + q(path("diag.json")) + " --op spindle --u 0 --v 1 --out " +
              q(path("x.json"))) == 3);

    // Degenerate pair (2d < 1): exit 2.
    write(path("close.pts"), "((0,0,0,0),(0,0,0,0))\n((1/10,0,0,0),(0,0,0,0))\n");
    REQUIRE(run("build --points " + q(path("close.pts")) + " --out " + q(path("close.json"))) == 0);
    CHECK(run("transform --graph " + q(path("close.json")) + " --op spindle --u 0 --v 1 --out " +
              q(path("x.json"))) == 2);
}

TEST_CASE("alphastar and verify") {
    write(path("p3.pts"), "((0,0,0,0),(0,0,0,0))\n((1,0,0,0),(0,0,0,0))\n((2,0,0,0),(0,0,0,0))\n");
    REQUIRE(run("build --points " + q(path("p3.pts")) + " --out " + q(path("p3.json"))) == 0);
    REQUIRE(run("alphastar --graph " + q(path("p3.json")) + " --out " + q(path("p3.cert"))) == 0);
    CHECK(out_text().find("alpha* = 1/2") != std::string::npos);

    REQUIRE(run("alphastar --graph " + q(path("moser.json")) + " --orbits full --out " +
                q(path("moser.cert"))) == 0);
    CHECK(out_text().find("alpha* = 2/7") != std::string::npos);

    CHECK(run("verify --graph " + q(path("p3.json")) + " --certificate " + q(path("p3.cert"))) == 0);
    CHECK(run("verify --graph " + q(path("moser.json")) + " --certificate " +
              q(path("moser.cert"))) == 0);

    // Tampered certificate: exit 4.
    std::string cert = slurp(path("p3.cert"));
    auto pos = cert.find("\"alpha_star\": \"1/2\"");
    REQUIRE(pos != std::string::npos);
    cert.replace(pos, std::string("\"alpha_star\": \"1/2\"").size(), "\"alpha_star\": \"1/3\"");
    write(path("tampered.cert"), cert);
    CHECK(run("verify --graph " + q(path("p3.json")) + " --certificate " +
              q(path("tampered.cert"))) == 4);

    // Certificate bound to a different graph: exit 4.
    CHECK(run("verify --graph " + q(path("moser.json")) + " --certificate " + q(path("p3.cert"))) == 4);
}

TEST_CASE("export formats") {
    REQUIRE(run("export --graph " + q(path("p3.json")) + " --format dimacs --out " +
                q(path("p3.dimacs"))) == 0);
    CHECK(slurp(path("p3.dimacs")).find("p edge 3 2") != std::string::npos);

    REQUIRE(run("export --graph " + q(path("moser.json")) + " --format svg --out " +
                q(path("moser.svg"))) == 0);
    const std::string svg = slurp(path("moser.svg"));
    std::size_t circles = 0, lines = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++circles;
    for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) ++lines;
    CHECK(circles == 7);
    CHECK(lines == 11);

    // Empty graph still yields a well-formed SVG document.
    write(path("empty.pts"), "# nothing here\n");
    REQUIRE(run("build --points " + q(path("empty.pts")) + " --out " + q(path("empty.json"))) == 0);
    REQUIRE(run("export --graph " + q(path("empty.json")) + " --format svg --out " +
                q(path("empty.svg"))) == 0);
    const std::string empty_svg = slurp(path("empty.svg"));
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);

    // JSON round-trip through the CLI is the identity.
    REQUIRE(run("export --graph " + q(path("moser.json")) + " --format json --out " +
                q(path("moser2.json"))) == 0);
    CHECK(udg::load_graph(path("moser2.json").string()).content_hash() ==
          udg::load_graph(path("moser.json").string()).content_hash());
}

TEST_CASE("usage errors") {
    CHECK(run("no-such-subcommand") != 0);
    CHECK(run("build") != 0);  // missing --points
}
