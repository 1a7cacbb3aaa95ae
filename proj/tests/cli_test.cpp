#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "duality/analysis.hpp"
#include "duality/pattern.hpp"
#include "duality/wavepacket.hpp"

using namespace duality;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(DUALITY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

Csv parse_csv(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    Csv csv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        if (csv.header.empty()) {
            while (std::getline(row, cell, ',')) {
                csv.header.push_back(cell);
            }
            csv.columns.resize(csv.header.size());
            continue;
        }
        std::size_t i = 0;
        while (std::getline(row, cell, ',')) {
            REQUIRE(i < csv.columns.size());
            csv.columns[i++].push_back(std::stod(cell));
        }
    }
    return csv;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("./" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli pattern: orthogonal detectors yield a fringeless CSV") {
    TempFile out("cli_flat.csv");
    CHECK(run("pattern --c1 1 --c2 0 --out " + out.path) == 0);
    const Csv csv = parse_csv(out.path);
    REQUIRE(csv.header.size() == 2);
    CHECK(csv.header[0] == "x");
    CHECK(csv.header[1] == "intensity");
    const Pattern p(csv.columns[0], csv.columns[1], kReferenceGeometry, 0.0);
    CHECK(extract_visibility(p).value <= 1e-9);
}

TEST_CASE("cli pattern: identical detectors yield near-unit visibility") {
    TempFile out("cli_fringed.csv");
    CHECK(run("pattern --out " + out.path) == 0);  // default pair is balanced
    const Csv csv = parse_csv(out.path);
    const Pattern p(csv.columns[0], csv.columns[1], kReferenceGeometry, 1.0);
    CHECK(extract_visibility(p).value >= 0.999);
}

TEST_CASE("cli pattern: reruns are byte-identical, svg emitted on request") {
    TempFile out("cli_repeat.csv");
    TempFile svg("cli_repeat.svg");
    CHECK(run("pattern --c1 0.9486832980505138 --c2 0.31622776601683794 --out " +
              out.path + " --svg " + svg.path) == 0);
    const std::string first_csv = slurp(out.path);
    const std::string first_svg = slurp(svg.path);
    CHECK(run("pattern --c1 0.9486832980505138 --c2 0.31622776601683794 --out " +
              out.path + " --svg " + svg.path) == 0);
    CHECK(slurp(out.path) == first_csv);
    CHECK(slurp(svg.path) == first_svg);
    CHECK(first_svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("cli eraser: balanced weights give fringeless marginal, fringed conditionals") {
    TempFile out("cli_eraser.csv");
    CHECK(run("eraser --out " + out.path) == 0);
    const Csv csv = parse_csv(out.path);
    REQUIRE(csv.header.size() == 4);
    CHECK(csv.header[1] == "conditional_q1");
    CHECK(csv.header[2] == "conditional_q2");
    CHECK(csv.header[3] == "marginal");

    const Pattern q1(csv.columns[0], csv.columns[1], kReferenceGeometry, 1.0);
    const Pattern marginal(csv.columns[0], csv.columns[3], kReferenceGeometry, 0.0);
    CHECK(extract_visibility(q1).value >= 0.999);
    CHECK(extract_visibility(marginal).value <= 1e-9);

    double peak = 0.0;
    for (double v : csv.columns[1]) {
        peak = std::max(peak, v);
    }
    for (std::size_t i = 0; i < csv.columns[0].size(); ++i) {
        const double mix = 0.5 * (csv.columns[1][i] + csv.columns[2][i]);
        CHECK(std::abs(mix - csv.columns[3][i]) <= 1e-12 * peak);
    }
}

TEST_CASE("cli eraser: pure q1 weight reduces the marginal to the q1 column") {
    TempFile out("cli_eraser_q1.csv");
    CHECK(run("eraser --c1 1 --c2 0 --out " + out.path) == 0);
    const Csv csv = parse_csv(out.path);
    double peak = 0.0;
    for (double v : csv.columns[1]) {
        peak = std::max(peak, v);
    }
    for (std::size_t i = 0; i < csv.columns[0].size(); ++i) {
        CHECK(std::abs(csv.columns[3][i] - csv.columns[1][i]) <= 1e-12 * peak);
    }
}

TEST_CASE("cli sweep: duality and sum-uncertainty bounds hold on every row") {
    TempFile out("cli_sweep.csv");
    CHECK(run("sweep --steps 21 --out " + out.path) == 0);
    const Csv csv = parse_csv(out.path);
    REQUIRE(csv.header.size() == 7);
    const std::vector<double>& d = csv.columns[1];
    const std::vector<double>& v = csv.columns[2];
    const std::vector<double>& v2d2 = csv.columns[3];
    const std::vector<double>& sum = csv.columns[6];
    REQUIRE(d.size() == 21);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(v2d2[i] <= 1.0 + 1e-9);
        CHECK(sum[i] >= 1.0 - 1e-12);
    }
    CHECK(d.front() == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(v.front() >= 0.999);
    CHECK(d.back() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.back() == 0.0);
}

TEST_CASE("cli oracle: default configuration passes every tolerance") {
    CHECK(run("oracle") == 0);
}

TEST_CASE("cli exit codes: coverage 3, config 2") {
    CHECK(run("oracle --grid-extent 100") == 3);
    TempFile out("cli_err.csv");
    CHECK(run("pattern --epsilon -1 --out " + out.path) == 2);
    CHECK(run("pattern --grid-n 1000 --out " + out.path) == 2);
    CHECK(run("pattern --c1 nonsense --out " + out.path) == 2);
    CHECK(run("frobnicate") == 2);
}
