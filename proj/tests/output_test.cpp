#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "duality/output.hpp"

using namespace duality;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("./" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("format_full: 17 significant digits, round-trip exact") {
    CHECK(format_full(1.0) == "1.0000000000000000e+00");
    CHECK(format_full(-0.5) == "-5.0000000000000000e-01");
    const double value = 0.1234567890123456789;
    CHECK(std::stod(format_full(value)) == value);
    const double pi_ish = 3.141592653589793;
    CHECK(std::stod(format_full(pi_ish)) == pi_ish);
}

TEST_CASE("write_csv: layout, comments and determinism") {
    TempPath tmp("output_test.csv");
    const std::vector<double> xs = {0.0, 0.5, 1.0};
    const std::vector<Series> cols = {{"a", {1.0, 2.0, 3.0}}, {"b", {-1.0, 0.0, 1.0}}};
    write_csv(tmp.path, {"alpha=1", "beta=two"}, "x", xs, cols);
    const std::string first = slurp(tmp.path);

    std::istringstream lines(first);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "# alpha=1");
    std::getline(lines, line);
    CHECK(line == "# beta=two");
    std::getline(lines, line);
    CHECK(line == "x,a,b");
    std::getline(lines, line);
    CHECK(line ==
          "0.0000000000000000e+00,1.0000000000000000e+00,-1.0000000000000000e+00");

    write_csv(tmp.path, {"alpha=1", "beta=two"}, "x", xs, cols);
    CHECK(slurp(tmp.path) == first);  // byte-identical rerun

    CHECK_THROWS(write_csv(tmp.path, {}, "x", xs, {{"short", {1.0}}}));
}

TEST_CASE("write_svg: well-formed, self-contained document") {
    TempPath tmp("output_test.svg");
    std::vector<double> xs(128), ys(128), zs(128);
    for (int i = 0; i < 128; ++i) {
        xs[i] = i;
        ys[i] = std::sin(0.1 * i);
        zs[i] = std::cos(0.1 * i);
    }
    write_svg(tmp.path, "test plot", xs,
              {{"sine", ys, LineStyle::solid, "black"},
               {"cosine", zs, LineStyle::dashed, "crimson"}});
    const std::string svg = slurp(tmp.path);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    // self-contained: no hyperlinks, images or scripts
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg.find("<image") == std::string::npos);
    CHECK(svg.find("<script") == std::string::npos);

    write_svg(tmp.path, "test plot", xs,
              {{"sine", ys, LineStyle::solid, "black"},
               {"cosine", zs, LineStyle::dashed, "crimson"}});
    CHECK(slurp(tmp.path) == svg);
}
