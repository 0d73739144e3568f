#include <doctest.h>

#include <gkmod/analysis.hpp>
#include <gkmod/constructions.hpp>
#include <gkmod/io.hpp>
#include <gkmod/shift.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using gkmod::Matrix;
using gkmod::Orientation;
using gkmod::Representation;
using gkmod::Scalar;
using gkmod::VertexAddress;

namespace {

const Orientation o3{3, true};

VertexAddress v(const std::string& s) { return VertexAddress::parse(s); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("serialization round trips byte for byte") {
    const Representation fixtures[] = {
        gkmod::seed_module(o3, 2, 1),
        gkmod::case_iii(o3, v("0")),
        gkmod::family_module(o3, gkmod::canonical_center_path(o3, 3, 1), Scalar(2)),
        gkmod::projective(3, v("0"), o3),
    };
    for (const Representation& m : fixtures) {
        const std::string text = gkmod::to_json(m);
        const Representation parsed = gkmod::from_json(text);
        CHECK(gkmod::to_json(parsed) == text);
        CHECK(parsed.dims == m.dims);
        CHECK(parsed.arrows == m.arrows);
        CHECK(parsed.orient == m.orient);
    }
}

TEST_CASE("scalars travel as exact fractions") {
    Representation m;
    m.orient = o3;
    m.dims[v("")] = 1;
    m.dims[v("0")] = 1;
    Matrix a(1, 1);
    a.at(0, 0) = Scalar(-1, 2);
    m.arrows[{v("0"), v("")}] = a;
    const std::string text = gkmod::to_json(m);
    CHECK(text.find("\"-1/2\"") != std::string::npos);
    CHECK(gkmod::from_json(text).arrows == m.arrows);
}

TEST_CASE("malformed input is rejected with a reason") {
    CHECK_THROWS_AS(gkmod::from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(gkmod::from_json("[]"), std::invalid_argument);
    CHECK_THROWS_AS(gkmod::from_json(R"({"n":3,"sinks_even":true,"spaces":{}})"),
                    std::invalid_argument);  // arrows missing
    CHECK_THROWS_AS(
        gkmod::from_json(R"({"n":3,"sinks_even":true,"spaces":{"":0},"arrows":[]})"),
        std::invalid_argument);  // dimension must be positive
    CHECK_THROWS_AS(
        gkmod::from_json(
            R"({"n":3,"sinks_even":true,"spaces":{"":1,"0":1},
                "arrows":[{"from":"0","to":"","matrix":[["1"],["2","3"]]}]})"),
        std::invalid_argument);  // ragged matrix
    CHECK_THROWS_AS(
        gkmod::from_json(
            R"({"n":3,"sinks_even":true,"spaces":{"":1,"0":1},
                "arrows":[{"from":"0","to":"","matrix":[["x"]]}]})"),
        std::invalid_argument);  // bad scalar
    CHECK_THROWS_AS(
        gkmod::from_json(
            R"({"n":3,"sinks_even":true,"spaces":{"":1,"0":1},
                "arrows":[{"from":"0","to":"","matrix":[["1"]]},
                          {"from":"0","to":"","matrix":[["2"]]}]})"),
        std::invalid_argument);  // duplicate arrow
    CHECK_THROWS_AS(
        gkmod::from_json(
            R"({"n":3,"sinks_even":true,"spaces":{"":1,"0":1},
                "arrows":[{"from":"","to":"0","matrix":[["1"]]}]})"),
        std::invalid_argument);  // arrow against the orientation
}

TEST_CASE("the report is well-formed JSON mirroring the window") {
    const auto report = gkmod::orbit_profile(gkmod::seed_module(o3, 2, 2), -2, 5);
    const auto j = nlohmann::json::parse(gkmod::report_json(report));
    CHECK(j["signature"]["r0"] == 2);
    CHECK(j["signature"]["b"] == 2);
    CHECK(j["signature"]["p"] == "");
    CHECK(j["signature"]["q"] == "0.1");
    CHECK(j["window"][0] == -2);
    CHECK(j["window"][1] == 5);
    REQUIRE(j["steps"].size() == 8);
    CHECK(j["steps"][0]["i"] == -2);
    CHECK(j["steps"][0]["class"] == "sink");
    CHECK(j["steps"][0]["complete"] == true);
    CHECK(j["steps"][2]["complete"] == false);  // the seed itself
    CHECK(j["steps"][7]["class"] == "source");
}

TEST_CASE("the csv carries one row per member") {
    const auto report = gkmod::orbit_profile(gkmod::seed_module(o3, 2, 2), -2, 5);
    const auto rows = lines(gkmod::orbit_csv(report));
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "step,class,radius,center,b,index,total_dim,gamma,beta");
    // The seed row: the incomplete sink module at the window's origin.
    const auto& seed_row = rows[3];
    CHECK(seed_row.substr(0, 2) == "0,");
    CHECK(seed_row.find(",sink,") != std::string::npos);
    // Flow members carry an edge center.
    CHECK(rows[4].find("()|0") != std::string::npos);
    CHECK(rows[5].find("0|0.1") != std::string::npos);
    // Every data row repeats the orbit's center distance.
    for (std::size_t k = 1; k < rows.size(); ++k)
        CHECK(rows[k].find(",2,") != std::string::npos);
}

TEST_CASE("the table separates the class bands") {
    const auto report = gkmod::orbit_profile(gkmod::seed_module(o3, 2, 2), -2, 5);
    const auto rows = lines(gkmod::orbit_table(report));
    // Header, header rule, eight members, two band rules.
    REQUIRE(rows.size() == 12);
    int rules = 0;
    for (const auto& r : rows)
        if (r.find_first_not_of('-') == std::string::npos) ++rules;
    CHECK(rules == 3);
    CHECK(rows[0].find("index") != std::string::npos);
    CHECK(rows[0].find("complete") != std::string::npos);
}

TEST_CASE("the offset grid shows the two components") {
    const std::string g = gkmod::rb_grid(0, -3, 4, 4, gkmod::RbVariant::Corrected);
    CHECK(g.find("even component (b = 0)") != std::string::npos);
    CHECK(g.find("odd component (b = 0)") != std::string::npos);
    CHECK(g.find("l\\i") != std::string::npos);
    CHECK(g.find('.') != std::string::npos);  // the checkerboard holes
    const std::string printed = gkmod::rb_grid(0, -3, 4, 4, gkmod::RbVariant::Printed);
    CHECK(g != printed);
    CHECK_THROWS_AS(gkmod::rb_grid(0, 3, -3, 4, gkmod::RbVariant::Corrected),
                    std::invalid_argument);
}

}  // TEST_SUITE
