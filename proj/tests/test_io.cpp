#include <doctest.h>

#include "cdim/config_io.hpp"
#include "cdim/report.hpp"
#include "support/generators.hpp"

using namespace cdim;

TEST_CASE("config files round-trip losslessly") {
    ConfigFile c;
    c.dim = 2;
    c.points = {{rat(1, 3), rat(-2)}, {rat(0), rat(7, 2)}};
    c.labels = {"a", "b"};
    nlohmann::json j = config_to_json(c);
    ConfigFile back = parse_config(j);
    CHECK(back.dim == c.dim);
    CHECK(back.points == c.points);
    CHECK(back.labels == c.labels);
    CHECK(config_to_json(back) == j);
}

TEST_CASE("coordinates accept integers and p/q strings") {
    ConfigFile c = parse_config_text(R"({"dim":2,"points":[[1,"1/2"],["-3/4",0]]})");
    CHECK(c.points[0] == QVec{rat(1), rat(1, 2)});
    CHECK(c.points[1] == QVec{rat(-3, 4), rat(0)});
    CHECK_THROWS(parse_config_text(R"({"dim":1,"points":[[0.5]]})"));
    CHECK_THROWS(parse_config_text(R"({"points":[[1]]})"));
}

TEST_CASE("check reports verify by substitution and detect tampering") {
    ConfigFile cfg = from_point_configuration(cdim::testing::triangle_plus_barycenter());
    nlohmann::json rep = check_report(cfg, 2, 0, PreserveMethod::Both, 1);
    CHECK(rep["verdicts"]["i_preserving"].get<bool>());
    CHECK(rep["verdicts"]["clause"] == "NotAlmostNeighborly");

    ReportVerification ok = verify_report(rep);
    CHECK(ok.ok);
    CHECK(ok.certificates_checked > 0);

    // flip one strictness flag: the verifier must notice
    nlohmann::json bad = rep;
    bad["certificates"]["faces"][0]["strictly_preserved"] = false;
    bad["certificates"]["faces"][0]["preserved"] = false;
    bad["certificates"]["faces"][0]["violation"] = "dependency";
    ReportVerification broken = verify_report(bad);
    CHECK_FALSE(broken.ok);
}

TEST_CASE("degenerate gale reports verify: zero-dimensional transform, improper face") {
    // n = d+1 simplex: the Gale space is 0-dimensional and the i = n-1 scan
    // includes the improper face with an empty tau set.
    ConfigFile cfg;
    cfg.dim = 3;
    cfg.points = {{rat(0), rat(0), rat(0)},
                  {rat(1), rat(0), rat(0)},
                  {rat(0), rat(1), rat(0)},
                  {rat(0), rat(0), rat(1)}};
    nlohmann::json rep = check_report(cfg, 2, 3, PreserveMethod::Gale, 1);
    CHECK(rep["verdicts"]["i_preserving"].get<bool>());
    ReportVerification v = verify_report(rep);
    CHECK(v.ok);
}

TEST_CASE("non-preserving reports carry checkable evidence") {
    ConfigFile cfg = from_point_configuration(cdim::testing::unit_square());
    nlohmann::json rep = check_report(cfg, 2, 0, PreserveMethod::Direct, 1);
    CHECK_FALSE(rep["verdicts"]["i_preserving"].get<bool>());
    CHECK(rep["verdicts"].contains("first_failing_face"));
    ReportVerification v = verify_report(rep);
    CHECK(v.ok);
}
