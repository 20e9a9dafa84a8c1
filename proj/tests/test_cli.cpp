#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutdepth/cli/run.hpp"
#include "cutdepth/corner.hpp"
#include "cutdepth/depth.hpp"

using namespace cutdepth;
using namespace cutdepth::cli;

namespace {

const std::filesystem::path data_dir = CUTDEPTH_TEST_DATA;

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cutdepth_test_" + name);
}

Json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    return Json::parse(in);
}

Instance parse_text(const std::string& text) { return parse_instance(Json::parse(text)); }

std::string field_of(const std::string& text) {
    try {
        parse_text(text);
    } catch (const InputError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST_CASE("depth on the square instance") {
    const auto r = invoke({"depth", "--in", (data_dir / "square.json").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("Finite") != std::string::npos);
    CHECK(r.out.find("0.375") != std::string::npos);
}

TEST_CASE("reported depth is the library value bit for bit") {
    const auto path = temp_file("square_report.json");
    REQUIRE(invoke({"depth", "--in", (data_dir / "square.json").string(), "--out", path.string()}).code == 0);
    const Json report = read_json(path);
    const double reported = report["cuts"][0]["value"].get<double>();

    const Instance inst = load_instance(data_dir / "square.json");
    const auto lib = cut_depth(normalize(*inst.inequality), inst.cuts[0]);
    CHECK(reported == lib.value);
    CHECK(report["points"][0]["depth"].get<double>() == point_depth(normalize(*inst.inequality), inst.points[0]));

    // re-running on the written report reproduces it exactly
    const auto again = temp_file("square_report_again.json");
    REQUIRE(invoke({"depth", "--in", path.string(), "--out", again.string()}).code == 0);
    CHECK(read_json(again) == report);
}

TEST_CASE("corner instance: closed form, lp and both") {
    const std::string in = (data_dir / "corner.json").string();
    const auto path = temp_file("corner_report.json");
    REQUIRE(invoke({"depth", "--in", in, "--method", "both", "--out", path.string()}).code == 0);
    const Json report = read_json(path);
    const auto& cut = report["cuts"][0];
    CHECK(cut["kind"] == "Finite");
    CHECK(cut["cross_check"] == true);
    CHECK(std::abs(cut["value"].get<double>() - std::sqrt(6.0) / 8) <= 1e-12);
    CHECK(cut["bounds"][0]["name"] == "intersection");
    CHECK(std::abs(cut["bounds"][0]["value"].get<double>() - std::sqrt(2.0) / 2) <= 1e-12);
    CHECK(cut["bound_respected"] == true);

    const Instance inst = load_instance(in);
    const auto cone = build_corner(*inst.corner);
    CHECK(cut["value"].get<double>() == corner_cut_depth(cone, inst.cuts[0]).value);

    CHECK(invoke({"depth", "--in", in, "--method", "lp"}).code == 0);
    CHECK(invoke({"depth", "--in", in, "--method", "closed-form"}).code == 0);
}

TEST_CASE("standard-form instance with infinite bounds") {
    const auto r = invoke({"depth", "--in", (data_dir / "standard.json").string(), "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.306186") != std::string::npos);
    // closed form needs a corner
    CHECK(invoke({"depth", "--in", (data_dir / "standard.json").string(), "--method", "closed-form"}).code == 2);
}

TEST_CASE("threads preserve input order and values") {
    const auto path = temp_file("gen_corner.json");
    REQUIRE(invoke({"generate", "corner", "--m", "3", "--n", "5", "--seed", "4", "--out", path.string()}).code == 0);
    Json doc = read_json(path);
    // replicate the cuts to get a longer batch
    Json cuts = doc["cuts"];
    for (int k = 0; k < 5; ++k)
        for (const auto& c : cuts) doc["cuts"].push_back(c);
    std::ofstream(path) << doc.dump();

    const Instance inst = load_instance(path);
    const auto serial = evaluate_cuts(inst, Method::Both, 1);
    const auto parallel = evaluate_cuts(inst, Method::Both, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(parallel[k].index == k);
        CHECK(parallel[k].result.value == serial[k].result.value);
        CHECK(parallel[k].cross_check == serial[k].cross_check);
        CHECK(serial[k].bound_respected());
    }
}

TEST_CASE("point-depth command") {
    const auto r = invoke({"point-depth", "--in", (data_dir / "square.json").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.375") != std::string::npos);
}

TEST_CASE("bound commands") {
    auto r = invoke({"bound", "split", "--pi", "1,1", "--pi0", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Finite") != std::string::npos);
    CHECK(r.out.find("0.707107") != std::string::npos);

    r = invoke({"bound", "split", "--pi", "2,1", "--pi0", "0", "--x", "0.25,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.223607") != std::string::npos);

    r = invoke({"bound", "split", "--pi", "1,0", "--pi0", "0", "--x", "1,0"});
    CHECK(r.code == 2);  // on the disjunction boundary
    CHECK(r.err.find("OnDisjunctionBoundary") != std::string::npos);

    r = invoke({"bound", "intersection", "--R", "1,-1", "--alpha", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.707107") != std::string::npos);

    r = invoke({"bound", "integer-hull", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.58114") != std::string::npos);

    r = invoke({"bound", "integer-hull", "--basis", "1,1;0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.9816") != std::string::npos);

    CHECK(invoke({"bound", "split", "--pi", "1,x", "--pi0", "0"}).code == 2);
    CHECK(invoke({"bound", "split", "--pi", "1.5,1", "--pi0", "0"}).code == 2);
}

TEST_CASE("verify commands") {
    auto r = invoke({"verify", "lemma-x", "--n-max", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite lemma-x: PASS") != std::string::npos);
    for (const char* v : {"1.25", "1.5", "1.75"}) CHECK(r.out.find(v) != std::string::npos);

    const auto path = temp_file("lemma.json");
    REQUIRE(invoke({"verify", "lemma-x", "--n-max", "10", "--out", path.string()}).code == 0);
    const Json report = read_json(path);
    CHECK(report["suites"][0]["checks"].size() == 9);
    CHECK(report["passed"] == true);

    CHECK(invoke({"verify", "cone", "--n-min", "2", "--n-max", "4"}).code == 0);
    CHECK(invoke({"verify", "corner-equivalence", "--count", "10", "--seed", "3"}).code == 0);
    CHECK(invoke({"verify", "split-dominance", "--boxes", "3"}).code == 0);
}

TEST_CASE("generate cone round trip") {
    const auto path = temp_file("cone.json");
    REQUIRE(invoke({"generate", "cone", "--n", "3", "--epsilon", "0.001", "--out", path.string()}).code == 0);
    const Instance inst = load_instance(path);
    CHECK(inst.form == PolyhedronForm::Inequality);
    CHECK(inst.inequality->A.rows() == 4);
    const auto r = evaluate_cuts(inst, Method::Auto);
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0].result.value - std::sqrt(6.0) / 2) <= 10 * 0.001);
    CHECK(r[0].bound_respected());
}

TEST_CASE("input errors name the field") {
    CHECK(field_of(R"({"inequality": {"A": [[1, 0], [1]], "b": [1, 2]}, "cuts": []})") == "inequality.A[1]");
    CHECK(field_of(R"({"inequality": {"A": [[1, 0]], "b": [1, 2]}})") == "inequality.b");
    CHECK(field_of(R"({"inequality": {"A": [[1, 0]]}})") == "inequality.b");
    CHECK(field_of(R"({"inequality": {"A": [[1, 0]], "b": [1]}, "cuts": [{"alpha": [1], "beta": 0}]})") ==
          "cuts[0].alpha");
    CHECK(field_of(R"({"inequality": {"A": [[1, 0]], "b": [1]}, "cuts": [{"alpha": [0, 0], "beta": 0}]})") ==
          "cuts[0]");
    CHECK(field_of(R"({"standard_form": {"lower": [0, "-oops"], "upper": [1, 1]}})") == "standard_form.lower[1]");
    CHECK(field_of(R"({"standard_form": {"lower": [2], "upper": [1]}})") == "standard_form");
    CHECK(field_of(R"({"corner": {"f": [1], "R": [[1, 2]]}})") == "corner");
    CHECK(field_of(R"({"corner": {"f": [0.5], "R": [[1], [2]]}})") == "corner.R");
    CHECK(field_of(R"({"corner": {"f": [0.5], "R": [[1]]}, "inequality": {"n": 2}})") == "(root)");
    CHECK(field_of(R"({"cuts": []})") == "(root)");
    CHECK(field_of(R"({"inequality": {"n": 2}, "points": [[1]]})") == "points[0]");
    CHECK(field_of(R"({"inequality": {"n": 2}, "disjunctions": [{"pi": [1, 0.5], "pi0": 0}]})") ==
          "disjunctions[0].pi[1]");
    CHECK(field_of(R"({"inequality": {"A": [[1, 1]], "b": [1], "L": [[1, 1], [2, 2]], "xi": [0, 0]}})") ==
          "inequality.L");
    CHECK(field_of(R"({"inequality": {"A": []}})") == "inequality.n");
}

TEST_CASE("infinite sentinels round trip") {
    const Instance inst = parse_text(R"({"standard_form": {"lower": ["-inf", 0], "upper": [1, "inf"]}})");
    CHECK(std::isinf(inst.standard->lower[0]));
    CHECK(std::isinf(inst.standard->upper[1]));
    const Json back = to_json(inst);
    CHECK(back["standard_form"]["lower"][0] == "-inf");
    CHECK(back["standard_form"]["upper"][1] == "inf");
    CHECK(parse_instance(back).standard->lower == inst.standard->lower);
}

TEST_CASE("exit code 2 on bad files and arguments") {
    auto r = invoke({"depth", "--in", (data_dir / "bad_dimension.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("inequality.A[1]") != std::string::npos);
    CHECK(invoke({"depth", "--in", "/nonexistent/file.json"}).code == 2);
    CHECK(invoke({"depth"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"depth", "--in", (data_dir / "square.json").string(), "--method", "nope"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("a violated bound gives exit code 1") {
    // x₁ ≥ 10 cuts off integer points of this box; its depth exceeds the
    // integer hull bound
    const auto path = temp_file("invalid_cut.json");
    std::ofstream(path) << R"({"inequality": {"A": [[-1, 0], [1, 0], [0, -1], [0, 1]], "b": [0, 20, 0, 20]},
                              "cuts": [{"alpha": [1, 0], "beta": 10}]})";
    const auto r = invoke({"depth", "--in", path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("VIOLATED") != std::string::npos);
}
