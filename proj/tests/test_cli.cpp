#include <doctest.h>

#include <sstream>

#include "ellfm/cli.hpp"
#include "ellfm/serialization.hpp"

using namespace ellfm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("transform command")
{
    const auto j = run_json({"transform", "--preset", "k3_quartic", "-m", "3"});
    CHECK(j.at("ch").at("ch0") == "3/1");
    CHECK(j.at("ch").at("ch1").at("a") == "-1/1");
    CHECK(j.at("ch").at("ch1").at("delta") == json::array({"0/1"}));
    CHECK(j.at("wit") == "WIT0");

    const auto demo = run_json({"transform", "--preset", "general_demo", "-m", "1"});
    CHECK(demo.at("ch").at("ch1").at("delta") == json::array({"-3/2", "1/2"}));

    const auto zero = run_json({"transform", "-m", "0", "--preset", "k3_quartic"});
    CHECK(zero.at("ch").at("ch0") == "0/1");
    CHECK(zero.at("ch").at("ch1").at("a") == "1/1");
    CHECK(zero.at("wit") == "WIT1");
    CHECK(zero.at("locally_free") == false);

    const auto table = run({"transform", "-m", "3"});
    CHECK(table.code == 0);
    CHECK(table.out.find("-Θ") != std::string::npos);
}

TEST_CASE("slope, dual and commute commands")
{
    CHECK(run_json({"slope", "-m", "-2", "-t", "1", "-s", "1"}).at("slope") == "2/1");
    CHECK(run_json({"slope", "--preset", "enriques", "-m", "4", "-t", "1/2", "-s", "3"}).at("slope") == "-9/2");
    const auto d = run_json({"dual", "--char", R"({"ch0":"1/1","ch1":{"a":"5/1","delta":["0/1"]}})"});
    CHECK(d.at("dual").at("ch1").at("a") == "-5/1");
    const auto c = run_json({"commute", "--preset", "enriques", "-m", "-7"});
    REQUIRE(c.size() == 2);
    CHECK(c[0].at("equal") == true);
    CHECK(c[1].at("equal") == true);
}

TEST_CASE("ss-duality command")
{
    const auto a = run({"ss-duality", "-n", "3", "-c", "1", "--wit", "0", "--dim-shift", "0"});
    CHECK(a.code == 0);
    CHECK(a.out.rfind("DualIsWIT1", 0) == 0);
    CHECK(a.out.find("forced_zero") != std::string::npos);

    const auto b = run({"ss-duality", "-n", "3", "-c", "1", "--wit", "1", "--dim-shift", "+1"});
    CHECK(b.code == 0);
    CHECK(b.out.rfind("Forbidden", 0) == 0);
    CHECK(b.out.find("contradiction") != std::string::npos);

    const auto j = run_json({"ss-duality", "-c", "2", "--wit", "WIT1", "--dim-shift", "0"});
    CHECK(j.at("decision").at("kind") == "DualIdentification");
    CHECK(j.at("engine").at("right_degeneration_page") == 2);
    CHECK(j.at("agree") == true);

    CHECK(run({"ss-duality", "-n", "3", "-c", "4", "--wit", "0", "--dim-shift", "0"}).code == 1);
    CHECK(run({"ss-duality", "-c", "1", "--wit", "0", "--dim-shift", "x"}).code == 1);
}

TEST_CASE("certify, scan and theorem commands")
{
    const auto cert = run_json({"certify", "-n", "2", "--rank", "1", "--a", "1", "--e", "1"});
    CHECK(cert.at("verdict") == "Certified");
    CHECK(cert.at("candidate_slope") == "0/1");
    CHECK(cert.at("target_slope") == "2/1");

    const auto scan = run_json({"scan", "--preset", "k3_quartic", "-m", "-2", "-t", "1", "-s", "1"});
    CHECK(scan.at("any_violation") == false);
    CHECK(scan.at("candidate_count") == 650);

    const auto thm = run_json({"theorem", "--preset", "enriques", "-m", "2", "--a-max", "2", "--delta-max", "2"});
    CHECK(thm.at("stable") == true);
    CHECK(thm.at("duality_step").at("kind") == "DualIdentification");

    CHECK(run({"theorem", "-m", "0"}).code == 2);
    CHECK(run({"scan", "--preset", "general_demo", "-n", "2"}).code == 2);
    CHECK(run({"certify", "-n", "2", "--rank", "1", "-t", "0.5"}).code == 1);
    CHECK(run({"scan", "-m", "3"}).code == 2);
}

TEST_CASE("ring and model commands")
{
    const std::string theta = R"({"alpha":{"r":"1/1","d":["0/1"],"s":"0/1"},"beta":{"r":"0/1","d":["0/1"],"s":"0/1"}})";
    const std::string pt = R"({"alpha":{"r":"0/1","d":["0/1"],"s":"0/1"},"beta":{"r":"0/1","d":["0/1"],"s":"1/1"}})";
    auto prod = run_json({"ring", "--op", "mul", "--x", theta, "--y", pt});
    CHECK(run_json({"ring", "--op", "integrate", "--x", prod.dump()}) == "1/1");
    CHECK(run_json({"ring", "--op", "mul", "--x", theta, "--y", theta}).at("alpha").at("r") == "0/1");
    CHECK(run_json({"model", "--preset", "enriques"}).at("gram") == json::array({json::array({2})}));
    CHECK(run({"ring", "--op", "mul", "--x", "{"}).code == 1);
}

TEST_CASE("input errors")
{
    CHECK(run({"transform", "--preset", "nope", "-m", "1"}).code == 1);
    CHECK(run({"transform"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"transform", "-m", "1", "--twist", "1,2"}).code == 1);
    CHECK(run({"transform", "-m", "1", "--kernel", "other"}).code == 1);
    CHECK(run({"slope", "-m", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every JSON output re-parses to identical values")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"transform", "--preset", "general_demo", "-m", "-5", "--twist", "1/3,-2"},
             {"certify", "--preset", "enriques", "-n", "4", "--rank", "3", "--a", "1", "--delta", "1/2", "-s", "2"},
             {"model", "--preset", "general_demo"}}) {
        const auto j = run_json(args);
        CHECK(json::parse(j.dump()) == j);
    }
    const auto m = run_json({"model", "--preset", "general_demo"});
    CHECK(json(m.get<SurfaceModel>()) == m);
    const auto rep = run_json({"certify", "--preset", "enriques", "-n", "4", "--rank", "3", "--a", "1", "-s", "2"});
    CHECK(json(rep.get<StabilityReport>()) == rep);
}
