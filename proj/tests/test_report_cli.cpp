#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dq/cli.hpp"
#include "dq/report.hpp"

using namespace dq;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("dq_test_" + name);
}

}  // namespace

TEST_CASE("format names")
{
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("md") == Format::Markdown);
    CHECK(parse_format("markdown") == Format::Markdown);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("format_real")
{
    CHECK(format_real(0.1L) == "0.10000000000000001");
    CHECK(format_real(2) == "2");
    CHECK(format_real(INFINITY) == "inf");
    CHECK(dump_json(Json{{"x", INFINITY}}) == "{\n  \"x\": \"inf\"\n}\n");
}

TEST_CASE("dump_json sorts keys")
{
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json::array({1, 2});
    j["mid"] = Json{{"b", 1}, {"a", 2}};
    const std::string s = dump_json(j);
    CHECK(s.find("\"alpha\"") < s.find("\"mid\""));
    CHECK(s.find("\"mid\"") < s.find("\"zeta\""));
    CHECK(s.find("\"a\"") < s.find("\"b\""));
    CHECK(dump_json(j) == s);
    CHECK(dump_json(Json::parse(s)) == s);
}

TEST_CASE("csv and markdown")
{
    Table t{{"a", "b"}, {{"1", "x,y"}, {"2", "say \"hi\""}}};
    CHECK(to_csv(t) == "a,b\n1,\"x,y\"\n2,\"say \"\"hi\"\"\"\n");
    const std::string md = to_markdown(t);
    CHECK(md.rfind("| a | b |\n| --- | --- |\n", 0) == 0);
    Report r{Json{{"k", 1}}, t};
    CHECK(emit_report(r, Format::Csv) == to_csv(t));
    CHECK(emit_report(r, Format::Markdown) == md);
}

TEST_CASE("to_json of results")
{
    const auto q = to_json(Quadruple{1, 3, 8, 120, Subcase::Case2i});
    CHECK(q["d"] == "120");
    const auto s = to_json(exact_sum(SumKind::TwoOmega, 10));
    CHECK(s["exact"] == "23");
    CHECK(s["kind"] == "TwoOmega");
    const auto l = to_json(census_2ii(PrintedInputs::d_2ii));
    CHECK(l["case"] == "2ii");
}

TEST_CASE("enumerate a pair")
{
    const auto r = cli({"enumerate", "--pair", "1,3", "--limit", "2000"});
    CHECK(r.code == 0);
    CHECK(r.out == "c\n8\n120\n1680\n");
}

TEST_CASE("census markdown has five lines and a total")
{
    const auto r = cli({"--format", "markdown", "census"});
    REQUIRE(r.code == 0);
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("| ", 0) == 0)
            ++rows;
    CHECK(rows == 2 + 5 + 1);
    CHECK(r.out.find("| total |") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(cli({"sums", "--kind", "TwoOmega", "--N", "10"}).code == 0);
    CHECK(cli({"verify-bounds", "--ladder", "10,100"}).code == 0);
    CHECK(cli({"verify-bounds", "--ladder", "10,100", "--bound-scale", "0.01"}).code == 1);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"sums", "--kind", "TwoOmega"}).code == 2);
    CHECK(cli({"sums", "--kind", "Nope", "--N", "5"}).code == 2);
    CHECK(cli({"sums", "--kind", "TwoOmega", "--N", "0"}).code == 2);
    CHECK(cli({"classify", "--tuple", "1,x"}).code == 2);
    CHECK(cli({"--threads", "0", "sums", "--kind", "TwoOmega", "--N", "5"}).code == 2);
    CHECK(cli({"census", "--from-paper", "--from-engine"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("config file")
{
    const auto bad = temp_file("bad.json");
    std::ofstream(bad) << "{\"nope\": 1}";
    CHECK(cli({"--config", bad.string(), "sums", "--kind", "TwoOmega", "--N", "5"}).code == 2);

    const auto good = temp_file("good.json");
    std::ofstream(good) << "{\"format\": \"json\", \"N\": 10, \"kind\": \"FourOmega\"}";
    const auto r = cli({"--config", good.string(), "sums"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"61\"") != std::string::npos);

    const auto over = cli({"--config", good.string(), "sums", "--N", "1"});
    CHECK(over.code == 0);
    CHECK(over.out.find("\"1\"") != std::string::npos);

    CHECK(cli({"--config", temp_file("missing.json").string(), "sums"}).code == 2);
    std::filesystem::remove(bad);
    std::filesystem::remove(good);
}

TEST_CASE("--out writes a file")
{
    const auto path = temp_file("out.csv");
    const auto r = cli({"--out", path.string(), "enumerate", "--pair", "1,3", "--limit", "2000"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "c\n8\n120\n1680\n");
    std::filesystem::remove(path);
}

TEST_CASE("output does not depend on the thread count")
{
    for (std::vector<std::string> cmd : {std::vector<std::string>{"enumerate", "--subcase", "2ii", "--bmax", "40"},
                                         {"verify-bounds", "--ladder", "1000,20000"},
                                         {"sums", "--kind", "TwoOmegaOverN", "--N", "100000"}}) {
        auto a = cmd, b = cmd;
        a.insert(a.begin(), {"--format", "json", "--threads", "1"});
        b.insert(b.begin(), {"--format", "json", "--threads", "3"});
        const auto ra = cli(a), rb = cli(b);
        CHECK(ra.code == 0);
        CHECK(ra.out == rb.out);
    }
}
