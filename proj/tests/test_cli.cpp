#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "splinequad/golden.hpp"

using namespace splinequad;
using namespace splinequad::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "splinequad");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "splinequad_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses "Name := [ [x, w], ... ];" into numbers.
std::vector<std::pair<double, double>> parse_maple(const std::string& text)
{
    std::vector<std::pair<double, double>> entries;
    const std::regex pair_re(R"(\[\s*([-0-9.eE]+),\s*([-0-9.eE]+)\s*\])");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pair_re); it != std::sregex_iterator(); ++it)
        entries.emplace_back(std::strtod((*it)[1].str().c_str(), nullptr), std::strtod((*it)[2].str().c_str(), nullptr));
    return entries;
}

} // namespace

TEST_CASE("format_decimal")
{
    CHECK(format_decimal(Extended(0)) == "0");
    CHECK(format_decimal(Extended(1)) == "1");
    CHECK(format_decimal(Extended("0.5")) == "0.5");
    CHECK(format_decimal(Extended("0.5"), kOutputDigits, DecimalStyle::Maple) == ".5");
    CHECK(format_decimal(Extended(7) / 15) == "0.4666666666666666666666667");
    CHECK(format_decimal(Extended(4) / 3) == "1.333333333333333333333333");
    CHECK(format_decimal(Extended(-1) / 3, 5) == "-0.33333");
    CHECK(format_decimal(Extended(1) / 64, 5) == "0.015625");
}

TEST_CASE("generate: maple example is reproduced exactly")
{
    const auto r = run_cli({"generate", "--class", "c1", "--degree", "5", "--variant", "endpoint", "--format", "maple"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "C1xD5 := [ [0, .4666666666666666666666667], [.5, .5333333333333333333333333] ];\n");
}

TEST_CASE("generate: json layout")
{
    const auto r = run_cli({"generate", "--class", "c0", "--degree", "3"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["family"] == "c0-odd");
    CHECK(doc["class"] == "c0");
    CHECK(doc["degree"] == 3);
    CHECK(doc["n"] == 2);
    CHECK(doc["period_intervals"] == 2);
    REQUIRE(doc["intervals"].size() == 2);
    CHECK(doc["intervals"][0]["nodes"].size() + doc["intervals"][1]["nodes"].size() == 3);
    CHECK(doc["intervals"][1]["nodes"][0] == "1.5");
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    const std::vector<std::string> expected{"family", "class", "degree", "n", "period_intervals", "delta", "intervals"};
    CHECK(keys == expected);
}

TEST_CASE("generate: csv layout")
{
    const auto r = run_cli({"generate", "--class", "c1", "--degree", "4", "-f", "csv"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "interval,index,node,weight");
    std::getline(in, line);
    CHECK(line == "0,0,0,0.65");
    int rows = 1;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("generate: invalid selections are usage errors")
{
    CHECK(run_cli({"generate", "--class", "c1", "--degree", "4", "--variant", "interior"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c0", "--degree", "5", "--variant", "interior"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c1", "--degree", "5", "--delta-sign", "-"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c2", "--degree", "5"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c0", "--degree", "0"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c1", "--degree", "1"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--class", "c1", "--degree", "2"}).code == kExitUsage);
    CHECK(run_cli({"generate", "--degree", "5"}).code == kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == kExitUsage);
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"--help"}).code == kExitOk);
    CHECK(run_cli({"generate", "--help"}).code == kExitOk);
}

TEST_CASE("generate: json output round-trips bit for bit in double mode")
{
    for (const auto& id : kAllFamilies) {
        for (int n = min_index(id); n <= min_index(id) + 8; ++n) {
            const auto rule = make_scaled_rule<double>(id, n);
            std::vector<std::string> args{"generate", "--class", id.continuity_order() == 0 ? "c0" : "c1",
                                          "--degree", std::to_string(rule.degree), "--precision", "double"};
            if (id == FamilyId::c1_interior()) {
                args.push_back("--variant");
                args.push_back("interior");
            }
            const auto r = run_cli(args);
            REQUIRE(r.code == kExitOk);
            const auto parsed = parse_rule_json(r.out);
            INFO(id.name() << " n=" << n);
            CHECK(parsed.family == rule.family);
            CHECK(parsed.n == rule.n);
            CHECK(parsed.degree == rule.degree);
            REQUIRE(parsed.intervals.size() == rule.intervals.size());
            for (std::size_t k = 0; k < rule.intervals.size(); ++k) {
                CHECK(parsed.intervals[k].nodes == rule.intervals[k].nodes);
                CHECK(parsed.intervals[k].weights == rule.intervals[k].weights);
            }
        }
    }
}

TEST_CASE("maple output for every published table matches the golden data")
{
    for (const auto& g : builtin_golden()) {
        std::vector<std::string> args{"generate", "--class", g.continuity == 0 ? "c0" : "c1",
                                      "--degree", std::to_string(g.degree), "--format", "maple"};
        if (g.variant == Variant::Interior) {
            args.push_back("--variant");
            args.push_back("interior");
        }
        const auto r = run_cli(args);
        REQUIRE(r.code == kExitOk);
        INFO(g.id);
        CHECK(r.out.rfind(g.id + " := [ ", 0) == 0);
        const auto entries = parse_maple(r.out);
        REQUIRE(entries.size() == g.entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            CHECK(std::abs(entries[i].first - std::strtod(g.entries[i].node.c_str(), nullptr)) <= 1e-13);
            CHECK(std::abs(entries[i].second - std::strtod(g.entries[i].weight.c_str(), nullptr)) <= 1e-13);
        }
    }
}

TEST_CASE("generate writes to a file")
{
    const auto path = temp_dir() / "c0d4.json";
    std::filesystem::remove(path);
    CHECK(run_cli({"generate", "--class", "c0", "--degree", "4", "-o", path.string()}).code == kExitOk);
    CHECK(parse_rule_json(read_file(path)).size() == 2);
    CHECK(run_cli({"generate", "--class", "c0", "--degree", "4", "-o", "/nonexistent/dir/x.json"}).code ==
          kExitFailure);
}

TEST_CASE("verify outcomes")
{
    const auto golden = run_cli({"verify", "--scope", "golden"});
    CHECK(golden.code == kExitOk);
    CHECK(golden.out.find("C1xD15x2") != std::string::npos);

    const auto exactness = run_cli({"verify", "--scope", "exactness", "--max-n", "12"});
    CHECK(exactness.code == kExitOk);

    const auto strict = run_cli({"verify", "--scope", "golden", "--tol", "1e-30"});
    CHECK(strict.code == kExitFailure);

    CHECK(run_cli({"verify", "--scope", "golden", "--golden-file", SPLINEQUAD_GOLDEN_FILE}).code == kExitOk);
    CHECK(run_cli({"verify", "--scope", "nothing"}).code == kExitUsage);
}

TEST_CASE("plot writes an svg and a csv")
{
    const auto dir = temp_dir();
    auto stems = [&](const std::string& name, std::vector<std::string> args) {
        const auto svg = dir / (name + ".svg");
        args.insert(args.begin(), "plot");
        args.push_back("--out");
        args.push_back(svg.string());
        const auto r = run_cli(args);
        REQUIRE(r.code == kExitOk);
        const auto text = read_file(svg);
        CHECK(text.find("<svg") != std::string::npos);
        CHECK(text.find("</svg>") != std::string::npos);
        std::istringstream csv(read_file(dir / (name + ".csv")));
        std::string line;
        std::getline(csv, line);
        CHECK(line == "series,interval,index,node,weight");
        std::map<std::string, std::map<std::string, int>> counts;
        while (std::getline(csv, line)) {
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::string series, interval;
            std::getline(fields, series, ',');
            std::getline(fields, interval, ',');
            ++counts[series][interval];
        }
        return counts;
    };

    const auto c0 = stems("c0d40", {"--class", "c0", "--degree", "40"});
    REQUIRE(c0.size() == 1);
    CHECK(c0.begin()->second.at("0") == 20);

    const auto c1 = stems("c1d40", {"--class", "c1", "--degree", "40"});
    REQUIRE(c1.size() == 1);
    CHECK(c1.begin()->second.at("0") == 20);
    CHECK(c1.begin()->second.at("1") == 19);

    const auto both = stems("c1d41", {"--class", "c1", "--degree", "41", "--variant", "both"});
    CHECK(both.size() == 2);

    CHECK(run_cli({"plot", "--class", "c0", "--degree", "40", "--out", "/nonexistent/dir/p.svg"}).code ==
          kExitFailure);
    CHECK(run_cli({"plot", "--class", "c0", "--degree", "40", "--variant", "both", "--out",
                   (dir / "bad.svg").string()})
              .code == kExitUsage);
}
