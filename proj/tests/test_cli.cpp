#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsmlb/cli.hpp"
#include "gsmlb/config.hpp"
#include "json.hpp"

using namespace gsmlb;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / fs::path("gsmlb-cli-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

nlohmann::json read_json(const std::string& path)
{
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("run lb prints the handover console block")
{
    const auto r = cli({"run", "lb", "--calls", "900"});
    CHECK(r.code == 0);
    CHECK(r.out.find("channel free BSC1 = 313\n") != std::string::npos);
    CHECK(r.out.find("BSC1 overloaded\n") != std::string::npos);
    CHECK(r.out.find("Number of Handover calls = 587\n") != std::string::npos);
    CHECK(r.out.find("channel free BSC2 = 346\n") != std::string::npos);
    CHECK(r.out.find("channel free BSC3 = 382\n") != std::string::npos);
    CHECK(r.out.find("BSC2 Handeled = 294\n") != std::string::npos);
    CHECK(r.out.find("BSC3 Handeled = 293\n") != std::string::npos);
}

TEST_CASE("run normal with no calls")
{
    TempDir dir;
    const auto path = dir.file("r.json");
    const auto r = cli({"run", "normal", "--calls", "0", "--output", path});
    CHECK(r.code == 0);
    const auto doc = read_json(path);
    CHECK(doc["system"] == "normal");
    CHECK(doc["counts"]["accepted_home"] == 0);
    CHECK(doc["counts"]["handed_over"] == 0);
    CHECK(doc["counts"]["blocked"] == 0);
    CHECK(doc["empirical_blocking"] == 0.0);
    CHECK_FALSE(doc.contains("records"));
}

TEST_CASE("single-BSC config exits 2 naming the key")
{
    const auto r = cli({"run", "lb", "--bsc-channels", "[313]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("bsc_channels") != std::string::npos);

    TempDir dir;
    const auto cfg = dir.file("bad.conf");
    std::ofstream(cfg) << "bsc_channels = [313]\n";
    const auto from_file = cli({"run", "lb", "--config", cfg});
    CHECK(from_file.code == 2);
    CHECK(from_file.err.find("bsc_channels") != std::string::npos);

    std::ofstream(cfg) << "n_calls = 5\nseed = x\n";
    const auto bad_line = cli({"run", "lb", "--config", cfg});
    CHECK(bad_line.code == 2);
    CHECK(bad_line.err.find("line 2: seed") != std::string::npos);
}

TEST_CASE("flags win over the config file")
{
    TempDir dir;
    const auto cfg = dir.file("c.conf");
    std::ofstream(cfg) << "n_calls = 100\nbsc_channels = [10, 20]\n";
    const auto path = dir.file("r.json");
    CHECK(cli({"run", "lb", "--config", cfg, "--calls", "50", "--output", path}).code == 0);
    const auto doc = read_json(path);
    CHECK(doc["params"]["n_calls"] == 50);
    CHECK(doc["params"]["bsc_channels"] == nlohmann::json::array({10, 20}));
    CHECK(doc["counts"]["handed_over"] == 20);
    CHECK(doc["counts"]["blocked"] == 20);
}

TEST_CASE("JSON report satisfies report invariants")
{
    TempDir dir;
    const auto path = dir.file("full.json");
    CHECK(cli({"run", "lb", "--calls", "1100", "--full", "--output", path}).code == 0);
    const auto doc = read_json(path);
    const auto& counts = doc["counts"];
    const auto n = doc["params"]["n_calls"].get<std::size_t>();
    CHECK(n == 1100);
    const auto acc = counts["accepted_home"].get<std::size_t>();
    const auto ho = counts["handed_over"].get<std::size_t>();
    const auto bl = counts["blocked"].get<std::size_t>();
    CHECK(acc + ho + bl == n);
    CHECK(doc["empirical_blocking"].get<double>() == doctest::Approx(static_cast<double>(bl) / n));
    const auto channels = doc["params"]["bsc_channels"].get<std::vector<std::size_t>>();
    for (std::size_t b = 0; b < channels.size(); ++b)
        CHECK(doc["per_bsc_handled"][std::to_string(b)].get<std::size_t>() <= channels[b]);
    REQUIRE(doc["records"].size() == n);
    double total = 0.0;
    for (const auto& rec : doc["records"]) {
        if (rec["disposition"] == "blocked") {
            CHECK(rec["serving_bsc"].is_null());
            CHECK(rec["execution_time_ms"] == 0.0);
        }
        if (rec["disposition"] == "handed_over")
            total += rec["execution_time_ms"].get<double>();
    }
    CHECK(doc["total_execution_time_ms"].get<double>() == doctest::Approx(total));
    CHECK(doc["params"]["quantum_ms"].is_number());
}

TEST_CASE("exported workload replays to identical reports")
{
    TempDir dir;
    const auto wl = dir.file("w.txt");
    CHECK(cli({"gen", "--calls", "700", "--seed", "11", "--output", wl}).code == 0);
    const auto a = dir.file("a.json");
    const auto b = dir.file("b.json");
    CHECK(cli({"run", "lb", "--calls", "700", "--seed", "11", "--full", "--output", a}).code == 0);
    CHECK(cli({"run", "lb", "--workload", wl, "--full", "--output", b}).code == 0);
    auto ja = read_json(a);
    auto jb = read_json(b);
    for (auto* j : {&ja, &jb})
        (*j)["params"] = nullptr;
    CHECK(ja == jb);
}

TEST_CASE("run csv emits per-call rows")
{
    TempDir dir;
    const auto path = dir.file("r.csv");
    CHECK(cli({"run", "lb", "--calls", "320", "--format", "csv", "--output", path}).code == 0);
    std::istringstream rows(slurp(path));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "call_id,disposition,serving_bsc,execution_time_ms,slices_used");
    std::size_t count = 0;
    while (std::getline(rows, line))
        ++count;
    CHECK(count == 320);
}

TEST_CASE("compare deltas")
{
    TempDir dir;
    SUBCASE("overload")
    {
        const auto path = dir.file("c.json");
        CHECK(cli({"compare", "--calls", "900", "--output", path}).code == 0);
        const auto doc = read_json(path);
        CHECK(doc["deltas"]["blocking_pp"].get<double>() < 0.0);
        CHECK(doc["deltas"]["execution_time_ms"].get<double>() < 0.0);
        CHECK(doc["deltas"]["handover"] == 587);
    }
    SUBCASE("no overload")
    {
        const auto path = dir.file("c.json");
        CHECK(cli({"compare", "--calls", "313", "--output", path}).code == 0);
        const auto doc = read_json(path);
        CHECK(doc["deltas"]["blocking_pp"] == 0.0);
        CHECK(doc["deltas"]["handover"] == 0);
        CHECK(doc["load_balanced"]["counts"] == doc["normal"]["counts"]);
    }
    SUBCASE("zero-capacity neighbors")
    {
        const auto path = dir.file("c.json");
        CHECK(cli({"compare", "--bsc-channels", "313,0,0", "--output", path}).code == 0);
        const auto doc = read_json(path);
        CHECK(doc["deltas"]["blocking_pp"] == 0.0);
        CHECK(doc["load_balanced"]["counts"]["handed_over"] == 0);
    }
    SUBCASE("csv")
    {
        const auto path = dir.file("c.csv");
        CHECK(cli({"compare", "--format", "csv", "--output", path}).code == 0);
        const auto text = slurp(path);
        CHECK(text.rfind("system,n_calls,accepted_home,handed_over,blocked,total_execution_time_ms,empirical_blocking\n", 0) == 0);
        CHECK(text.find("\nnormal,900,313,0,587,") != std::string::npos);
        CHECK(text.find("\nload_balanced,900,313,587,0,") != std::string::npos);
    }
}

TEST_CASE("sweep subcommand")
{
    SUBCASE("default range")
    {
        const auto r = cli({"sweep", "0:1200:100"});
        CHECK(r.code == 0);
        std::istringstream rows(r.out);
        std::string line;
        std::getline(rows, line);
        CHECK(line == "n_calls,ns_blocking,lb_blocking");
        std::size_t count = 0;
        while (std::getline(rows, line)) {
            ++count;
            double ns = 0, lb = 0;
            unsigned long n = 0;
            REQUIRE(std::sscanf(line.c_str(), "%lu,%lf,%lf", &n, &ns, &lb) == 3);
            CHECK(lb <= ns);
        }
        CHECK(count == 13);
    }
    SUBCASE("single zero row")
    {
        const auto r = cli({"sweep", "0:0:1"});
        CHECK(r.code == 0);
        CHECK(r.out == "n_calls,ns_blocking,lb_blocking\n0,0.000000,0.000000\n");
    }
    SUBCASE("explicit levels")
    {
        const auto r = cli({"sweep", "--levels", "300,1200"});
        CHECK(r.code == 0);
        CHECK(r.out == "n_calls,ns_blocking,lb_blocking\n300,0.000000,0.000000\n1200,0.739167,0.132500\n");
    }
    SUBCASE("malformed ranges")
    {
        CHECK(cli({"sweep", "100:50:10"}).code == 2);
        CHECK(cli({"sweep", "0:10"}).code == 2);
        CHECK(cli({"sweep", "0:10:0"}).code == 2);
        CHECK(cli({"sweep", "a:10:1"}).code == 2);
        CHECK(cli({"sweep", "--levels", "5,1"}).code == 2);
    }
}

TEST_CASE("range spec parsing")
{
    CHECK(parse_range_spec("0:1200:100").size() == 13);
    CHECK(parse_range_spec("5:5:3") == std::vector<std::size_t>{5});
    CHECK(parse_range_spec("0:10:4") == std::vector<std::size_t>{0, 4, 8});
    CHECK_THROWS_AS(parse_range_spec("10:0:1"), ConfigError);
}

TEST_CASE("erlang subcommand")
{
    CHECK(cli({"erlang", "--a", "2", "--n", "2"}).out == "0.400000\n");
    CHECK(cli({"erlang", "--a", "0", "--n", "5"}).out == "0.000000\n");
    CHECK(cli({"erlang", "--lambda", "4", "--mu", "2", "--n", "2"}).out == "0.400000\n");
    CHECK(cli({"erlang", "--a", "-1", "--n", "2"}).code == 2);
    CHECK(cli({"erlang", "--a", "1", "--n", "-2"}).code == 2);
    CHECK(cli({"erlang", "--lambda", "1", "--mu", "0", "--n", "2"}).code == 2);
    CHECK(cli({"erlang", "--lambda", "1", "--n", "2"}).code == 2);
    CHECK(cli({"erlang", "--n", "2"}).code == 2);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"run"}).code == 2);
    CHECK(cli({"run", "sideways"}).code == 2);
    CHECK(cli({"run", "lb", "--calls", "-4"}).code == 2);
    CHECK(cli({"run", "lb", "--config", "/nonexistent/gsmlb.conf"}).code == 2);
    CHECK(cli({"run", "lb", "--set", "colour=blue"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
