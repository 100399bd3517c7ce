#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "surfcore/corpus.hpp"
#include "surfcore/ideal.hpp"
#include "surfcore/io.hpp"
#include "surfcore/lattice.hpp"

using namespace surfcore;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// stdout only; stderr is discarded.
Run cli(const std::string& args) {
    const std::string cmd = std::string(SURFCORE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

io::Json cli_json(const std::string& args) {
    const auto r = cli(args + " --json");
    EXPECT_EQ(r.status, 0) << args;
    return io::Json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, ColonCoreExactJson) {
    const auto doc = write_temp("surfcore_cli_a1b.json", io::emit(io::graph_document_json(
                                                             io::entry_document(corpus::lookup("A1b")))));
    const auto r = cli("colon-core --graph " + doc + " --cycle E:1,C1:2 --json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, R"({"Y":{"C1":1},"colon":{"E":1,"C1":1},"core":{"E":2,"C1":3},"good":false,"iterations":1})"
                     "\n");
    std::filesystem::remove(doc);
}

TEST(Cli, TextOutput) {
    EXPECT_EQ(cli("colon-core --graph A1b --cycle Z").out,
              "Y: C1:1\ncolon: E:1,C1:1\ncore: E:2,C1:3\ngood: false\niterations: 1\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("fundamental-cycle --graph A3").status, 0);
    EXPECT_EQ(cli("fundamental-cycle --graph NOPE").status, 1);
    EXPECT_EQ(cli("colon-core --graph A1b --cycle Q:1").status, 1);
    EXPECT_EQ(cli("no-such-command").status, 1);
    EXPECT_EQ(cli("colon-core --graph ex244min --cycle E0:2").status, 2);
    const auto bad = write_temp("surfcore_cli_bad.json", R"({"vertices":[{"id":"E","self_int":1,"kappa":-3}]})");
    EXPECT_EQ(cli("validate --graph " + bad).status, 2);
    std::filesystem::remove(bad);
}

TEST(Cli, AgreesWithLibraryOnCorpus) {
    for (const auto& name : corpus::names()) {
        const auto e = corpus::lookup(name);
        const auto& g = e.tower.top();
        const auto arg = "--graph '" + name + "'";
        EXPECT_EQ(cli_json("fundamental-cycle " + arg)["Zf"], io::cycle_json(fundamental_cycle(g))) << name;
        EXPECT_EQ(cli_json("canonical-cycle " + arg)["ZK"], io::qcycle_json(canonical_cycle(g))) << name;
        EXPECT_EQ(cli_json("is-rational " + arg)["rational"].get<bool>(), is_rational(g)) << name;
    }
}

TEST(Cli, AgreesWithLibraryOnIdeals) {
    for (const auto& [name, cycle] : {std::pair{"A1b", "Z"}, {"A1chain", "Z"}, {"A1chain", "Zgood"},
                                      {"ex244blown", "Z"}, {"cone(3,4,2)", "Z"}}) {
        const auto e = corpus::lookup(name);
        const auto w = io::workspace_from_entry(e);
        const auto ideal = represent(*w.model, w.tower, w.tower.top_level(), e.cycle(cycle));
        const auto r = colon_and_core(ideal);
        const auto j = cli_json(std::string("colon-core --graph '") + name + "' --cycle " + cycle);
        EXPECT_EQ(j["Y"], io::cycle_json(r.y)) << name;
        EXPECT_EQ(j["core"], io::cycle_json(r.core_cycle)) << name;
        EXPECT_EQ(j["good"].get<bool>(), r.good) << name;
        EXPECT_EQ(cli_json(std::string("multiplicity --graph '") + name + "' --cycle " + cycle)["multiplicity"],
                  io::integer_json(multiplicity(e.cycle(cycle))))
            << name;
    }
}

TEST(Cli, TraceReplays) {
    const auto j = cli_json("antinef-closure --graph D4 --cycle E1:1 --trace");
    const auto g = corpus::lookup("D4").tower.top();
    auto z = io::parse_cycle_spec(g, "E1:1");
    for (const auto& step : j["trace"]) {
        const auto i = g->index_of(step["vertex"].get<std::string>());
        z[i] += 1;
        EXPECT_EQ(io::integer_json(z[i]), step["coeff"]);
    }
    EXPECT_EQ(io::cycle_json(z), j["closure"]);
}

TEST(Cli, CorpusShowRoundTrips) {
    const auto r = cli("corpus show ex244blown");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, io::emit(io::graph_document_json(io::parse_graph_document(r.out))));
}

TEST(Cli, CorpusVerify) {
    const auto j = cli_json("corpus verify");
    ASSERT_EQ(j.size(), 9u);
    for (const auto& c : j) EXPECT_TRUE(c["passed"].get<bool>()) << c["title"];
}
