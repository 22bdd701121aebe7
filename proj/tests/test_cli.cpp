#include "support.hpp"

#include <homcount/cli.hpp>
#include <homcount/io.hpp>
#include <homcount/synthesis.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homcount;
using namespace test_support;

namespace
{
    struct Result
    {
        int status;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return {status, out.str(), err.str()};
    }

    /// Scratch directory holding the graph files used below.
    struct Workspace
    {
        std::filesystem::path dir;

        Workspace() : dir(std::filesystem::temp_directory_path() / "homcount_cli_test")
        {
            std::filesystem::create_directories(dir);
            write("k1.json", graph_to_json(gen_clique(1)));
            write("k2.json", graph_to_json(gen_clique(2)));
            write("k3.json", graph_to_json(gen_clique(3)));
            write("k4.json", graph_to_json(gen_clique(4)));
            write("c5.json", graph_to_json(gen_cycle(5)));
            write("p3.json", graph_to_json(gen_path(3)));
            write("petersen.json", graph_to_json(petersen()));
            write("hc2.json", expr_to_json(hypercube_expr(2)));
            write("c4a.json", graph_to_json(LabeledGraph(gen_cycle(4), 2, {1, 1, 2, 2})));
            write("c4b.json", graph_to_json(LabeledGraph(gen_cycle(4), 2, {1, 2, 1, 2})));
            write("c4c.json", graph_to_json(LabeledGraph(gen_cycle(4), 2, {2, 1, 1, 2})));
            write("broken.json", std::string("{\"n\": 2, \"edges\": [[0, 5]]}"));
        }

        ~Workspace() { std::filesystem::remove_all(dir); }

        void write(const std::string & name, const Json & j) const { write(name, j.dump()); }
        void write(const std::string & name, const std::string & text) const { std::ofstream(dir / name) << text; }
        [[nodiscard]] auto path(const std::string & name) const -> std::string { return (dir / name).string(); }
    };

    auto first_line(const std::string & s) -> std::string
    {
        return s.substr(0, s.find('\n'));
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("count examples")
    {
        Workspace ws;
        auto brute = run({"count", "-G", ws.path("k2.json"), "-H", ws.path("petersen.json"), "--method", "bruteforce"});
        CHECK(brute.status == 0);
        CHECK(brute.out == "30\n");
        CHECK(run({"count", "-G", ws.path("k2.json"), "--kneser", "5", "2"}).out == "30\n");
        CHECK(run({"count", "-G", ws.path("k3.json"), "--expr", ws.path("hc2.json")}).out == "0\n");
        CHECK(run({"count", "-G", ws.path("k2.json"), "--subdivided", "2", ws.path("k1.json")}).out == "4\n");
    }

    TEST_CASE("every available method agrees")
    {
        Workspace ws;
        for (const auto * g : {"k1.json", "k2.json", "p3.json", "c5.json", "k3.json"}) {
            const auto kb = run({"count", "-G", ws.path(g), "--kneser", "5", "2", "--method", "bruteforce"});
            const auto kk = run({"count", "-G", ws.path(g), "--kneser", "5", "2", "--method", "kneser"});
            CHECK(kb.status == 0);
            CHECK(kb.out == kk.out);
            const auto eb = run({"count", "-G", ws.path(g), "--expr", ws.path("hc2.json"), "--method", "bruteforce"});
            const auto ee = run({"count", "-G", ws.path(g), "--expr", ws.path("hc2.json")});
            CHECK(eb.out == ee.out);
            const auto sb = run({"count", "-G", ws.path(g), "--subdivided", "3", ws.path("p3.json"), "--method", "bruteforce"});
            const auto ss = run({"count", "-G", ws.path(g), "--subdivided", "3", ws.path("p3.json")});
            CHECK(sb.out == ss.out);
        }
    }

    TEST_CASE("gen")
    {
        auto hc = run({"gen", "hypercube", "2"});
        CHECK(hc.status == 0);
        auto g = graph_from_json(Json::parse(hc.out)).graph;
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 4);
        auto kg = graph_from_json(Json::parse(run({"gen", "kneser", "5", "2"}).out)).graph;
        CHECK(kg.vertex_count() == 10);
        CHECK(kg.edge_count() == 15);
        CHECK(graph_from_json(Json::parse(run({"gen", "clique", "4"}).out)).graph == gen_clique(4));
        auto e = expr_from_json(Json::parse(run({"gen", "hypercube", "3", "--expr"}).out));
        CHECK(same_structure(e.root(), hypercube_expr(3).root()));

        Workspace ws;
        auto sub = graph_from_json(Json::parse(run({"gen", "subdivided-clique", "3", ws.path("k2.json")}).out)).graph;
        CHECK(sub == subdivide_clique(3, gen_clique(2)).graph);
        CHECK(run({"gen", "torus", "3"}).status == 1);
        CHECK(run({"gen", "kneser", "5"}).status == 1);
    }

    TEST_CASE("synth and eval round trip")
    {
        Workspace ws;
        auto synth = run({"synth", "-G", ws.path("k4.json"), "-k", "2"});
        REQUIRE(synth.status == 0);
        auto j = Json::parse(synth.out);
        const auto labels = j.at("labels").get<std::vector<Label>>();
        ws.write("k4_expr.json", j);
        auto eval = run({"eval", ws.path("k4_expr.json")});
        REQUIRE(eval.status == 0);
        auto value = graph_from_json(Json::parse(eval.out)).labeled(2);
        CHECK(labeled_iso(value, LabeledGraph(gen_clique(4), 2, labels)).has_value());
        CHECK(run({"eval", "--expr", ws.path("hc2.json")}).status == 0);

        auto out_path = ws.path("written.json");
        CHECK(run({"synth", "-G", ws.path("c5.json"), "-k", "3", "-o", out_path}).status == 0);
        CHECK(std::filesystem::exists(out_path));
        CHECK(run({"synth", "-G", ws.path("k2.json"), "-k", "9"}).status != 0);
    }

    TEST_CASE("iso")
    {
        Workspace ws;
        CHECK(run({"iso", ws.path("c4a.json"), ws.path("c4c.json")}).out == "iso\n");
        CHECK(run({"iso", ws.path("c4a.json"), ws.path("c4b.json")}).out == "non-iso\n");
        CHECK(run({"iso", ws.path("k3.json"), ws.path("p3.json")}).out == "non-iso\n");

        auto gadget = run({"iso", ws.path("c4a.json"), ws.path("c4b.json"), "--gadget"});
        CHECK(gadget.status == 0);
        CHECK(first_line(gadget.out) == "non-iso");
        auto pair = Json::parse(gadget.out.substr(gadget.out.find('\n') + 1));
        CHECK(pair.at("q") == 2);
        CHECK(pair.at("n") == 4);
        CHECK(graph_from_json(pair.at("g_prime")).graph.vertex_count() == 4 + 16 + 12 + 2);
        CHECK(first_line(run({"iso", ws.path("c4a.json"), ws.path("c4c.json"), "--gadget"}).out) == "iso");
    }

    TEST_CASE("verify")
    {
        auto v = run({"verify", "--seed", "7", "--cases", "5"});
        CHECK(v.status == 0);
        CHECK(first_line(v.out) == "seed 7, 5 cases per suite");
        CHECK(v.out.find("all suites agree") != std::string::npos);
        CHECK(v.out.find("gadget: 5/5 agree") != std::string::npos);
        CHECK(run({"verify", "--seed", "7", "--cases", "5"}).out == v.out);
    }

    TEST_CASE("errors and exit codes")
    {
        Workspace ws;
        CHECK(run({}).status != 0);
        CHECK(run({"count"}).status != 0);
        CHECK(run({"count", "-G", ws.path("missing.json"), "-H", ws.path("k2.json")}).status == 1);
        auto broken = run({"count", "-G", ws.path("broken.json"), "-H", ws.path("k2.json")});
        CHECK(broken.status == 1);
        CHECK(broken.err.find("error:") == 0);
        CHECK(run({"count", "-G", ws.path("k2.json")}).status == 1);
        CHECK(run({"count", "-G", ws.path("k2.json"), "--method", "magic", "-H", ws.path("k2.json")}).status != 0);
        CHECK(run({"count", "-G", ws.path("k2.json"), "--method", "expression"}).status == 1);
        auto budget = run({"--budget", "10", "count", "-G", ws.path("petersen.json"), "-H", ws.path("petersen.json")});
        CHECK(budget.status == 2);
        CHECK(budget.err.find("budget exceeded") == 0);
        CHECK(run({"count", "-G", ws.path("c5.json"), "--expr", ws.path("hc2.json"), "--budget", "100"}).status == 2);
        CHECK(run({"count", "-G", ws.path("k2.json"), "--budget", "0", "-H", ws.path("k2.json")}).status != 0);
    }

    TEST_CASE("budget environment variable")
    {
        Workspace ws;
        ::setenv("HOMCOUNT_BUDGET", "lots", 1);
        CHECK(run({"count", "-G", ws.path("k2.json"), "-H", ws.path("k2.json")}).status == 1);
        ::setenv("HOMCOUNT_BUDGET", "10", 1);
        CHECK(run({"count", "-G", ws.path("petersen.json"), "-H", ws.path("petersen.json")}).status == 2);
        CHECK(run({"--budget", "1000000", "count", "-G", ws.path("k2.json"), "-H", ws.path("petersen.json")}).out == "30\n");
        ::unsetenv("HOMCOUNT_BUDGET");
        CHECK(run({"count", "-G", ws.path("k2.json"), "-H", ws.path("petersen.json")}).out == "30\n");
    }
}
