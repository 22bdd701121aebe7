#include "support.hpp"

#include <homcount/io.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace homcount;
using namespace test_support;

TEST_SUITE("io")
{
    TEST_CASE("graph json")
    {
        auto j = graph_to_json(gen_path(3));
        CHECK(j == Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2]]})"));
        auto doc = graph_from_json(j);
        CHECK(doc.graph == gen_path(3));
        CHECK_FALSE(doc.labels.has_value());

        LabeledGraph lg(gen_cycle(4), 3, {1, 3, 2, 1});
        auto lj = graph_to_json(lg);
        CHECK(lj.at("labels") == Json::array({1, 3, 2, 1}));
        auto back = graph_from_json(lj);
        REQUIRE(back.labels.has_value());
        CHECK(back.labeled(3) == lg);
        CHECK(back.labeled().k == 3);
    }

    TEST_CASE("graph round trips")
    {
        Rng rng(81);
        for (int i = 0; i < 50; ++i) {
            auto g = random_labeled_graph(rng, static_cast<std::size_t>(i % 9), 3, 0.4);
            CHECK(graph_from_json(Json::parse(graph_to_json(g.graph).dump())).graph == g.graph);
            CHECK(graph_from_json(Json::parse(graph_to_json(g).dump())).labeled(3) == g);
        }
    }

    TEST_CASE("malformed graphs")
    {
        for (const char * text : {R"({"edges": []})", R"({"n": 2})", R"({"n": -1, "edges": []})", R"({"n": 2, "edges": [[0, 2]]})",
                 R"({"n": 2, "edges": [[0, 0]]})", R"({"n": 2, "edges": [[0]]})", R"({"n": 2, "edges": [], "labels": [1]})",
                 R"({"n": 2, "edges": [], "labels": [0, 1]})", R"({"n": "two", "edges": []})", R"([1, 2])", R"({"n": 2000000, "edges": []})"})
            CHECK_THROWS_AS(graph_from_json(Json::parse(text)), InvalidInput);
    }

    TEST_CASE("expression json")
    {
        auto e = hypercube_expr(2);
        auto j = expr_to_json(e);
        CHECK(j.at("k") == 2);
        CHECK(j.at("root").at("op") == "beta");
        CHECK(j.at("root").at("nvec") == Json::array({1, 1}));
        CHECK(j.at("root").at("child").at("op") == "connect");
        CHECK(j.at("root").at("child").at("t") == Json::parse("[[1, 2]]"));
        CHECK(same_structure(expr_from_json(j).root(), e.root()));

        auto relabeled = ExtExpr(3, ext::relabel(1, 3, ext::vertex(1)));
        auto rj = expr_to_json(relabeled);
        CHECK(rj.at("root") == Json::parse(R"({"op": "relabel", "from": 1, "to": 3, "child": {"op": "vertex", "label": 1}})"));
    }

    TEST_CASE("expression round trips")
    {
        Rng rng(82);
        for (int i = 0; i < 60; ++i) {
            auto e = random_ext_expr(rng, 1 + i % 3, 10);
            auto back = expr_from_json(Json::parse(expr_to_json(e).dump()));
            CHECK(back.k() == e.k());
            CHECK(same_structure(back.root(), e.root()));
        }
    }

    TEST_CASE("malformed expressions")
    {
        for (const char * text : {R"({"root": {"op": "vertex", "label": 1}})", R"({"k": 2, "root": {"op": "vertex", "label": 3}})",
                 R"({"k": 2, "root": {"op": "splice"}})", R"({"k": 2, "root": {"op": "relabel", "from": 1, "to": 2}})",
                 R"({"k": 2, "root": {"op": "connect", "t": [[1, 2, 3]], "left": {"op": "vertex", "label": 1}, "right": {"op": "vertex", "label": 1}}})",
                 R"({"k": 1, "root": {"op": "beta", "nvec": [1], "sigma": [1], "s": [[1, 0, 1, 1]], "child": {"op": "vertex", "label": 1}}})",
                 R"({"k": 0, "root": {"op": "vertex", "label": 1}})"})
            CHECK_THROWS_AS(expr_from_json(Json::parse(text)), InvalidInput);
    }

    TEST_CASE("files")
    {
        const auto dir = std::filesystem::temp_directory_path() / "homcount_io_test";
        std::filesystem::create_directories(dir);
        const auto good = (dir / "g.json").string();
        const auto bad = (dir / "bad.json").string();
        std::ofstream(good) << graph_to_json(gen_cycle(5)).dump();
        std::ofstream(bad) << "{\"n\": 3, \"edges\": [";
        CHECK(read_graph_file(good).graph == gen_cycle(5));
        CHECK_THROWS_AS(read_graph_file(bad), InvalidInput);
        CHECK_THROWS_AS(read_graph_file((dir / "missing.json").string()), InvalidInput);
        CHECK_THROWS_AS(read_expr_file(good), InvalidInput);
        std::filesystem::remove_all(dir);
    }
}
