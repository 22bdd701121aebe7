#include <homcount/io.hpp>

#include <algorithm>
#include <fstream>

namespace homcount
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        auto node_to_json(const ExtNode & node) -> Json
        {
            return std::visit(overloaded{
                                  [](const VertexOp & op) -> Json { return {{"op", "vertex"}, {"label", op.label}}; },
                                  [](const RelabelOp & op) -> Json {
                                      return {{"op", "relabel"}, {"from", op.from}, {"to", op.to}, {"child", node_to_json(*op.child)}};
                                  },
                                  [](const ConnectOp & op) -> Json {
                                      Json t = Json::array();
                                      for (auto [i, j] : op.pairs)
                                          t.push_back({i, j});
                                      return {{"op", "connect"}, {"t", t}, {"left", node_to_json(*op.left)}, {"right", node_to_json(*op.right)}};
                                  },
                                  [](const BetaOp & op) -> Json {
                                      Json s = Json::array();
                                      for (const auto & tuple : op.tuples)
                                          s.push_back(tuple);
                                      return {{"op", "beta"}, {"nvec", op.copies}, {"sigma", op.sigma}, {"s", s}, {"child", node_to_json(*op.child)}};
                                  },
                              },
                node.op);
        }

        auto node_from_json(const Json & j) -> ExtNodePtr
        {
            const auto op = j.at("op").get<std::string>();
            if (op == "vertex")
                return ext::vertex(j.at("label").get<Label>());
            if (op == "relabel")
                return ext::relabel(j.at("from").get<Label>(), j.at("to").get<Label>(), node_from_json(j.at("child")));
            if (op == "connect") {
                std::vector<LabelPair> pairs;
                for (const auto & p : j.at("t")) {
                    if (! p.is_array() || p.size() != 2)
                        throw InvalidInput("connect pairs must be [i, j]");
                    pairs.emplace_back(p[0].get<Label>(), p[1].get<Label>());
                }
                return ext::connect(std::move(pairs), node_from_json(j.at("left")), node_from_json(j.at("right")));
            }
            if (op == "beta") {
                std::vector<BetaTuple> tuples;
                for (const auto & t : j.at("s")) {
                    if (! t.is_array() || t.size() != 4)
                        throw InvalidInput("beta tuples must be [i1, j1, i2, j2]");
                    tuples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
                }
                return ext::beta(j.at("nvec").get<std::vector<int>>(), j.at("sigma").get<std::vector<Label>>(), std::move(tuples), node_from_json(j.at("child")));
            }
            throw InvalidInput("unknown expression op '" + op + "'");
        }

        template <class F>
        auto rethrowing(F && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const Json::exception & e) {
                throw InvalidInput(std::string("malformed JSON: ") + e.what());
            }
        }
    }

    auto GraphDocument::labeled(std::optional<int> k) const -> LabeledGraph
    {
        if (! labels)
            throw InvalidInput("graph has no labels");
        const int top = labels->empty() ? 1 : *std::max_element(labels->begin(), labels->end());
        return LabeledGraph(graph, k.value_or(top), *labels);
    }

    auto graph_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        return {{"n", g.vertex_count()}, {"edges", edges}};
    }

    auto graph_to_json(const LabeledGraph & g) -> Json
    {
        auto j = graph_to_json(g.graph);
        j["labels"] = g.labels;
        return j;
    }

    auto graph_from_json(const Json & j) -> GraphDocument
    {
        return rethrowing([&] {
            const auto n = j.at("n").get<long long>();
            if (n < 0 || n > 1'000'000)
                throw InvalidInput("vertex count must lie in 0..1000000");
            std::vector<Edge> edges;
            for (const auto & e : j.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw InvalidInput("edges must be [u, v] pairs");
                const auto u = e[0].get<long long>(), v = e[1].get<long long>();
                if (u < 0 || v < 0)
                    throw InvalidInput("edge endpoints must be non-negative");
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            GraphDocument doc{Graph(static_cast<std::size_t>(n), std::move(edges)), std::nullopt};
            if (j.contains("labels")) {
                auto labels = j.at("labels").get<std::vector<Label>>();
                if (labels.size() != static_cast<std::size_t>(n))
                    throw InvalidInput("label list length differs from n");
                for (auto l : labels)
                    if (l < 1)
                        throw InvalidInput("labels are 1-based");
                doc.labels = std::move(labels);
            }
            return doc;
        });
    }

    auto expr_to_json(const ExtExpr & e) -> Json
    {
        return {{"k", e.k()}, {"root", node_to_json(*e.root())}};
    }

    auto expr_from_json(const Json & j) -> ExtExpr
    {
        return rethrowing([&] { return ExtExpr(j.at("k").get<int>(), node_from_json(j.at("root"))); });
    }

    auto read_json_file(const std::string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open '" + path + "'");
        try {
            return Json::parse(in);
        }
        catch (const Json::exception & e) {
            throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
        }
    }

    auto read_graph_file(const std::string & path) -> GraphDocument
    {
        return graph_from_json(read_json_file(path));
    }

    auto read_expr_file(const std::string & path) -> ExtExpr
    {
        return expr_from_json(read_json_file(path));
    }
}
