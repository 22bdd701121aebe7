#pragma once

#include <homcount/expr.hpp>
#include <homcount/graph.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace homcount
{
    using Json = nlohmann::json;

    /// A graph file: labels are present only for labeled inputs.
    struct GraphDocument
    {
        Graph graph;
        std::optional<std::vector<Label>> labels;

        /// Labeled view; k defaults to the largest label.
        [[nodiscard]] auto labeled(std::optional<int> k = std::nullopt) const -> LabeledGraph;
    };

    auto graph_to_json(const Graph & g) -> Json;
    auto graph_to_json(const LabeledGraph & g) -> Json;
    auto graph_from_json(const Json & j) -> GraphDocument;

    auto expr_to_json(const ExtExpr & e) -> Json;
    auto expr_from_json(const Json & j) -> ExtExpr;

    /// Throws InvalidInput naming the path on unreadable files or malformed JSON.
    auto read_json_file(const std::string & path) -> Json;
    auto read_graph_file(const std::string & path) -> GraphDocument;
    auto read_expr_file(const std::string & path) -> ExtExpr;
}
