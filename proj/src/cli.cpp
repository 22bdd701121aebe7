#include <homcount/cli.hpp>

#include <homcount/dp.hpp>
#include <homcount/io.hpp>
#include <homcount/oracle.hpp>
#include <homcount/partition.hpp>
#include <homcount/random.hpp>
#include <homcount/special.hpp>
#include <homcount/synthesis.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace homcount
{
    namespace
    {
        struct RunConfig
        {
            std::string graph_path;
            std::string target_path;
            std::string expr_path;
            std::vector<int> kneser;
            std::vector<std::string> subdivided;
            std::string method = "auto";
            std::uint64_t budget = 0;
            std::string output_path;
            std::uint64_t seed = 1;
            int cases = 20;
            int k = 2;
            bool gadget = false;
            std::vector<std::string> positional;
            std::vector<std::string> gen_args;
            bool gen_as_expr = false;
        };

        /// Writes to -o when given, else to the command's standard output.
        void emit(const RunConfig & config, std::ostream & out, const std::string & text)
        {
            if (config.output_path.empty()) {
                out << text << '\n';
                return;
            }
            std::ofstream file(config.output_path);
            if (! file)
                throw InvalidInput("cannot write '" + config.output_path + "'");
            file << text << '\n';
        }

        auto parse_int(const std::string & s, const char * what) -> int
        {
            try {
                std::size_t used = 0;
                const auto v = std::stoi(s, &used);
                if (used == s.size())
                    return v;
            }
            catch (const std::exception &) {
            }
            throw InvalidInput(std::string(what) + " must be an integer, got '" + s + "'");
        }

        auto cmd_count(const RunConfig & c) -> std::string
        {
            const auto g = read_graph_file(c.graph_path).graph;
            auto method = c.method;
            if (method == "auto") {
                if (! c.expr_path.empty())
                    method = "expression";
                else if (! c.subdivided.empty())
                    method = "subdivided";
                else if (! c.kneser.empty())
                    method = "kneser";
                else
                    method = "bruteforce";
            }

            auto subdivided_parts = [&] {
                if (c.subdivided.size() != 2)
                    throw InvalidInput("--subdivided needs N UFILE");
                return std::pair{parse_int(c.subdivided[0], "subdivided clique size"), read_graph_file(c.subdivided[1]).graph};
            };

            if (method == "expression") {
                if (c.expr_path.empty())
                    throw InvalidInput("method 'expression' needs --expr");
                return to_decimal(count_hom_via_expr(g, read_expr_file(c.expr_path), c.budget));
            }
            if (method == "subdivided") {
                auto [n, u] = subdivided_parts();
                return to_decimal(count_hom_subdivided({g, n, u, {}}, c.budget));
            }
            if (method == "kneser") {
                if (c.kneser.size() != 2)
                    throw InvalidInput("method 'kneser' needs --kneser N K");
                return to_decimal(count_hom_kneser({g, c.kneser[0], c.kneser[1]}, c.budget));
            }
            if (method == "bruteforce") {
                Graph h;
                if (! c.target_path.empty())
                    h = read_graph_file(c.target_path).graph;
                else if (! c.expr_path.empty())
                    h = eval_ext(read_expr_file(c.expr_path)).graph;
                else if (! c.kneser.empty())
                    h = gen_kneser(c.kneser.at(0), c.kneser.at(1));
                else if (! c.subdivided.empty()) {
                    auto [n, u] = subdivided_parts();
                    h = subdivide_clique(n, u).graph;
                }
                else
                    throw InvalidInput("count needs a target: -H, --expr, --kneser or --subdivided");
                return to_decimal(brute_hom(g, h, std::min(c.budget, oracle_map_limit)));
            }
            throw InvalidInput("unknown method '" + method + "'");
        }

        auto cmd_synth(const RunConfig & c, std::ostream & err) -> std::optional<std::string>
        {
            const auto g = read_graph_file(c.graph_path).graph;
            SynthOptions options;
            options.budget = c.budget;
            auto result = synthesize(g, c.k, options);
            if (! result) {
                err << "no extended " << c.k << "-expression found\n";
                return std::nullopt;
            }
            auto j = expr_to_json(result->expr);
            j["labels"] = result->labels;
            return j.dump();
        }

        auto cmd_gen(const RunConfig & c) -> std::string
        {
            const auto & a = c.gen_args;
            if (a.empty())
                throw InvalidInput("gen needs a family: clique, hypercube, kneser or subdivided-clique");
            auto arg = [&](std::size_t i, const char * what) {
                if (i >= a.size())
                    throw InvalidInput(std::string("gen ") + a[0] + " needs " + what);
                return parse_int(a[i], what);
            };
            const auto & family = a[0];
            if (family == "clique")
                return graph_to_json(gen_clique(static_cast<std::size_t>(std::max(0, arg(1, "a size"))))).dump();
            if (family == "hypercube") {
                if (c.gen_as_expr)
                    return expr_to_json(hypercube_expr(arg(1, "a dimension"))).dump();
                return graph_to_json(gen_hypercube(arg(1, "a dimension"))).dump();
            }
            if (family == "kneser")
                return graph_to_json(gen_kneser(arg(1, "N K"), arg(2, "N K"))).dump();
            if (family == "subdivided-clique") {
                if (a.size() < 3)
                    throw InvalidInput("gen subdivided-clique needs N UFILE");
                return graph_to_json(subdivide_clique(arg(1, "N UFILE"), read_graph_file(a[2]).graph).graph).dump();
            }
            throw InvalidInput("unknown family '" + family + "'");
        }

        auto as_labeled(const GraphDocument & doc, int k) -> LabeledGraph
        {
            if (doc.labels)
                return doc.labeled(k);
            return LabeledGraph(doc.graph, k, std::vector<Label>(doc.graph.vertex_count(), 1));
        }

        auto cmd_iso(const RunConfig & c, std::ostream & out) -> std::string
        {
            if (c.positional.size() != 2)
                throw InvalidInput("iso needs two graph files");
            const auto da = read_graph_file(c.positional[0]);
            const auto db = read_graph_file(c.positional[1]);
            int k = 1;
            for (const auto * d : {&da, &db})
                if (d->labels)
                    for (auto l : *d->labels)
                        k = std::max(k, l);
            const auto a = as_labeled(da, k), b = as_labeled(db, k);
            if (! c.gadget)
                return labeled_iso(a, b) ? "iso" : "non-iso";

            const auto inst = gadget_reduce(a, b);
            const auto verdict = brute_iso(inst.g_prime, inst.h_prime) ? "iso" : "non-iso";
            const Json pair{{"q", inst.q}, {"n", inst.n}, {"g_prime", graph_to_json(inst.g_prime)}, {"h_prime", graph_to_json(inst.h_prime)}};
            if (c.output_path.empty())
                out << verdict << '\n' << pair.dump() << '\n';
            else {
                out << verdict << '\n';
                emit(c, out, pair.dump());
            }
            return {};
        }

        // -------------------------------------------------------------------
        // verify: seeded oracle-equivalence suites
        // -------------------------------------------------------------------

        struct Suite
        {
            const char * name;
            std::function<bool(Rng &, std::uint64_t)> run_case;
        };

        auto verify_suites() -> std::vector<Suite>
        {
            auto pick = [](Rng & rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
            return {
                {"expression-dp",
                    [=](Rng & rng, std::uint64_t budget) {
                        const int k = pick(rng, 1, 3);
                        const auto e = random_ext_expr(rng, k, 8);
                        const auto g = random_graph(rng, static_cast<std::size_t>(pick(rng, 1, 5)), 0.5);
                        return count_hom_via_expr(g, e, budget) == brute_hom(g, eval_ext(e).graph);
                    }},
                {"dp-tables",
                    [=](Rng & rng, std::uint64_t budget) {
                        const int k = pick(rng, 1, 2);
                        const auto e = random_ext_expr(rng, k, 6);
                        const auto g = random_graph(rng, static_cast<std::size_t>(pick(rng, 1, 3)), 0.5);
                        return hom_table_via_expr(g, e, budget) == brute_hom_labeled(g, eval_ext(e));
                    }},
                {"partition",
                    [=](Rng & rng, std::uint64_t budget) {
                        const auto f = random_set_function(rng, pick(rng, 0, 6), 3);
                        const int n = pick(rng, 1, 4);
                        return par(f, n, budget) == brute_par(f, n);
                    }},
                {"colorings",
                    [=](Rng & rng, std::uint64_t budget) {
                        const auto g = random_graph(rng, static_cast<std::size_t>(pick(rng, 0, 7)), 0.4);
                        const int n = pick(rng, 1, 4);
                        return count_colorings(g, n, budget) == brute_hom(g, gen_clique(static_cast<std::size_t>(n)));
                    }},
                {"subdivided",
                    [=](Rng & rng, std::uint64_t budget) {
                        const std::vector<Graph> us{gen_clique(1), gen_clique(2), gen_path(3)};
                        const auto g = random_connected_graph(rng, static_cast<std::size_t>(pick(rng, 1, 5)), 0.3);
                        const int n = pick(rng, 2, 3);
                        const auto & u = us[static_cast<std::size_t>(pick(rng, 0, 2))];
                        return count_hom_subdivided({g, n, u, {}}, budget) == brute_hom(g, subdivide_clique(n, u).graph);
                    }},
                {"kneser",
                    [=](Rng & rng, std::uint64_t budget) {
                        const auto g = random_graph(rng, static_cast<std::size_t>(pick(rng, 1, 4)), 0.5);
                        const int n = pick(rng, 4, 5);
                        return count_hom_kneser({g, n, 2}, budget) == brute_hom(g, gen_kneser(n, 2));
                    }},
                {"synthesis",
                    [=](Rng & rng, std::uint64_t budget) {
                        const auto g = random_graph(rng, static_cast<std::size_t>(pick(rng, 1, 4)), 0.5);
                        SynthOptions options;
                        options.budget = budget;
                        const auto result = synthesize(g, 2, options);
                        return ! result || labeled_iso(eval_ext(result->expr), LabeledGraph(g, 2, result->labels)).has_value();
                    }},
                {"gadget",
                    [=](Rng & rng, std::uint64_t) {
                        const auto n = static_cast<std::size_t>(pick(rng, 1, 4));
                        const int k = pick(rng, 1, 2);
                        const auto a = random_labeled_graph(rng, n, k, 0.5);
                        const auto b = pick(rng, 0, 1) == 0 ? random_labeled_graph(rng, n, k, 0.5) : LabeledGraph(a.graph, k, random_labeling(rng, n, k));
                        const auto inst = gadget_reduce(a, b);
                        return brute_iso(inst.g_prime, inst.h_prime) == brute_labeled_iso(a, b);
                    }},
            };
        }

        auto cmd_verify(const RunConfig & c, std::ostream & out) -> bool
        {
            out << "seed " << c.seed << ", " << c.cases << " cases per suite\n";
            bool all = true;
            std::size_t index = 0;
            for (const auto & suite : verify_suites()) {
                Rng rng(c.seed * 1000003ULL + index++);
                int agreed = 0, failed = 0;
                std::string first_error;
                for (int i = 0; i < c.cases; ++i) {
                    try {
                        if (suite.run_case(rng, c.budget))
                            ++agreed;
                        else
                            ++failed;
                    }
                    catch (const std::exception & e) {
                        ++failed;
                        if (first_error.empty())
                            first_error = e.what();
                    }
                }
                out << suite.name << ": " << agreed << "/" << c.cases << " agree";
                if (! first_error.empty())
                    out << " (first error: " << first_error << ")";
                out << '\n';
                all = all && failed == 0;
            }
            out << (all ? "all suites agree" : "MISMATCH") << '\n';
            return all;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        RunConfig c;
        CLI::App app{"Exact graph homomorphism counting"};
        app.require_subcommand(1);
        app.add_option("--budget", c.budget, "Enumeration/table budget (default: HOMCOUNT_BUDGET or 1e8)")->check(CLI::PositiveNumber);
        app.add_option("-o,--output", c.output_path, "Write the result to this file");

        auto * count = app.add_subcommand("count", "Count homomorphisms G -> H");
        count->add_option("-G", c.graph_path, "Source graph JSON")->required();
        count->add_option("-H", c.target_path, "Target graph JSON");
        count->add_option("--expr", c.expr_path, "Extended k-expression JSON for the target");
        count->add_option("--kneser", c.kneser, "Target KG(N, K)")->expected(2);
        count->add_option("--subdivided", c.subdivided, "Target: K_N subdivided by the graph in UFILE")->expected(2);
        count->add_option("--method", c.method, "auto|bruteforce|expression|subdivided|kneser")
            ->check(CLI::IsMember({"auto", "bruteforce", "expression", "subdivided", "kneser"}));

        auto * synth = app.add_subcommand("synth", "Find an extended k-expression for a graph");
        synth->add_option("-G", c.graph_path, "Graph JSON")->required();
        synth->add_option("-k", c.k, "Label alphabet size")->check(CLI::Range(1, 8));

        auto * eval = app.add_subcommand("eval", "Evaluate an expression to a labeled graph");
        eval->add_option("--expr,expr", c.expr_path, "Expression JSON")->required();

        auto * gen = app.add_subcommand("gen", "Generate a graph: clique N | hypercube N | kneser N K | subdivided-clique N UFILE");
        gen->add_option("args", c.gen_args, "Family and parameters")->required();
        gen->add_flag("--expr", c.gen_as_expr, "For hypercube: emit the extended 2-expression instead");

        auto * iso = app.add_subcommand("iso", "Decide (labeled) isomorphism of two graph files");
        iso->add_option("files", c.positional, "Two graph JSON files")->expected(2)->required();
        iso->add_flag("--gadget", c.gadget, "Decide via the gadget reduction and dump the plain pair");

        auto * verify = app.add_subcommand("verify", "Run seeded oracle-equivalence checks");
        verify->add_option("--seed", c.seed, "Random seed");
        verify->add_option("--cases", c.cases, "Cases per suite")->check(CLI::PositiveNumber);

        // Subcommands accept the global options after their own.
        for (auto * sub : {count, synth, eval, gen, iso, verify})
            sub->fallthrough();

        std::vector<const char *> argv{"homcount"};
        for (const auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            return app.exit(e, out, err);
        }

        try {
            if (c.budget == 0)
                c.budget = default_budget();
            if (count->parsed())
                emit(c, out, cmd_count(c));
            else if (synth->parsed()) {
                auto text = cmd_synth(c, err);
                if (! text)
                    return 1;
                emit(c, out, *text);
            }
            else if (eval->parsed())
                emit(c, out, graph_to_json(eval_ext(read_expr_file(c.expr_path))).dump());
            else if (gen->parsed())
                emit(c, out, cmd_gen(c));
            else if (iso->parsed()) {
                auto verdict = cmd_iso(c, out);
                if (! verdict.empty())
                    out << verdict << '\n';
            }
            else if (verify->parsed())
                return cmd_verify(c, out) ? 0 : 1;
        }
        catch (const InternalCheckFailed & e) {
            err << "internal check failed: " << e.what() << '\n';
            return 3;
        }
        catch (const BudgetExceeded & e) {
            err << "budget exceeded: " << e.what() << '\n';
            return 2;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        return 0;
    }
}
