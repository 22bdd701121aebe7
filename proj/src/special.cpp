#include <homcount/special.hpp>

#include <homcount/oracle.hpp>
#include <homcount/partition.hpp>

#include <bit>
#include <map>
#include <string>

namespace homcount
{
    namespace
    {
        using ComponentCache = std::map<std::uint64_t, HomCount>;

        auto mask_to_vertices(std::uint64_t mask) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (; mask != 0; mask &= mask - 1)
                out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
            return out;
        }

        auto full_mask(std::size_t n) -> std::uint64_t
        {
            return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        }

        void validate(const SubdividedInstance & inst)
        {
            if (inst.n < 1)
                throw InvalidInput("subdivided clique needs n >= 1");
            if (inst.g.vertex_count() > 62)
                throw BudgetExceeded("source graph too large for the subdivided counter");
        }

        auto hom_to_u(const SubdividedInstance & inst, const Graph & c, std::uint64_t budget) -> HomCount
        {
            if (inst.hom_to_u)
                return inst.hom_to_u(c);
            return brute_hom(c, inst.u, std::min(budget, oracle_map_limit));
        }

        auto split_count(const SubdividedInstance & inst, std::uint64_t a_mask, std::uint64_t budget, ComponentCache & cache) -> HomCount
        {
            const auto & g = inst.g;
            const auto n = g.vertex_count();
            const auto adj = g.adjacency_masks();
            const auto all = full_mask(n);
            if ((a_mask & ~all) != 0)
                throw InvalidInput("split mask names vertices outside the graph");
            if (! is_independent(g, a_mask))
                return 0;

            if (inst.n == 1)
                return a_mask == all ? HomCount(1) : HomCount(0);

            auto component_hom = [&](std::uint64_t mask) -> const HomCount & {
                auto it = cache.find(mask);
                if (it == cache.end()) {
                    const auto vs = mask_to_vertices(mask);
                    it = cache.emplace(mask, hom_to_u(inst, induced_subgraph(g, vs), budget)).first;
                }
                return it->second;
            };

            const HomCount pairs = HomCount(inst.n) * (inst.n - 1) / 2;
            if (a_mask == 0)
                // A connected source lands inside a single copy of u.
                return n == 0 ? HomCount(1) : pairs * component_hom(all);

            struct Component
            {
                std::uint64_t neighbours; // N(C), a subset of A
                std::uint64_t anchor;     // s_C as a one-bit mask
                HomCount hom;
            };
            std::vector<Component> components;
            const auto b_vertices = mask_to_vertices(all & ~a_mask);
            const auto b_graph = induced_subgraph(g, b_vertices);
            for (const auto & local : connected_components(b_graph)) {
                std::uint64_t mask = 0;
                for (auto v : local)
                    mask |= std::uint64_t{1} << b_vertices[v];
                std::uint64_t neighbours = 0;
                for (auto v : mask_to_vertices(mask))
                    neighbours |= adj[v] & a_mask;
                if (neighbours == 0)
                    throw InvalidInput("subdivided counter needs a connected source graph");
                components.push_back({neighbours, neighbours & (~neighbours + 1), component_hom(mask)});
            }

            // Ground set: the vertices of A, then C^0, C^1 for each component.
            const auto a_list = mask_to_vertices(a_mask);
            const auto a_size = static_cast<int>(a_list.size());
            const int m = a_size + 2 * static_cast<int>(components.size());
            if (m > max_ground_set)
                throw BudgetExceeded("split ground set of " + std::to_string(m) + " elements exceeds " + std::to_string(max_ground_set));
            require_budget(std::uint64_t{1} << m, budget, "subdivided split ground set");

            const HomCount spread = inst.n - 1;
            auto f = SetFunction::from(m, [&](std::uint32_t x) -> HomCount {
                std::uint64_t chosen = 0;
                for (int i = 0; i < a_size; ++i)
                    if ((x >> i) & 1)
                        chosen |= std::uint64_t{1} << a_list[static_cast<std::size_t>(i)];
                HomCount value = 1;
                for (std::size_t c = 0; c < components.size(); ++c) {
                    const bool zero = (x >> (a_size + 2 * static_cast<int>(c))) & 1;
                    const bool one = (x >> (a_size + 2 * static_cast<int>(c) + 1)) & 1;
                    const bool touches = (chosen & components[c].neighbours) != 0;
                    if (touches && ! zero && ! one)
                        return 0;
                    if ((zero || one) && ! touches)
                        return 0;
                    if (one && (chosen & components[c].anchor) == 0)
                        return 0;
                    if (zero && one)
                        value *= spread * components[c].hom;
                    else if (one)
                        value *= components[c].hom;
                }
                return value;
            });
            return par(f, inst.n, budget);
        }
    }

    auto count_hom_subdivided_split(const SubdividedInstance & inst, std::uint64_t a_mask, std::uint64_t budget) -> HomCount
    {
        validate(inst);
        if (connected_components(inst.g).size() > 1)
            throw InvalidInput("per-split counts need a connected source graph");
        ComponentCache cache;
        return split_count(inst, a_mask, budget, cache);
    }

    auto count_hom_subdivided(const SubdividedInstance & inst, std::uint64_t budget) -> HomCount
    {
        validate(inst);
        HomCount total = 1;
        for (const auto & vs : connected_components(inst.g)) {
            SubdividedInstance part{induced_subgraph(inst.g, vs), inst.n, inst.u, inst.hom_to_u};
            const auto n = part.g.vertex_count();
            require_budget(std::uint64_t{1} << n, budget, "independent split enumeration");
            ComponentCache cache;
            HomCount sum = 0;
            for (std::uint64_t a = 0; a <= full_mask(n); ++a)
                if (is_independent(part.g, a))
                    sum += split_count(part, a, budget, cache);
            total *= sum;
            if (total.is_zero())
                break;
        }
        return total;
    }

    auto count_hom_kneser(const KneserInstance & inst, std::uint64_t budget) -> HomCount
    {
        if (inst.n < 1 || inst.k < 1)
            throw InvalidInput("Kneser parameters must be positive");
        HomCount k_factorial = 1;
        for (int i = 2; i <= inst.k; ++i)
            k_factorial *= i;

        HomCount total = 1;
        for (const auto & vs : connected_components(inst.g)) {
            const auto part = induced_subgraph(inst.g, vs);
            const auto colorings = count_colorings(blowup(part, inst.k), inst.n, budget);
            HomCount divisor = 1;
            for (std::size_t i = 0; i < part.vertex_count(); ++i)
                divisor *= k_factorial;
            if (colorings % divisor != 0)
                throw InternalCheckFailed("blow-up coloring count " + to_decimal(colorings) + " is not divisible by (k!)^|V| = " + to_decimal(divisor));
            total *= colorings / divisor;
        }
        return total;
    }
}
