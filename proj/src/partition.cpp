#include <homcount/partition.hpp>

#include <bit>
#include <limits>
#include <map>
#include <string>

namespace homcount
{
    using boost::multiprecision::cpp_int;

    SetFunction::SetFunction(int m, std::vector<HomCount> values) : _m(m), _values(std::move(values))
    {
        if (m < 0)
            throw InvalidInput("ground set size must be non-negative");
        if (m > max_ground_set)
            throw BudgetExceeded("ground set of size " + std::to_string(m) + " exceeds the limit of " + std::to_string(max_ground_set));
        if (_values.size() != (std::size_t{1} << m))
            throw InvalidInput("set function needs 2^m values");
        for (const auto & v : _values)
            if (v < 0)
                throw InvalidInput("set function values must be non-negative");
    }

    auto SetFunction::from(int m, const std::function<HomCount(std::uint32_t)> & f) -> SetFunction
    {
        if (m < 0)
            throw InvalidInput("ground set size must be non-negative");
        if (m > max_ground_set)
            throw BudgetExceeded("ground set of size " + std::to_string(m) + " exceeds the limit of " + std::to_string(max_ground_set));
        std::vector<HomCount> values(std::size_t{1} << m);
        for (std::uint32_t x = 0; x < values.size(); ++x)
            values[x] = f(x);
        return {m, std::move(values)};
    }

    auto SetFunction::constant(int m, const HomCount & value) -> SetFunction
    {
        return from(m, [&](std::uint32_t) { return value; });
    }

    auto independence_indicator(const Graph & g) -> SetFunction
    {
        const auto m = static_cast<int>(g.vertex_count());
        if (m > max_ground_set)
            throw BudgetExceeded("graph has " + std::to_string(m) + " vertices, the partition engine accepts at most " + std::to_string(max_ground_set));
        const auto adj = g.adjacency_masks();
        std::vector<char> independent(std::size_t{1} << m, 0);
        independent[0] = 1;
        for (std::uint32_t x = 1; x < independent.size(); ++x) {
            const auto low = std::countr_zero(x);
            const auto rest = x & (x - 1);
            independent[x] = independent[rest] && (adj[low] & rest) == 0;
        }
        std::vector<HomCount> values(independent.begin(), independent.end());
        return {m, std::move(values)};
    }

    namespace
    {
        using Wide = __int128;

        auto checked_add(Wide a, Wide b, Wide & out) -> bool { return ! __builtin_add_overflow(a, b, &out); }
        auto checked_mul(Wide a, Wide b, Wide & out) -> bool { return ! __builtin_mul_overflow(a, b, &out); }

        auto to_cpp_int(Wide v) -> cpp_int
        {
            const bool negative = v < 0;
            auto magnitude = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
            cpp_int result = static_cast<std::uint64_t>(magnitude >> 64);
            result <<= 64;
            result += static_cast<std::uint64_t>(magnitude);
            return negative ? cpp_int(-result) : result;
        }

        /// a * b truncated at degree m; false on overflow.
        auto multiply(const std::vector<Wide> & a, const std::vector<Wide> & b, int m, std::vector<Wide> & out) -> bool
        {
            const auto degree = std::min<std::size_t>(static_cast<std::size_t>(m), a.size() + b.size() - 2);
            out.assign(degree + 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0)
                    continue;
                for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
                    Wide term;
                    if (! checked_mul(a[i], b[j], term) || ! checked_add(out[i + j], term, out[i + j]))
                        return false;
                }
            }
            return true;
        }

        /// Coefficient of t^m in p^n, in 128-bit arithmetic; false on overflow.
        auto power_coefficient(const std::vector<Wide> & p, int n, int m, Wide & coefficient) -> bool
        {
            std::vector<Wide> result{1}, base = p, scratch;
            for (int e = n;;) {
                if (e & 1) {
                    if (! multiply(result, base, m, scratch))
                        return false;
                    result.swap(scratch);
                }
                e >>= 1;
                if (e == 0)
                    break;
                if (! multiply(base, base, m, scratch))
                    return false;
                base.swap(scratch);
            }
            coefficient = static_cast<std::size_t>(m) < result.size() ? result[static_cast<std::size_t>(m)] : 0;
            return true;
        }

        /**
         * Coefficient of t^m in p^n in exact arithmetic. Strips the lowest
         * power of t, then runs the power recurrence for series with a
         * nonzero constant term: j a_0 b_j = sum_i ((n+1) i - j) a_i b_{j-i}.
         * Cost is O(m^2) big-integer operations whatever n is.
         */
        auto power_coefficient(const std::vector<cpp_int> & p, int n, int m) -> cpp_int
        {
            std::size_t low = 0;
            while (low < p.size() && p[low].is_zero())
                ++low;
            if (low == p.size())
                return m == 0 ? cpp_int(n == 0 ? 1 : 0) : cpp_int(0);
            const auto shift = static_cast<std::uint64_t>(low) * static_cast<std::uint64_t>(n);
            if (shift > static_cast<std::uint64_t>(m))
                return 0;
            const auto target = static_cast<std::size_t>(static_cast<std::uint64_t>(m) - shift);

            const auto a = [&](std::size_t i) -> const cpp_int & {
                static const cpp_int zero = 0;
                return low + i < p.size() ? p[low + i] : zero;
            };
            std::vector<cpp_int> b(target + 1);
            b[0] = pow(a(0), static_cast<unsigned>(n));
            const cpp_int nn = n;
            for (std::size_t j = 1; j <= target; ++j) {
                cpp_int sum = 0;
                for (std::size_t i = 1; i <= j; ++i)
                    if (! a(i).is_zero())
                        sum += ((nn + 1) * static_cast<long long>(i) - static_cast<long long>(j)) * a(i) * b[j - i];
                b[j] = sum / (a(0) * static_cast<long long>(j));
            }
            return b[target];
        }

        /// Ranked transforms with coefficient type T (std::int64_t when the zeta sums fit, cpp_int otherwise).
        template <class T>
        auto par_ranked(const SetFunction & f, int n) -> HomCount
        {
            const int m = f.ground_size();
            const std::size_t full = std::size_t{1} << m;
            const std::size_t width = static_cast<std::size_t>(m) + 1;

            // ranked[x * width + r] = sum of f(y) over y subset of x with |y| = r
            std::vector<T> ranked(full * width);
            for (std::uint32_t x = 0; x < full; ++x) {
                if constexpr (std::is_same_v<T, cpp_int>)
                    ranked[x * width + static_cast<std::size_t>(std::popcount(x))] = f[x];
                else
                    ranked[x * width + static_cast<std::size_t>(std::popcount(x))] = f[x].template convert_to<T>();
            }
            for (int bit = 0; bit < m; ++bit) {
                const std::uint32_t b = std::uint32_t{1} << bit;
                for (std::uint32_t x = 0; x < full; ++x) {
                    if ((x & b) == 0)
                        continue;
                    auto * dst = &ranked[x * width];
                    const auto * src = &ranked[(x ^ b) * width];
                    const auto top = static_cast<std::size_t>(std::popcount(x ^ b));
                    for (std::size_t r = 0; r <= top; ++r)
                        dst[r] += src[r];
                }
            }

            // Moebius inversion at the full set with rank m: signed sum of [t^m] p_x(t)^n.
            cpp_int total = 0;
            Wide partial = 0;
            std::vector<Wide> wide;
            std::vector<cpp_int> exact;
            // Exact powers are costly; subsets sharing a rank polynomial share the coefficient.
            std::map<std::vector<cpp_int>, cpp_int> exact_cache;
            for (std::uint32_t x = 0; x < full; ++x) {
                const auto size = std::popcount(x);
                if (static_cast<long long>(size) * n < m)
                    continue;
                const bool negative = ((m - size) & 1) != 0;
                const auto * poly = &ranked[x * width];

                Wide coefficient = 0;
                bool fits = false;
                if constexpr (! std::is_same_v<T, cpp_int>) {
                    wide.assign(poly, poly + size + 1);
                    fits = power_coefficient(wide, n, m, coefficient);
                }
                if (fits) {
                    if (negative)
                        coefficient = -coefficient;
                    Wide sum;
                    if (checked_add(partial, coefficient, sum))
                        partial = sum;
                    else {
                        total += to_cpp_int(partial);
                        partial = coefficient;
                    }
                    continue;
                }
                exact.assign(static_cast<std::size_t>(size) + 1, 0);
                for (int r = 0; r <= size; ++r)
                    exact[static_cast<std::size_t>(r)] = cpp_int(poly[r]);
                auto it = exact_cache.find(exact);
                if (it == exact_cache.end())
                    it = exact_cache.emplace(exact, power_coefficient(exact, n, m)).first;
                const auto & c = it->second;
                if (negative)
                    total -= c;
                else
                    total += c;
            }
            total += to_cpp_int(partial);
            if (total < 0)
                throw InternalCheckFailed("partition sum came out negative");
            return total;
        }
    }

    auto par(const SetFunction & f, int n, std::uint64_t budget) -> HomCount
    {
        if (n < 1)
            throw InvalidInput("par needs at least one part");
        const int m = f.ground_size();
        const auto words = (static_cast<std::uint64_t>(m) + 1) << m;
        require_budget(words, budget, "ranked transform over 2^" + std::to_string(m) + " subsets");

        HomCount largest = 0;
        for (const auto & v : f.values())
            largest = std::max(largest, v);
        // Every ranked zeta entry is at most 2^m * max f.
        if ((largest << m) <= std::numeric_limits<std::int64_t>::max())
            return par_ranked<std::int64_t>(f, n);
        return par_ranked<cpp_int>(f, n);
    }

    auto count_colorings(const Graph & g, int n, std::uint64_t budget) -> HomCount
    {
        if (n < 0)
            throw InvalidInput("color count must be non-negative");
        if (n == 0)
            return g.vertex_count() == 0 ? 1 : 0;
        return par(independence_indicator(g), n, budget);
    }
}
