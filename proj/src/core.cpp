#include <homcount/core.hpp>

#include <cstdlib>
#include <limits>
#include <string>

namespace homcount
{
    auto default_budget() -> std::uint64_t
    {
        if (const char * env = std::getenv("HOMCOUNT_BUDGET"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                auto value = std::stoull(env, &used);
                if (used == std::string(env).size() && value > 0)
                    return value;
            }
            catch (const std::exception &) {
            }
            throw InvalidInput("HOMCOUNT_BUDGET must be a positive integer, got '" + std::string(env) + "'");
        }
        return builtin_default_budget;
    }

    auto saturating_pow(std::uint64_t base, std::uint64_t exp) -> std::uint64_t
    {
        constexpr auto max = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t result = 1;
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (base != 0 && result > max / base)
                return max;
            result *= base;
        }
        return result;
    }

    void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string & what)
    {
        if (needed > budget)
            throw BudgetExceeded(what + " needs " + (needed == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64") : std::to_string(needed)) +
                " units, budget is " + std::to_string(budget));
    }
}
