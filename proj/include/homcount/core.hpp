#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcount
{
    /// Exact, arbitrary-precision non-negative count.
    using HomCount = boost::multiprecision::cpp_int;

    inline auto to_decimal(const HomCount & value) -> std::string
    {
        return value.str();
    }

    /// Raised for inputs that violate an operation's preconditions.
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when an enumeration space or table exceeds its configured budget.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Raised when an internal exactness witness fails. Always a bug.
    class InternalCheckFailed : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    inline constexpr std::uint64_t builtin_default_budget = 100'000'000ULL;

    /// Default budget for enumerations and tables; HOMCOUNT_BUDGET overrides it.
    auto default_budget() -> std::uint64_t;

    /// base^exp, saturating at UINT64_MAX.
    auto saturating_pow(std::uint64_t base, std::uint64_t exp) -> std::uint64_t;

    /// Throws BudgetExceeded with `what` in the message if `needed > budget`.
    void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string & what);
}
