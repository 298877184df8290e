#pragma once

#include "vest/error.hpp"
#include "vest/instance.hpp"
#include "vest/layout.hpp"
#include "vest/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vest {

/// M_k is a count of index tuples, exact and unbounded.
using MTerm = BigInt;

enum class Method { naive, dedup, distinct_fast };

inline constexpr std::uint64_t default_naive_budget = 100'000'000;
inline constexpr std::uint64_t default_dedup_budget = 10'000'000;

inline std::uint64_t default_budget(Method method) noexcept
{
    return method == Method::dedup ? default_dedup_budget : default_naive_budget;
}

inline std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::naive: return "naive";
    case Method::dedup: return "dedup";
    case Method::distinct_fast: return "distinct-fast";
    }
    return "unknown";
}

inline std::optional<Method> parse_method(std::string_view text) noexcept
{
    if (text == "naive") {
        return Method::naive;
    }
    if (text == "dedup") {
        return Method::dedup;
    }
    if (text == "distinct-fast") {
        return Method::distinct_fast;
    }
    return std::nullopt;
}

/// T_{last} ... T_{first} v: the first index is applied first.
inline RationalVector evaluate_sequence(VestInstance const& instance, std::span<std::size_t const> indices)
{
    RationalVector current = instance.start();
    RationalVector next;
    for (std::size_t t : indices) {
        if (t >= instance.m()) {
            throw IndexError("transform index " + std::to_string(t) + " out of range [0, "
                             + std::to_string(instance.m()) + ")");
        }
        mat_vec_apply_into(instance.transform(t), current, next);
        std::swap(current, next);
    }
    return current;
}

inline bool is_zeroed(VestInstance const& instance, std::span<std::size_t const> indices)
{
    return product_is_zero(instance.selector(), evaluate_sequence(instance, indices));
}

namespace detail {

inline BigInt power(std::size_t base, std::size_t exp)
{
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
}

inline BigInt binomial(std::size_t n, std::size_t k)
{
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

// Depth-first walk over index tuples sharing prefix products. Element j of the
// result counts zeroed tuples of length j (j = 0..depth). When `increasing`
// is set only strictly increasing tuples are visited.
class TupleWalker {
public:
    TupleWalker(VestInstance const& instance, std::size_t depth, bool increasing)
        : instance_(instance)
        , depth_(depth)
        , increasing_(increasing)
        , buffers_(depth + 1)
        , counts_(depth + 1, 0)
    {
        buffers_[0] = instance.start();
        counts_[0] = product_is_zero(instance.selector(), buffers_[0]) ? 1 : 0;
    }

    std::vector<std::uint64_t> run()
    {
        if (depth_ > 0) {
            walk(0, 0);
        }
        return counts_;
    }

private:
    void walk(std::size_t level, std::size_t first)
    {
        auto const& selector = instance_.selector();
        for (std::size_t t = first; t < instance_.m(); ++t) {
            mat_vec_apply_into(instance_.transform(t), buffers_[level], buffers_[level + 1]);
            if (product_is_zero(selector, buffers_[level + 1])) {
                ++counts_[level + 1];
            }
            if (level + 1 < depth_) {
                walk(level + 1, increasing_ ? t + 1 : 0);
            }
        }
    }

    VestInstance const& instance_;
    std::size_t depth_;
    bool increasing_;
    std::vector<RationalVector> buffers_;
    std::vector<std::uint64_t> counts_;
};

inline std::vector<MTerm> naive_counts(VestInstance const& instance, std::size_t depth, std::uint64_t budget)
{
    BigInt const tuples = power(instance.m(), depth);
    if (tuples > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("naive evaluation needs m^k = " + std::to_string(instance.m()) + "^"
                                 + std::to_string(depth) + " = " + tuples.get_str() + " tuples, budget is "
                                 + std::to_string(budget),
                             budget);
    }
    auto const raw = TupleWalker(instance, depth, false).run();
    std::vector<MTerm> counts;
    counts.reserve(raw.size());
    for (auto c : raw) {
        counts.emplace_back(static_cast<unsigned long>(c));
    }
    return counts;
}

inline std::vector<MTerm> dedup_counts(VestInstance const& instance, std::size_t depth, std::uint64_t budget)
{
    auto const& selector = instance.selector();
    std::vector<MTerm> counts(depth + 1, 0);
    counts[0] = product_is_zero(selector, instance.start()) ? 1 : 0;

    // canonical key of a current vector -> number of tuples reaching it
    std::unordered_map<std::string, BigInt> level;
    level.emplace(vector_canonical_key(instance.start()), 1);

    RationalVector image;
    for (std::size_t j = 1; j <= depth; ++j) {
        bool const keep = j < depth; // the last level only needs counting
        std::unordered_map<std::string, BigInt> next;
        for (auto const& [key, multiplicity] : level) {
            RationalVector const current = vector_from_key(key);
            for (std::size_t t = 0; t < instance.m(); ++t) {
                mat_vec_apply_into(instance.transform(t), current, image);
                if (product_is_zero(selector, image)) {
                    counts[j] += multiplicity;
                }
                if (keep) {
                    next[vector_canonical_key(image)] += multiplicity;
                    if (next.size() > budget) {
                        throw BudgetExceeded("dedup evaluation exceeded " + std::to_string(budget)
                                                 + " distinct states at level " + std::to_string(j) + " ("
                                                 + std::to_string(next.size()) + " states so far)",
                                             budget);
                    }
                }
            }
        }
        level = std::move(next);
    }
    return counts;
}

inline std::vector<MTerm> distinct_fast_counts(VestInstance const& instance, std::size_t depth,
                                               ReductionLayout const& witness, std::uint64_t budget)
{
    witness.check_matches(instance);
    std::size_t const reachable = std::min(depth, instance.m());
    BigInt const subsets = binomial(instance.m(), reachable);
    if (subsets > BigInt(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("distinct-fast evaluation needs C(" + std::to_string(instance.m()) + ", "
                                 + std::to_string(reachable) + ") = " + subsets.get_str()
                                 + " subsets, budget is " + std::to_string(budget),
                             budget);
    }
    auto const raw = TupleWalker(instance, reachable, true).run();
    // Transforms commute on reduction instances and a repeated index never
    // zeroes the selector, so every qualifying subset stands for j! tuples.
    std::vector<MTerm> counts(depth + 1, 0);
    for (std::size_t j = 0; j <= reachable; ++j) {
        counts[j] = BigInt(static_cast<unsigned long>(raw[j])) * factorial(j);
    }
    return counts;
}

inline void require_positive_k(std::size_t k)
{
    if (k == 0) {
        throw InvalidArgument("sequence length k must be at least 1");
    }
}

} // namespace detail

/// M_k by exhaustive enumeration of all m^k index tuples (prefix products shared).
/// Throws BudgetExceeded when m^k > budget.
inline MTerm m_term_naive(VestInstance const& instance, std::size_t k, std::uint64_t budget = default_naive_budget)
{
    detail::require_positive_k(k);
    return detail::naive_counts(instance, k, budget)[k];
}

/// M_k by propagating a multiplicity map over distinct current vectors.
///
/// k = 0 is accepted and yields 1 if S v = 0, else 0. Throws BudgetExceeded
/// when a stored level holds more than `budget` distinct vectors.
inline MTerm m_term_dedup(VestInstance const& instance, std::size_t k, std::uint64_t budget = default_dedup_budget)
{
    return detail::dedup_counts(instance, k, budget)[k];
}

/// M_k for reduction instances only: k! times the number of k-subsets of
/// transforms that zero the selector. `witness` must describe `instance`
/// exactly (LayoutMismatch otherwise). For k > m the result is 0.
inline MTerm m_term_distinct_fast(VestInstance const& instance, std::size_t k, ReductionLayout const& witness,
                                  std::uint64_t budget = default_naive_budget)
{
    detail::require_positive_k(k);
    return detail::distinct_fast_counts(instance, k, witness, budget)[k];
}

struct EvalConfig {
    Method method = Method::dedup;
    std::optional<std::uint64_t> budget;
    std::optional<ReductionLayout> witness;

    std::uint64_t effective_budget() const { return budget.value_or(default_budget(method)); }
};

namespace detail {

inline std::vector<MTerm> counts_upto(VestInstance const& instance, std::size_t depth, EvalConfig const& config)
{
    switch (config.method) {
    case Method::naive: return naive_counts(instance, depth, config.effective_budget());
    case Method::dedup: return dedup_counts(instance, depth, config.effective_budget());
    case Method::distinct_fast:
        if (!config.witness) {
            throw InvalidArgument("distinct-fast evaluation requires a reduction layout");
        }
        return distinct_fast_counts(instance, depth, *config.witness, config.effective_budget());
    }
    throw InvalidArgument("unknown evaluation method");
}

} // namespace detail

inline MTerm m_term(VestInstance const& instance, std::size_t k, EvalConfig const& config)
{
    detail::require_positive_k(k);
    return detail::counts_upto(instance, k, config)[k];
}

/// (M_1, ..., M_upto), computed in a single pass of the chosen evaluator.
inline std::vector<MTerm> m_sequence(VestInstance const& instance, std::size_t upto, EvalConfig const& config)
{
    if (upto == 0) {
        throw InvalidArgument("upto must be at least 1");
    }
    auto counts = detail::counts_upto(instance, upto, config);
    return {std::make_move_iterator(counts.begin() + 1), std::make_move_iterator(counts.end())};
}

} // namespace vest
