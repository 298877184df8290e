#pragma once

#include "vest/evaluate.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"
#include "vest/layout.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace vest {

struct Reduction {
    VestInstance instance;
    ReductionLayout layout;
};

/// Builds the VEST instance whose s-th M-term is s! times the number of k-cliques of `graph`.
inline Reduction reduce_clique_to_vest(Graph const& graph, std::size_t k)
{
    ReductionLayout layout(graph, k);
    VestInstance instance = layout.build_instance();
    return {std::move(instance), std::move(layout)};
}

namespace detail {

inline void extend_cliques(Graph const& graph, std::vector<std::size_t> const& candidates, std::size_t remaining,
                           std::uint64_t& count)
{
    if (remaining == 0) {
        ++count;
        return;
    }
    if (candidates.size() < remaining) {
        return;
    }
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::size_t const v = candidates[i];
        // keep only later candidates adjacent to v, so each clique is found once in increasing order
        next.clear();
        auto const& nbrs = graph.neighbors(v);
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end(), std::back_inserter(next));
        extend_cliques(graph, next, remaining - 1, count);
    }
}

} // namespace detail

/// Number of k-vertex subsets of `graph` that induce a complete subgraph.
inline BigInt count_k_cliques(Graph const& graph, std::size_t k)
{
    if (k == 0) {
        throw InvalidArgument("clique size k must be at least 1");
    }
    std::vector<std::size_t> all(graph.n());
    for (std::size_t v = 0; v < graph.n(); ++v) {
        all[v] = v;
    }
    std::uint64_t count = 0;
    detail::extend_cliques(graph, all, k, count);
    return BigInt(static_cast<unsigned long>(count));
}

struct ExpectedTerm {
    std::size_t s;
    BigInt clique_count;
    BigInt expected;
};

/// s = k + C(k, 2) and the predicted M_s = s! * C_k.
inline ExpectedTerm expected_m_term(Graph const& graph, std::size_t k)
{
    BigInt cliques = count_k_cliques(graph, k);
    std::size_t const s = k + k * (k - 1) / 2;
    BigInt expected = factorial(s) * cliques;
    return {s, std::move(cliques), std::move(expected)};
}

struct VerificationReport {
    std::size_t k = 0;
    std::size_t s = 0;
    BigInt clique_count;
    BigInt expected;
    BigInt computed;
    Method method = Method::dedup;
    bool pass = false;
};

/// Reduces (graph, k), evaluates M_s with `method` and compares it with s! * C_k.
/// Budget overruns propagate as BudgetExceeded.
inline VerificationReport verify_reduction(Graph const& graph, std::size_t k, Method method,
                                           std::optional<std::uint64_t> budget = std::nullopt)
{
    auto reduction = reduce_clique_to_vest(graph, k);
    auto expected = expected_m_term(graph, k);

    EvalConfig config{method, budget, std::nullopt};
    if (method == Method::distinct_fast) {
        config.witness = reduction.layout;
    }

    VerificationReport report;
    report.k = k;
    report.s = expected.s;
    report.clique_count = std::move(expected.clique_count);
    report.expected = std::move(expected.expected);
    report.computed = m_term(reduction.instance, report.s, config);
    report.method = method;
    report.pass = report.computed == report.expected;
    return report;
}

} // namespace vest
