#pragma once

// Test-only reference computations. Nothing here goes through the library's
// sparse matrices, Rational fast paths or evaluators.

#include "vest/vest.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace vest::oracle {

using DenseMatrix = std::vector<std::vector<mpq_class>>;

inline DenseMatrix dense(SparseRationalMatrix const& m)
{
    DenseMatrix out(m.rows(), std::vector<mpq_class>(m.cols(), 0));
    for (auto const& e : m.entries()) {
        out[e.row][e.col] = e.value.to_mpq();
    }
    return out;
}

inline std::vector<mpq_class> multiply(DenseMatrix const& m, std::vector<mpq_class> const& x)
{
    std::vector<mpq_class> out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < x.size(); ++c) {
            out[r] += m[r][c] * x[c];
        }
    }
    return out;
}

/// M_k by evaluating every tuple from scratch with dense GMP arithmetic.
inline BigInt brute_force_m_term(VestInstance const& instance, std::size_t k)
{
    std::vector<DenseMatrix> transforms;
    for (auto const& t : instance.transforms()) {
        transforms.push_back(dense(t));
    }
    DenseMatrix const selector = dense(instance.selector());
    std::vector<mpq_class> start;
    for (auto const& r : instance.start()) {
        start.push_back(r.to_mpq());
    }

    BigInt count = 0;
    std::vector<std::size_t> tuple(k, 0);
    for (;;) {
        auto x = start;
        for (std::size_t t : tuple) {
            x = multiply(transforms[t], x);
        }
        bool zero = true;
        for (auto const& y : multiply(selector, x)) {
            zero = zero && sgn(y) == 0;
        }
        if (zero) {
            ++count;
        }
        std::size_t pos = 0;
        while (pos < k && ++tuple[pos] == instance.m()) {
            tuple[pos++] = 0;
        }
        if (pos == k) {
            break;
        }
    }
    return count;
}

/// Direct integer simulation of the reduction's bookkeeping: vertex counters,
/// and per-transform counters updated a' = a + 1, b' = b + a.
inline bool gadget_zeroed(Graph const& graph, std::size_t k, std::vector<std::size_t> const& tuple)
{
    auto const edges = graph.edges();
    std::vector<long> vertex(graph.n(), 0);
    std::map<std::size_t, std::pair<long, long>> priv;
    for (std::size_t t : tuple) {
        auto& [a, b] = priv[t];
        b += a;
        a += 1;
        if (t < graph.n()) {
            vertex[t] += static_cast<long>(k) - 1;
        } else {
            vertex[edges[t - graph.n()].first] -= 1;
            vertex[edges[t - graph.n()].second] -= 1;
        }
    }
    for (long x : vertex) {
        if (x != 0) {
            return false;
        }
    }
    for (auto const& [t, ab] : priv) {
        if (ab.second != 0) {
            return false;
        }
    }
    return true;
}

inline BigInt gadget_m_term(Graph const& graph, std::size_t k, std::size_t length)
{
    std::size_t const m = graph.n() + graph.edge_count();
    BigInt count = 0;
    std::vector<std::size_t> tuple(length, 0);
    for (;;) {
        if (gadget_zeroed(graph, k, tuple)) {
            ++count;
        }
        std::size_t pos = 0;
        while (pos < length && ++tuple[pos] == m) {
            tuple[pos++] = 0;
        }
        if (pos == length) {
            break;
        }
    }
    return count;
}

/// C_k by testing every vertex subset (bitmask) for completeness.
inline BigInt subset_clique_count(Graph const& graph, std::size_t k)
{
    std::size_t const n = graph.n();
    BigInt count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) {
            continue;
        }
        bool complete = true;
        for (std::size_t u = 0; u < n && complete; ++u) {
            for (std::size_t v = u + 1; v < n && complete; ++v) {
                if ((mask >> u & 1) && (mask >> v & 1) && !graph.has_edge(u, v)) {
                    complete = false;
                }
            }
        }
        if (complete) {
            ++count;
        }
    }
    return count;
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices.
inline std::vector<Graph> all_graphs(std::size_t n)
{
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<Graph> graphs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1) {
                g.add_edge(pairs[i].first, pairs[i].second);
            }
        }
        graphs.push_back(std::move(g));
    }
    return graphs;
}

/// Random general instance with integer entries in [lo, hi]; each entry is
/// forced to zero with probability `zero_probability` so that zeroed tuples occur.
inline VestInstance random_instance(std::mt19937_64& rng, std::size_t max_d, std::size_t max_m, long lo, long hi,
                                    double zero_probability = 0.0)
{
    std::bernoulli_distribution forced_zero(zero_probability);
    std::uniform_int_distribution<std::size_t> dim_d(1, max_d);
    std::uniform_int_distribution<std::size_t> dim_m(1, max_m);
    std::uniform_int_distribution<long> uniform(lo, hi);
    auto value = [&](std::mt19937_64& g) { return forced_zero(g) ? 0L : uniform(g); };
    std::size_t const d = dim_d(rng);
    std::size_t const m = dim_m(rng);
    std::size_t const h = dim_d(rng);

    auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        std::vector<MatrixEntry> entries;
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                entries.push_back({r, c, Rational(value(rng))});
            }
        }
        return SparseRationalMatrix::from_entries(rows, cols, std::move(entries));
    };

    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) {
        v[i] = Rational(value(rng));
    }
    std::vector<SparseRationalMatrix> transforms;
    for (std::size_t t = 0; t < m; ++t) {
        transforms.push_back(random_matrix(d, d));
    }
    return VestInstance(std::move(v), std::move(transforms), random_matrix(h, d));
}

} // namespace vest::oracle
