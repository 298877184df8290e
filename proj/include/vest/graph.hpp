#pragma once

#include "vest/error.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vest {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (min, max).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}

    Graph(std::size_t n, std::span<Edge const> edges) : Graph(n)
    {
        for (auto const& [u, v] : edges) {
            add_edge(u, v);
        }
    }

    static Graph complete(std::size_t n)
    {
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                g.add_edge(u, v);
            }
        }
        return g;
    }

    static Graph path(std::size_t n)
    {
        Graph g(n);
        for (std::size_t u = 0; u + 1 < n; ++u) {
            g.add_edge(u, u + 1);
        }
        return g;
    }

    static Graph petersen()
    {
        Graph g(10);
        for (std::size_t i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }

    std::size_t n() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in lexicographic (min endpoint, max endpoint) order.
    std::vector<Edge> edges() const { return {edges_.begin(), edges_.end()}; }

    bool has_edge(std::size_t u, std::size_t v) const { return edges_.contains(std::minmax(u, v)); }

    /// Sorted neighbour list of u.
    std::vector<std::size_t> const& neighbors(std::size_t u) const { return adjacency_.at(u); }

    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= n() || v >= n()) {
            throw InvalidArgument("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} has an endpoint >= "
                                  + std::to_string(n()));
        }
        if (u == v) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        }
        if (!edges_.insert(std::minmax(u, v)).second) {
            throw InvalidArgument("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        }
        insert_sorted(adjacency_[u], v);
        insert_sorted(adjacency_[v], u);
    }

    /// Graph with vertex v renamed perm[v].
    Graph relabeled(std::span<std::size_t const> perm) const
    {
        if (perm.size() != n()) {
            throw InvalidArgument("permutation size does not match vertex count");
        }
        Graph g(n());
        for (auto const& [u, v] : edges_) {
            g.add_edge(perm[u], perm[v]);
        }
        return g;
    }

    friend bool operator==(Graph const& a, Graph const& b) { return a.n() == b.n() && a.edges_ == b.edges_; }

private:
    static void insert_sorted(std::vector<std::size_t>& list, std::size_t v)
    {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<std::size_t>> adjacency_;
    std::set<Edge> edges_;
};

} // namespace vest
