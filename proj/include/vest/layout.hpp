#pragma once

#include "vest/error.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vest {

struct VertexRole {
    std::size_t vertex;
    friend bool operator==(VertexRole const&, VertexRole const&) = default;
};

struct EdgeRole {
    std::size_t u;
    std::size_t v;
    friend bool operator==(EdgeRole const&, EdgeRole const&) = default;
};

using TransformRole = std::variant<VertexRole, EdgeRole>;

/// Coordinate layout of the clique-to-VEST reduction for a graph and clique size k.
///
/// Coordinates: vertex components [0, n), the special component n, then the
/// two private components (a, b) of transform t at n+1+2t and n+2+2t.
/// Transforms 0..n-1 belong to vertices, n..m-1 to edges in lexicographic order.
class ReductionLayout {
public:
    ReductionLayout(Graph const& graph, std::size_t k)
        : n_(graph.n())
        , k_(k)
        , edges_(graph.edges())
    {
        if (k < 1) {
            throw InvalidArgument("clique size k must be at least 1");
        }
        if (n_ == 0) {
            throw InvalidArgument("graph must have at least one vertex");
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t m() const noexcept { return n_ + edges_.size(); }
    std::size_t d() const noexcept { return n_ + 2 * m() + 1; }
    std::size_t h() const noexcept { return n_ + m(); }

    /// s = k + k(k-1)/2: the sequence length at which cliques are counted.
    std::size_t s() const noexcept { return k_ + k_ * (k_ - 1) / 2; }

    std::size_t special_index() const noexcept { return n_; }
    std::size_t first_private(std::size_t t) const noexcept { return n_ + 1 + 2 * t; }
    std::size_t second_private(std::size_t t) const noexcept { return n_ + 2 + 2 * t; }

    TransformRole role(std::size_t t) const
    {
        if (t < n_) {
            return VertexRole{t};
        }
        auto const& [u, v] = edges_.at(t - n_);
        return EdgeRole{u, v};
    }

    std::vector<Edge> const& edges() const noexcept { return edges_; }

    Graph graph() const { return Graph(n_, edges_); }

    /// The instance this layout describes.
    VestInstance build_instance() const
    {
        std::size_t const dim = d();
        std::size_t const special = special_index();
        Rational const one(1);

        RationalVector start(dim);
        start[special] = one;

        std::vector<SparseRationalMatrix> transforms;
        transforms.reserve(m());
        for (std::size_t t = 0; t < m(); ++t) {
            std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
            for (std::size_t i = 0; i < dim; ++i) {
                entries[{i, i}] = one;
            }
            // a' = a + 1 (the special component), b' = b + a
            entries[{first_private(t), special}] += one;
            entries[{second_private(t), first_private(t)}] += one;
            TransformRole const r = role(t);
            if (auto const* vr = std::get_if<VertexRole>(&r)) {
                entries[{vr->vertex, special}] += Rational(static_cast<std::int64_t>(k_) - 1);
            } else {
                auto const& er = std::get<EdgeRole>(r);
                entries[{er.u, special}] -= one;
                entries[{er.v, special}] -= one;
            }
            transforms.push_back(SparseRationalMatrix::from_map(dim, dim, entries));
        }

        std::vector<MatrixEntry> selected;
        selected.reserve(h());
        for (std::size_t r = 0; r < n_; ++r) {
            selected.push_back({r, r, one});
        }
        for (std::size_t t = 0; t < m(); ++t) {
            selected.push_back({n_ + t, second_private(t), one});
        }
        return VestInstance(std::move(start), std::move(transforms),
                            SparseRationalMatrix::from_entries(h(), dim, std::move(selected)));
    }

    /// Throws LayoutMismatch unless `instance` is exactly the instance this layout builds.
    void check_matches(VestInstance const& instance) const
    {
        if (instance.d() != d() || instance.m() != m() || instance.h() != h()) {
            throw LayoutMismatch("instance dimensions (d=" + std::to_string(instance.d()) + ", m="
                                 + std::to_string(instance.m()) + ", h=" + std::to_string(instance.h())
                                 + ") do not match reduction layout (d=" + std::to_string(d()) + ", m="
                                 + std::to_string(m()) + ", h=" + std::to_string(h()) + ")");
        }
        if (!(instance == build_instance())) {
            throw LayoutMismatch("instance is not the reduction instance described by the layout");
        }
    }

    friend bool operator==(ReductionLayout const&, ReductionLayout const&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Edge> edges_;
};

} // namespace vest
