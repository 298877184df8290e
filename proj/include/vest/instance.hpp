#pragma once

#include "vest/error.hpp"
#include "vest/linalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vest {

/// A VEST instance: start vector v in Q^d, transforms T_1..T_m (d x d) and
/// selector S (h x d). Dimensions are checked on construction and the value
/// is immutable afterwards.
class VestInstance {
public:
    VestInstance(RationalVector start, std::vector<SparseRationalMatrix> transforms, SparseRationalMatrix selector)
        : start_(std::move(start))
        , transforms_(std::move(transforms))
        , selector_(std::move(selector))
    {
        std::size_t const d = start_.dim();
        if (d == 0) {
            throw DimensionError("instance dimension must be positive");
        }
        if (transforms_.empty()) {
            throw DimensionError("instance needs at least one transform");
        }
        for (std::size_t t = 0; t < transforms_.size(); ++t) {
            if (transforms_[t].rows() != d || transforms_[t].cols() != d) {
                throw DimensionError("transform " + std::to_string(t) + " is " + std::to_string(transforms_[t].rows())
                                     + "x" + std::to_string(transforms_[t].cols()) + ", expected "
                                     + std::to_string(d) + "x" + std::to_string(d));
            }
        }
        if (selector_.rows() == 0 || selector_.cols() != d) {
            throw DimensionError("selector must be h x " + std::to_string(d) + " with h > 0");
        }
    }

    std::size_t d() const noexcept { return start_.dim(); }
    std::size_t m() const noexcept { return transforms_.size(); }
    std::size_t h() const noexcept { return selector_.rows(); }

    RationalVector const& start() const noexcept { return start_; }
    std::vector<SparseRationalMatrix> const& transforms() const noexcept { return transforms_; }
    SparseRationalMatrix const& transform(std::size_t t) const { return transforms_.at(t); }
    SparseRationalMatrix const& selector() const noexcept { return selector_; }

    friend bool operator==(VestInstance const&, VestInstance const&) = default;

private:
    RationalVector start_;
    std::vector<SparseRationalMatrix> transforms_;
    SparseRationalMatrix selector_;
};

} // namespace vest
