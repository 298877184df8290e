#pragma once

#include "vest/error.hpp"
#include "vest/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vest {

/// Dense column vector over the rationals.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : entries_(dim) {}
    RationalVector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const noexcept { return entries_.size(); }

    Rational const& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    Rational const& at(std::size_t i) const
    {
        if (i >= entries_.size()) {
            throw IndexError("vector index " + std::to_string(i) + " out of range for dimension "
                             + std::to_string(entries_.size()));
        }
        return entries_[i];
    }

    std::span<Rational const> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const noexcept
    {
        return std::all_of(entries_.begin(), entries_.end(), [](Rational const& r) { return r.is_zero(); });
    }

    void resize(std::size_t dim) { entries_.resize(dim); }

    friend bool operator==(RationalVector const&, RationalVector const&) = default;

    friend RationalVector operator+(RationalVector const& a, RationalVector const& b)
    {
        if (a.dim() != b.dim()) {
            throw DimensionError("vector sum of dimensions " + std::to_string(a.dim()) + " and "
                                 + std::to_string(b.dim()));
        }
        RationalVector out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            out[i] = a[i] + b[i];
        }
        return out;
    }

    friend RationalVector operator*(Rational const& scalar, RationalVector const& x)
    {
        RationalVector out(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i) {
            out[i] = scalar * x[i];
        }
        return out;
    }

private:
    std::vector<Rational> entries_;
};

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    Rational value;

    friend bool operator==(MatrixEntry const&, MatrixEntry const&) = default;
};

/// Sparse rational matrix. Entries are kept in row-major order with
/// structural zeros removed, so two matrices are equal iff their entry lists are.
class SparseRationalMatrix {
public:
    SparseRationalMatrix() = default;

    SparseRationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , row_start_(rows + 1, 0)
    {
    }

    static SparseRationalMatrix identity(std::size_t n)
    {
        std::vector<MatrixEntry> entries;
        entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            entries.push_back({i, i, Rational(1)});
        }
        return from_entries(n, n, std::move(entries));
    }

    /// Throws DimensionError for out-of-range positions and InvalidArgument
    /// when a position is given twice. Zero values are dropped.
    static SparseRationalMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    {
        SparseRationalMatrix m(rows, cols);
        for (auto const& e : entries) {
            if (e.row >= rows || e.col >= cols) {
                throw DimensionError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col)
                                     + ") outside " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
            }
        }
        std::sort(entries.begin(), entries.end(), [](MatrixEntry const& a, MatrixEntry const& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col) {
                throw InvalidArgument("duplicate entry (" + std::to_string(entries[i].row) + ", "
                                      + std::to_string(entries[i].col) + ")");
            }
        }
        std::erase_if(entries, [](MatrixEntry const& e) { return e.value.is_zero(); });
        m.entries_ = std::move(entries);
        m.index_rows();
        return m;
    }

    /// Accumulating builder input: values at the same position are summed.
    static SparseRationalMatrix from_map(std::size_t rows, std::size_t cols,
                                         std::map<std::pair<std::size_t, std::size_t>, Rational> const& values)
    {
        std::vector<MatrixEntry> entries;
        entries.reserve(values.size());
        for (auto const& [pos, value] : values) {
            entries.push_back({pos.first, pos.second, value});
        }
        return from_entries(rows, cols, std::move(entries));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    std::span<MatrixEntry const> entries() const noexcept { return entries_; }

    std::span<MatrixEntry const> row(std::size_t r) const
    {
        return std::span<MatrixEntry const>(entries_).subspan(row_start_[r], row_start_[r + 1] - row_start_[r]);
    }

    Rational at(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_) {
            throw IndexError("matrix position out of range");
        }
        for (auto const& e : row(r)) {
            if (e.col == c) {
                return e.value;
            }
        }
        return Rational();
    }

    friend bool operator==(SparseRationalMatrix const& a, SparseRationalMatrix const& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void index_rows()
    {
        row_start_.assign(rows_ + 1, 0);
        for (auto const& e : entries_) {
            ++row_start_[e.row + 1];
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            row_start_[r + 1] += row_start_[r];
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
    std::vector<std::size_t> row_start_ = {0};
};

/// out = m * x. `out` may not alias `x`; its storage is reused across calls.
inline void mat_vec_apply_into(SparseRationalMatrix const& m, RationalVector const& x, RationalVector& out)
{
    if (m.cols() != x.dim()) {
        throw DimensionError("matrix with " + std::to_string(m.cols()) + " columns applied to vector of dimension "
                             + std::to_string(x.dim()));
    }
    out.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational& acc = out[r];
        acc = Rational();
        for (auto const& e : m.row(r)) {
            Rational const& xc = x[e.col];
            if (xc.is_zero()) {
                continue;
            }
            if (e.value.is_one()) {
                acc += xc;
            } else {
                acc.add_product(e.value, xc);
            }
        }
    }
}

inline RationalVector mat_vec_apply(SparseRationalMatrix const& m, RationalVector const& x)
{
    RationalVector out;
    mat_vec_apply_into(m, x, out);
    return out;
}

/// m * x == 0, stopping at the first nonzero row.
inline bool product_is_zero(SparseRationalMatrix const& m, RationalVector const& x)
{
    if (m.cols() != x.dim()) {
        throw DimensionError("matrix with " + std::to_string(m.cols()) + " columns applied to vector of dimension "
                             + std::to_string(x.dim()));
    }
    Rational acc;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto const row = m.row(r);
        if (row.size() == 1) {
            if (!x[row[0].col].is_zero()) {
                return false;
            }
            continue;
        }
        acc = Rational();
        for (auto const& e : row) {
            acc.add_product(e.value, x[e.col]);
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace detail {

enum KeyTag : unsigned char { key_zero = 0, key_int = 1, key_frac = 2, key_big = 3 };

inline void put_varint(std::string& out, std::uint64_t v)
{
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

inline std::uint64_t zigzag(std::int64_t v) noexcept
{
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

inline std::int64_t unzigzag(std::uint64_t v) noexcept
{
    return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

inline std::uint64_t get_varint(std::string_view key, std::size_t& pos)
{
    std::uint64_t v = 0;
    for (int shift = 0; pos < key.size(); shift += 7) {
        auto const byte = static_cast<unsigned char>(key[pos++]);
        v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) {
            return v;
        }
    }
    throw InvalidArgument("truncated vector key");
}

} // namespace detail

/// Byte string that identifies a vector: equal keys iff entry-wise equal vectors.
///
/// Each entry is a tag byte followed by a self-delimiting payload, so the
/// encoding is prefix-free and decodable (see vector_from_key).
inline std::string vector_canonical_key(RationalVector const& x)
{
    std::string key;
    key.reserve(x.dim() * 2);
    for (auto const& r : x) {
        if (r.is_zero()) {
            key.push_back(detail::key_zero);
        } else if (r.is_small() && r.small_den() == 1) {
            key.push_back(detail::key_int);
            detail::put_varint(key, detail::zigzag(r.small_num()));
        } else if (r.is_small()) {
            key.push_back(detail::key_frac);
            detail::put_varint(key, detail::zigzag(r.small_num()));
            detail::put_varint(key, static_cast<std::uint64_t>(r.small_den()));
        } else {
            std::string const text = r.to_string();
            key.push_back(detail::key_big);
            detail::put_varint(key, text.size());
            key += text;
        }
    }
    return key;
}

inline RationalVector vector_from_key(std::string_view key)
{
    std::vector<Rational> entries;
    std::size_t pos = 0;
    while (pos < key.size()) {
        auto const tag = static_cast<unsigned char>(key[pos++]);
        switch (tag) {
        case detail::key_zero: entries.emplace_back(); break;
        case detail::key_int: entries.emplace_back(detail::unzigzag(detail::get_varint(key, pos))); break;
        case detail::key_frac: {
            auto const num = detail::unzigzag(detail::get_varint(key, pos));
            auto const den = static_cast<std::int64_t>(detail::get_varint(key, pos));
            entries.push_back(Rational::make(num, den));
            break;
        }
        case detail::key_big: {
            auto const len = detail::get_varint(key, pos);
            if (pos + len > key.size()) {
                throw InvalidArgument("truncated vector key");
            }
            auto value = Rational::from_string(key.substr(pos, len));
            if (!value) {
                throw InvalidArgument("corrupt vector key");
            }
            entries.push_back(std::move(*value));
            pos += len;
            break;
        }
        default: throw InvalidArgument("corrupt vector key");
        }
    }
    return RationalVector(std::move(entries));
}

} // namespace vest
