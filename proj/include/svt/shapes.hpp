#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "svt/bigint.hpp"

namespace svt {

// Weakly decreasing nonnegative parts, stored without trailing zeros, so
// structural equality identifies (l1,...,lr) with (l1,...,lr,0).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 1-based row; rows past the length read as 0.
    int part(int row) const;
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& mu) const;
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Matrix convention, 1-based: row grows downward, col grows to the right.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Skew diagram outer/inner; a plain partition embeds with empty inner.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const { return outer_.size() - inner_.size(); }
    bool contains(Cell c) const;
    int row_count() const { return outer_.length(); }
    int width() const { return outer_.part(1); }
    std::vector<Cell> cells_row_major() const;
    std::vector<Cell> cells_column_major() const;
    // Position of a cell in row-major order, -1 when outside the shape.
    int row_major_index(Cell c) const;
    int column_height(int col) const;
    int max_column_height() const;

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

int hook_length(const Partition& lambda, Cell cell);

// Product of (n+j-i)/h_ij over the cells of lambda, as an exact integer.
// Returns 0 when some numerator factor is <= 0 (no tableau exists).
BigInt sst_count_hook(const Partition& lambda, int n);

// Text encoding: outer parts comma-separated, optional "/" plus inner parts,
// e.g. "5,3,3,2/3,1,1". "()" or an empty string is the empty partition.
Partition parse_partition(std::string_view text);
SkewShape parse_shape(std::string_view text);
std::string format_partition(const Partition& p);
std::string format_shape(const SkewShape& shape);

}  // namespace svt
