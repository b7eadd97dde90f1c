#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace morphoprot {

/// 2D binary raster. Rows are packed into 64-bit words, bit x of a row living
/// in word x/64 at bit position x%64. Pixels outside the grid are background;
/// operations that would write outside the grid clip.
class BinaryGrid {
public:
    BinaryGrid() = default;
    BinaryGrid(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    int words_per_row() const { return words_per_row_; }

    bool get(int x, int y) const;
    void set(int x, int y, bool value = true);

    std::size_t popcount() const;
    bool none() const { return popcount() == 0; }
    bool same_shape(const BinaryGrid& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// Shift every set pixel by (dx, dy); pixels leaving the grid are dropped.
    BinaryGrid translated(int dx, int dy) const;

    /// Flip about the vertical axis: (x, y) -> (width-1-x, y).
    BinaryGrid mirrored_horizontal() const;

    BinaryGrid complemented() const;

    BinaryGrid& operator|=(const BinaryGrid& other);
    BinaryGrid& operator&=(const BinaryGrid& other);
    /// Set difference: clears every pixel that is set in `other`.
    BinaryGrid& subtract(const BinaryGrid& other);

    friend BinaryGrid operator|(BinaryGrid a, const BinaryGrid& b) { return a |= b; }
    friend BinaryGrid operator&(BinaryGrid a, const BinaryGrid& b) { return a &= b; }

    bool operator==(const BinaryGrid& other) const;
    bool operator!=(const BinaryGrid& other) const { return !(*this == other); }

    /// True when every set pixel of this grid is also set in `other`.
    bool subset_of(const BinaryGrid& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void clear_padding();

    int width_ = 0;
    int height_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Finite set of (dx, dy) offsets probing a shape. All built-in elements
/// contain the origin.
struct StructuringElement {
    std::vector<std::pair<int, int>> offsets;

    std::size_t size() const { return offsets.size(); }
    bool contains_origin() const;
    /// Largest Chebyshev distance of any offset from the origin.
    int radius() const;
};

enum class SeShape { Square, Disk, Cross };

const char* se_shape_name(SeShape shape);
SeShape se_shape_from_name(const std::string& name);

/// square k: all |dx|,|dy| <= k. disk r: all dx^2+dy^2 <= r^2. cross: the
/// 4-neighbourhood plus origin (size 1 only).
StructuringElement make_se(SeShape shape, int size);

/// Shape + size pair, written "shape:size" (e.g. "square:1", "disk:2").
struct SeSpec {
    SeShape shape = SeShape::Square;
    int size = 1;

    StructuringElement make() const { return make_se(shape, size); }
    std::string str() const;
    static SeSpec parse(const std::string& text);
    bool operator==(const SeSpec&) const = default;
};

/// n-fold Minkowski self-sum; n = 0 yields the origin-only element.
StructuringElement scale_se(const StructuringElement& se, int n);

/// Offsets negated. Built-in elements are symmetric, so this is a no-op for them.
StructuringElement reflect_se(const StructuringElement& se);

/// Number of maximal foreground regions under 4- or 8-connectivity.
int connected_components(const BinaryGrid& grid, int connectivity);

} // namespace morphoprot
