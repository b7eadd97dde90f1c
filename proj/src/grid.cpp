#include "morphoprot/grid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "morphoprot/errors.hpp"

namespace morphoprot {

BinaryGrid::BinaryGrid(int width, int height)
    : width_(width), height_(height), words_per_row_((width + 63) / 64) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("BinaryGrid dimensions must be positive");
    words_.assign(static_cast<std::size_t>(words_per_row_) * height_, 0);
}

bool BinaryGrid::get(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    const std::size_t idx = static_cast<std::size_t>(y) * words_per_row_ + (x >> 6);
    return (words_[idx] >> (x & 63)) & 1u;
}

void BinaryGrid::set(int x, int y, bool value) {
    assert(x >= 0 && y >= 0 && x < width_ && y < height_);
    const std::size_t idx = static_cast<std::size_t>(y) * words_per_row_ + (x >> 6);
    const std::uint64_t mask = std::uint64_t{1} << (x & 63);
    if (value)
        words_[idx] |= mask;
    else
        words_[idx] &= ~mask;
}

std::size_t BinaryGrid::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void BinaryGrid::clear_padding() {
    const int tail_bits = width_ & 63;
    if (tail_bits == 0) return;
    const std::uint64_t mask = (std::uint64_t{1} << tail_bits) - 1;
    for (int y = 0; y < height_; ++y)
        words_[static_cast<std::size_t>(y) * words_per_row_ + (words_per_row_ - 1)] &= mask;
}

BinaryGrid BinaryGrid::translated(int dx, int dy) const {
    BinaryGrid out(width_, height_);
    if (std::abs(dx) >= width_ || std::abs(dy) >= height_) return out;

    const int word_shift = std::abs(dx) >> 6;
    const int bit_shift = std::abs(dx) & 63;
    const int wpr = words_per_row_;

    for (int y = 0; y < height_; ++y) {
        const int sy = y - dy;
        if (sy < 0 || sy >= height_) continue;
        const std::uint64_t* src = &words_[static_cast<std::size_t>(sy) * wpr];
        std::uint64_t* dst = &out.words_[static_cast<std::size_t>(y) * wpr];
        if (dx >= 0) {
            // content moves toward higher x: multiword left shift
            for (int w = wpr - 1; w >= 0; --w) {
                const int s = w - word_shift;
                std::uint64_t v = 0;
                if (s >= 0) {
                    v = src[s] << bit_shift;
                    if (bit_shift != 0 && s - 1 >= 0) v |= src[s - 1] >> (64 - bit_shift);
                }
                dst[w] = v;
            }
        } else {
            // content moves toward lower x: multiword right shift
            for (int w = 0; w < wpr; ++w) {
                const int s = w + word_shift;
                std::uint64_t v = 0;
                if (s < wpr) {
                    v = src[s] >> bit_shift;
                    if (bit_shift != 0 && s + 1 < wpr) v |= src[s + 1] << (64 - bit_shift);
                }
                dst[w] = v;
            }
        }
    }
    out.clear_padding();
    return out;
}

BinaryGrid BinaryGrid::mirrored_horizontal() const {
    BinaryGrid out(width_, height_);
    for (int y = 0; y < height_; ++y) {
        const std::uint64_t* src = &words_[static_cast<std::size_t>(y) * words_per_row_];
        for (int w = 0; w < words_per_row_; ++w) {
            std::uint64_t bits = src[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                out.set(width_ - 1 - (w * 64 + b), y);
            }
        }
    }
    return out;
}

BinaryGrid BinaryGrid::complemented() const {
    BinaryGrid out(width_, height_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.clear_padding();
    return out;
}

BinaryGrid& BinaryGrid::operator|=(const BinaryGrid& other) {
    if (!same_shape(other)) throw DimensionMismatchError();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BinaryGrid& BinaryGrid::operator&=(const BinaryGrid& other) {
    if (!same_shape(other)) throw DimensionMismatchError();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BinaryGrid& BinaryGrid::subtract(const BinaryGrid& other) {
    if (!same_shape(other)) throw DimensionMismatchError();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool BinaryGrid::operator==(const BinaryGrid& other) const {
    return same_shape(other) && words_ == other.words_;
}

bool BinaryGrid::subset_of(const BinaryGrid& other) const {
    if (!same_shape(other)) throw DimensionMismatchError();
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

// ---- structuring elements ---------------------------------------------------

bool StructuringElement::contains_origin() const {
    for (const auto& [dx, dy] : offsets)
        if (dx == 0 && dy == 0) return true;
    return false;
}

int StructuringElement::radius() const {
    int r = 0;
    for (const auto& [dx, dy] : offsets) r = std::max({r, std::abs(dx), std::abs(dy)});
    return r;
}

const char* se_shape_name(SeShape shape) {
    switch (shape) {
    case SeShape::Square: return "square";
    case SeShape::Disk: return "disk";
    case SeShape::Cross: return "cross";
    }
    return "?";
}

SeShape se_shape_from_name(const std::string& name) {
    if (name == "square") return SeShape::Square;
    if (name == "disk") return SeShape::Disk;
    if (name == "cross") return SeShape::Cross;
    throw std::invalid_argument("unknown structuring element shape: " + name);
}

std::string SeSpec::str() const {
    return std::string(se_shape_name(shape)) + ":" + std::to_string(size);
}

SeSpec SeSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    SeSpec spec;
    spec.shape = se_shape_from_name(text.substr(0, colon));
    if (colon != std::string::npos) {
        const std::string num = text.substr(colon + 1);
        spec.size = std::atoi(num.c_str());
        if (spec.size < 1) throw std::invalid_argument("bad structuring element size: " + text);
    }
    return spec;
}

StructuringElement make_se(SeShape shape, int size) {
    if (size < 1) throw UnsupportedSizeError("structuring element size must be >= 1");
    StructuringElement se;
    switch (shape) {
    case SeShape::Square:
        for (int dy = -size; dy <= size; ++dy)
            for (int dx = -size; dx <= size; ++dx) se.offsets.emplace_back(dx, dy);
        break;
    case SeShape::Disk:
        for (int dy = -size; dy <= size; ++dy)
            for (int dx = -size; dx <= size; ++dx)
                if (dx * dx + dy * dy <= size * size) se.offsets.emplace_back(dx, dy);
        break;
    case SeShape::Cross:
        if (size != 1) throw UnsupportedSizeError("cross element supports size 1 only");
        se.offsets = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        break;
    }
    return se;
}

StructuringElement scale_se(const StructuringElement& se, int n) {
    if (n < 0) throw std::invalid_argument("scale_se: n must be >= 0");
    std::set<std::pair<int, int>> acc = {{0, 0}};
    for (int i = 0; i < n; ++i) {
        std::set<std::pair<int, int>> next;
        for (const auto& [ax, ay] : acc)
            for (const auto& [bx, by] : se.offsets) next.emplace(ax + bx, ay + by);
        acc = std::move(next);
    }
    StructuringElement out;
    out.offsets.assign(acc.begin(), acc.end());
    return out;
}

StructuringElement reflect_se(const StructuringElement& se) {
    StructuringElement out;
    out.offsets.reserve(se.offsets.size());
    for (const auto& [dx, dy] : se.offsets) out.offsets.emplace_back(-dx, -dy);
    return out;
}

// ---- connected components ---------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

struct Run {
    int begin, end; // half-open column range
    int label;
};

// Extract maximal horizontal runs of set pixels from one packed row.
void extract_runs(const std::uint64_t* row, int width, int wpr, std::vector<Run>& out) {
    out.clear();
    int x = 0;
    while (x < width) {
        // find next set bit at or after x
        int w = x >> 6;
        std::uint64_t bits = row[w] & (~std::uint64_t{0} << (x & 63));
        while (bits == 0 && ++w < wpr) bits = row[w];
        if (w >= wpr) break;
        const int start = w * 64 + std::countr_zero(bits);
        if (start >= width) break;
        // find next clear bit after start
        int cw = start >> 6;
        std::uint64_t inv = ~row[cw] & (~std::uint64_t{0} << (start & 63));
        while (inv == 0 && ++cw < wpr) inv = ~row[cw];
        int end = (cw >= wpr) ? wpr * 64 : cw * 64 + std::countr_zero(inv);
        end = std::min(end, width);
        out.push_back({start, end, -1});
        x = end + 1;
    }
}

} // namespace

int connected_components(const BinaryGrid& grid, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw std::invalid_argument("connectivity must be 4 or 8");
    // Run-based Hoshen-Kopelman: label runs per row, merge runs that touch
    // runs of the previous row. Under 8-connectivity diagonal contact counts,
    // which widens the overlap window by one column on each side.
    const int slack = (connectivity == 8) ? 1 : 0;
    UnionFind uf;
    std::vector<Run> prev, cur;
    for (int y = 0; y < grid.height(); ++y) {
        extract_runs(&grid.words()[static_cast<std::size_t>(y) * grid.words_per_row()],
                     grid.width(), grid.words_per_row(), cur);
        std::size_t p = 0;
        for (auto& run : cur) {
            run.label = uf.make();
            while (p < prev.size() && prev[p].end + slack <= run.begin) ++p;
            for (std::size_t q = p; q < prev.size() && prev[q].begin < run.end + slack; ++q)
                uf.unite(run.label, prev[q].label);
        }
        std::swap(prev, cur);
    }
    int count = 0;
    for (int i = 0; i < static_cast<int>(uf.parent.size()); ++i)
        if (uf.find(i) == i) ++count;
    return count;
}

} // namespace morphoprot
