#pragma once

#include <string>
#include <vector>

#include "morphoprot/grid.hpp"

namespace morphoprot {

struct BoxCountSeries {
    struct Entry {
        int r;             // box size in pixels
        std::size_t n_r;   // occupied r x r cells
    };
    std::vector<Entry> entries; // r strictly increasing
    int resolution = 0;         // grid side (max of width, height)

    std::string to_csv() const; // r, n_r, log(1/r), log(n_r)
};

/// Dyadic sizes {1, 2, 4, ..., side/4}; at least {1, 2, 4} for tiny grids.
std::vector<int> default_box_sizes(int side);

/// Count, for each size r, the aligned r x r cells (anchored at pixel (0,0),
/// the grid conceptually padded to a multiple of r) holding at least one set
/// pixel. Sizes must be strictly increasing powers of two, each <= side.
BoxCountSeries box_counts(const BinaryGrid& grid, const std::vector<int>& sizes);

struct BoxDimension {
    double dimension = 0;
    double r_squared = 1; // of the log-log regression
};

/// Least-squares slope of log n_r against log(1/r) over all entries.
BoxDimension box_dimension(const BoxCountSeries& series);

} // namespace morphoprot
