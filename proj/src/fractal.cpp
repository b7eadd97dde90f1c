#include "morphoprot/fractal.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morphoprot/errors.hpp"

namespace morphoprot {

std::string BoxCountSeries::to_csv() const {
    std::ostringstream out;
    out << "r,n_r,log_inv_r,log_n_r\n";
    for (const auto& e : entries)
        out << e.r << ',' << e.n_r << ',' << -std::log(static_cast<double>(e.r)) << ','
            << std::log(static_cast<double>(e.n_r)) << '\n';
    return out.str();
}

std::vector<int> default_box_sizes(int side) {
    std::vector<int> sizes;
    for (int r = 1; r <= std::max(4, side / 4); r *= 2) sizes.push_back(r);
    return sizes;
}

BoxCountSeries box_counts(const BinaryGrid& grid, const std::vector<int>& sizes) {
    if (grid.none()) throw EmptyGridError("box_counts: empty grid");
    const int side = std::max(grid.width(), grid.height());
    int prev = 0;
    for (int r : sizes) {
        if (r < 1 || !std::has_single_bit(static_cast<unsigned>(r)) || r > side)
            throw std::invalid_argument("box_counts: sizes must be powers of two <= side");
        if (r <= prev) throw std::invalid_argument("box_counts: sizes must strictly increase");
        prev = r;
    }

    BoxCountSeries series;
    series.resolution = side;
    for (int r : sizes) {
        const int cells_x = (grid.width() + r - 1) / r;
        const int cells_y = (grid.height() + r - 1) / r;
        std::vector<std::uint8_t> occupied(static_cast<std::size_t>(cells_x) * cells_y, 0);
        // mark the cell of every set pixel
        for (int y = 0; y < grid.height(); ++y) {
            const std::uint64_t* row =
                &grid.words()[static_cast<std::size_t>(y) * grid.words_per_row()];
            const int cy = y / r;
            for (int w = 0; w < grid.words_per_row(); ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    const int x = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    occupied[static_cast<std::size_t>(cy) * cells_x + x / r] = 1;
                }
            }
        }
        std::size_t n = 0;
        for (std::uint8_t o : occupied) n += o;
        series.entries.push_back({r, n});
    }
    return series;
}

BoxDimension box_dimension(const BoxCountSeries& series) {
    if (series.entries.size() < 3)
        throw TooFewScalesError("box_dimension: need >= 3 scales, have " +
                                std::to_string(series.entries.size()));
    const std::size_t n = series.entries.size();
    double sx = 0, sy = 0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = -std::log(static_cast<double>(series.entries[i].r)); // log(1/r)
        ys[i] = std::log(static_cast<double>(series.entries[i].n_r));
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    BoxDimension out;
    out.dimension = sxy / sxx;
    // constant counts fit a flat line exactly
    out.r_squared = (syy == 0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return out;
}

} // namespace morphoprot
