#include "morphoprot/raster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "morphoprot/morphology.hpp"

namespace morphoprot {

std::vector<Slice> slice_cloud(const PointCloud& cloud, double thickness) {
    if (cloud.frame != Frame::Normalized)
        throw std::invalid_argument("slice_cloud: cloud must be normalized");
    if (!(thickness > 0 && thickness <= 2))
        throw std::invalid_argument("slice_cloud: thickness must be in (0, 2]");

    const int n = std::max(1, static_cast<int>(std::ceil(2.0 / thickness)));
    const auto lower = [&](int i) { return -1.0 + i * thickness; };

    std::map<int, Slice> bins;
    for (const auto& p : cloud.points) {
        const double z = p[2];
        int i = std::clamp(static_cast<int>(std::floor((z + 1.0) / thickness)), 0, n - 1);
        // the float index can land one interval off at boundaries; settle it
        // against the interval bounds so membership is exact
        while (i > 0 && z < lower(i)) --i;
        while (i < n - 1 && z >= lower(i + 1)) ++i;
        auto& slice = bins[i];
        if (slice.points.empty()) {
            slice.z_lo = lower(i);
            slice.z_hi = (i == n - 1) ? 1.0 : lower(i + 1);
        }
        slice.points.push_back({p[0], p[1]});
    }

    std::vector<Slice> out;
    out.reserve(bins.size());
    for (auto& [i, slice] : bins) out.push_back(std::move(slice));
    return out;
}

int pixel_index(double v, int resolution) {
    const int i = static_cast<int>(std::floor((v + 1.0) / 2.0 * resolution));
    return std::clamp(i, 0, resolution - 1);
}

namespace {

void grow_dots(BinaryGrid& grid, int radius) {
    if (radius > 0 && !grid.none()) grid = dilate(grid, make_se(SeShape::Disk, radius));
}

void draw_segment(BinaryGrid& grid, int x0, int y0, int x1, int y1) {
    // Bresenham
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        grid.set(x0, y0);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

BinaryGrid plot(const std::vector<std::array<double, 2>>& uv, int resolution, int radius,
                bool trace) {
    BinaryGrid grid(resolution, resolution);
    int px = 0, py = 0;
    bool have_prev = false;
    for (const auto& p : uv) {
        const int x = pixel_index(p[0], resolution);
        const int y = pixel_index(p[1], resolution);
        if (trace && have_prev)
            draw_segment(grid, px, py, x, y);
        else
            grid.set(x, y);
        px = x;
        py = y;
        have_prev = true;
    }
    grow_dots(grid, radius);
    return grid;
}

} // namespace

BinaryGrid rasterize(const std::vector<std::array<double, 2>>& points, int resolution,
                     int dot_radius) {
    if (resolution < 8) throw std::invalid_argument("rasterize: resolution must be >= 8");
    return plot(points, resolution, dot_radius, /*trace=*/false);
}

const char* face_name(Face f) {
    switch (f) {
    case Face::Front: return "front";
    case Face::Left: return "left";
    case Face::Right: return "right";
    case Face::Top: return "top";
    case Face::Bottom: return "bottom";
    case Face::Back: return "back";
    }
    return "?";
}

FaceSet project_faces(const PointCloud& cloud, int resolution, int stroke_radius, bool trace) {
    if (cloud.points.empty()) throw std::invalid_argument("project_faces: empty cloud");
    if (cloud.frame != Frame::Normalized)
        throw std::invalid_argument("project_faces: cloud must be normalized");

    // drop one axis per view; the back face is a mirror of the front
    const auto project = [&](int ui, int vi, double us, double vs) {
        std::vector<std::array<double, 2>> uv;
        uv.reserve(cloud.points.size());
        for (const auto& p : cloud.points) uv.push_back({us * p[ui], vs * p[vi]});
        return plot(uv, resolution, stroke_radius, trace);
    };

    FaceSet fs;
    fs[Face::Front] = project(0, 1, +1, +1);  // drop z
    fs[Face::Back] = fs[Face::Front].mirrored_horizontal();
    fs[Face::Right] = project(2, 1, -1, +1);  // drop x, view from +x
    fs[Face::Left] = project(2, 1, +1, +1);   // drop x, view from -x
    fs[Face::Top] = project(0, 2, +1, -1);    // drop y, view from +y
    fs[Face::Bottom] = project(0, 2, +1, +1); // drop y, view from -y
    return fs;
}

} // namespace morphoprot
