#pragma once

#include <array>
#include <string>
#include <vector>

#include "morphoprot/grid.hpp"
#include "morphoprot/model.hpp"

namespace morphoprot {

struct Slice {
    double z_lo = 0, z_hi = 0; // [z_lo, z_hi); the last slice is closed at +1
    std::vector<std::array<double, 2>> points;
};

/// Partition normalized z in [-1, 1] into contiguous intervals of the given
/// thickness and bin the cloud's points; only non-empty slices are returned,
/// ascending in z.
std::vector<Slice> slice_cloud(const PointCloud& cloud, double thickness);

/// Map a normalized coordinate in [-1, 1] to a pixel index, clamped to the
/// grid: floor((v+1)/2 * resolution).
int pixel_index(double v, int resolution);

/// Plot points of [-1,1]^2 onto a resolution x resolution grid; each dot is
/// grown by a disk of dot_radius pixels when dot_radius > 0.
BinaryGrid rasterize(const std::vector<std::array<double, 2>>& points, int resolution,
                     int dot_radius);

enum class Face { Front, Left, Right, Top, Bottom, Back };
inline constexpr std::array<Face, 6> kFaceOrder = {Face::Front, Face::Left, Face::Right,
                                                   Face::Top, Face::Bottom, Face::Back};
const char* face_name(Face f);

struct FaceSet {
    std::array<BinaryGrid, 6> faces; // indexed by Face
    const BinaryGrid& operator[](Face f) const { return faces[static_cast<int>(f)]; }
    BinaryGrid& operator[](Face f) { return faces[static_cast<int>(f)]; }
};

/// Orthographic projections of a normalized cloud onto the six axis-aligned
/// views. The back face is the front mirrored about the vertical axis. With
/// trace=true consecutive points are joined by Bresenham segments (backbone
/// renderings); each mark is grown by a disk of stroke_radius pixels.
FaceSet project_faces(const PointCloud& cloud, int resolution, int stroke_radius, bool trace);

} // namespace morphoprot
