#pragma once

#include <vector>

#include "morphoprot/grid.hpp"

namespace morphoprot {

/// Pixel p survives iff p+s is set for every offset s. Outside the grid is
/// background, so an element poking past the border erodes the pixel away.
BinaryGrid erode(const BinaryGrid& a, const StructuringElement& se);

/// Union of the input translated by every offset, clipped to the grid.
BinaryGrid dilate(const BinaryGrid& a, const StructuringElement& se);

BinaryGrid open(const BinaryGrid& a, const StructuringElement& se);
BinaryGrid close(const BinaryGrid& a, const StructuringElement& se);

/// Multi-scale skeleton layers: layer n holds the pixels of the n-fold
/// erosion that vanish under one more opening. The union of all layers,
/// each re-dilated n times, rebuilds the source shape exactly.
struct SkeletonDecomposition {
    struct Layer {
        int n;
        BinaryGrid grid;
    };
    std::vector<Layer> layers; // scales 0..max_n in order
    StructuringElement se;
    int width = 0, height = 0; // source grid dimensions
    int max_n = -1;
    bool empty_input = false;
};

/// Requires an origin-containing element. An all-background input yields a
/// flagged empty decomposition rather than an error: fully opened slices can
/// legitimately vanish.
SkeletonDecomposition skeletonize(const BinaryGrid& a, const StructuringElement& se);

/// Exact inverse of skeletonize for the element stored in the decomposition.
BinaryGrid reconstruct(const SkeletonDecomposition& sk);

struct GeodesicResult {
    BinaryGrid grid;
    int count = 0;       // smallest k >= 1 with delta_k == delta_{k-1}
    bool converged = true;
};

/// Iterates delta_k = dilate(delta_{k-1}) & mask from delta_0 = marker & mask
/// until the fixed point; stops early after max_iters steps (converged=false).
GeodesicResult geodesic_dilate(const BinaryGrid& marker, const BinaryGrid& mask,
                               const StructuringElement& se, int max_iters = 1 << 20);

} // namespace morphoprot
