#include "morphoprot/morphology.hpp"

#include <stdexcept>

#include "morphoprot/errors.hpp"

namespace morphoprot {

BinaryGrid erode(const BinaryGrid& a, const StructuringElement& se) {
    if (se.offsets.empty()) throw std::invalid_argument("erode: empty structuring element");
    BinaryGrid out = a.translated(-se.offsets[0].first, -se.offsets[0].second);
    for (std::size_t i = 1; i < se.offsets.size(); ++i)
        out &= a.translated(-se.offsets[i].first, -se.offsets[i].second);
    return out;
}

BinaryGrid dilate(const BinaryGrid& a, const StructuringElement& se) {
    if (se.offsets.empty()) throw std::invalid_argument("dilate: empty structuring element");
    BinaryGrid out = a.translated(se.offsets[0].first, se.offsets[0].second);
    for (std::size_t i = 1; i < se.offsets.size(); ++i)
        out |= a.translated(se.offsets[i].first, se.offsets[i].second);
    return out;
}

BinaryGrid open(const BinaryGrid& a, const StructuringElement& se) {
    return dilate(erode(a, se), se);
}

BinaryGrid close(const BinaryGrid& a, const StructuringElement& se) {
    return erode(dilate(a, se), se);
}

SkeletonDecomposition skeletonize(const BinaryGrid& a, const StructuringElement& se) {
    if (!se.contains_origin())
        throw std::invalid_argument("skeletonize: element must contain the origin");
    SkeletonDecomposition sk;
    sk.se = se;
    sk.width = a.width();
    sk.height = a.height();
    if (a.none()) {
        sk.empty_input = true;
        return sk;
    }
    // eroded_n is the n-fold erosion; iterating by se equals eroding once by
    // scale_se(se, n) for origin-containing elements.
    BinaryGrid eroded = a;
    int n = 0;
    while (true) {
        BinaryGrid next = erode(eroded, se);
        BinaryGrid layer = eroded;
        layer.subtract(dilate(next, se)); // eroded \ open(eroded, se)
        sk.layers.push_back({n, std::move(layer)});
        if (next.none()) break;
        eroded = std::move(next);
        ++n;
    }
    sk.max_n = n;
    return sk;
}

BinaryGrid reconstruct(const SkeletonDecomposition& sk) {
    if (sk.layers.empty())
        return sk.width > 0 ? BinaryGrid(sk.width, sk.height) : BinaryGrid();
    // From the deepest layer outward: dilating the running union once per
    // level realizes every Sk_n (+) nS term without forming nS explicitly.
    BinaryGrid acc = sk.layers.back().grid;
    for (auto it = sk.layers.rbegin() + 1; it != sk.layers.rend(); ++it) {
        acc = dilate(acc, sk.se);
        acc |= it->grid;
    }
    return acc;
}

GeodesicResult geodesic_dilate(const BinaryGrid& marker, const BinaryGrid& mask,
                               const StructuringElement& se, int max_iters) {
    if (!marker.same_shape(mask)) throw DimensionMismatchError();
    GeodesicResult res;
    res.grid = marker & mask;
    for (int k = 1; k <= max_iters; ++k) {
        BinaryGrid next = dilate(res.grid, se);
        next &= mask;
        if (next == res.grid) {
            res.count = k;
            return res;
        }
        res.grid = std::move(next);
    }
    res.count = max_iters;
    res.converged = false;
    return res;
}

} // namespace morphoprot
