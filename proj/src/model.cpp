#include "morphoprot/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "morphoprot/errors.hpp"

namespace morphoprot {

const char* selector_name(Selector s) {
    return s == Selector::AllAtoms ? "all_atoms" : "backbone_ca";
}

Selector selector_from_name(const std::string& name) {
    if (name == "all_atoms" || name == "all") return Selector::AllAtoms;
    if (name == "backbone_ca" || name == "ca") return Selector::BackboneCa;
    throw std::invalid_argument("unknown selector: " + name);
}

PointCloud select_points(const StructureModel& model, Selector selector) {
    PointCloud cloud;
    cloud.frame = Frame::Angstrom;
    for (const Atom& a : model.atoms) {
        if (selector == Selector::BackboneCa && (a.name != "CA" || a.is_hetero)) continue;
        cloud.points.push_back({a.x, a.y, a.z});
    }
    if (cloud.points.empty())
        throw EmptySelectionError(std::string("selector ") + selector_name(selector) +
                                  " matched no atoms in " + model.pdb_id);
    return cloud;
}

// Accepts either frame so that re-normalizing is a no-op up to roundoff.
PointCloud normalize(const PointCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("normalize: empty cloud");

    std::array<double, 3> centroid = {0, 0, 0};
    for (const auto& p : cloud.points)
        for (int i = 0; i < 3; ++i) centroid[i] += p[i];
    for (int i = 0; i < 3; ++i) centroid[i] /= static_cast<double>(cloud.points.size());

    double max_abs = 0;
    for (const auto& p : cloud.points)
        for (int i = 0; i < 3; ++i) max_abs = std::max(max_abs, std::abs(p[i] - centroid[i]));

    PointCloud out;
    out.frame = Frame::Normalized;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points) {
        if (max_abs == 0) {
            out.points.push_back({0, 0, 0});
        } else {
            // dividing (not multiplying by a reciprocal) maps the extreme
            // coordinate to exactly +-1
            out.points.push_back({(p[0] - centroid[0]) / max_abs,
                                  (p[1] - centroid[1]) / max_abs,
                                  (p[2] - centroid[2]) / max_abs});
        }
    }
    return out;
}

} // namespace morphoprot
