#pragma once

#include <array>
#include <string>
#include <vector>

namespace morphoprot {

struct Atom {
    int serial = 0;
    std::string name;         // e.g. "CA"
    std::string residue_name; // 3-char code
    char chain_id = ' ';
    int residue_seq = 0;
    double x = 0, y = 0, z = 0; // Angstrom
    bool is_hetero = false;
};

struct StructureModel {
    std::string pdb_id = "local";
    std::vector<Atom> atoms; // file order, MODEL 1 only
};

enum class Frame { Angstrom, Normalized };

struct PointCloud {
    std::vector<std::array<double, 3>> points;
    Frame frame = Frame::Angstrom;
};

enum class Selector { AllAtoms, BackboneCa };

const char* selector_name(Selector s);
Selector selector_from_name(const std::string& name);

/// AllAtoms keeps every atom of the model; BackboneCa keeps atoms named "CA"
/// with is_hetero=false, in file order. Throws EmptySelectionError when
/// nothing matches.
PointCloud select_points(const StructureModel& model, Selector selector);

/// Centers on the centroid and scales all three axes by one factor so the
/// largest |coordinate| becomes 1. A degenerate cloud (single point, or all
/// points coincident) maps to the origin.
PointCloud normalize(const PointCloud& cloud);

} // namespace morphoprot
