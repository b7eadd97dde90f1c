#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "morphoprot/fractal.hpp"
#include "morphoprot/grid.hpp"
#include "morphoprot/model.hpp"
#include "morphoprot/morphology.hpp"
#include "morphoprot/raster.hpp"

namespace morphoprot {

struct Method1Params {
    Selector selector = Selector::AllAtoms;
    double slice_thickness = 0.1;
    int resolution = 512;
    int dot_radius = 1;
    SeSpec growth_se{SeShape::Disk, 1};
    int growth_step = 1;
    int max_growth_iters = 64;
    SeSpec skeleton_se{SeShape::Square, 1};
    std::vector<int> box_sizes; // empty: dyadic default for the resolution

    std::vector<int> effective_box_sizes() const {
        return box_sizes.empty() ? default_box_sizes(resolution) : box_sizes;
    }
    bool operator==(const Method1Params&) const = default;
};

struct Method2Params {
    Selector selector = Selector::BackboneCa;
    int resolution = 256;
    int stroke_radius = 2;
    bool trace = true;
    SeSpec geodesic_se{SeShape::Square, 1};
    int max_iters = 10000;

    bool operator==(const Method2Params&) const = default;
};

struct Thresholds {
    double rho = 0.008;
    int delta_p = 12;
};

/// Grow a slice raster until it forms at most one 8-connected component:
/// one dilation by the growth element scaled to `step` per iteration, so
/// after k rounds the dots have grown by the element scaled k*step times.
/// An already-connected (or empty) grid comes back unchanged with iters = 0.
struct GrowthResult {
    BinaryGrid grid;
    int iters = 0;
    bool hit_max = false;
};
GrowthResult connect_slice(const BinaryGrid& grid, const StructuringElement& growth_se,
                           int step, int max_iters);

struct SliceRecord {
    double z_lo = 0, z_hi = 0;
    std::size_t point_count = 0;
    int initial_components = 0;
    int growth_iters = 0;
    bool hit_max_growth = false;
    int skeleton_layers = 0;
};

struct StackedSkeleton {
    BinaryGrid grid;                      // OR of all per-slice skeletons
    std::vector<SliceRecord> slices;      // non-empty slices, ascending z
    std::vector<BinaryGrid> slice_rasters; // raw dot rasters, for rendering
};

/// normalize -> slice -> rasterize -> grow to one component -> skeletonize,
/// union the skeleton layers per slice, then OR across slices.
StackedSkeleton stacked_skeleton(const StructureModel& model, const Method1Params& params,
                                 int threads = 1);

struct FractalSignature {
    std::string pdb_id;
    double d_p = 0;
    double r_squared = 0;
    int slice_count = 0;
    Method1Params params;
};

FractalSignature fractal_signature(const StructureModel& model, const Method1Params& params,
                                   int threads = 1);

/// Absolute difference of the two dimensions. The signatures must carry
/// identical parameters.
double rho(const FractalSignature& a, const FractalSignature& b);

struct FaceCounts {
    Face face = Face::Front;
    int count_source = 0;
    int count_target = 0;
    bool empty_marker = false; // marker intersection was empty on this face
};

struct GeodesicProfile {
    std::string source_id, target_id;
    std::array<FaceCounts, 6> faces; // front, left, right, top, bottom, back
    int delta_p = 0;
    Method2Params params;
};

int delta_p_from_counts(const std::array<FaceCounts, 6>& faces);

/// Render both structures' six faces at the same resolution (each normalized
/// independently); per face, geodesically dilate the intersection marker
/// inside each face and record the two iteration counts. A face whose marker
/// is empty is flagged and contributes max_iters to both counts.
GeodesicProfile geodesic_profile(const StructureModel& source, const StructureModel& target,
                                 const Method2Params& params, int threads = 1);

struct ComparisonReport {
    std::array<std::string, 2> ids;
    std::array<double, 2> d_p;
    double rho_value = 0;
    GeodesicProfile profile;
    bool similar = false;
    Thresholds thresholds;
    Method1Params m1;
    Method2Params m2;
};

class SignatureCache;

/// Both signatures, the geodesic profile, and the verdict:
/// similar iff rho <= thresholds.rho and delta_p <= thresholds.delta_p.
ComparisonReport compare(const StructureModel& a, const StructureModel& b,
                         const Method1Params& m1, const Method2Params& m2,
                         const Thresholds& thresholds = {}, int threads = 1,
                         SignatureCache* cache = nullptr);

// ---- serialization -----------------------------------------------------------

/// Canonical key of the parameters, and its FNV-1a hash (cache file names).
std::string params_key(const Method1Params& p);
std::string params_hash(const Method1Params& p);

std::string signature_json(const FractalSignature& sig);
std::string profile_json(const GeodesicProfile& profile);
std::string report_json(const ComparisonReport& report);
std::string report_csv_header();
std::string report_csv_row(const ComparisonReport& report);

} // namespace morphoprot
