#include "morphoprot/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "morphoprot/cache.hpp"
#include "morphoprot/errors.hpp"
#include "morphoprot/parallel.hpp"
#include "morphoprot/version.hpp"

namespace morphoprot {

using ordered_json = nlohmann::ordered_json;

GrowthResult connect_slice(const BinaryGrid& grid, const StructuringElement& growth_se,
                           int step, int max_iters) {
    if (max_iters < 1) throw std::invalid_argument("connect_slice: max_iters must be >= 1");
    GrowthResult res;
    res.grid = grid;
    if (connected_components(res.grid, 8) <= 1) return res; // includes the empty grid

    const StructuringElement step_se = scale_se(growth_se, step);
    for (int k = 1; k <= max_iters; ++k) {
        res.grid = dilate(res.grid, step_se);
        res.iters = k;
        if (connected_components(res.grid, 8) <= 1) return res;
    }
    res.hit_max = true;
    return res;
}

StackedSkeleton stacked_skeleton(const StructureModel& model, const Method1Params& params,
                                 int threads) {
    const PointCloud cloud = normalize(select_points(model, params.selector));
    const std::vector<Slice> slices = slice_cloud(cloud, params.slice_thickness);
    const StructuringElement growth = params.growth_se.make();
    const StructuringElement skeleton_se = params.skeleton_se.make();

    StackedSkeleton out;
    out.slices.resize(slices.size());
    out.slice_rasters.resize(slices.size());
    std::vector<BinaryGrid> skeletons(slices.size());

    parallel_for(slices.size(), threads, [&](std::size_t i) {
        const Slice& slice = slices[i];
        BinaryGrid raster = rasterize(slice.points, params.resolution, params.dot_radius);

        SliceRecord rec;
        rec.z_lo = slice.z_lo;
        rec.z_hi = slice.z_hi;
        rec.point_count = slice.points.size();
        rec.initial_components = connected_components(raster, 8);

        GrowthResult grown =
            connect_slice(raster, growth, params.growth_step, params.max_growth_iters);
        rec.growth_iters = grown.iters;
        rec.hit_max_growth = grown.hit_max;

        SkeletonDecomposition sk = skeletonize(grown.grid, skeleton_se);
        BinaryGrid merged(params.resolution, params.resolution);
        for (const auto& layer : sk.layers) merged |= layer.grid;
        rec.skeleton_layers = static_cast<int>(sk.layers.size());

        skeletons[i] = std::move(merged);
        out.slice_rasters[i] = std::move(raster);
        out.slices[i] = rec;
    });

    out.grid = BinaryGrid(params.resolution, params.resolution);
    for (const BinaryGrid& g : skeletons) out.grid |= g; // ordered reduction
    return out;
}

FractalSignature fractal_signature(const StructureModel& model, const Method1Params& params,
                                   int threads) {
    const StackedSkeleton stacked = stacked_skeleton(model, params, threads);
    if (stacked.grid.none()) throw EmptyGridError("stacked skeleton is empty");
    const BoxCountSeries series = box_counts(stacked.grid, params.effective_box_sizes());
    const BoxDimension dim = box_dimension(series);

    FractalSignature sig;
    sig.pdb_id = model.pdb_id;
    sig.d_p = dim.dimension;
    sig.r_squared = dim.r_squared;
    sig.slice_count = static_cast<int>(stacked.slices.size());
    sig.params = params;
    return sig;
}

double rho(const FractalSignature& a, const FractalSignature& b) {
    if (!(a.params == b.params)) throw ParamsMismatchError();
    return std::abs(a.d_p - b.d_p);
}

int delta_p_from_counts(const std::array<FaceCounts, 6>& faces) {
    int sum = 0;
    for (const auto& f : faces) sum += std::abs(f.count_source - f.count_target);
    return sum;
}

GeodesicProfile geodesic_profile(const StructureModel& source, const StructureModel& target,
                                 const Method2Params& params, int threads) {
    const PointCloud cs = normalize(select_points(source, params.selector));
    const PointCloud ct = normalize(select_points(target, params.selector));
    const FaceSet fs = project_faces(cs, params.resolution, params.stroke_radius, params.trace);
    const FaceSet ft = project_faces(ct, params.resolution, params.stroke_radius, params.trace);
    const StructuringElement se = params.geodesic_se.make();

    GeodesicProfile profile;
    profile.source_id = source.pdb_id;
    profile.target_id = target.pdb_id;
    profile.params = params;

    parallel_for(kFaceOrder.size(), threads, [&](std::size_t i) {
        const Face face = kFaceOrder[i];
        FaceCounts fc;
        fc.face = face;
        const BinaryGrid marker = fs[face] & ft[face];
        if (marker.none()) {
            // the iteration has nothing to grow from; flag the face and pin
            // both counts at the ceiling
            fc.empty_marker = true;
            fc.count_source = params.max_iters;
            fc.count_target = params.max_iters;
        } else {
            fc.count_source = geodesic_dilate(marker, fs[face], se, params.max_iters).count;
            fc.count_target = geodesic_dilate(marker, ft[face], se, params.max_iters).count;
        }
        profile.faces[i] = fc;
    });

    profile.delta_p = delta_p_from_counts(profile.faces);
    return profile;
}

ComparisonReport compare(const StructureModel& a, const StructureModel& b,
                         const Method1Params& m1, const Method2Params& m2,
                         const Thresholds& thresholds, int threads, SignatureCache* cache) {
    ComparisonReport rep;
    rep.ids = {a.pdb_id, b.pdb_id};
    rep.thresholds = thresholds;
    rep.m1 = m1;
    rep.m2 = m2;

    const FractalSignature sa = cache ? cache->get_or_compute(a, m1, threads)
                                      : fractal_signature(a, m1, threads);
    const FractalSignature sb = cache ? cache->get_or_compute(b, m1, threads)
                                      : fractal_signature(b, m1, threads);
    rep.d_p = {sa.d_p, sb.d_p};
    rep.rho_value = rho(sa, sb);
    rep.profile = geodesic_profile(a, b, m2, threads);
    rep.similar =
        rep.rho_value <= thresholds.rho && rep.profile.delta_p <= thresholds.delta_p;
    return rep;
}

// ---- serialization -----------------------------------------------------------

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json m1_json(const Method1Params& p) {
    return ordered_json{{"selector", selector_name(p.selector)},
                        {"slice_thickness", p.slice_thickness},
                        {"resolution", p.resolution},
                        {"dot_radius", p.dot_radius},
                        {"growth_se", p.growth_se.str()},
                        {"growth_step", p.growth_step},
                        {"max_growth_iters", p.max_growth_iters},
                        {"skeleton_se", p.skeleton_se.str()},
                        {"box_sizes", p.effective_box_sizes()}};
}

ordered_json m2_json(const Method2Params& p) {
    return ordered_json{{"selector", selector_name(p.selector)},
                        {"resolution", p.resolution},
                        {"stroke_radius", p.stroke_radius},
                        {"trace", p.trace},
                        {"geodesic_se", p.geodesic_se.str()},
                        {"max_iters", p.max_iters}};
}

ordered_json faces_json(const GeodesicProfile& profile) {
    ordered_json faces = ordered_json::array();
    for (const auto& f : profile.faces) {
        ordered_json entry{{"name", face_name(f.face)},
                           {"count_s", f.count_source},
                           {"count_t", f.count_target}};
        if (f.empty_marker) entry["empty_marker"] = true;
        faces.push_back(entry);
    }
    return faces;
}

} // namespace

std::string params_key(const Method1Params& p) {
    std::ostringstream key;
    key << "m1|sel=" << selector_name(p.selector) << "|th=" << format_double(p.slice_thickness)
        << "|res=" << p.resolution << "|dot=" << p.dot_radius
        << "|grow=" << p.growth_se.str() << "x" << p.growth_step
        << "|maxg=" << p.max_growth_iters << "|skel=" << p.skeleton_se.str() << "|boxes=";
    for (int r : p.effective_box_sizes()) key << r << ',';
    return key.str();
}

std::string params_hash(const Method1Params& p) {
    // FNV-1a 64
    const std::string key = params_key(p);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string signature_json(const FractalSignature& sig) {
    ordered_json j{{"tool", kToolName},
                   {"version", kVersion},
                   {"id", sig.pdb_id},
                   {"d_p", sig.d_p},
                   {"r_squared", sig.r_squared},
                   {"slice_count", sig.slice_count},
                   {"params", ordered_json{{"method1", m1_json(sig.params)}}}};
    return j.dump(2) + "\n";
}

std::string profile_json(const GeodesicProfile& profile) {
    ordered_json j{{"tool", kToolName},
                   {"version", kVersion},
                   {"ids", {profile.source_id, profile.target_id}},
                   {"faces", faces_json(profile)},
                   {"delta_p", profile.delta_p},
                   {"params", ordered_json{{"method2", m2_json(profile.params)}}}};
    return j.dump(2) + "\n";
}

std::string report_json(const ComparisonReport& report) {
    ordered_json j{{"tool", kToolName},
                   {"version", kVersion},
                   {"ids", {report.ids[0], report.ids[1]}},
                   {"d_p", {report.d_p[0], report.d_p[1]}},
                   {"rho", report.rho_value},
                   {"faces", faces_json(report.profile)},
                   {"delta_p", report.profile.delta_p},
                   {"verdict", report.similar ? "similar" : "dissimilar"},
                   {"thresholds", ordered_json{{"rho", report.thresholds.rho},
                                               {"delta_p", report.thresholds.delta_p}}},
                   {"params", ordered_json{{"method1", m1_json(report.m1)},
                                           {"method2", m2_json(report.m2)}}}};
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "id_a,d_p_a,id_b,d_p_b,rho,delta_p,verdict\n";
}

std::string report_csv_row(const ComparisonReport& report) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%.6e,%s,%.6e,%.6g,%d,%s\n", report.ids[0].c_str(),
                  report.d_p[0], report.ids[1].c_str(), report.d_p[1], report.rho_value,
                  report.profile.delta_p, report.similar ? "similar" : "dissimilar");
    return buf;
}

} // namespace morphoprot
