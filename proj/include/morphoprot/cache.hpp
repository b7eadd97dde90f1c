#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "morphoprot/pipeline.hpp"

namespace morphoprot {

/// Memoizes fractal signatures keyed by (pdb_id, params hash). With a backing
/// directory, entries persist across runs as small JSON files. Concurrent
/// readers share the in-memory map; writes are serialized (and disk writes go
/// through temp + rename).
class SignatureCache {
public:
    SignatureCache() = default;
    explicit SignatureCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<FractalSignature> get(const std::string& pdb_id, const Method1Params& params);
    void put(const FractalSignature& sig);

    FractalSignature get_or_compute(const StructureModel& model, const Method1Params& params,
                                    int threads = 1);

    std::size_t hits() const { return hits_.load(); }
    std::size_t computations() const { return computations_.load(); }

private:
    std::string key(const std::string& pdb_id, const Method1Params& params) const;
    std::filesystem::path file_for(const std::string& key) const;

    mutable std::shared_mutex mutex_;
    std::map<std::string, FractalSignature> memory_;
    std::filesystem::path dir_; // empty: memory only
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> computations_{0};
};

} // namespace morphoprot
