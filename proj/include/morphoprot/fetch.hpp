#pragma once

#include <filesystem>
#include <functional>
#include <string>

namespace morphoprot {

/// Returns the response body for a URL. Implementations throw
/// NetworkUnavailableError on connection failure and NotFoundError on 404.
using Transport = std::function<std::string(const std::string& url)>;

struct FetchOptions {
    /// "{id}" is replaced with the lowercase 4-char id.
    std::string url_template = "https://files.rcsb.org/download/{id}.pdb";
    /// Empty means the built-in HTTP client.
    Transport transport;
};

/// ~/.cache/morphoprot, or $MORPHOPROT_CACHE when set.
std::filesystem::path default_cache_dir();

bool valid_pdb_id(const std::string& id);

/// Returns the cached file content for the id, downloading and caching it
/// first on a miss. Cache writes go through a temp file + rename so
/// concurrent fetches of one id stay consistent.
std::string fetch_structure(const std::string& pdb_id,
                            const std::filesystem::path& cache_dir,
                            const FetchOptions& options = {});

} // namespace morphoprot
