#ifdef MORPHOPROT_USE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "morphoprot/fetch.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "morphoprot/errors.hpp"

namespace morphoprot {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
    if (const char* env = std::getenv("MORPHOPROT_CACHE"); env && *env) return fs::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "morphoprot";
    return fs::path(".morphoprot-cache");
}

bool valid_pdb_id(const std::string& id) {
    if (id.size() != 4) return false;
    if (!std::isdigit(static_cast<unsigned char>(id[0]))) return false;
    for (std::size_t i = 1; i < 4; ++i)
        if (!std::isalnum(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

namespace {

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string expand_template(const std::string& tmpl, const std::string& id) {
    std::string url = tmpl;
    for (std::size_t pos; (pos = url.find("{id}")) != std::string::npos;)
        url.replace(pos, 4, id);
    return url;
}

std::string http_get(const std::string& url) {
    // split into scheme://host[:port] and path
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw NetworkUnavailableError("unsupported URL: " + url);
    const auto path_begin = url.find('/', scheme_end + 3);
    const std::string origin = path_begin == std::string::npos ? url : url.substr(0, path_begin);
    const std::string path = path_begin == std::string::npos ? "/" : url.substr(path_begin);

#ifndef MORPHOPROT_USE_OPENSSL
    if (url.rfind("https://", 0) == 0)
        throw NetworkUnavailableError("built without TLS support: " + url);
#endif
    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res)
        throw NetworkUnavailableError("connection failed: " + origin + " (" +
                                      httplib::to_string(res.error()) + ")");
    if (res->status == 404) throw NotFoundError("404 for " + url);
    if (res->status != 200)
        throw NetworkUnavailableError("HTTP " + std::to_string(res->status) + " for " + url);
    return res->body;
}

} // namespace

std::string fetch_structure(const std::string& pdb_id, const fs::path& cache_dir,
                            const FetchOptions& options) {
    if (!valid_pdb_id(pdb_id)) throw InvalidIdError(pdb_id);
    const std::string id = lowercase(pdb_id);
    const fs::path cached = cache_dir / (id + ".pdb");

    if (fs::exists(cached)) {
        std::ifstream in(cached, std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        return content;
    }

    const std::string url = expand_template(options.url_template, id);
    const std::string body = options.transport ? options.transport(url) : http_get(url);

    fs::create_directories(cache_dir);
    const fs::path tmp = cache_dir / (id + ".pdb.tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
    }
    fs::rename(tmp, cached); // atomic on POSIX
    return body;
}

} // namespace morphoprot
