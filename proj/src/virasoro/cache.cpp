#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dessin/algebra/json_io.hpp"
#include "dessin/virasoro/correlators.hpp"

namespace dessin::virasoro {

void cache_save(const CorrelatorTable& table, const std::filesystem::path& path) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries())  // map order = sorted by (g, parts)
        entries.push_back({{"g", key.genus}, {"parts", key.parts}, {"poly", algebra::to_json(value)}});
    const nlohmann::json doc{{"version", kCacheVersion}, {"alphabet", *suv_alphabet()}, {"entries", entries}};
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    // write-then-rename so a crash never leaves a truncated cache behind
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cache: cannot write " + tmp.string());
        out << doc.dump() << '\n';
        if (!out)
            throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::map<PartitionKey, Poly> cache_load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cache: cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("cache: corrupt file " + path.string() + ": " + e.what());
    }
    try {
        const int version = doc.at("version").get<int>();
        if (version != kCacheVersion)
            throw std::runtime_error("cache: version " + std::to_string(version) + " in " + path.string() +
                                     ", expected " + std::to_string(kCacheVersion));
        if (doc.at("alphabet").get<algebra::Alphabet>() != *suv_alphabet())
            throw std::runtime_error("cache: unexpected alphabet in " + path.string());
        std::map<PartitionKey, Poly> out;
        for (const auto& e : doc.at("entries")) {
            PartitionKey key(e.at("g").get<int>(), e.at("parts").get<std::vector<int>>());
            if (key.parts.empty() || key.genus < 0)
                throw std::runtime_error("cache: invalid key in " + path.string());
            Poly value = algebra::poly_from_json(e.at("poly")).embed(suv_alphabet());
            if (!out.emplace(std::move(key), std::move(value)).second)
                throw std::runtime_error("cache: duplicate entry in " + path.string());
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("cache: malformed file " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("cache: malformed file " + path.string() + ": " + e.what());
    }
}

}  // namespace dessin::virasoro
