#include "cache.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "digest.hpp"
#include "errors.hpp"
#include "expr_io.hpp"

namespace sgc {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kManifest = "manifest.json";
constexpr const char* kTableFile = "backlund_table.json";

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& payload) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + path.string());
    out << payload;
}

}  // namespace

std::string TableCache::table_payload(const BacklundTable& table) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["max_nu"] = table.max_nu();
    ordered_json coeffs = ordered_json::array();
    for (int nu = 0; nu <= table.max_nu(); ++nu) coeffs.push_back(expr_to_json(table.at(nu)));
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
}

std::optional<BacklundTable> TableCache::load(int min_nu) const {
    fs::path table_path = fs::path(dir_) / kTableFile;
    fs::path manifest_path = fs::path(dir_) / kManifest;
    auto payload = read_file(table_path);
    if (!payload) return std::nullopt;

    auto manifest_text = read_file(manifest_path);
    if (!manifest_text) throw CacheError("cache table present but manifest missing");

    json manifest;
    json table_json;
    try {
        manifest = json::parse(*manifest_text);
        table_json = json::parse(*payload);
    } catch (const json::exception& e) {
        throw CacheError(std::string("cache parse failure: ") + e.what());
    }

    if (!manifest.contains("schema_version") ||
        manifest["schema_version"].get<int>() != kSchemaVersion)
        return std::nullopt;  // stale schema: recompute
    if (!table_json.contains("schema_version") ||
        table_json["schema_version"].get<int>() != kSchemaVersion)
        return std::nullopt;

    std::string expected = manifest.value("artifacts", json::object()).value(kTableFile, "");
    if (expected.empty() || expected != sha256_hex(*payload))
        throw CacheError("cache digest mismatch for " + std::string(kTableFile));

    try {
        std::vector<Expr> coefficients;
        for (const auto& c : table_json.at("coefficients"))
            coefficients.push_back(expr_from_json(c));
        if (coefficients.empty()) throw CacheError("cached table is empty");
        BacklundTable table(std::move(coefficients));
        if (table.max_nu() < min_nu) return std::nullopt;  // too shallow: recompute
        return table;
    } catch (const ParseError& e) {
        throw CacheError(std::string("cache expr parse failure: ") + e.what());
    } catch (const json::exception& e) {
        throw CacheError(std::string("cache parse failure: ") + e.what());
    }
}

void TableCache::store(const BacklundTable& table) const {
    std::string payload = table_payload(table);
    write_file(fs::path(dir_) / kTableFile, payload);
    update_manifest(kTableFile, payload);
}

void TableCache::store_current(const CurrentPair& pair) const {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["N"] = pair.N;
    j["s1"] = expr_to_json(pair.s1);
    j["s2"] = expr_to_json(pair.s2);
    j["q1"] = expr_to_json(pair.q1);
    j["r1"] = expr_to_json(pair.r1);
    std::string name = "current_" + std::to_string(pair.N) + ".json";
    std::string payload = j.dump(2) + "\n";
    write_file(fs::path(dir_) / name, payload);
    update_manifest(name, payload);

    std::string tex_name = "current_" + std::to_string(pair.N) + ".tex";
    std::ostringstream tex;
    tex << "s_1^{" << pair.N << "} &= " << expr_to_latex(pair.s1) << " \\\\\n";
    tex << "s_2^{" << pair.N << "} &= " << expr_to_latex(pair.s2) << "\n";
    write_file(fs::path(dir_) / tex_name, tex.str());
    update_manifest(tex_name, tex.str());
}

std::string TableCache::manifest_digest(const std::string& artifact) const {
    auto manifest_text = read_file(fs::path(dir_) / kManifest);
    if (!manifest_text) return "";
    try {
        json manifest = json::parse(*manifest_text);
        return manifest.value("artifacts", json::object()).value(artifact, "");
    } catch (const json::exception&) {
        return "";
    }
}

void TableCache::update_manifest(const std::string& artifact, const std::string& payload) const {
    fs::path manifest_path = fs::path(dir_) / kManifest;
    ordered_json manifest;
    if (auto text = read_file(manifest_path)) {
        try {
            manifest = ordered_json::parse(*text);
        } catch (const json::exception&) {
            manifest = ordered_json();  // rebuild a broken manifest
        }
    }
    manifest["schema_version"] = kSchemaVersion;
    if (!manifest.contains("artifacts") || !manifest["artifacts"].is_object())
        manifest["artifacts"] = ordered_json::object();
    manifest["artifacts"][artifact] = sha256_hex(payload);
    // Keep the artifact map deterministic regardless of insertion order.
    ordered_json sorted = ordered_json::object();
    std::map<std::string, std::string> entries;
    for (auto it = manifest["artifacts"].begin(); it != manifest["artifacts"].end(); ++it)
        entries[it.key()] = it.value().get<std::string>();
    for (const auto& [k, v] : entries) sorted[k] = v;
    manifest["artifacts"] = sorted;
    write_file(manifest_path, manifest.dump(2) + "\n");
}

}  // namespace sgc
