#pragma once

#include <optional>
#include <string>

#include "backlund.hpp"
#include "currents.hpp"

namespace sgc {

// On-disk layout under a cache directory:
//   manifest.json        {schema_version, max_nu, artifacts: {name: sha256}}
//   backlund_table.json  {schema_version, max_nu, coefficients: [expr, ...]}
//   current_<N>.json / current_<N>.tex   per-index artifacts
// A schema version mismatch forces a recompute; a digest mismatch or parse
// failure raises CacheError (the file is corrupt, not merely stale).
class TableCache {
  public:
    explicit TableCache(std::string directory) : dir_(std::move(directory)) {}

    const std::string& directory() const { return dir_; }

    // Loads the cached table if present, valid and deep enough; nullopt means
    // "recompute" (missing or version-mismatched cache).
    std::optional<BacklundTable> load(int min_nu) const;

    // Writes the table file and refreshes the manifest.
    void store(const BacklundTable& table) const;

    // Serialized table artifact as written to disk (also the json artifact of
    // the table subcommand, so cold and cached runs are digest comparable).
    static std::string table_payload(const BacklundTable& table);

    void store_current(const CurrentPair& pair) const;

    std::string manifest_digest(const std::string& artifact) const;

  private:
    void update_manifest(const std::string& artifact, const std::string& payload) const;

    std::string dir_;
};

}  // namespace sgc
