#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "typeb/counting.hpp"

namespace typeb {

// Versioned JSON table cache. Entries are keyed by family, max_n and
// provenance; a checksum guards against corrupted or edited files. A cache
// entry is only served when its provenance matches the request, so
// enumeration results are never substituted by recurrence results.
class TableCache {
public:
    static constexpr int kSchemaVersion = 1;

    TableCache(std::filesystem::path dir, bool enabled)
        : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }
    std::filesystem::path entry_path(const std::string& family, int max_n,
                                     Provenance provenance) const;

    // Empty when disabled, missing, corrupt, or provenance-mismatched.
    std::optional<SequenceTable> load(const std::string& family, int max_n,
                                      Provenance provenance) const;
    void store(const SequenceTable& table) const;

private:
    std::filesystem::path dir_;
    bool enabled_;
};

// Checksum over the serialized rows (FNV-1a, 64 bit).
std::string table_checksum(const SequenceTable& table);

}  // namespace typeb
