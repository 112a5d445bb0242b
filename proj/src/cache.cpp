#include "typeb/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace typeb {

std::string table_checksum(const SequenceTable& table) {
    std::ostringstream os;
    for (const auto& row : table.rows) {
        for (const auto& v : row) os << to_decimal(v) << ",";
        os << ";";
    }
    std::string payload = os.str();
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

std::filesystem::path TableCache::entry_path(const std::string& family, int max_n,
                                             Provenance provenance) const {
    std::string name = family + "-" + std::to_string(max_n) + "-" + to_string(provenance) +
                       "-v" + std::to_string(kSchemaVersion) + ".json";
    return dir_ / name;
}

std::optional<SequenceTable> TableCache::load(const std::string& family, int max_n,
                                              Provenance provenance) const {
    if (!enabled_) return std::nullopt;
    std::filesystem::path path = entry_path(family, max_n, provenance);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("schema").get<int>() != kSchemaVersion) return std::nullopt;
        SequenceTable t = SequenceTable::from_json(j.at("table").dump());
        if (t.family != family || t.max_n != max_n || t.provenance != provenance)
            return std::nullopt;
        if (j.at("checksum").get<std::string>() != table_checksum(t)) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt entries are recomputed and overwritten
    }
}

void TableCache::store(const SequenceTable& table) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["checksum"] = table_checksum(table);
    j["table"] = nlohmann::json::parse(table.to_json());
    std::ofstream out(entry_path(table.family, table.max_n, table.provenance));
    out << j.dump(2) << "\n";
}

}  // namespace typeb
