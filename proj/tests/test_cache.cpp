#include "doctest.h"
#include "typeb/cache.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>

using namespace typeb;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("typeb-cache-test-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("cache stores and reloads a table") {
    TempDir tmp;
    TableCache cache(tmp.path, true);
    SequenceTable w = w_table(6);
    CHECK(!cache.load("w", 6, Provenance::Recurrence).has_value());
    cache.store(w);
    auto loaded = cache.load("w", 6, Provenance::Recurrence);
    REQUIRE(loaded.has_value());
    CHECK(loaded->rows == w.rows);
}

TEST_CASE("cache separates provenance") {
    TempDir tmp;
    TableCache cache(tmp.path, true);
    SequenceTable rec = d_table(5, DMethod::Recurrence);
    cache.store(rec);
    CHECK(cache.load("d", 5, Provenance::Recurrence).has_value());
    CHECK(!cache.load("d", 5, Provenance::Enumeration).has_value());
}

TEST_CASE("poisoned cache entries fail the checksum and are ignored") {
    TempDir tmp;
    TableCache cache(tmp.path, true);
    SequenceTable w = w_table(5);
    cache.store(w);
    auto path = cache.entry_path("w", 5, Provenance::Recurrence);

    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"120\"");  // w(5,2)
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"121\"");
    std::ofstream out(path);
    out << text;
    out.close();

    CHECK(!cache.load("w", 5, Provenance::Recurrence).has_value());
    cache.store(w);  // recompute-and-overwrite path
    CHECK(cache.load("w", 5, Provenance::Recurrence).has_value());
}

TEST_CASE("disabled cache neither loads nor stores") {
    TempDir tmp;
    TableCache cache(tmp.path, false);
    cache.store(w_table(4));
    CHECK(!cache.load("w", 4, Provenance::Recurrence).has_value());
    CHECK(!std::filesystem::exists(tmp.path));
}
