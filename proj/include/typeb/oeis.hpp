#pragma once

#include <map>
#include <string>
#include <vector>

#include "typeb/bigint.hpp"

namespace typeb {

struct OeisCheck {
    std::string id;
    bool known = false;
    bool match = false;
    bool vacuous = false;  // empty computed vector
    int compared_terms = 0;
    std::string detail;
    bool ok() const { return known && (match || vacuous); }
    std::string to_json() const;
};

// Embedded reference prefixes; no network involved.
const std::map<std::string, std::vector<BigInt>>& embedded_oeis();

// Compares the computed prefix against the embedded one, up to the shorter
// length. An empty computed vector passes vacuously with a warning detail.
OeisCheck oeis_check(const std::string& id, const std::vector<BigInt>& computed);

// The computed sequence the id is checked against by the command line tool.
std::vector<BigInt> oeis_default_computed(const std::string& id);

}  // namespace typeb
