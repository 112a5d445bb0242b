#include "typeb/oeis.hpp"

#include <stdexcept>

#include "json.hpp"
#include "typeb/counting.hpp"

namespace typeb {

const std::map<std::string, std::vector<BigInt>>& embedded_oeis() {
    static const std::map<std::string, std::vector<BigInt>> data = {
        // Dowling numbers.
        {"A007405", {1, 2, 6, 24, 116, 648, 4088, 28640, 219920, 1832224}},
        // Binomial-transform shift of the Dowling numbers.
        {"A004211", {1, 1, 3, 11, 49, 257, 1539, 10299, 75905, 609441}},
        // Set partitions without singletons, rows n = 2..8, read by rows.
        {"A008299", {1, 1, 1, 3, 1, 10, 1, 25, 15, 1, 56, 105, 1, 119, 490, 105}},
    };
    return data;
}

OeisCheck oeis_check(const std::string& id, const std::vector<BigInt>& computed) {
    OeisCheck out;
    out.id = id;
    auto it = embedded_oeis().find(id);
    if (it == embedded_oeis().end()) {
        out.detail = "unknown sequence id";
        return out;
    }
    out.known = true;
    if (computed.empty()) {
        out.vacuous = true;
        out.detail = "warning: empty computed vector, vacuous pass";
        return out;
    }
    const auto& ref = it->second;
    size_t m = std::min(ref.size(), computed.size());
    out.compared_terms = static_cast<int>(m);
    out.match = true;
    for (size_t i = 0; i < m; ++i)
        if (ref[i] != computed[i]) {
            out.match = false;
            out.detail = "mismatch at index " + std::to_string(i) + ": expected " +
                         to_decimal(ref[i]) + ", computed " + to_decimal(computed[i]);
            return out;
        }
    return out;
}

std::vector<BigInt> oeis_default_computed(const std::string& id) {
    if (id == "A007405") return dowling_numbers(9);
    if (id == "A004211") return w_totals(9);
    if (id == "A008299") {
        // Shifted type A merging-free separated triangle: row n+1, column k+1
        // of the enumerated table gives row n of the target.
        SequenceTable t = type_a_mf_separated_table(9);
        std::vector<BigInt> flat;
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k <= n / 2; ++k) flat.push_back(t.at(n + 1, k + 1));
        return flat;
    }
    throw std::invalid_argument("unknown sequence id: " + id);
}

std::string OeisCheck::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["known"] = known;
    j["match"] = match;
    j["vacuous"] = vacuous;
    j["compared_terms"] = compared_terms;
    j["detail"] = detail;
    j["ok"] = ok();
    return j.dump();
}

}  // namespace typeb
