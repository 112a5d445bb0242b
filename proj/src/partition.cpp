#include "typeb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace typeb {

namespace {

int magnitude(int v) { return v < 0 ? -v : v; }

bool block_sorted(const Block& b) {
    for (size_t i = 1; i < b.size(); ++i)
        if (magnitude(b[i - 1]) >= magnitude(b[i])) return false;
    return true;
}

}  // namespace

PartitionClass partition_class_from_string(const std::string& s) {
    if (s == "all") return PartitionClass::All;
    if (s == "no_zero") return PartitionClass::NoZero;
    if (s == "merging_free") return PartitionClass::MergingFree;
    if (s == "separated") return PartitionClass::Separated;
    if (s == "mf_separated") return PartitionClass::MfSeparated;
    throw std::invalid_argument("unknown partition class: " + s);
}

std::string to_string(PartitionClass c) {
    switch (c) {
        case PartitionClass::All: return "all";
        case PartitionClass::NoZero: return "no_zero";
        case PartitionClass::MergingFree: return "merging_free";
        case PartitionClass::Separated: return "separated";
        case PartitionClass::MfSeparated: return "mf_separated";
    }
    return "?";
}

int TypeBPartition::block_min(int i) const {
    return magnitude(blocks.at(i - 1).front());
}

int TypeBPartition::block_max_magnitude(int i) const {
    return magnitude(blocks.at(i - 1).back());
}

void TypeBPartition::validate() const {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    auto mark = [&](int m) {
        if (m < 1 || m > n) throw std::invalid_argument("magnitude out of range: " + std::to_string(m));
        if (seen[m]) throw std::invalid_argument("duplicate magnitude: " + std::to_string(m));
        seen[m] = 1;
    };
    int prev_zero = 0;
    for (int m : zero_block) {
        if (m <= prev_zero) throw std::invalid_argument("zero block not ascending");
        prev_zero = m;
        mark(m);
    }
    int prev_min = 0;
    for (const Block& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        if (b.front() < 0) throw std::invalid_argument("barred block leader");
        if (!block_sorted(b)) throw std::invalid_argument("block not sorted by magnitude");
        if (magnitude(b.front()) <= prev_min)
            throw std::invalid_argument("block minima not strictly increasing");
        prev_min = magnitude(b.front());
        for (int v : b) mark(magnitude(v));
    }
    for (int m = 1; m <= n; ++m)
        if (!seen[m]) throw std::invalid_argument("missing magnitude: " + std::to_string(m));
}

TypeBPartition rebuild_canonical(int n, std::vector<int> zero_content, std::vector<Block> blocks) {
    std::vector<Block> kept;
    for (Block& b : blocks) {
        if (b.empty()) continue;
        std::sort(b.begin(), b.end(),
                  [](int x, int y) { return magnitude(x) < magnitude(y); });
        if (b.front() < 0)
            for (int& v : b) v = -v;
        kept.push_back(std::move(b));
    }
    std::sort(kept.begin(), kept.end(), [](const Block& x, const Block& y) {
        return magnitude(x.front()) < magnitude(y.front());
    });
    std::sort(zero_content.begin(), zero_content.end());
    TypeBPartition p{n, std::move(zero_content), std::move(kept)};
    p.validate();
    return p;
}

TypeBPartition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("partition text must be wrapped in braces");
    std::string body = s.substr(1, s.size() - 2);

    std::vector<std::vector<int>> raw;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, '|')) {
            if (part.empty()) throw std::invalid_argument("empty block in partition text");
            std::vector<int> entries;
            std::stringstream bs(part);
            std::string tok;
            while (std::getline(bs, tok, ',')) {
                if (tok.empty()) throw std::invalid_argument("empty entry in partition text");
                size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad integer: " + tok);
                }
                if (pos != tok.size()) throw std::invalid_argument("bad integer: " + tok);
                entries.push_back(v);
            }
            raw.push_back(std::move(entries));
        }
        if (body.back() == '|') throw std::invalid_argument("trailing block separator");
    }

    std::vector<int> zero;
    std::vector<Block> blocks;
    int max_mag = 0;
    for (size_t bi = 0; bi < raw.size(); ++bi) {
        if (bi == 0 && raw[0].front() == 0) {
            if (raw[0].size() < 2)
                throw std::invalid_argument("zero block must carry content; omit it when empty");
            for (size_t i = 1; i < raw[0].size(); ++i) {
                int v = raw[0][i];
                if (v <= 0) throw std::invalid_argument("zero block entries must be positive");
                zero.push_back(v);
                max_mag = std::max(max_mag, v);
            }
            continue;
        }
        for (int v : raw[bi]) {
            if (v == 0) throw std::invalid_argument("0 may only lead the first block");
            max_mag = std::max(max_mag, magnitude(v));
        }
        blocks.push_back(raw[bi]);
    }

    // The text form is the canonical form: sorted blocks, unbarred leaders,
    // increasing minima. Anything else is rejected, which keeps formatting
    // and parsing mutually inverse.
    for (const Block& b : blocks) {
        if (!block_sorted(b)) throw std::invalid_argument("block not sorted by magnitude");
        if (b.front() < 0) throw std::invalid_argument("barred block leader");
    }
    std::sort(zero.begin(), zero.end());
    TypeBPartition p{max_mag, std::move(zero), std::move(blocks)};
    p.validate();
    return p;
}

std::string format_partition(const TypeBPartition& p) {
    std::string out = "{";
    bool first_block = true;
    if (!p.zero_block.empty()) {
        out += "0";
        for (int m : p.zero_block) out += "," + std::to_string(m);
        first_block = false;
    }
    for (const Block& b : p.blocks) {
        if (!first_block) out += "|";
        first_block = false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(b[i]);
        }
    }
    out += "}";
    return out;
}

std::string partition_to_json(const TypeBPartition& p) {
    nlohmann::json j = nlohmann::json::array();
    if (!p.zero_block.empty()) {
        nlohmann::json z = nlohmann::json::array();
        z.push_back(0);
        for (int m : p.zero_block) z.push_back(m);
        j.push_back(z);
    }
    for (const Block& b : p.blocks) j.push_back(b);
    return j.dump();
}

TypeBPartition partition_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_array()) throw std::invalid_argument("partition json must be an array");
    std::vector<int> zero;
    std::vector<Block> blocks;
    int max_mag = 0;
    for (size_t bi = 0; bi < j.size(); ++bi) {
        std::vector<int> entries = j[bi].get<std::vector<int>>();
        if (entries.empty()) throw std::invalid_argument("empty block");
        if (bi == 0 && entries.front() == 0) {
            for (size_t i = 1; i < entries.size(); ++i) {
                if (entries[i] <= 0) throw std::invalid_argument("zero block entries must be positive");
                zero.push_back(entries[i]);
                max_mag = std::max(max_mag, entries[i]);
            }
            continue;
        }
        for (int v : entries) {
            if (v == 0) throw std::invalid_argument("0 may only lead the first block");
            max_mag = std::max(max_mag, magnitude(v));
        }
        blocks.push_back(std::move(entries));
    }
    return rebuild_canonical(max_mag, std::move(zero), std::move(blocks));
}

TypeBPartition normalize_partition(const std::vector<std::vector<int>>& signed_blocks,
                                   const std::vector<int>& zero_content) {
    std::set<int> zero_set(zero_content.begin(), zero_content.end());
    std::vector<int> zero;
    if (!zero_set.empty()) {
        bool symmetric = zero_set.count(0) || std::any_of(zero_set.begin(), zero_set.end(),
                                                          [](int v) { return v < 0; });
        if (symmetric) {
            for (int v : zero_set) {
                if (v == 0) continue;
                if (!zero_set.count(-v))
                    throw std::invalid_argument("zero block is not symmetric");
                if (v > 0) zero.push_back(v);
            }
        } else {
            zero.assign(zero_set.begin(), zero_set.end());
        }
    }

    // Pair off (B, -B); a block whose negative is absent stands for the pair.
    std::multiset<std::vector<int>> pool;
    for (const auto& raw : signed_blocks) {
        if (raw.empty()) throw std::invalid_argument("empty block");
        std::vector<int> b = raw;
        std::sort(b.begin(), b.end(),
                  [](int x, int y) { return magnitude(x) < magnitude(y); });
        for (size_t i = 1; i < b.size(); ++i)
            if (magnitude(b[i - 1]) == magnitude(b[i]))
                throw std::invalid_argument("duplicate magnitude within a block");
        pool.insert(std::move(b));
    }
    std::vector<Block> reps;
    while (!pool.empty()) {
        std::vector<int> b = *pool.begin();
        pool.erase(pool.begin());
        std::vector<int> neg;
        for (int v : b) neg.push_back(-v);
        if (neg == b) throw std::invalid_argument("self-negative block outside the zero block");
        auto it = pool.find(neg);
        if (it != pool.end()) pool.erase(it);
        reps.push_back(std::move(b));
    }

    int max_mag = 0;
    for (int m : zero) max_mag = std::max(max_mag, m);
    for (const Block& b : reps)
        for (int v : b) max_mag = std::max(max_mag, magnitude(v));
    return rebuild_canonical(max_mag, std::move(zero), std::move(reps));
}

std::pair<std::vector<std::vector<int>>, std::vector<int>>
expand_partition(const TypeBPartition& p) {
    std::vector<std::vector<int>> family;
    for (const Block& b : p.blocks) {
        family.push_back(b);
        std::vector<int> neg;
        for (int v : b) neg.push_back(-v);
        std::sort(neg.begin(), neg.end(),
                  [](int x, int y) { return magnitude(x) < magnitude(y); });
        family.push_back(std::move(neg));
    }
    std::vector<int> zero;
    if (!p.zero_block.empty()) {
        zero.push_back(0);
        for (int m : p.zero_block) {
            zero.push_back(m);
            zero.push_back(-m);
        }
        std::sort(zero.begin(), zero.end());
    }
    return {family, zero};
}

namespace {

std::vector<int> succession_values(const TypeBPartition& p) {
    std::vector<int> out;
    for (const Block& b : p.blocks)
        for (size_t i = 1; i < b.size(); ++i)
            if (magnitude(b[i]) == magnitude(b[i - 1]) + 1 &&
                (b[i] < 0) == (b[i - 1] < 0))
                out.push_back(magnitude(b[i]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> merging_minima(const TypeBPartition& p) {
    std::vector<int> out;
    for (size_t i = 1; i < p.blocks.size(); ++i)
        if (magnitude(p.blocks[i - 1].back()) < magnitude(p.blocks[i].front()))
            out.push_back(magnitude(p.blocks[i].front()));
    return out;
}

}  // namespace

PartitionStats partition_stats(const TypeBPartition& p) {
    if (p.has_zero_content())
        throw std::domain_error("statistics are defined on partitions without zero block");
    PartitionStats st;
    st.blocks_count = p.signed_block_count();
    st.mb_set = merging_minima(p);
    st.succ_set = succession_values(p);
    st.mb = static_cast<int>(st.mb_set.size());
    st.suc = static_cast<int>(st.succ_set.size());
    st.nmb = st.blocks_count - st.mb;
    for (const Block& b : p.blocks) {
        if (b.size() == 1)
            ++st.singletons;
        else
            ++st.non_singleton_blocks;
    }
    return st;
}

int succession_count_with_zero(const TypeBPartition& p) {
    int count = static_cast<int>(succession_values(p).size());
    for (size_t i = 1; i < p.zero_block.size(); ++i)
        if (p.zero_block[i] == p.zero_block[i - 1] + 1) ++count;
    return count;
}

std::vector<int> normal_merging_indices(const TypeBPartition& p) {
    std::vector<int> out;
    for (size_t i = 1; i < p.blocks.size(); ++i) {
        int prev_max = *std::max_element(p.blocks[i - 1].begin(), p.blocks[i - 1].end());
        int cur_min = *std::min_element(p.blocks[i].begin(), p.blocks[i].end());
        if (prev_max < cur_min) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

bool is_merging_free(const TypeBPartition& p) { return merging_minima(p).empty(); }

bool is_separated(const TypeBPartition& p) { return succession_values(p).empty(); }

bool partition_in_class(const TypeBPartition& p, PartitionClass c) {
    switch (c) {
        case PartitionClass::All: return true;
        case PartitionClass::NoZero: return !p.has_zero_content();
        case PartitionClass::MergingFree:
            return !p.has_zero_content() && is_merging_free(p);
        case PartitionClass::Separated:
            return !p.has_zero_content() && is_separated(p);
        case PartitionClass::MfSeparated:
            return !p.has_zero_content() && is_merging_free(p) && is_separated(p);
    }
    return false;
}

std::vector<int> non_merging_minima(const TypeBPartition& p) {
    std::vector<int> merging = merging_minima(p);
    std::vector<int> out;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        int m = magnitude(p.blocks[i].front());
        if (!std::binary_search(merging.begin(), merging.end(), m)) out.push_back(m);
    }
    return out;
}

namespace {

struct Enumerator {
    int n;
    PartitionClass cls;
    const std::function<void(const TypeBPartition&)>& visit;
    std::optional<int> k_filter;
    bool k_includes_zero;
    TypeBPartition work;

    bool forbid_succession() const {
        return cls == PartitionClass::Separated || cls == PartitionClass::MfSeparated;
    }

    void emit() {
        if (!partition_in_class(work, cls)) return;
        if (k_filter) {
            int k = work.signed_block_count();
            if (k_includes_zero) k += 1;  // the zero block always counts, even {0}
            if (k != *k_filter) return;
        }
        visit(work);
    }

    void rec(int m) {
        if (m > n) {
            emit();
            return;
        }
        size_t kcur = work.blocks.size();
        for (size_t bi = 0; bi < kcur; ++bi) {
            // index access: deeper recursion may reallocate the block vector
            int last = work.blocks[bi].back();
            bool prev_here = magnitude(last) == m - 1;
            for (int sign : {+1, -1}) {
                if (forbid_succession() && prev_here && (last < 0) == (sign < 0)) continue;
                work.blocks[bi].push_back(sign * m);
                rec(m + 1);
                work.blocks[bi].pop_back();
            }
        }
        if (cls == PartitionClass::All) {
            work.zero_block.push_back(m);
            rec(m + 1);
            work.zero_block.pop_back();
        }
        // block count only grows, so the k filter prunes new blocks early
        int signed_bound = k_filter ? *k_filter - (k_includes_zero ? 1 : 0) : n;
        if (static_cast<int>(kcur) + 1 <= signed_bound) {
            work.blocks.push_back({m});
            rec(m + 1);
            work.blocks.pop_back();
        }
    }
};

}  // namespace

void enumerate_partitions(int n, PartitionClass c,
                          const std::function<void(const TypeBPartition&)>& visit,
                          std::optional<int> k_filter, bool k_includes_zero) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Enumerator e{n, c, visit, k_filter, k_includes_zero, TypeBPartition{n, {}, {}}};
    e.rec(1);
}

std::vector<TypeBPartition> enumerate_to_vector(int n, PartitionClass c,
                                                std::optional<int> k_filter,
                                                bool k_includes_zero) {
    std::vector<TypeBPartition> out;
    enumerate_partitions(n, c, [&](const TypeBPartition& p) { out.push_back(p); },
                         k_filter, k_includes_zero);
    return out;
}

}  // namespace typeb
