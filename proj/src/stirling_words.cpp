#include "typeb/stirling_words.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace typeb {

namespace {
constexpr int kNoNext = std::numeric_limits<int>::max();
}

std::string to_string(WordClass c) {
    switch (c) {
        case WordClass::NotStirling: return "not_stirling";
        case WordClass::Stirling: return "stirling";
        case WordClass::FlattenedStirling: return "flattened_stirling";
    }
    return "?";
}

WordClassification classify_word(const std::vector<int>& letters) {
    WordClassification out;
    int len = static_cast<int>(letters.size());
    if (len % 2 != 0) return out;
    int n = len / 2;
    std::vector<int> first(n + 1, -1), second(n + 1, -1);
    for (int i = 0; i < len; ++i) {
        int v = letters[i];
        if (v < 1 || v > n) {
            out.witness_position = i;
            return out;
        }
        if (first[v] < 0) first[v] = i;
        else if (second[v] < 0) second[v] = i;
        else {
            out.witness_position = i;
            return out;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (second[v] < 0) {
            out.witness_position = first[v];
            return out;
        }
    for (int v = 1; v <= n; ++v)
        for (int i = first[v] + 1; i < second[v]; ++i)
            if (letters[i] <= v) {
                out.witness_position = i;
                return out;
            }
    out.cls = WordClass::Stirling;

    int start = 0;
    for (int i = 1; i <= len; ++i) {
        if (i == len || letters[i] < letters[i - 1]) {
            out.runs.push_back({start, i - 1});
            start = i;
        }
    }
    for (size_t r = 1; r < out.runs.size(); ++r)
        if (letters[out.runs[r].first] < letters[out.runs[r - 1].first]) {
            out.witness_position = out.runs[r].first;
            return out;
        }
    out.cls = WordClass::FlattenedStirling;
    out.witness_position = -1;
    return out;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    int v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) throw std::invalid_argument("bad word text");
    return out;
}

std::string format_word(const std::vector<int>& letters) {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(letters[i]);
    }
    return out;
}

std::vector<int> partition_to_word(const TypeBPartition& p) {
    if (p.has_zero_content() || !is_merging_free(p))
        throw std::domain_error("word encoding requires a merging-free partition without zero block");
    int k = p.signed_block_count();
    std::vector<int> w;
    if (k == 0) return w;

    auto next_min = [&](int i) { return i + 1 < k ? p.block_min(i + 2) : kNoNext; };

    std::vector<int> deep_barred;  // barred below the following minimum, or in the last block
    for (int i = 0; i < k; ++i)
        for (int v : p.blocks[i])
            if (v < 0 && -v < next_min(i)) deep_barred.push_back(-v);
    std::sort(deep_barred.begin(), deep_barred.end());

    w.push_back(1);
    for (int d : deep_barred) {
        w.push_back(d);
        w.push_back(d);
    }
    w.push_back(1);
    for (int i = 0; i < k; ++i) {
        int nm = next_min(i);
        int mi = p.block_min(i + 1);
        if (i > 0) w.push_back(mi);
        for (int v : p.blocks[i])  // unbarred below the next minimum
            if (v > 0 && v != mi && v < nm) {
                w.push_back(v);
                w.push_back(v);
            }
        for (int v : p.blocks[i])  // barred above it
            if (v < 0 && -v > nm) {
                w.push_back(-v);
                w.push_back(-v);
            }
        if (i + 1 < k) w.push_back(nm);
        for (int v : p.blocks[i])  // unbarred above it
            if (v > 0 && v > nm) {
                w.push_back(v);
                w.push_back(v);
            }
    }
    return w;
}

TypeBPartition word_to_partition(const std::vector<int>& letters) {
    WordClassification cls = classify_word(letters);
    if (cls.cls != WordClass::FlattenedStirling)
        throw std::domain_error("word is not a flattened Stirling permutation");
    int n = static_cast<int>(letters.size()) / 2;
    if (n == 0) return rebuild_canonical(0, {}, {});
    if (letters[0] != 1) throw std::domain_error("no preimage: word must start with 1");

    size_t idx = 1;
    std::vector<int> deep_barred;
    while (idx < letters.size() && letters[idx] != 1) {
        if (idx + 1 >= letters.size() || letters[idx + 1] != letters[idx])
            throw std::domain_error("no preimage: unpaired value between the 1s");
        deep_barred.push_back(letters[idx]);
        idx += 2;
    }
    if (idx >= letters.size()) throw std::domain_error("no preimage: second 1 missing");
    ++idx;

    struct Segment {
        int min = 0;
        std::vector<int> before;  // doubled values before the next minimum
        std::vector<int> after;   // doubled values between the next minimum's copies
    };
    std::vector<Segment> segs;
    segs.push_back({1, {}, {}});
    int last_value = 1;
    while (idx < letters.size()) {
        int x = letters[idx];
        bool paired = idx + 1 < letters.size() && letters[idx + 1] == x;
        if (paired && x > last_value) {
            segs.back().before.push_back(x);
            last_value = x;
            idx += 2;
        } else if (paired) {
            segs.push_back({x, {}, {}});  // next minimum with nothing between its copies
            last_value = x;
            idx += 2;
        } else {
            // first copy of the next minimum; its pair closes the gap
            int m = x;
            ++idx;
            while (idx < letters.size() && letters[idx] != m) {
                if (idx + 1 >= letters.size() || letters[idx + 1] != letters[idx])
                    throw std::domain_error("no preimage: unpaired value inside a minimum gap");
                segs.back().after.push_back(letters[idx]);
                idx += 2;
            }
            if (idx >= letters.size()) throw std::domain_error("no preimage: minimum pair unclosed");
            ++idx;
            segs.push_back({m, {}, {}});
            last_value = m;
        }
    }

    int k = static_cast<int>(segs.size());
    for (int i = 1; i < k; ++i)
        if (segs[i].min <= segs[i - 1].min)
            throw std::domain_error("no preimage: minima not increasing");

    std::vector<Block> blocks(k);
    for (int i = 0; i < k; ++i) {
        int nm = i + 1 < k ? segs[i + 1].min : kNoNext;
        blocks[i].push_back(segs[i].min);
        for (int v : segs[i].before) blocks[i].push_back(v < nm ? v : -v);
        for (int v : segs[i].after) blocks[i].push_back(v);
    }
    for (int d : deep_barred) {
        int target = -1;
        for (int i = 0; i < k; ++i) {
            int nm = i + 1 < k ? segs[i + 1].min : kNoNext;
            if (segs[i].min < d && d < nm) target = i;
        }
        if (target < 0) throw std::domain_error("no preimage: orphan barred value");
        blocks[target].push_back(-d);
    }

    TypeBPartition p = rebuild_canonical(n, {}, std::move(blocks));
    if (p.has_zero_content() || !is_merging_free(p) || partition_to_word(p) != letters)
        throw std::domain_error("no preimage found");
    return p;
}

void enumerate_stirling_words(int order,
                              const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> word;
    std::function<void(int)> rec = [&](int m) {
        if (m > order) {
            visit(word);
            return;
        }
        for (size_t pos = 0; pos <= word.size(); ++pos) {
            word.insert(word.begin() + pos, 2, m);
            rec(m + 1);
            word.erase(word.begin() + pos, word.begin() + pos + 2);
        }
    };
    if (order == 0) {
        visit(word);
        return;
    }
    word = {1, 1};
    rec(2);
}

MapReport verify_stirling_word_map(int n) {
    MapReport rep;
    rep.map_name = "stirling";
    rep.n = n;
    std::vector<TypeBPartition> domain = enumerate_to_vector(n, PartitionClass::MergingFree);
    rep.domain_size = static_cast<long long>(domain.size());

    std::set<std::vector<int>> images;
    bool member_ok = true, roundtrip = true;
    for (const TypeBPartition& p : domain) {
        std::vector<int> w = partition_to_word(p);
        if (classify_word(w).cls != WordClass::FlattenedStirling) {
            member_ok = false;
            if (rep.counterexamples.size() < 5)
                rep.counterexamples.push_back({format_partition(p), format_word(w)});
        }
        if (word_to_partition(w) != p) {
            roundtrip = false;
            if (rep.counterexamples.size() < 5)
                rep.counterexamples.push_back({format_partition(p), format_word(w)});
        }
        images.insert(std::move(w));
    }
    rep.image_size = static_cast<long long>(images.size());
    rep.injective = images.size() == domain.size();

    std::set<std::vector<int>> flattened;
    enumerate_stirling_words(n, [&](const std::vector<int>& w) {
        if (classify_word(w).cls == WordClass::FlattenedStirling) flattened.insert(w);
    });
    rep.image_correct = member_ok && images == flattened;
    rep.roundtrip_ok = roundtrip;
    return rep;
}

}  // namespace typeb
