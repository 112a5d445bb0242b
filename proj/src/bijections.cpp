#include "typeb/bijections.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "typeb/stirling_words.hpp"

namespace typeb {

namespace {

int magnitude(int v) { return v < 0 ? -v : v; }

constexpr int kNoNext = std::numeric_limits<int>::max();

int min_magnitude(const std::vector<int>& b) {
    int m = kNoNext;
    for (int v : b) m = std::min(m, magnitude(v));
    return m;
}

int max_magnitude(const std::vector<int>& b) {
    int m = 0;
    for (int v : b) m = std::max(m, magnitude(v));
    return m;
}

// (block index, position) of the element with the given magnitude, or (-1,-1).
std::pair<int, int> locate(const std::vector<Block>& blocks, int mag) {
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks[i].size(); ++j)
            if (magnitude(blocks[i][j]) == mag) return {static_cast<int>(i), static_cast<int>(j)};
    return {-1, -1};
}

void insert_sorted(Block& b, int v) {
    auto it = std::lower_bound(b.begin(), b.end(), v, [](int x, int y) {
        return magnitude(x) < magnitude(y);
    });
    b.insert(it, v);
}

int shift_up(int v) { return v == 0 ? 1 : (v > 0 ? v + 1 : v - 1); }
int shift_down(int v) { return v > 0 ? v - 1 : v + 1; }

}  // namespace

TypeBPartition swap_interval(const TypeBPartition& p, int i, int j, int a) {
    int k = p.signed_block_count();
    if (i < 1 || i > k || j < 1 || j > k) throw std::out_of_range("block index out of range");
    if (a < 1 || a > p.n) throw std::out_of_range("magnitude out of range");
    if (i == j) return p;
    std::vector<Block> blocks = p.blocks;
    Block& bi = blocks[i - 1];
    Block& bj = blocks[j - 1];

    auto find_in_pair = [&](int mag) -> std::pair<int, int> {  // (which block: 0=i,1=j, value)
        for (int v : bi)
            if (magnitude(v) == mag) return {0, v};
        for (int v : bj)
            if (magnitude(v) == mag) return {1, v};
        return {-1, 0};
    };

    auto [where_a, value_a] = find_in_pair(a);
    if (where_a < 0) return p;
    bool barred = value_a < 0;

    // Maximal run a, a+1, ... present in the union with the same bar state.
    std::vector<std::pair<int, int>> interval;  // (which block, value)
    for (int t = a;; ++t) {
        auto [where, value] = find_in_pair(t);
        if (where < 0 || (value < 0) != barred) break;
        interval.push_back({where, value});
    }
    for (auto [where, value] : interval) {
        Block& from = where == 0 ? bi : bj;
        Block& to = where == 0 ? bj : bi;
        from.erase(std::remove(from.begin(), from.end(), value), from.end());
        insert_sorted(to, value);
    }
    return rebuild_canonical(p.n, p.zero_block, std::move(blocks));
}

TypeBPartition merging_to_succession(const TypeBPartition& p, int a) {
    PartitionStats st = partition_stats(p);
    if (!std::binary_search(st.mb_set.begin(), st.mb_set.end(), a))
        throw std::domain_error("a is not the minimum of a merging block");
    auto [bi, pos] = locate(p.blocks, a);
    auto [bj, pos_prev] = locate(p.blocks, a - 1);
    bool prev_barred = p.blocks[bj][pos_prev] < 0;

    std::vector<Block> blocks = p.blocks;
    Block merged = blocks[bi - 1];
    for (int v : blocks[bi]) merged.push_back(prev_barred ? -v : v);
    blocks[bi - 1] = std::move(merged);
    blocks.erase(blocks.begin() + bi);
    TypeBPartition merged_p = rebuild_canonical(p.n, p.zero_block, std::move(blocks));
    // 1-based: the merged block sits at index bi (= old i-1), the partner at bj+1.
    return swap_interval(merged_p, bi, bj + 1, a);
}

TypeBPartition succession_to_merging(const TypeBPartition& p, int a) {
    PartitionStats st = partition_stats(p);
    if (!std::binary_search(st.succ_set.begin(), st.succ_set.end(), a))
        throw std::domain_error("a is not a succession");
    auto [bi, pos] = locate(p.blocks, a);
    int j0 = 0;  // 0-based index of the last block holding any of 1..a-1
    for (int t = 1; t <= a - 1; ++t) j0 = std::max(j0, locate(p.blocks, t).first);

    TypeBPartition q = swap_interval(p, bi + 1, j0 + 1, a);
    std::vector<Block> blocks = q.blocks;
    Block& host = blocks[j0];
    size_t cut = 0;
    while (cut < host.size() && magnitude(host[cut]) != a) ++cut;
    Block tail(host.begin() + cut, host.end());
    host.erase(host.begin() + cut, host.end());
    if (tail.front() < 0)
        for (int& v : tail) v = -v;
    blocks.push_back(std::move(tail));
    return rebuild_canonical(q.n, q.zero_block, std::move(blocks));
}

TypeBPartition exchange_statistics(const TypeBPartition& p, std::vector<int> mb_subset,
                                   std::vector<int> suc_subset) {
    PartitionStats st = partition_stats(p);
    for (int a : mb_subset)
        if (!std::binary_search(st.mb_set.begin(), st.mb_set.end(), a))
            throw std::domain_error("subset not contained in the merging minima");
    for (int b : suc_subset)
        if (!std::binary_search(st.succ_set.begin(), st.succ_set.end(), b))
            throw std::domain_error("subset not contained in the successions");
    std::sort(suc_subset.begin(), suc_subset.end());
    std::sort(mb_subset.begin(), mb_subset.end());
    TypeBPartition q = p;
    for (int b : suc_subset) q = succession_to_merging(q, b);
    for (int a : mb_subset) q = merging_to_succession(q, a);
    return q;
}

TypeBPartition normalize_merging(const TypeBPartition& p) {
    if (p.has_zero_content()) throw std::domain_error("requires an empty zero block");
    std::vector<Block> w = p.blocks;
    for (int i = static_cast<int>(w.size()) - 1; i >= 1; --i) {
        int mi = min_magnitude(w[i]);
        bool merging = max_magnitude(w[i - 1]) < mi;
        if (merging) {
            Block kept;
            for (int v : w[i]) {
                if (v < 0) insert_sorted(w[i - 1], v);
                else kept.push_back(v);
            }
            w[i] = std::move(kept);
        } else {
            bool clean = std::all_of(w[i].begin(), w[i].end(), [](int v) { return v > 0; });
            int max_unbarred = 0;
            for (int v : w[i - 1])
                if (v > 0) max_unbarred = std::max(max_unbarred, v);
            if (clean && max_unbarred < mi) {
                Block kept;
                for (int v : w[i - 1]) {
                    if (v < 0 && -v > mi) insert_sorted(w[i], v);
                    else kept.push_back(v);
                }
                w[i - 1] = std::move(kept);
            }
        }
    }
    return rebuild_canonical(p.n, {}, std::move(w));
}

TypeBPartition normalize_merging_inverse(const TypeBPartition& p) {
    if (p.has_zero_content()) throw std::domain_error("requires an empty zero block");
    std::vector<Block> w = p.blocks;
    for (int i = 1; i < static_cast<int>(w.size()); ++i) {
        int mi = min_magnitude(w[i]);
        bool clean = std::all_of(w[i].begin(), w[i].end(), [](int v) { return v > 0; });
        int max_signed = *std::max_element(w[i - 1].begin(), w[i - 1].end());
        if (clean && max_signed < mi) {
            Block kept;
            for (int v : w[i - 1]) {
                if (v < 0 && -v > mi) insert_sorted(w[i], v);
                else kept.push_back(v);
            }
            w[i - 1] = std::move(kept);
        } else if (max_magnitude(w[i - 1]) < mi && !clean) {
            Block kept;
            for (int v : w[i]) {
                if (v < 0) insert_sorted(w[i - 1], v);
                else kept.push_back(v);
            }
            w[i] = std::move(kept);
        }
    }
    return rebuild_canonical(p.n, {}, std::move(w));
}

TypeBPartition to_merging_free(const TypeBPartition& p) {
    std::vector<int> singletons;
    std::vector<std::vector<int>> work;
    {
        std::vector<int> front;  // the zero block, 0 spelled out
        front.push_back(0);
        for (int m : p.zero_block) front.push_back(m);
        work.push_back(std::move(front));
    }
    for (const Block& b : p.blocks) {
        if (b.size() == 1) singletons.push_back(b[0]);
        else work.push_back(b);
    }

    // Shift each minimum one block right; the last spawns a new block.
    work.push_back({});
    for (int i = static_cast<int>(work.size()) - 2; i >= 0; --i) {
        int best = 0;
        for (size_t t = 1; t < work[i].size(); ++t)
            if (magnitude(work[i][t]) < magnitude(work[i][best])) best = static_cast<int>(t);
        work[i + 1].push_back(work[i][best]);
        work[i].erase(work[i].begin() + best);
    }
    std::vector<int> residue = std::move(work.front());  // former zero content, 0 has left
    work.erase(work.begin());

    auto rightmost_with_min_below = [&](int a) -> int {
        int found = -1;
        for (size_t i = 0; i < work.size(); ++i)
            if (!work[i].empty() && min_magnitude(work[i]) < a) found = static_cast<int>(i);
        return found;
    };
    std::sort(residue.begin(), residue.end());
    for (int a : residue) work[rightmost_with_min_below(a)].push_back(-a);
    std::sort(singletons.begin(), singletons.end());
    for (int a : singletons) work[rightmost_with_min_below(a)].push_back(a);

    for (auto& b : work)
        for (int& v : b) v = shift_up(v);
    TypeBPartition out = rebuild_canonical(p.n + 1, {}, std::move(work));
    if (out.has_zero_content() || !is_merging_free(out))
        throw std::logic_error("image left the merging-free class");
    return out;
}

TypeBPartition from_merging_free(const TypeBPartition& q) {
    if (q.has_zero_content() || !is_merging_free(q))
        throw std::domain_error("inverse requires a merging-free partition without zero block");
    std::vector<std::vector<int>> w = q.blocks;
    for (auto& b : w)
        for (int& v : b) v = shift_down(v);

    std::vector<int> singletons;
    std::vector<int> residue;
    for (size_t i = 0; i < w.size(); ++i) {
        int next_min = i + 1 < w.size() ? min_magnitude(w[i + 1]) : kNoNext;
        int own_min = min_magnitude(w[i]);
        std::vector<int> kept;
        for (int v : w[i]) {
            if (v > 0 && v != own_min && v < next_min) singletons.push_back(v);
            else kept.push_back(v);
        }
        w[i] = std::move(kept);
    }
    for (size_t i = 0; i < w.size(); ++i) {
        int next_min = i + 1 < w.size() ? min_magnitude(w[i + 1]) : kNoNext;
        std::vector<int> kept;
        for (int v : w[i]) {
            if (v < 0 && -v < next_min) residue.push_back(-v);
            else kept.push_back(v);
        }
        w[i] = std::move(kept);
    }

    // Move minima one block left; the residue opens the zero block.
    std::vector<std::vector<int>> chain;
    chain.push_back(std::move(residue));
    for (auto& b : w) chain.push_back(std::move(b));
    for (size_t i = 1; i < chain.size(); ++i) {
        int best = -1;
        for (size_t t = 0; t < chain[i].size(); ++t)
            if (best < 0 || magnitude(chain[i][t]) < magnitude(chain[i][best]))
                best = static_cast<int>(t);
        if (best < 0) throw std::logic_error("malformed inverse state");
        chain[i - 1].push_back(chain[i][best]);
        chain[i].erase(chain[i].begin() + best);
    }

    std::vector<int> zero_content;
    for (int v : chain[0]) {
        if (v == 0) continue;
        if (v < 0) throw std::logic_error("barred element trapped in the zero block");
        zero_content.push_back(v);
    }
    std::vector<Block> blocks(chain.begin() + 1, chain.end());
    for (int s : singletons) blocks.push_back({s});
    return rebuild_canonical(q.n - 1, std::move(zero_content), std::move(blocks));
}

TypeBPartition to_separated(const TypeBPartition& p) {
    std::vector<int> zero;  // signed working copy of the zero content
    for (int m : p.zero_block) zero.push_back(m);
    std::vector<Block> blocks = p.blocks;

    auto zero_slot = [&](int mag) -> int {
        for (size_t i = 0; i < zero.size(); ++i)
            if (magnitude(zero[i]) == mag) return static_cast<int>(i);
        return -1;
    };
    auto occurrence_unbarred = [&](int mag) -> bool {
        if (mag == 0) return true;  // the implicit 0 is unbarred
        int zi = zero_slot(mag);
        if (zi >= 0) return zero[zi] > 0;
        auto [bi, pos] = locate(blocks, mag);
        return blocks[bi][pos] > 0;
    };

    for (int a = 1; a <= p.n; ++a) {
        int zi = zero_slot(a);
        if (zi >= 0) {
            // Bar a exactly when the current occurrence of a-1 is unbarred, so
            // consecutive first-block values alternate and nothing in a signed
            // block matches the sign of a zero-block neighbour.
            zero[zi] = occurrence_unbarred(a - 1) ? -a : a;
            continue;
        }
        auto [bi, pos] = locate(blocks, a);
        int v = blocks[bi][pos];
        if (pos > 0 && magnitude(blocks[bi][pos - 1]) == a - 1 &&
            (blocks[bi][pos - 1] < 0) == (v < 0)) {
            blocks[bi].erase(blocks[bi].begin() + pos);
            insert_sorted(zero, v);
        }
    }

    std::vector<Block> out;
    Block first;
    first.push_back(1);
    for (int v : zero) first.push_back(shift_up(v));
    out.push_back(std::move(first));
    for (auto& b : blocks) {
        for (int& v : b) v = shift_up(v);
        out.push_back(std::move(b));
    }
    TypeBPartition img = rebuild_canonical(p.n + 1, {}, std::move(out));
    if (img.has_zero_content() || !is_separated(img))
        throw std::logic_error("image left the separated class");
    return img;
}

TypeBPartition from_separated(const TypeBPartition& q) {
    if (q.has_zero_content() || !is_separated(q))
        throw std::domain_error("inverse requires a separated partition without zero block");
    std::vector<std::vector<int>> w = q.blocks;
    for (auto& b : w)
        for (int& v : b) v = shift_down(v);
    if (w.empty()) return rebuild_canonical(0, {}, {});

    std::vector<int>& first = w[0];
    auto first_slot = [&](int mag) -> int {
        for (size_t i = 0; i < first.size(); ++i)
            if (magnitude(first[i]) == mag) return static_cast<int>(i);
        return -1;
    };
    for (int a = 2; a <= q.n - 1; ++a) {
        int sa = first_slot(a);
        if (sa < 0) continue;
        int sprev = first_slot(a - 1);
        if (sprev >= 0) {
            if (first[sa] < 0 || first[sprev] < 0) {
                first[sa] = magnitude(first[sa]);
                first[sprev] = magnitude(first[sprev]);
            }
            continue;
        }
        // Same-signed predecessor in a signed block pulls a back there.
        int v = first[sa];
        for (size_t j = 1; j < w.size(); ++j)
            for (int u : w[j])
                if (magnitude(u) == a - 1 && (u < 0) == (v < 0)) {
                    first.erase(first.begin() + sa);
                    insert_sorted(w[j], v);
                    goto moved;
                }
    moved:;
    }

    std::vector<int> zero_content;
    for (int v : first)
        if (v != 0) zero_content.push_back(magnitude(v));
    std::vector<Block> blocks(w.begin() + 1, w.end());
    return rebuild_canonical(q.n - 1, std::move(zero_content), std::move(blocks));
}

TypeBPartition to_mf_separated(const TypeBPartition& p) {
    if (p.has_zero_content()) throw std::domain_error("requires an empty zero block");
    std::vector<int> singletons;
    std::vector<std::vector<int>> work;
    for (const Block& b : p.blocks) {
        if (b.size() == 1) singletons.push_back(b[0]);
        else work.push_back(b);
    }

    work.push_back({});
    for (int i = static_cast<int>(work.size()) - 2; i >= 0; --i) {
        int best = 0;
        for (size_t t = 1; t < work[i].size(); ++t)
            if (magnitude(work[i][t]) < magnitude(work[i][best])) best = static_cast<int>(t);
        work[i + 1].push_back(work[i][best]);
        work[i].erase(work[i].begin() + best);
    }
    if (work.back().empty()) work.pop_back();  // no non-singleton blocks at all
    for (auto& b : work)
        for (int& v : b) v = shift_up(v);
    if (work.empty()) work.push_back({});
    work[0].push_back(1);

    auto rightmost_with_min_below = [&](int a) -> int {
        int found = -1;
        for (size_t i = 0; i < work.size(); ++i)
            if (!work[i].empty() && min_magnitude(work[i]) < a) found = static_cast<int>(i);
        return found;
    };

    // Break the successions the shift created, smallest first.
    for (int a = 2; a <= p.n + 1; ++a) {
        int block = -1, at = -1;
        for (size_t i = 0; i < work.size() && block < 0; ++i)
            for (size_t t = 0; t < work[i].size(); ++t)
                if (magnitude(work[i][t]) == a) { block = static_cast<int>(i); at = static_cast<int>(t); break; }
        if (block < 0) continue;  // a singleton, inserted later
        int v = work[block][at];
        bool succ = false;
        for (int u : work[block])
            if (magnitude(u) == a - 1 && (u < 0) == (v < 0)) succ = true;
        if (!succ) continue;
        work[block].erase(work[block].begin() + at);
        int target = rightmost_with_min_below(a);
        work[target].push_back(v);
    }

    std::sort(singletons.begin(), singletons.end());
    for (int s : singletons) {
        int vmag = s + 1;
        int sign_prev = 0;
        for (const auto& b : work)
            for (int u : b)
                if (magnitude(u) == s) sign_prev = u > 0 ? 1 : -1;
        int target = rightmost_with_min_below(vmag);
        work[target].push_back(sign_prev > 0 ? -vmag : vmag);
    }

    TypeBPartition out = rebuild_canonical(p.n + 1, {}, std::move(work));
    if (out.has_zero_content() || !is_merging_free(out) || !is_separated(out))
        throw std::logic_error("image left the merging-free separated class");
    return out;
}

TypeBPartition from_mf_separated(const TypeBPartition& q) {
    if (q.has_zero_content() || !is_merging_free(q) || !is_separated(q))
        throw std::domain_error("inverse requires a merging-free separated partition");
    std::vector<std::vector<int>> w = q.blocks;
    if (w.empty()) return rebuild_canonical(0, {}, {});

    // The block minima of the image are the anchors every other element is
    // judged against; fix them before any deletion can promote an inserted
    // element into a minimum slot.
    std::set<int> protected_mags;
    for (const auto& b : w) protected_mags.insert(min_magnitude(b) - 1);
    protected_mags.erase(0);  // the deleted leading 1

    {
        auto& first = w[0];
        auto it = std::find(first.begin(), first.end(), 1);
        if (it == first.end()) throw std::logic_error("leading 1 missing");
        first.erase(it);
    }
    for (auto& b : w)
        for (int& v : b) v = shift_down(v);
    if (!w.empty() && w[0].empty()) w.erase(w.begin());

    int n = q.n - 1;
    std::map<int, int> removed_sign;  // magnitude -> sign at removal time
    std::vector<int> removed_order;
    for (int a = 1; a <= n; ++a) {
        if (protected_mags.count(a)) continue;
        int block = -1, at = -1;
        for (size_t i = 0; i < w.size() && block < 0; ++i)
            for (size_t t = 0; t < w[i].size(); ++t)
                if (magnitude(w[i][t]) == a) { block = static_cast<int>(i); at = static_cast<int>(t); break; }
        if (block < 0) throw std::logic_error("magnitude vanished");
        int next_min = block + 1 < static_cast<int>(w.size()) ? min_magnitude(w[block + 1]) : kNoNext;
        if (a >= next_min) continue;
        int v = w[block][at];
        int prev_sign = 0;
        if (a == 1) {
            prev_sign = 1;  // the deleted leading 1 was unbarred
        } else if (auto rit = removed_sign.find(a - 1); rit != removed_sign.end()) {
            prev_sign = rit->second;
        } else {
            for (const auto& b : w)
                for (int u : b)
                    if (magnitude(u) == a - 1) prev_sign = u > 0 ? 1 : -1;
        }
        if (prev_sign == 0) throw std::logic_error("predecessor vanished");
        if ((v > 0 ? 1 : -1) != prev_sign) {
            removed_sign[a] = v > 0 ? 1 : -1;
            removed_order.push_back(a);
            w[block].erase(w[block].begin() + at);
        } else {
            // same sign: return a to the block of a-1
            int home = -1;
            for (size_t i = 0; i < w.size() && home < 0; ++i)
                for (int u : w[i])
                    if (magnitude(u) == a - 1) { home = static_cast<int>(i); break; }
            if (home < 0) throw std::logic_error("move target vanished");
            w[block].erase(w[block].begin() + at);
            insert_sorted(w[home], v);
        }
    }

    for (size_t i = 1; i < w.size(); ++i) {
        int best = -1;
        for (size_t t = 0; t < w[i].size(); ++t)
            if (best < 0 || magnitude(w[i][t]) < magnitude(w[i][best])) best = static_cast<int>(t);
        if (best < 0) continue;
        w[i - 1].push_back(w[i][best]);
        w[i].erase(w[i].begin() + best);
    }

    std::vector<Block> blocks;
    for (auto& b : w)
        if (!b.empty()) blocks.push_back(std::move(b));
    for (int a : removed_order) blocks.push_back({a});
    return rebuild_canonical(n, {}, std::move(blocks));
}

bool MapReport::ok() const {
    if (!injective || !image_correct || !roundtrip_ok) return false;
    for (const auto& c : statistic_checks)
        if (!c.pass) return false;
    return true;
}

std::string MapReport::to_json() const {
    nlohmann::json j;
    j["map_name"] = map_name;
    j["n"] = n;
    j["domain_size"] = domain_size;
    j["image_size"] = image_size;
    j["injective"] = injective;
    j["image_correct"] = image_correct;
    j["roundtrip_ok"] = roundtrip_ok;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : statistic_checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    j["statistic_checks"] = checks;
    nlohmann::json ce = nlohmann::json::array();
    for (const auto& [a, b] : counterexamples) ce.push_back({a, b});
    j["counterexamples"] = ce;
    j["ok"] = ok();
    return j.dump();
}

namespace {

struct PairedMapSpec {
    PartitionClass domain;
    PartitionClass codomain;  // at rank n+1
    TypeBPartition (*forward)(const TypeBPartition&);
    TypeBPartition (*inverse)(const TypeBPartition&);
    // per-element statistic transport; empty name disables the check
    std::string stat_name;
    bool (*stat)(const TypeBPartition& src, const TypeBPartition& img);
};

bool g_block_count_stat(const TypeBPartition& src, const TypeBPartition& img) {
    // zero-inclusive count on the source side: the zero block always counts
    return src.signed_block_count() + 1 == img.signed_block_count();
}

bool h_block_count_stat(const TypeBPartition& src, const TypeBPartition& img) {
    int non_singleton = 0;
    for (const Block& b : src.blocks)
        if (b.size() > 1) ++non_singleton;
    return non_singleton + 1 == img.signed_block_count();
}

bool no_stat(const TypeBPartition&, const TypeBPartition&) { return true; }

MapReport verify_paired_map(const std::string& name, int n, const PairedMapSpec& spec, int jobs) {
    MapReport rep;
    rep.map_name = name;
    rep.n = n;
    std::vector<TypeBPartition> domain = enumerate_to_vector(n, spec.domain);
    std::vector<TypeBPartition> codomain = enumerate_to_vector(n + 1, spec.codomain);
    rep.domain_size = static_cast<long long>(domain.size());

    struct Shard {
        std::vector<TypeBPartition> images;
        bool member_ok = true, roundtrip_ok = true, stat_ok = true;
        std::vector<std::pair<std::string, std::string>> bad;
    };
    auto run_shard = [&](size_t lo, size_t hi) {
        Shard sh;
        for (size_t idx = lo; idx < hi; ++idx) {
            const TypeBPartition& p = domain[idx];
            TypeBPartition img = spec.forward(p);
            img.validate();
            if (!partition_in_class(img, spec.codomain)) {
                sh.member_ok = false;
                if (sh.bad.size() < 5) sh.bad.push_back({format_partition(p), format_partition(img)});
            }
            if (spec.inverse(img) != p) {
                sh.roundtrip_ok = false;
                if (sh.bad.size() < 5) sh.bad.push_back({format_partition(p), format_partition(img)});
            }
            if (!spec.stat(p, img)) {
                sh.stat_ok = false;
                if (sh.bad.size() < 5) sh.bad.push_back({format_partition(p), format_partition(img)});
            }
            sh.images.push_back(std::move(img));
        }
        return sh;
    };

    std::vector<Shard> shards;
    if (jobs <= 1 || domain.size() < 64) {
        shards.push_back(run_shard(0, domain.size()));
    } else {
        size_t chunk = (domain.size() + jobs - 1) / jobs;
        std::vector<std::future<Shard>> futs;
        for (size_t lo = 0; lo < domain.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, run_shard, lo,
                                      std::min(domain.size(), lo + chunk)));
        for (auto& f : futs) shards.push_back(f.get());
    }

    std::set<TypeBPartition> image_set;
    bool member_ok = true, roundtrip_fwd = true, stat_ok = true;
    for (auto& sh : shards) {
        member_ok = member_ok && sh.member_ok;
        roundtrip_fwd = roundtrip_fwd && sh.roundtrip_ok;
        stat_ok = stat_ok && sh.stat_ok;
        for (auto& img : sh.images) image_set.insert(std::move(img));
        for (auto& b : sh.bad)
            if (rep.counterexamples.size() < 5) rep.counterexamples.push_back(std::move(b));
    }
    rep.image_size = static_cast<long long>(image_set.size());
    rep.injective = image_set.size() == domain.size();

    std::set<TypeBPartition> codomain_set(codomain.begin(), codomain.end());
    bool surjective = image_set == codomain_set;
    rep.image_correct = member_ok && surjective;

    bool roundtrip_inv = true;
    for (const TypeBPartition& q : codomain)
        if (spec.forward(spec.inverse(q)) != q) {
            roundtrip_inv = false;
            break;
        }
    rep.roundtrip_ok = roundtrip_fwd && roundtrip_inv;
    if (!spec.stat_name.empty()) rep.statistic_checks.push_back({spec.stat_name, stat_ok});
    return rep;
}

MapReport verify_eta(int n) {
    MapReport rep;
    rep.map_name = "eta";
    rep.n = n;
    std::vector<TypeBPartition> domain = enumerate_to_vector(n, PartitionClass::NoZero);
    rep.domain_size = static_cast<long long>(domain.size());
    std::set<TypeBPartition> images;
    bool member_ok = true, roundtrip = true, transport = true, fixes_mf = true;
    for (const TypeBPartition& p : domain) {
        TypeBPartition q = normalize_merging(p);
        q.validate();
        if (q.has_zero_content()) member_ok = false;
        int mb = partition_stats(p).mb;
        if (static_cast<int>(normal_merging_indices(q).size()) != mb) {
            transport = false;
            if (rep.counterexamples.size() < 5)
                rep.counterexamples.push_back({format_partition(p), format_partition(q)});
        }
        if (normalize_merging_inverse(q) != p) {
            roundtrip = false;
            if (rep.counterexamples.size() < 5)
                rep.counterexamples.push_back({format_partition(p), format_partition(q)});
        }
        // merging-free partitions with no phantom pattern stay fixed
        if (is_merging_free(p) && normal_merging_indices(p).empty() && q != p) fixes_mf = false;
        images.insert(std::move(q));
    }
    rep.image_size = static_cast<long long>(images.size());
    rep.injective = images.size() == domain.size();
    std::set<TypeBPartition> domain_set(domain.begin(), domain.end());
    rep.image_correct = member_ok && images == domain_set;
    rep.roundtrip_ok = roundtrip;
    rep.statistic_checks.push_back({"normal_merging_count_equals_mb", transport});
    rep.statistic_checks.push_back({"plain_merging_free_fixed", fixes_mf});
    return rep;
}

MapReport verify_psi(int n) {
    MapReport rep;
    rep.map_name = "psi";
    rep.n = n;
    std::vector<TypeBPartition> domain = enumerate_to_vector(n, PartitionClass::NoZero);
    rep.domain_size = static_cast<long long>(domain.size());
    std::set<TypeBPartition> images;
    bool exchange_ok = true, nmb_ok = true, double_ok = true, member_ok = true;
    for (const TypeBPartition& p : domain) {
        PartitionStats before = partition_stats(p);
        TypeBPartition q = exchange_statistics(p, before.mb_set, before.succ_set);
        q.validate();
        if (q.has_zero_content()) member_ok = false;
        PartitionStats after = partition_stats(q);
        if (after.mb != before.suc || after.suc != before.mb) {
            exchange_ok = false;
            if (rep.counterexamples.size() < 5)
                rep.counterexamples.push_back({format_partition(p), format_partition(q)});
        }
        if (after.nmb != before.nmb) nmb_ok = false;
        TypeBPartition r = exchange_statistics(q, after.mb_set, after.succ_set);
        PartitionStats back = partition_stats(r);
        if (back.mb != before.mb || back.suc != before.suc) double_ok = false;
        images.insert(std::move(q));
    }
    rep.image_size = static_cast<long long>(images.size());
    rep.injective = images.size() == domain.size();
    std::set<TypeBPartition> domain_set(domain.begin(), domain.end());
    rep.image_correct = member_ok && images == domain_set;
    rep.roundtrip_ok = double_ok;
    rep.statistic_checks.push_back({"mb_suc_exchanged", exchange_ok});
    rep.statistic_checks.push_back({"nmb_fixed", nmb_ok});
    return rep;
}

MapReport verify_mu_rho(int n) {
    MapReport rep;
    rep.map_name = "mu_rho";
    rep.n = n;
    std::vector<TypeBPartition> domain = enumerate_to_vector(n, PartitionClass::NoZero);
    bool mu_ok = true, rho_ok = true, nmb_ok = true;
    long long pairs = 0;
    for (const TypeBPartition& p : domain) {
        PartitionStats st = partition_stats(p);
        for (int a : st.mb_set) {
            ++pairs;
            TypeBPartition q = merging_to_succession(p, a);
            q.validate();
            PartitionStats qs = partition_stats(q);
            if (!std::binary_search(qs.succ_set.begin(), qs.succ_set.end(), a)) mu_ok = false;
            if (non_merging_minima(p) != non_merging_minima(q)) nmb_ok = false;
            if (succession_to_merging(q, a) != p) {
                mu_ok = false;
                if (rep.counterexamples.size() < 5)
                    rep.counterexamples.push_back({format_partition(p), format_partition(q)});
            }
        }
        for (int b : st.succ_set) {
            ++pairs;
            TypeBPartition q = succession_to_merging(p, b);
            q.validate();
            PartitionStats qs = partition_stats(q);
            if (!std::binary_search(qs.mb_set.begin(), qs.mb_set.end(), b)) rho_ok = false;
            if (non_merging_minima(p) != non_merging_minima(q)) nmb_ok = false;
            if (merging_to_succession(q, b) != p) {
                rho_ok = false;
                if (rep.counterexamples.size() < 5)
                    rep.counterexamples.push_back({format_partition(p), format_partition(q)});
            }
        }
    }
    rep.domain_size = pairs;
    rep.image_size = pairs;
    rep.injective = mu_ok && rho_ok;
    rep.image_correct = mu_ok && rho_ok;
    rep.roundtrip_ok = mu_ok && rho_ok;
    rep.statistic_checks.push_back({"mu_creates_succession_and_inverts", mu_ok});
    rep.statistic_checks.push_back({"rho_creates_merging_min_and_inverts", rho_ok});
    rep.statistic_checks.push_back({"non_merging_minima_preserved", nmb_ok});
    return rep;
}

}  // namespace

MapReport verify_bijection(const std::string& map_name, int n, int jobs) {
    if (map_name == "f")
        return verify_paired_map("f", n,
                                 {PartitionClass::All, PartitionClass::MergingFree,
                                  &to_merging_free, &from_merging_free, "", &no_stat},
                                 jobs);
    if (map_name == "g")
        return verify_paired_map("g", n,
                                 {PartitionClass::All, PartitionClass::Separated, &to_separated,
                                  &from_separated, "block_count_preserved", &g_block_count_stat},
                                 jobs);
    if (map_name == "h")
        return verify_paired_map("h", n,
                                 {PartitionClass::NoZero, PartitionClass::MfSeparated,
                                  &to_mf_separated, &from_mf_separated,
                                  "non_singleton_blocks_plus_one", &h_block_count_stat},
                                 jobs);
    if (map_name == "eta") return verify_eta(n);
    if (map_name == "psi") return verify_psi(n);
    if (map_name == "mu_rho") return verify_mu_rho(n);
    if (map_name == "stirling") return verify_stirling_word_map(n);
    throw std::invalid_argument("unknown map name: " + map_name);
}

}  // namespace typeb
