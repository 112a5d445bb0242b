#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace typeb {

// One entry of a block: a magnitude with an optional bar. Barred elements are
// written with a leading minus in the text format.
struct SignedElement {
    int magnitude = 0;
    bool barred = false;

    int value() const { return barred ? -magnitude : magnitude; }
    static SignedElement from_value(int v) {
        return SignedElement{v < 0 ? -v : v, v < 0};
    }
    auto operator<=>(const SignedElement&) const = default;
};

// A block is kept as signed values sorted by magnitude; the leader (smallest
// magnitude) is always unbarred in canonical form.
using Block = std::vector<int>;

enum class PartitionClass { All, NoZero, MergingFree, Separated, MfSeparated };

PartitionClass partition_class_from_string(const std::string& s);
std::string to_string(PartitionClass c);

// Canonical type B set partition of <n> = {0, +-1, ..., +-n}. Exactly one
// representative of each block pair is stored, with an unbarred leader, blocks
// ordered by strictly increasing minima. The zero block is stored as the set
// of positive magnitudes it contains; the 0 itself is implicit.
struct TypeBPartition {
    int n = 0;
    std::vector<int> zero_block;  // ascending positive magnitudes
    std::vector<Block> blocks;    // standard order

    bool has_zero_content() const { return !zero_block.empty(); }
    int signed_block_count() const { return static_cast<int>(blocks.size()); }
    int block_min(int i) const;  // 1-based, magnitude of the leader
    int block_max_magnitude(int i) const;

    // Throws std::invalid_argument when any canonical-form invariant fails.
    void validate() const;

    auto operator<=>(const TypeBPartition&) const = default;
};

struct PartitionStats {
    int blocks_count = 0;
    int mb = 0;
    int suc = 0;
    int nmb = 0;
    int singletons = 0;
    int non_singleton_blocks = 0;
    std::vector<int> mb_set;    // minima of merging blocks
    std::vector<int> succ_set;  // succession values
};

TypeBPartition parse_partition(const std::string& text);
std::string format_partition(const TypeBPartition& p);

// JSON form: array of blocks, the zero block (if any content) first and
// containing the literal 0.
std::string partition_to_json(const TypeBPartition& p);
TypeBPartition partition_from_json(const std::string& json_text);

// Reduces an arbitrary signed expansion (blocks possibly listed with both
// members of each +-pair, zero content possibly listed symmetrically with 0)
// to canonical form. Throws on inconsistent pairing or overlap.
TypeBPartition normalize_partition(const std::vector<std::vector<int>>& signed_blocks,
                                   const std::vector<int>& zero_content);

// Full signed family of a canonical partition: every +-block pair plus the
// symmetric zero block including 0 (present only when it has content).
std::pair<std::vector<std::vector<int>>, std::vector<int>>
expand_partition(const TypeBPartition& p);

// Statistics are defined on partitions without zero block.
PartitionStats partition_stats(const TypeBPartition& p);

// Succession count that also sees the zero block: consecutive stored
// magnitudes in the zero block count as successions.
int succession_count_with_zero(const TypeBPartition& p);

// 1-based indices i >= 2 whose block is normal-merging (signed comparison).
std::vector<int> normal_merging_indices(const TypeBPartition& p);

bool is_merging_free(const TypeBPartition& p);  // ignores the zero block
bool is_separated(const TypeBPartition& p);     // ignores the zero block
bool partition_in_class(const TypeBPartition& p, PartitionClass c);

// Minima of the non-merging blocks (block 1 included).
std::vector<int> non_merging_minima(const TypeBPartition& p);

// Emits every member of the class over <n> exactly once, in the canonical
// insertion order. k_filter restricts the number of signed blocks, or the
// number of blocks including the zero block when k_includes_zero is set.
void enumerate_partitions(int n, PartitionClass c,
                          const std::function<void(const TypeBPartition&)>& visit,
                          std::optional<int> k_filter = std::nullopt,
                          bool k_includes_zero = false);

std::vector<TypeBPartition> enumerate_to_vector(int n, PartitionClass c,
                                                std::optional<int> k_filter = std::nullopt,
                                                bool k_includes_zero = false);

// Rebuilds canonical form from arbitrary representative blocks (each block a
// set of signed values with distinct magnitudes). Used by the maps, which
// produce intermediate non-canonical block lists.
TypeBPartition rebuild_canonical(int n, std::vector<int> zero_content,
                                 std::vector<Block> blocks);

}  // namespace typeb
