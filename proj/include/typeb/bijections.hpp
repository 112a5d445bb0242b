#pragma once

#include <string>
#include <utility>
#include <vector>

#include "typeb/partition.hpp"

namespace typeb {

// Exchanges the membership of the maximal same-sign magnitude interval
// starting at a between blocks i and j (1-based). Identity when i == j or
// when neither block carries +-a.
TypeBPartition swap_interval(const TypeBPartition& p, int i, int j, int a);

// Turns the merging-block minimum a into a succession. Pre: a is the minimum
// of a merging block.
TypeBPartition merging_to_succession(const TypeBPartition& p, int a);

// Turns the succession a into the minimum of a merging block. Pre: a is a
// succession.
TypeBPartition succession_to_merging(const TypeBPartition& p, int a);

// Applies succession_to_merging over S (ascending) then merging_to_succession
// over R (ascending). With R = MB and S = Succ this exchanges the two
// statistics and fixes the non-merging count.
TypeBPartition exchange_statistics(const TypeBPartition& p, std::vector<int> mb_subset,
                                   std::vector<int> suc_subset);

// Boundary normalization carrying merging blocks to normal merging blocks:
// the i-th boundary either absorbs the barred part of a merging block into
// its left neighbour, or pushes oversized barred elements right to destroy a
// normal-merging pattern that no merging block backs. Processes boundaries
// right to left; the inverse runs left to right.
TypeBPartition normalize_merging(const TypeBPartition& p);
TypeBPartition normalize_merging_inverse(const TypeBPartition& p);

// Bijection onto merging-free partitions one rank up.
TypeBPartition to_merging_free(const TypeBPartition& p);
TypeBPartition from_merging_free(const TypeBPartition& p);

// Bijection onto separated partitions one rank up.
TypeBPartition to_separated(const TypeBPartition& p);
TypeBPartition from_separated(const TypeBPartition& p);

// Bijection from zero-block-free partitions onto merging-free separated
// partitions one rank up.
TypeBPartition to_mf_separated(const TypeBPartition& p);
TypeBPartition from_mf_separated(const TypeBPartition& p);

struct StatisticCheck {
    std::string name;
    bool pass = false;
};

struct MapReport {
    std::string map_name;
    int n = 0;
    long long domain_size = 0;
    long long image_size = 0;
    bool injective = false;
    bool image_correct = false;
    bool roundtrip_ok = false;
    std::vector<StatisticCheck> statistic_checks;
    std::vector<std::pair<std::string, std::string>> counterexamples;

    bool ok() const;
    std::string to_json() const;
};

// map_name in {f, g, h, eta, psi, mu_rho, stirling}. Exhausts the domain at
// rank n; jobs > 1 splits the element checks across threads.
MapReport verify_bijection(const std::string& map_name, int n, int jobs = 1);

}  // namespace typeb
