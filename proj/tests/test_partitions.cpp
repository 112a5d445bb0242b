#include "doctest.h"

#include <stdexcept>
#include "typeb/partition.hpp"

#include <set>

using namespace typeb;

TEST_CASE("parse and format the canonical example") {
    TypeBPartition p = parse_partition("{0,4|1,-8|2,7|3,6,-9|5}");
    CHECK(p.n == 9);
    CHECK(p.zero_block == std::vector<int>{4});
    CHECK(p.signed_block_count() == 4);
    CHECK(p.blocks[1] == Block{2, 7});
    CHECK(format_partition(p) == "{0,4|1,-8|2,7|3,6,-9|5}");
}

TEST_CASE("parse accepts whitespace and the smallest partitions") {
    TypeBPartition p = parse_partition("{ 1 }");
    CHECK(p.n == 1);
    CHECK(p.signed_block_count() == 1);
    CHECK(!p.has_zero_content());

    TypeBPartition empty = parse_partition("{}");
    CHECK(empty.n == 0);
    CHECK(format_partition(empty) == "{}");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_partition("{1,2|2,3}"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(parse_partition("{-1,2}"), std::invalid_argument);    // barred leader
    CHECK_THROWS_AS(parse_partition("{1,3}"), std::invalid_argument);     // gap in magnitudes
    CHECK_THROWS_AS(parse_partition("{2,3|1}"), std::invalid_argument);   // minima out of order
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);       // no braces
    CHECK_THROWS_AS(parse_partition("{0|1}"), std::invalid_argument);     // empty zero block
    CHECK_THROWS_AS(parse_partition("{1,x}"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    TypeBPartition p = parse_partition("{0,4|1,-8|2,7|3,6,-9|5}");
    CHECK(partition_from_json(partition_to_json(p)) == p);
}

TEST_CASE("normalize reduces the full signed family to standard Adler form") {
    std::vector<std::vector<int>> family = {
        {-5}, {-3, -6, 9}, {-2, -7}, {-1, 8}, {1, -8}, {2, 7}, {3, 6, -9}, {5}};
    std::vector<int> zero = {0, -4, 4};
    TypeBPartition p = normalize_partition(family, zero);
    CHECK(format_partition(p) == "{0,4|1,-8|2,7|3,6,-9|5}");
}

TEST_CASE("normalize flips representatives with barred leaders") {
    TypeBPartition p = normalize_partition({{-1, 2}}, {});
    CHECK(format_partition(p) == "{1,-2}");
}

TEST_CASE("normalize of the expansion is the identity") {
    enumerate_partitions(4, PartitionClass::All, [](const TypeBPartition& p) {
        auto [family, zero] = expand_partition(p);
        CHECK(normalize_partition(family, zero) == p);
    });
}

TEST_CASE("enumeration counts match the first Dowling and w values") {
    std::vector<long long> dowling = {1, 2, 6, 24, 116, 648};
    for (int n = 0; n <= 5; ++n)
        CHECK(static_cast<long long>(enumerate_to_vector(n, PartitionClass::All).size()) ==
              dowling[n]);
    std::vector<long long> w = {1, 1, 3, 11, 49, 257, 1539};
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(enumerate_to_vector(n, PartitionClass::NoZero).size()) ==
              w[n]);
}

TEST_CASE("enumerate(1, all) gives the two rank-one partitions") {
    auto all = enumerate_to_vector(1, PartitionClass::All);
    std::set<std::string> got;
    for (const auto& p : all) got.insert(format_partition(p));
    CHECK(got == std::set<std::string>{"{0,1}", "{1}"});
}

TEST_CASE("enumerate emits valid canonical partitions exactly once") {
    std::set<TypeBPartition> seen;
    enumerate_partitions(5, PartitionClass::All, [&](const TypeBPartition& p) {
        CHECK_NOTHROW(p.validate());
        CHECK(parse_partition(format_partition(p)) == p);
        CHECK(seen.insert(p).second);
    });
    CHECK(seen.size() == 648);
}

TEST_CASE("merging-free separated class at rank four") {
    auto ms = enumerate_to_vector(4, PartitionClass::MfSeparated);
    CHECK(ms.size() == 11);  // 1 + 10 split over one and two blocks
    int one = 0, two = 0;
    for (const auto& p : ms) (p.signed_block_count() == 1 ? one : two) += 1;
    CHECK(one == 1);
    CHECK(two == 10);
}

TEST_CASE("k filter counts signed blocks") {
    CHECK(enumerate_to_vector(4, PartitionClass::NoZero, 2).size() == 28);
    CHECK(enumerate_to_vector(4, PartitionClass::NoZero, 1).size() == 8);
    // zero-inclusive convention: the zero block always counts as one block
    CHECK(enumerate_to_vector(2, PartitionClass::All, 2, true).size() ==
          enumerate_to_vector(2, PartitionClass::All, 1).size());
}

TEST_CASE("statistics of the worked example") {
    TypeBPartition p = parse_partition("{1,-10|2,5|3,4|6,-7,-8|9}");
    PartitionStats st = partition_stats(p);
    CHECK(st.mb_set == std::vector<int>{6, 9});
    CHECK(st.succ_set == std::vector<int>{4, 8});
    CHECK(st.mb == 2);
    CHECK(st.suc == 2);
    CHECK(st.nmb == 3);
}

TEST_CASE("statistics of the rank-three table entries") {
    PartitionStats a = partition_stats(parse_partition("{1,-2,3}"));
    CHECK(a.suc == 0);
    CHECK(a.mb == 0);
    PartitionStats b = partition_stats(parse_partition("{1|2|3}"));
    CHECK(b.suc == 0);
    CHECK(b.mb == 2);
    PartitionStats c = partition_stats(parse_partition("{1}"));
    CHECK(c.mb == 0);
    CHECK(c.suc == 0);
    CHECK(c.blocks_count == 1);
    CHECK(c.singletons == 1);
}

TEST_CASE("statistics require an empty zero block") {
    CHECK_THROWS_AS(partition_stats(parse_partition("{0,1|2}")), std::domain_error);
    CHECK(succession_count_with_zero(parse_partition("{0,2,3|1}")) == 1);
}

TEST_CASE("normal merging blocks use the signed comparison") {
    TypeBPartition p = parse_partition("{1|2,-6,-8|3,-4|5,7}");
    CHECK(normal_merging_indices(p) == std::vector<int>{4});
    CHECK(partition_stats(p).mb_set == std::vector<int>{2, 5});
    CHECK(normal_merging_indices(parse_partition("{1,2,3,4}")).empty());
}
