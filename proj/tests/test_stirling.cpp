#include "doctest.h"

#include <stdexcept>
#include "typeb/counting.hpp"
#include "typeb/stirling_words.hpp"

#include <map>
#include <set>

using namespace typeb;

TEST_CASE("classification of small words") {
    CHECK(classify_word({1, 1}).cls == WordClass::FlattenedStirling);
    CHECK(classify_word({1, 2, 2, 1}).cls == WordClass::FlattenedStirling);
    CHECK(classify_word({2, 2, 1, 1}).cls == WordClass::Stirling);
    CHECK(classify_word({1, 2, 1, 2}).cls == WordClass::NotStirling);
    CHECK(classify_word({1, 1, 1}).cls == WordClass::NotStirling);
    CHECK(classify_word({1, 2, 2, 1, 3, 3}).cls == WordClass::FlattenedStirling);
}

TEST_CASE("stirling word counts match the double factorials") {
    std::vector<long long> expected = {1, 1, 3, 15, 105};
    for (int order = 0; order <= 4; ++order) {
        long long count = 0;
        enumerate_stirling_words(order, [&](const std::vector<int>& w) {
            CHECK(classify_word(w).cls != WordClass::NotStirling);
            ++count;
        });
        CHECK(count == expected[order]);
    }
}

TEST_CASE("flattened word counts match the shifted Dowling numbers") {
    std::vector<BigInt> dow = dowling_numbers(5);
    for (int order = 1; order <= 5; ++order) {
        long long count = 0;
        enumerate_stirling_words(order, [&](const std::vector<int>& w) {
            if (classify_word(w).cls == WordClass::FlattenedStirling) ++count;
        });
        CHECK(BigInt(count) == dow[order - 1]);
    }
}

TEST_CASE("word encoding of the worked example") {
    TypeBPartition p = parse_partition("{1,-6,7|2,3,-4,8,-9,-10|5,-11,12}");
    std::vector<int> w = partition_to_word(p);
    CHECK(w == std::vector<int>{1, 4, 4, 11, 11, 1, 6, 6, 2, 7, 7, 2,
                                3, 3, 9, 9, 10, 10, 5, 8, 8, 5, 12, 12});
    CHECK(word_to_partition(w) == p);
}

TEST_CASE("word encoding of the smallest partitions") {
    CHECK(partition_to_word(parse_partition("{1}")) == std::vector<int>{1, 1});
    CHECK(word_to_partition({1, 1}) == parse_partition("{1}"));
    CHECK_THROWS_AS(partition_to_word(parse_partition("{1|2}")), std::domain_error);
    CHECK_THROWS_AS(word_to_partition({1, 2, 1, 2}), std::domain_error);
}

TEST_CASE("runs of the image start at the block minima") {
    enumerate_partitions(4, PartitionClass::MergingFree, [&](const TypeBPartition& p) {
        std::vector<int> w = partition_to_word(p);
        WordClassification cls = classify_word(w);
        REQUIRE(cls.cls == WordClass::FlattenedStirling);
        std::multiset<int> leaders;
        for (auto [a, b] : cls.runs) leaders.insert(w[a]);
        for (int i = 1; i <= p.signed_block_count(); ++i) CHECK(leaders.count(p.block_min(i)) >= 1);
    });
}

TEST_CASE("constructive inverse agrees with the search oracle") {
    for (int n = 1; n <= 4; ++n) {
        std::map<std::vector<int>, TypeBPartition> oracle;
        enumerate_partitions(n, PartitionClass::MergingFree, [&](const TypeBPartition& p) {
            oracle.emplace(partition_to_word(p), p);
        });
        enumerate_stirling_words(n, [&](const std::vector<int>& w) {
            if (classify_word(w).cls != WordClass::FlattenedStirling) return;
            auto it = oracle.find(w);
            REQUIRE(it != oracle.end());
            CHECK(word_to_partition(w) == it->second);
        });
    }
}

TEST_CASE("word map verification") {
    for (int n = 1; n <= 4; ++n) {
        MapReport rep = verify_stirling_word_map(n);
        INFO(rep.to_json());
        CHECK(rep.ok());
    }
}
