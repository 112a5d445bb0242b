#pragma once

#include <functional>
#include <string>
#include <vector>

#include "typeb/bijections.hpp"
#include "typeb/partition.hpp"

namespace typeb {

enum class WordClass { NotStirling, Stirling, FlattenedStirling };

struct WordClassification {
    WordClass cls = WordClass::NotStirling;
    int witness_position = -1;                 // first violation, -1 if none
    std::vector<std::pair<int, int>> runs;     // weakly increasing factors
};

std::string to_string(WordClass c);

// Word over the doubled multiset [n]_2, one letter per token.
WordClassification classify_word(const std::vector<int>& letters);

std::vector<int> parse_word(const std::string& text);
std::string format_word(const std::vector<int>& letters);

// Encodes a merging-free partition without zero block as a flattened
// Stirling word of the same order.
std::vector<int> partition_to_word(const TypeBPartition& p);

// Constructive inverse; throws when the word is not flattened Stirling or no
// preimage exists.
TypeBPartition word_to_partition(const std::vector<int>& letters);

// All Stirling words of the given order, built by doubling insertions.
void enumerate_stirling_words(int order, const std::function<void(const std::vector<int>&)>& visit);

MapReport verify_stirling_word_map(int n);

}  // namespace typeb
