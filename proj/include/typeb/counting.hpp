#pragma once

#include <string>
#include <vector>

#include "typeb/bigint.hpp"

namespace typeb {

enum class Provenance { Recurrence, ClosedForm, Enumeration };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// Triangle or plain sequence of exact integers. Sequences are stored as
// one-entry rows so every table shares the (n, k, value) export shape.
struct SequenceTable {
    std::string family;
    int max_n = 0;
    Provenance provenance = Provenance::Recurrence;
    std::vector<std::vector<BigInt>> rows;  // rows[n], trailing zeros trimmed

    bool is_sequence() const;
    const BigInt& at(int n, int k) const;  // 0 outside the stored row
    std::vector<BigInt> row_sums() const;
    std::string to_csv() const;   // header n,k,value
    std::string to_json() const;  // {family, max_n, provenance, rows:[["..."]]}
    static SequenceTable from_json(const std::string& text);
    // Parses the n,k,value shape back into rows; family metadata is not
    // carried by the CSV form and must be supplied.
    static SequenceTable from_csv(const std::string& text, const std::string& family,
                                  Provenance provenance);
};

BigInt binomial(int n, int k);

// name in {stirling2, bell, dowling, double_factorial}
SequenceTable classical_sequence(const std::string& name, int max_n);

std::vector<BigInt> stirling2_row(int n);
std::vector<BigInt> bell_numbers(int max_n);
std::vector<BigInt> dowling_numbers(int max_n);
std::vector<BigInt> double_factorials(int max_n);

// Type B Stirling triangle by its two-term recurrence.
SequenceTable sb_table(int max_n);

// Zero-block-free triangle; totals are cross-checked against the binomial
// transform of the Dowling numbers, the 2^(n-k)-weighted Stirling sum and the
// row sums. Throws std::logic_error on disagreement.
SequenceTable w_table(int max_n);
std::vector<BigInt> w_totals(int max_n);

// Triple-indexed refinement: value(n, s, k) = partitions without zero block
// with k blocks and s successions.
struct WksTable {
    int max_n = 0;
    std::vector<std::vector<std::vector<BigInt>>> value;  // [n][s][k]

    std::vector<BigInt> marginal_by_s(int n) const;
    std::vector<BigInt> marginal_by_k(int n) const;
    BigInt total(int n) const;
    std::string to_csv() const;   // header n,s,k,value
    std::string to_json() const;
};
WksTable wks_table(int max_n);

SequenceTable a_table(int max_n);       // run-sorted permutations by runs
SequenceTable b_table(int max_n);       // merging-free, no zero block, by blocks
SequenceTable btilde_table(int max_n);  // barred-only-at-top subfamily
SequenceTable u_table(int max_n);       // merging-free separated, by blocks

enum class DMethod { Recurrence, Formula, Enumeration };
DMethod d_method_from_string(const std::string& s);
std::string to_string(DMethod m);

// Descents over flattened merging-free partitions.
SequenceTable d_table(int max_n, DMethod method);

// Enumerated distributions over partitions without zero block.
SequenceTable mb_distribution(int max_n);
SequenceTable suc_distribution(int max_n);
SequenceTable normal_mb_distribution(int max_n);

// Type A merging-free separated partitions of [n] by block count.
SequenceTable type_a_mf_separated_table(int max_n);

struct IdentityReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const;
    std::string to_json() const;
};
IdentityReport identity_suite(int max_n);

SequenceTable table_by_name(const std::string& family, int max_n,
                            DMethod d_method = DMethod::Recurrence);

}  // namespace typeb
