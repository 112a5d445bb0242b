#include "doctest.h"

#include <stdexcept>
#include "typeb/counting.hpp"
#include "typeb/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

using namespace typeb;

namespace {

// Independent oracle: type A set partitions by direct insertion.
long long count_type_a_partitions(int n) {
    long long count = 0;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            ++count;
            return;
        }
        for (auto& b : blocks) {
            b.push_back(m);
            rec(m + 1);
            b.pop_back();
        }
        blocks.push_back({m});
        rec(m + 1);
        blocks.pop_back();
    };
    rec(1);
    return count;
}

// Independent oracle: run-sorted permutations of [n] counted by runs.
std::map<int, long long> run_sorted_by_runs(int n) {
    std::map<int, long long> hist;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int runs = 1;
        bool run_sorted = true;
        int run_leader = perm[0];
        for (int i = 1; i < n; ++i)
            if (perm[i] < perm[i - 1]) {
                ++runs;
                if (perm[i] < run_leader) run_sorted = false;
                run_leader = perm[i];
            }
        if (perm[0] != 1) run_sorted = false;
        if (run_sorted) ++hist[runs];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hist;
}

}  // namespace

TEST_CASE("dowling numbers") {
    std::vector<BigInt> d = dowling_numbers(7);
    CHECK(d == std::vector<BigInt>{1, 2, 6, 24, 116, 648, 4088, 28640});
}

TEST_CASE("stirling triangle basics") {
    SequenceTable s = classical_sequence("stirling2", 4);
    CHECK(s.at(0, 0) == 1);
    CHECK(s.at(3, 0) == 0);
    CHECK(s.rows[4] == std::vector<BigInt>{0, 1, 7, 6, 1});
}

TEST_CASE("bell numbers against the brute-force oracle") {
    std::vector<BigInt> b = bell_numbers(6);
    CHECK(b == std::vector<BigInt>{1, 1, 2, 5, 15, 52, 203});
    for (int n = 0; n <= 6; ++n) CHECK(b[n] == count_type_a_partitions(n));
}

TEST_CASE("double factorials") {
    CHECK(double_factorials(5) == std::vector<BigInt>{1, 1, 3, 15, 105, 945});
}

TEST_CASE("classical_sequence rejects unknown names") {
    CHECK_THROWS_AS(classical_sequence("nope", 3), std::invalid_argument);
}

TEST_CASE("type B Stirling triangle") {
    SequenceTable sb = sb_table(8);
    CHECK(sb.rows[1] == std::vector<BigInt>{1, 1});
    auto sums = sb.row_sums();
    auto dow = dowling_numbers(8);
    for (int n = 0; n <= 8; ++n) CHECK(sums[n] == dow[n]);
}

TEST_CASE("type B Stirling counts signed blocks by enumeration") {
    SequenceTable sb = sb_table(5);
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(sb.at(n, k) ==
                  BigInt(enumerate_to_vector(n, PartitionClass::All, k).size()));
}

TEST_CASE("w table and its closed forms") {
    SequenceTable w = w_table(7);
    auto totals = w.row_sums();
    CHECK(totals == std::vector<BigInt>{1, 1, 3, 11, 49, 257, 1539, 10299});
    CHECK(w.at(4, 2) == 28);
    // 49 = 8*1 + 4*7 + 2*6 + 1*1 from the Stirling row (1,7,6,1)
    CHECK(totals[4] == 8 * 1 + 4 * 7 + 2 * 6 + 1 * 1);
}

TEST_CASE("succession-refined triple table") {
    WksTable t = wks_table(6);
    CHECK(t.value[1][0][1] == 1);
    CHECK(t.value[2][0][1] == 1);
    CHECK(t.value[2][1][1] == 1);
    CHECK(t.value[2][0][2] == 1);
    auto w = w_totals(6);
    for (int n = 0; n <= 6; ++n) CHECK(t.total(n) == w[n]);
}

TEST_CASE("succession marginals match the enumerated distribution") {
    WksTable t = wks_table(6);
    SequenceTable suc = suc_distribution(6);
    for (int n = 1; n <= 6; ++n) {
        auto marg = t.marginal_by_s(n);
        for (int s = 0; s < static_cast<int>(marg.size()); ++s)
            CHECK(marg[s] == suc.at(n, s));
    }
}

TEST_CASE("run-sorted triangle against the permutation oracle") {
    SequenceTable a = a_table(6);
    for (int n = 1; n <= 6; ++n) {
        auto hist = run_sorted_by_runs(n);
        for (int k = 1; k <= n; ++k)
            CHECK(a.at(n, k) == BigInt(hist.count(k) ? hist[k] : 0));
    }
    auto bell = bell_numbers(7);
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& v : a.rows[n]) total += v;
        CHECK(total == bell[n - 1]);
    }
}

TEST_CASE("merging-free triangles by enumeration") {
    SequenceTable b = b_table(6);
    SequenceTable bt = btilde_table(6);
    CHECK(bt.at(4, 1) + bt.at(4, 2) == 9);
    for (int n = 1; n <= 6; ++n) {
        std::map<int, long long> by_blocks;
        std::map<int, long long> subset_by_blocks;
        enumerate_partitions(n, PartitionClass::MergingFree, [&](const TypeBPartition& p) {
            ++by_blocks[p.signed_block_count()];
            // barred entries only as block maxima, last block unbarred
            bool in_subset = true;
            for (int i = 0; i < p.signed_block_count(); ++i)
                for (size_t t = 0; t < p.blocks[i].size(); ++t) {
                    bool barred = p.blocks[i][t] < 0;
                    bool last_block = i + 1 == p.signed_block_count();
                    bool is_max = t + 1 == p.blocks[i].size();
                    if (barred && (last_block || !is_max)) in_subset = false;
                }
            if (in_subset) ++subset_by_blocks[p.signed_block_count()];
        });
        for (int k = 1; k <= n; ++k) {
            CHECK(b.at(n, k) == BigInt(by_blocks.count(k) ? by_blocks[k] : 0));
            CHECK(bt.at(n, k) == BigInt(subset_by_blocks.count(k) ? subset_by_blocks[k] : 0));
        }
    }
}

TEST_CASE("merging-free separated triangle") {
    SequenceTable u = u_table(8);
    CHECK(u.rows[5] == std::vector<BigInt>{0, 1, 36, 12});
    CHECK(u.rows[8] == std::vector<BigInt>{0, 1, 1086, 6692, 2520});
    auto w = w_totals(7);
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& v : u.rows[n]) total += v;
        CHECK(total == w[n - 1]);
    }
    for (int n = 1; n <= 6; ++n) {
        std::map<int, long long> by_blocks;
        enumerate_partitions(n, PartitionClass::MfSeparated,
                             [&](const TypeBPartition& p) { ++by_blocks[p.signed_block_count()]; });
        for (int k = 1; k <= n; ++k)
            CHECK(u.at(n, k) == BigInt(by_blocks.count(k) ? by_blocks[k] : 0));
    }
}

TEST_CASE("descent triangle three ways") {
    SequenceTable rec = d_table(7, DMethod::Recurrence);
    SequenceTable closed = d_table(7, DMethod::Formula);
    SequenceTable enumd = d_table(6, DMethod::Enumeration);
    CHECK(rec.at(7, 3) == 1864);
    CHECK(rec.rows[4] == std::vector<BigInt>{1, 11, 11, 1});
    for (int n = 1; n <= 7; ++n) CHECK(rec.at(n, 0) == 1);
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(rec.at(n, k) == closed.at(n, k));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(rec.at(n, k) == enumd.at(n, k));
    // d(4,1) = 3 + 8 from the run-sorted expansion
    SequenceTable a = a_table(4);
    CHECK(rec.at(4, 1) == binomial(3, 1) * a.at(4, 1) + 2 * binomial(1, 0) * a.at(4, 2));
}

TEST_CASE("distribution tables match the first rows of the reference triangle") {
    std::vector<std::vector<BigInt>> table1 = {
        {1}, {2, 1}, {6, 4, 1}, {24, 18, 6, 1}, {116, 96, 36, 8, 1}, {648, 580, 240, 60, 10, 1}};
    SequenceTable mb = mb_distribution(6);
    SequenceTable suc = suc_distribution(6);
    SequenceTable nms = normal_mb_distribution(6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(mb.rows[n] == table1[n - 1]);
        CHECK(suc.rows[n] == table1[n - 1]);
        CHECK(nms.rows[n] == table1[n - 1]);
    }
}

TEST_CASE("identity suite passes") {
    IdentityReport rep = identity_suite(8);
    for (const auto& item : rep.items) {
        INFO(item.name);
        CHECK(item.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("table serialization round trip") {
    SequenceTable w = w_table(6);
    SequenceTable back = SequenceTable::from_json(w.to_json());
    CHECK(back.family == w.family);
    CHECK(back.rows == w.rows);
    CHECK(back.provenance == w.provenance);
    CHECK(w.to_csv().substr(0, 10) == "n,k,value\n");
    SequenceTable csv_back = SequenceTable::from_csv(w.to_csv(), w.family, w.provenance);
    CHECK(csv_back.rows == w.rows);
    SequenceTable d = d_table(6, DMethod::Enumeration);
    CHECK(SequenceTable::from_csv(d.to_csv(), "d", d.provenance).rows == d.rows);
}

TEST_CASE("binomial basics") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
}
