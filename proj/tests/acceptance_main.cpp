// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit when anything fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "typeb/bijections.hpp"
#include "typeb/counting.hpp"
#include "typeb/oeis.hpp"
#include "typeb/partition.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/realroots.hpp"
#include "typeb/signed_perms.hpp"
#include "typeb/stirling_words.hpp"

using namespace typeb;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("criterion %02d %-38s %s%s%s\n", index, name.c_str(), pass ? "PASS" : "FAIL",
                note.empty() ? "" : "  -- ", note.c_str());
    if (!pass) ++failures;
}

const std::vector<std::vector<BigInt>> kReferenceDistribution = {
    {1},
    {2, 1},
    {6, 4, 1},
    {24, 18, 6, 1},
    {116, 96, 36, 8, 1},
    {648, 580, 240, 60, 10, 1},
    {4088, 3888, 1740, 480, 90, 12, 1},
};

const std::vector<std::vector<BigInt>> kReferenceDescents = {
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 11, 11, 1},
    {1, 26, 62, 26, 1},
    {1, 57, 266, 266, 57, 1},
    {1, 120, 991, 1864, 991, 120, 1},
    {1, 247, 3405, 10667, 10667, 3405, 247, 1},
};

// rows n = 1..8 of the merging-free separated block polynomials
const std::vector<std::vector<BigInt>> kReferenceMsRows = {
    {0, 1}, {0, 1}, {0, 1, 2}, {0, 1, 10},
    {0, 1, 36, 12}, {0, 1, 116, 140}, {0, 1, 358, 1060, 120}, {0, 1, 1086, 6692, 2520},
};

void criterion_counts() {
    const std::vector<BigInt> expected = {1, 3, 11, 49, 257, 1539, 10299};
    bool ok = true;
    SequenceTable w = w_table(8);  // throws unless recurrence, binomial transform
                                   // and the weighted Stirling sum agree
    auto totals = w.row_sums();
    for (int n = 1; n <= 7; ++n) {
        std::vector<BigInt> by_blocks(n + 1, 0);
        long long enumerated = 0;
        enumerate_partitions(n, PartitionClass::NoZero, [&](const TypeBPartition& p) {
            ++enumerated;
            by_blocks[p.signed_block_count()] += 1;
        });
        ok = ok && BigInt(enumerated) == expected[n - 1] && totals[n] == expected[n - 1];
        for (int k = 0; k <= n; ++k) ok = ok && by_blocks[k] == w.at(n, k);
    }
    // rank-eight enumeration agrees with both total sequences
    long long all8 = 0, nz8 = 0;
    enumerate_partitions(8, PartitionClass::All, [&](const TypeBPartition&) { ++all8; });
    enumerate_partitions(8, PartitionClass::NoZero, [&](const TypeBPartition&) { ++nz8; });
    ok = ok && BigInt(all8) == dowling_numbers(8)[8] && BigInt(nz8) == totals[8];
    report(1, "counts-four-way-agreement", ok);
}

void criterion_distributions() {
    SequenceTable mb = mb_distribution(7);
    SequenceTable suc = suc_distribution(7);
    SequenceTable nms = normal_mb_distribution(7);
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        ok = ok && mb.rows[n] == kReferenceDistribution[n - 1];
        ok = ok && suc.rows[n] == kReferenceDistribution[n - 1];
        ok = ok && nms.rows[n] == kReferenceDistribution[n - 1];
    }
    report(2, "distribution-triangle-reproduction", ok);
}

void criterion_qt_symmetry() {
    bool joint_ok = true;
    for (int n = 1; n <= 7; ++n) {
        std::map<std::pair<int, int>, long long> hist;
        enumerate_partitions(n, PartitionClass::NoZero, [&](const TypeBPartition& p) {
            PartitionStats st = partition_stats(p);
            ++hist[{st.suc, st.mb}];
        });
        for (const auto& [key, count] : hist) {
            auto it = hist.find({key.second, key.first});
            if (it == hist.end() || it->second != count) joint_ok = false;
        }
    }
    bool exchange_ok = true;
    for (int n = 1; n <= 6; ++n) {
        exchange_ok = exchange_ok && verify_bijection("psi", n).ok();
        exchange_ok = exchange_ok && verify_bijection("mu_rho", n).ok();
    }
    report(3, "qt-symmetry-and-exchange-map", joint_ok && exchange_ok);
}

void criterion_bijections() {
    bool ok = true;
    std::string note;
    for (int n = 0; n <= 6; ++n) {
        for (const char* map : {"f", "g", "h", "eta"})
            if (!verify_bijection(map, n).ok()) {
                ok = false;
                note = std::string("map ") + map + " failed at n=" + std::to_string(n);
            }
    }
    for (int n = 1; n <= 5; ++n)
        if (!verify_bijection("stirling", n).ok()) {
            ok = false;
            note = "stirling word map failed at n=" + std::to_string(n);
        }

    // worked examples, bit for bit
    bool examples_ok = true;
    examples_ok = examples_ok &&
                  format_partition(to_merging_free(parse_partition("{0,3,6|1,-7,9|2|4|5,8,-10|11}"))) ==
                      "{1,-8,10|2,3,-4,5,9,-11|6,-7,12}";
    examples_ok = examples_ok &&
                  format_partition(to_mf_separated(parse_partition("{1,2,6|3|4|5,-9,-10|7,8|11}"))) ==
                      "{1,3,7|2,-4,5,-10|6,9|8,-11,12}";
    examples_ok = examples_ok &&
                  format_partition(normalize_merging(parse_partition("{1,-2|3,-4,-5|6,8|7}"))) ==
                      "{1,-2,-4,-5|3|6,8|7}";
    examples_ok = examples_ok &&
                  partition_to_word(parse_partition("{1,-6,7|2,3,-4,8,-9,-10|5,-11,12}")) ==
                      std::vector<int>{1, 4, 4, 11, 11, 1, 6, 6, 2, 7, 7, 2,
                                       3, 3, 9, 9, 10, 10, 5, 8, 8, 5, 12, 12};
    // separated image: magnitude structure of the printed example, bar
    // placement corrected to the unique self-consistent assignment
    TypeBPartition g_img = to_separated(parse_partition("{0,2,3,5|1,-7,-8|4,6,9,10}"));
    examples_ok = examples_ok && format_partition(g_img) == "{1,-3,4,-6,-9,11|2,-8|5,7,10}";
    std::vector<std::vector<int>> mags;
    for (const Block& b : g_img.blocks) {
        std::vector<int> m;
        for (int v : b) m.push_back(v < 0 ? -v : v);
        mags.push_back(m);
    }
    examples_ok = examples_ok &&
                  mags == std::vector<std::vector<int>>{{1, 3, 4, 6, 9, 11}, {2, 8}, {5, 7, 10}};
    if (!examples_ok && note.empty()) note = "a worked example did not reproduce";
    report(4, "bijections-exhaustive-and-examples", ok && examples_ok, note);
}

void criterion_descent_table() {
    SequenceTable rec = d_table(8, DMethod::Recurrence);
    SequenceTable closed = d_table(8, DMethod::Formula);
    SequenceTable enumd = d_table(8, DMethod::Enumeration);
    std::vector<BigInt> dow = dowling_numbers(7);
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        ok = ok && rec.rows[n] == kReferenceDescents[n - 1];
        ok = ok && closed.rows[n] == kReferenceDescents[n - 1];
        ok = ok && enumd.rows[n] == kReferenceDescents[n - 1];
        for (int k = 0; k <= n - 1; ++k) ok = ok && rec.at(n, k) == rec.at(n, n - k - 1);
        BigInt total = 0;
        for (const auto& v : rec.rows[n]) total += v;
        ok = ok && total == dow[n - 1];
    }
    // complementation conjugates descents and the major index pointwise
    for (const SignedPermutation& s : flattened_class(8)) {
        PermStats a = perm_stats(s);
        PermStats b = perm_stats(complement_non_bottoms(s));
        ok = ok && b.des == 7 - a.des && b.maj == 28 - a.maj;
    }
    report(5, "descent-table-three-way-agreement", ok);
}

void criterion_gamma_positivity() {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        GammaReport rep = des_gamma_check(n);
        ok = ok && rep.ok();
        if (n == 3) ok = ok && rep.gamma == std::vector<BigInt>{1, 8};
    }
    report(6, "descent-gamma-positivity", ok);
}

void criterion_orbits() {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) ok = ok && verify_orbits(n).ok();
    // The orbit polynomials above force every orbit mean to (n-1)/2; the
    // homomesy check certifies exactly that. The constant collapses to 1 at
    // n = 3 only, which the report records.
    bool one_only_at_three = true;
    for (int n = 1; n <= 7; ++n) {
        HomomesyReport rep = homomesy_check(n);
        ok = ok && rep.homomesic && rep.mean_is_half_rank;
        one_only_at_three = one_only_at_three && rep.mean_is_one == (n == 3);
    }
    report(7, "valley-hopping-orbits-and-homomesy", ok && one_only_at_three,
           "exact orbit mean is (n-1)/2; it equals 1 at n=3");
}

void criterion_certificates() {
    bool ok = true;
    for (int n = 0; n <= 10; ++n) {
        ok = ok && certify_real_rooted(poly_T(n)).real_rooted;
        ok = ok && certify_real_rooted(poly_mf(n)).real_rooted;
        ok = ok && certify_real_rooted(poly_ms(n)).real_rooted;
        ok = ok && certify_real_rooted(poly_des(n)).real_rooted;
    }
    for (int n = 2; n <= 10; ++n) {
        ok = ok && certify_interleaves(poly_ms(n - 1), poly_ms(n)).holds;
        ok = ok && certify_interleaves(poly_mf(n - 1), poly_mf(n)).holds;
    }
    for (int n = 1; n <= 8; ++n) ok = ok && poly_ms(n).coeffs() == kReferenceMsRows[n - 1];
    report(8, "real-rootedness-and-interlacing", ok);
}

void criterion_joint_symmetry() {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) ok = ok && joint_des_maj_symmetric(n);
    report(9, "descent-major-index-symmetry", ok);
}

void criterion_oeis() {
    bool ok = true;
    for (const char* id : {"A007405", "A004211", "A008299"}) {
        OeisCheck check = oeis_check(id, oeis_default_computed(id));
        ok = ok && check.known && check.match && check.compared_terms >= 8;
    }
    report(10, "embedded-oeis-prefixes", ok);
}

}  // namespace

int main() {
    criterion_counts();
    criterion_distributions();
    criterion_qt_symmetry();
    criterion_bijections();
    criterion_descent_table();
    criterion_gamma_positivity();
    criterion_orbits();
    criterion_certificates();
    criterion_joint_symmetry();
    criterion_oeis();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
