#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "typeb/bigint.hpp"
#include "typeb/partition.hpp"
#include "typeb/polynomial.hpp"

namespace typeb {

// Word over {+-1..+-n} with pairwise distinct magnitudes covering [n].
struct SignedPermutation {
    std::vector<int> word;

    int size() const { return static_cast<int>(word.size()); }
    void validate() const;
    auto operator<=>(const SignedPermutation&) const = default;
};

SignedPermutation parse_permutation(const std::string& text);
std::string format_permutation(const SignedPermutation& s);

// Concatenates the blocks of a zero-block-free partition in standard order.
SignedPermutation flatten(const TypeBPartition& p);

// Maximal magnitude-increasing factors as [start, end] index pairs (0-based).
std::vector<std::pair<int, int>> mruns(const SignedPermutation& s);

// Membership in the flatten image of merging-free partitions: unbarred,
// strictly increasing mrun bottoms and every |top| above the next bottom.
bool is_flattened_merging_free(const SignedPermutation& s);

// Cuts at mrun boundaries; valid only for members of the flatten image.
TypeBPartition unflatten(const SignedPermutation& s);

struct PermStats {
    std::vector<int> des_set;  // descent positions, 1-based
    int des = 0;
    int maj = 0;
    std::vector<std::pair<int, int>> mrun_ranges;
    std::vector<int> peaks, valleys, double_ascents, double_descents;  // entry values
};
PermStats perm_stats(const SignedPermutation& s);

// Flips the sign of every entry that is not an mrun bottom.
SignedPermutation complement_non_bottoms(const SignedPermutation& s);

// Valley hopping: flips the bar at each listed position (1-based) unless the
// entry is an mrun bottom.
SignedPermutation valley_hop(const SignedPermutation& s, const std::vector<int>& positions);

// All flattenings of merging-free zero-block-free partitions over <n>, in
// enumeration order.
std::vector<SignedPermutation> flattened_class(int n);

struct Orbit {
    SignedPermutation representative;  // the all-unbarred member
    std::vector<SignedPermutation> members;
    int mrun_count = 0;
};
std::vector<Orbit> valley_hopping_orbits(int n);

IntPolynomial orbit_descent_poly(const Orbit& o);

struct OrbitReport {
    int n = 0;
    long long orbit_count = 0;
    BigInt expected_orbit_count;       // Bell number
    bool orbit_count_ok = false;
    bool sizes_ok = false;             // every orbit has 2^(n-k) members
    bool poly_ok = false;              // descent polynomial matches (2x)^(k-1)(1+x)^(n-2k+1)
    bool per_k_counts_ok = false;      // orbits with k mruns counted by a(n,k)
    bool burnside_ok = false;          // sum of fixed points equals 2^n * Bell(n-1)
    BigInt burnside_total;
    bool ok() const {
        return orbit_count_ok && sizes_ok && poly_ok && per_k_counts_ok && burnside_ok;
    }
    std::string to_json() const;
};
OrbitReport verify_orbits(int n);

// The orbit descent polynomial (2x)^(k-1) (1+x)^(n-2k+1) pins every orbit
// mean to (n-1)/2 exactly, independent of k: des is homomesic with that
// constant. mean_is_one records whether the constant collapses to 1, which
// happens at n = 3 only.
struct HomomesyReport {
    int n = 0;
    long long orbit_count = 0;
    bool homomesic = false;        // all orbit means agree
    std::string common_mean;       // exact rational, e.g. "5/2"
    bool mean_is_half_rank = false;  // common mean equals (n-1)/2
    bool mean_is_one = false;
    std::vector<std::string> failures;
    bool ok() const { return homomesic && mean_is_half_rank; }
    std::string to_json() const;
};
HomomesyReport homomesy_check(int n);

struct GammaReport {
    int n = 0;                     // center degree; permutations live over n+1
    IntPolynomial des_poly;        // enumerated
    std::vector<BigInt> gamma;     // extracted coefficients
    bool matches_btilde = false;   // gamma_i == btilde(n+1, i+1)
    bool matches_orbit_form = false;
    bool ok() const { return matches_btilde && matches_orbit_form; }
    std::string to_json() const;
};
GammaReport des_gamma_check(int n);

// (des, maj) histogram over the flattened class.
std::map<std::pair<int, int>, long long> joint_des_maj(int n);
bool joint_des_maj_symmetric(int n);

}  // namespace typeb
