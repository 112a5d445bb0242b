#include "typeb/signed_perms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "typeb/counting.hpp"

namespace typeb {

namespace {
int magnitude(int v) { return v < 0 ? -v : v; }
}

void SignedPermutation::validate() const {
    int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : word) {
        int m = magnitude(v);
        if (m < 1 || m > n) throw std::invalid_argument("entry out of range");
        if (seen[m]) throw std::invalid_argument("duplicate magnitude");
        seen[m] = 1;
    }
}

SignedPermutation parse_permutation(const std::string& text) {
    SignedPermutation s;
    std::stringstream ss(text);
    int v;
    while (ss >> v) s.word.push_back(v);
    if (!ss.eof()) throw std::invalid_argument("bad permutation text");
    s.validate();
    return s;
}

std::string format_permutation(const SignedPermutation& s) {
    std::string out;
    for (size_t i = 0; i < s.word.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(s.word[i]);
    }
    return out;
}

SignedPermutation flatten(const TypeBPartition& p) {
    if (p.has_zero_content())
        throw std::domain_error("flatten requires an empty zero block");
    SignedPermutation s;
    for (const Block& b : p.blocks)
        for (int v : b) s.word.push_back(v);
    return s;
}

std::vector<std::pair<int, int>> mruns(const SignedPermutation& s) {
    std::vector<std::pair<int, int>> out;
    int n = s.size();
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || magnitude(s.word[i]) < magnitude(s.word[i - 1])) {
            out.push_back({start, i - 1});
            start = i;
        }
    }
    return out;
}

bool is_flattened_merging_free(const SignedPermutation& s) {
    if (s.size() == 0) return true;
    auto runs = mruns(s);
    int prev_bottom = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
        int bottom = s.word[runs[i].first];
        if (bottom < 0) return false;
        if (bottom <= prev_bottom) return false;  // bottoms strictly increase
        prev_bottom = bottom;
        if (i > 0) {
            int prev_top = magnitude(s.word[runs[i - 1].second]);
            if (prev_top <= bottom) return false;  // |top| above the next bottom
        }
    }
    return true;
}

TypeBPartition unflatten(const SignedPermutation& s) {
    if (!is_flattened_merging_free(s))
        throw std::domain_error("permutation is not a merging-free flattening");
    std::vector<Block> blocks;
    for (auto [a, b] : mruns(s))
        blocks.emplace_back(s.word.begin() + a, s.word.begin() + b + 1);
    return rebuild_canonical(s.size(), {}, std::move(blocks));
}

PermStats perm_stats(const SignedPermutation& s) {
    PermStats st;
    int n = s.size();
    for (int i = 1; i < n; ++i)
        if (s.word[i - 1] > s.word[i]) {
            st.des_set.push_back(i);
            st.maj += i;
        }
    st.des = static_cast<int>(st.des_set.size());
    st.mrun_ranges = mruns(s);
    // Landscape with sigma_0 = -inf, sigma_{n+1} = +inf.
    for (int i = 1; i <= n; ++i) {
        int v = s.word[i - 1];
        bool up_left = (i == 1) || s.word[i - 2] < v;      // sigma_{i-1} < sigma_i
        bool up_right = (i == n) || v < s.word[i];          // sigma_i < sigma_{i+1}
        if (up_left && !up_right) st.peaks.push_back(v);
        if (!up_left && up_right) st.valleys.push_back(v);
        if (i >= 2 && i <= n - 1) {
            if (up_left && up_right) st.double_ascents.push_back(v);
            if (!up_left && !up_right) st.double_descents.push_back(v);
        }
    }
    return st;
}

SignedPermutation complement_non_bottoms(const SignedPermutation& s) {
    if (!is_flattened_merging_free(s))
        throw std::domain_error("complement is defined on the flattened class");
    SignedPermutation out = s;
    for (auto [a, b] : mruns(s))
        for (int i = a + 1; i <= b; ++i) out.word[i] = -out.word[i];
    return out;
}

SignedPermutation valley_hop(const SignedPermutation& s, const std::vector<int>& positions) {
    if (!is_flattened_merging_free(s))
        throw std::domain_error("valley hopping is defined on the flattened class");
    std::vector<char> bottom(s.size() + 1, 0);
    for (auto [a, b] : mruns(s)) bottom[a + 1] = 1;
    SignedPermutation out = s;
    for (int pos : positions) {
        if (pos < 1 || pos > s.size()) throw std::out_of_range("position out of range");
        if (!bottom[pos]) out.word[pos - 1] = -out.word[pos - 1];
    }
    return out;
}

std::vector<SignedPermutation> flattened_class(int n) {
    std::vector<SignedPermutation> out;
    enumerate_partitions(n, PartitionClass::MergingFree,
                         [&](const TypeBPartition& p) { out.push_back(flatten(p)); });
    return out;
}

std::vector<Orbit> valley_hopping_orbits(int n) {
    std::map<std::vector<int>, Orbit> by_skeleton;
    for (auto& s : flattened_class(n)) {
        std::vector<int> skeleton;
        skeleton.reserve(s.word.size());
        for (int v : s.word) skeleton.push_back(magnitude(v));
        Orbit& o = by_skeleton[skeleton];
        if (o.members.empty()) {
            o.representative = SignedPermutation{skeleton};
            o.mrun_count = static_cast<int>(mruns(o.representative).size());
        }
        o.members.push_back(std::move(s));
    }
    std::vector<Orbit> out;
    out.reserve(by_skeleton.size());
    for (auto& [k, o] : by_skeleton) out.push_back(std::move(o));
    return out;
}

IntPolynomial orbit_descent_poly(const Orbit& o) {
    int maxdeg = 0;
    for (const auto& m : o.members) maxdeg = std::max(maxdeg, m.size());
    std::vector<BigInt> coeff(maxdeg + 1, 0);
    for (const auto& m : o.members) coeff[perm_stats(m).des] += 1;
    return IntPolynomial(std::move(coeff));
}

OrbitReport verify_orbits(int n) {
    OrbitReport rep;
    rep.n = n;
    auto orbits = valley_hopping_orbits(n);
    rep.orbit_count = static_cast<long long>(orbits.size());
    rep.expected_orbit_count = n >= 1 ? bell_numbers(n - 1).back() : BigInt(1);
    rep.orbit_count_ok = BigInt(rep.orbit_count) == rep.expected_orbit_count;

    SequenceTable a = a_table(n);
    std::map<int, long long> by_k;
    rep.sizes_ok = true;
    rep.poly_ok = true;
    BigInt burnside = 0;
    IntPolynomial one_plus_x({1, 1});
    IntPolynomial two_x({0, 2});
    for (const auto& o : orbits) {
        int k = o.mrun_count;
        ++by_k[k];
        if (BigInt(static_cast<long long>(o.members.size())) != pow2(n - k)) rep.sizes_ok = false;
        IntPolynomial expected = IntPolynomial::constant(1);
        for (int i = 0; i < k - 1; ++i) expected = expected * two_x;
        for (int i = 0; i < n - 2 * k + 1; ++i) expected = expected * one_plus_x;
        if (orbit_descent_poly(o) != expected) rep.poly_ok = false;
        for (const auto& m : o.members) burnside += pow2(static_cast<int>(mruns(m).size()));
    }
    rep.per_k_counts_ok = true;
    for (auto [k, cnt] : by_k)
        if (BigInt(cnt) != a.at(n, k)) rep.per_k_counts_ok = false;
    for (int k = 0; k <= n; ++k)
        if (a.at(n, k) != 0 && by_k.find(k) == by_k.end()) rep.per_k_counts_ok = false;

    rep.burnside_total = burnside;
    rep.burnside_ok = burnside == pow2(n) * rep.expected_orbit_count;
    return rep;
}

std::string OrbitReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["orbit_count"] = orbit_count;
    j["expected_orbit_count"] = to_decimal(expected_orbit_count);
    j["orbit_count_ok"] = orbit_count_ok;
    j["sizes_ok"] = sizes_ok;
    j["poly_ok"] = poly_ok;
    j["per_k_counts_ok"] = per_k_counts_ok;
    j["burnside_total"] = to_decimal(burnside_total);
    j["burnside_ok"] = burnside_ok;
    j["ok"] = ok();
    return j.dump();
}

HomomesyReport homomesy_check(int n) {
    HomomesyReport rep;
    rep.n = n;
    auto orbits = valley_hopping_orbits(n);
    rep.orbit_count = static_cast<long long>(orbits.size());
    rep.homomesic = true;
    BigRat expected(n - 1, 2);
    bool first = true;
    BigRat common = 0;
    for (const auto& o : orbits) {
        long long sum = 0;
        for (const auto& m : o.members) sum += perm_stats(m).des;
        BigRat mean(sum, static_cast<long long>(o.members.size()));
        if (first) {
            common = mean;
            first = false;
        } else if (mean != common) {
            rep.homomesic = false;
            rep.failures.push_back(format_permutation(o.representative) + " mean " +
                                   to_decimal(mean));
        }
    }
    rep.common_mean = to_decimal(common);
    rep.mean_is_half_rank = rep.homomesic && common == expected;
    rep.mean_is_one = rep.homomesic && common == 1;
    return rep;
}

std::string HomomesyReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["orbit_count"] = orbit_count;
    j["homomesic"] = homomesic;
    j["common_mean"] = common_mean;
    j["mean_is_half_rank"] = mean_is_half_rank;
    j["mean_is_one"] = mean_is_one;
    j["failures"] = failures;
    j["ok"] = ok();
    return j.dump();
}

GammaReport des_gamma_check(int n) {
    GammaReport rep;
    rep.n = n;
    std::vector<BigInt> hist(n + 2, 0);
    for (const auto& s : flattened_class(n + 1)) hist[perm_stats(s).des] += 1;
    rep.des_poly = IntPolynomial(std::move(hist));

    GammaVector g = gamma_vector(rep.des_poly, n);
    rep.gamma = g.gamma;
    SequenceTable bt = btilde_table(n + 1);
    rep.matches_btilde = true;
    for (int i = 0; i < static_cast<int>(g.gamma.size()); ++i)
        if (g.gamma[i] != bt.at(n + 1, i + 1)) rep.matches_btilde = false;

    SequenceTable a = a_table(n + 1);
    IntPolynomial orbit_form;
    IntPolynomial one_plus_x({1, 1});
    IntPolynomial two_x({0, 2});
    for (int k = 1; k <= n + 1; ++k) {
        if (a.at(n + 1, k) == 0) continue;
        IntPolynomial term = IntPolynomial::constant(a.at(n + 1, k));
        for (int i = 0; i < k - 1; ++i) term = term * two_x;
        for (int i = 0; i < (n + 1) - 2 * k + 1; ++i) term = term * one_plus_x;
        orbit_form = orbit_form + term;
    }
    rep.matches_orbit_form = orbit_form == rep.des_poly;
    return rep;
}

std::string GammaReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["des_poly"] = des_poly.to_string();
    nlohmann::json gj = nlohmann::json::array();
    for (const auto& v : gamma) gj.push_back(to_decimal(v));
    j["gamma"] = gj;
    j["matches_btilde"] = matches_btilde;
    j["matches_orbit_form"] = matches_orbit_form;
    j["ok"] = ok();
    return j.dump();
}

std::map<std::pair<int, int>, long long> joint_des_maj(int n) {
    std::map<std::pair<int, int>, long long> hist;
    for (const auto& s : flattened_class(n)) {
        PermStats st = perm_stats(s);
        ++hist[{st.des, st.maj}];
    }
    return hist;
}

bool joint_des_maj_symmetric(int n) {
    auto hist = joint_des_maj(n);
    int top_des = n - 1;
    int top_maj = n * (n - 1) / 2;
    for (const auto& [key, count] : hist) {
        auto mirror = std::make_pair(top_des - key.first, top_maj - key.second);
        auto it = hist.find(mirror);
        if (it == hist.end() || it->second != count) return false;
    }
    return true;
}

}  // namespace typeb
