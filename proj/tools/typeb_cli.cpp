#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "typeb/bijections.hpp"
#include "typeb/cache.hpp"
#include "typeb/counting.hpp"
#include "typeb/oeis.hpp"
#include "typeb/partition.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/realroots.hpp"
#include "typeb/signed_perms.hpp"
#include "typeb/stirling_words.hpp"

namespace {

using namespace typeb;

constexpr int kDefaultCeiling = 8;

struct GlobalOpts {
    std::string format = "text";
    std::string out_path;
    std::string cache_dir = ".typeb-cache";
    bool no_cache = false;
    bool force = false;
    int jobs = 1;
};

std::ostream& output_stream(const GlobalOpts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open output file");
    return file;
}

void check_ceiling(const GlobalOpts& g, int n) {
    if (n > kDefaultCeiling && !g.force) {
        throw CLI::ValidationError(
            "--n", "n exceeds the desk ceiling " + std::to_string(kDefaultCeiling) +
                       "; pass --force to raise it");
    }
    if (n > kDefaultCeiling)
        std::cerr << "warning: n=" << n << " above the default ceiling; memory use grows fast\n";
}

int run_enumerate(const GlobalOpts& g, int n, const std::string& cls_name,
                  std::optional<int> k, bool k_zero) {
    check_ceiling(g, n);
    PartitionClass cls = partition_class_from_string(cls_name);
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        enumerate_partitions(n, cls, [&](const TypeBPartition& p) {
            arr.push_back(nlohmann::json::parse(partition_to_json(p)));
        }, k, k_zero);
        os << arr.dump() << "\n";
    } else if (g.format == "jsonl") {
        enumerate_partitions(n, cls, [&](const TypeBPartition& p) {
            os << partition_to_json(p) << "\n";
        }, k, k_zero);
    } else {
        enumerate_partitions(n, cls, [&](const TypeBPartition& p) {
            os << format_partition(p) << "\n";
        }, k, k_zero);
    }
    return 0;
}

int run_count(const GlobalOpts& g, const std::string& family, int max_n,
              const std::string& method) {
    check_ceiling(g, max_n);
    TableCache cache(g.cache_dir, !g.no_cache);
    DMethod dm = d_method_from_string(method);

    Provenance want;
    if (family == "d")
        want = dm == DMethod::Recurrence
                   ? Provenance::Recurrence
                   : (dm == DMethod::Formula ? Provenance::ClosedForm : Provenance::Enumeration);
    else if (family == "mb_dist" || family == "suc_dist" || family == "nms_dist" ||
             family == "a_mf_separated")
        want = Provenance::Enumeration;
    else if (family == "double_factorial")
        want = Provenance::ClosedForm;
    else
        want = Provenance::Recurrence;

    SequenceTable table;
    if (auto hit = cache.load(family, max_n, want)) {
        table = *hit;
    } else {
        table = table_by_name(family, max_n, dm);
        cache.store(table);
    }

    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    if (g.format == "csv") {
        os << table.to_csv();
    } else if (g.format == "json" || g.format == "jsonl") {
        os << table.to_json() << "\n";
    } else {
        os << table.family << " (" << to_string(table.provenance) << ")\n";
        for (size_t n = 0; n < table.rows.size(); ++n) {
            os << n << ":";
            for (const auto& v : table.rows[n]) os << " " << to_decimal(v);
            os << "\n";
        }
    }
    return 0;
}

int run_wks(const GlobalOpts& g, int max_n) {
    check_ceiling(g, max_n);
    WksTable t = wks_table(max_n);
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    if (g.format == "csv") os << t.to_csv();
    else os << t.to_json() << "\n";
    return 0;
}

int run_stats(const GlobalOpts& g, const std::string& text) {
    TypeBPartition p = parse_partition(text);
    nlohmann::json j;
    j["partition"] = format_partition(p);
    j["n"] = p.n;
    j["signed_blocks"] = p.signed_block_count();
    j["zero_block"] = p.zero_block;
    if (!p.has_zero_content()) {
        PartitionStats st = partition_stats(p);
        j["blocks"] = st.blocks_count;
        j["mb"] = st.mb;
        j["suc"] = st.suc;
        j["nmb"] = st.nmb;
        j["singletons"] = st.singletons;
        j["non_singleton_blocks"] = st.non_singleton_blocks;
        j["mb_set"] = st.mb_set;
        j["succ_set"] = st.succ_set;
        j["normal_merging_indices"] = normal_merging_indices(p);
        j["merging_free"] = is_merging_free(p);
        j["separated"] = is_separated(p);
    } else {
        j["suc_with_zero"] = succession_count_with_zero(p);
    }
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    os << j.dump(2) << "\n";
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& map, int n) {
    check_ceiling(g, n);
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    if (map == "identities") {
        IdentityReport rep = identity_suite(n);
        os << rep.to_json() << "\n";
        return rep.all_pass() ? 0 : 1;
    }
    MapReport rep = verify_bijection(map, n, g.jobs);
    os << rep.to_json() << "\n";
    return rep.ok() ? 0 : 1;
}

int run_poly(const GlobalOpts& g, const std::string& family, int n, int s_index,
             bool certify_roots, bool certify_inter, bool gamma) {
    IntPolynomial p = recurrence_poly(family, n, s_index);
    nlohmann::json j;
    j["family"] = family;
    j["n"] = n;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
    j["coefficients"] = coeffs;
    j["pretty"] = p.to_string();
    bool ok = true;
    if (certify_roots) {
        RootCertificate cert = certify_real_rooted(p);
        j["real_roots"] = nlohmann::json::parse(cert.to_json());
        ok = ok && cert.real_rooted;
    }
    if (certify_inter) {
        IntPolynomial prev = recurrence_poly(family, n - 1, s_index);
        InterleaveCertificate cert = certify_interleaves(prev, p);
        j["interleaving"] = nlohmann::json::parse(cert.to_json());
        ok = ok && cert.holds;
    }
    if (gamma) {
        GammaVector gv = gamma_vector(p, p.degree());
        nlohmann::json gj = nlohmann::json::array();
        for (const auto& v : gv.gamma) gj.push_back(to_decimal(v));
        j["gamma"] = gj;
        j["gamma_nonnegative"] = gv.nonnegative;
        ok = ok && gv.nonnegative;
    }
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    os << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_orbits(const GlobalOpts& g, int n) {
    check_ceiling(g, n);
    OrbitReport rep = verify_orbits(n);
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    os << rep.to_json() << "\n";
    return rep.ok() ? 0 : 1;
}

int run_homomesy(const GlobalOpts& g, int n) {
    check_ceiling(g, n);
    HomomesyReport rep = homomesy_check(n);
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    os << rep.to_json() << "\n";
    return rep.ok() ? 0 : 1;
}

int run_oeis(const GlobalOpts& g, const std::string& id) {
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    std::vector<std::string> ids;
    if (id == "all")
        for (const auto& [key, value] : embedded_oeis()) ids.push_back(key);
    else
        ids.push_back(id);
    bool all_ok = true;
    for (const auto& one : ids) {
        OeisCheck check = oeis_check(one, oeis_default_computed(one));
        os << check.to_json() << "\n";
        all_ok = all_ok && check.ok();
    }
    return all_ok ? 0 : 1;
}

int run_flatten(const GlobalOpts& g, const std::string& text) {
    TypeBPartition p = parse_partition(text);
    SignedPermutation s = flatten(p);
    PermStats st = perm_stats(s);
    nlohmann::json j;
    j["permutation"] = format_permutation(s);
    j["in_flattened_class"] = is_flattened_merging_free(s);
    j["des"] = st.des;
    j["maj"] = st.maj;
    j["des_set"] = st.des_set;
    j["mruns"] = st.mrun_ranges.size();
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    os << j.dump(2) << "\n";
    return 0;
}

int run_stirling(const GlobalOpts& g, const std::string& partition_text,
                 const std::string& word_text) {
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    nlohmann::json j;
    if (!partition_text.empty()) {
        TypeBPartition p = parse_partition(partition_text);
        std::vector<int> w = partition_to_word(p);
        j["word"] = format_word(w);
        j["classification"] = to_string(classify_word(w).cls);
    } else {
        std::vector<int> w = parse_word(word_text);
        WordClassification cls = classify_word(w);
        j["classification"] = to_string(cls.cls);
        if (cls.cls == WordClass::FlattenedStirling)
            j["partition"] = format_partition(word_to_partition(w));
        else
            j["witness_position"] = cls.witness_position;
    }
    os << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for type B set partitions and flattened signed permutations"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--format", g.format, "text, csv, json or jsonl")->capture_default_str();
    app.add_option("--out", g.out_path, "write output to a file");
    app.add_option("--cache-dir", g.cache_dir, "table cache directory")->capture_default_str();
    app.add_flag("--no-cache", g.no_cache, "bypass the table cache");
    app.add_flag("--force", g.force, "lift the desk-scale ceiling");
    app.add_option("--jobs", g.jobs, "worker threads for verification")
        ->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "list a partition class");
    int en_n = 0;
    std::string en_class = "all";
    std::optional<int> en_k;
    bool en_k_zero = false;
    enumerate->add_option("--n", en_n, "rank")->required();
    enumerate->add_option("--class", en_class,
                          "all, no_zero, merging_free, separated or mf_separated");
    enumerate->add_option("--k", en_k, "restrict the number of signed blocks");
    enumerate->add_flag("--k-includes-zero", en_k_zero, "count the zero block toward k");

    auto* count = app.add_subcommand("count", "print a counting table");
    std::string co_family = "w";
    int co_max_n = 7;
    std::string co_method = "recurrence";
    count->add_option("--table", co_family,
                      "stirling2, bell, dowling, double_factorial, sb, w, wks, a, b, btilde, u, "
                      "d, mb_dist, suc_dist, nms_dist, a_mf_separated");
    count->add_option("--max-n", co_max_n, "largest rank");
    count->add_option("--method", co_method, "for d: recurrence, formula or enumeration");

    auto* stats = app.add_subcommand("stats", "statistics of one partition");
    std::string st_text;
    stats->add_option("--partition", st_text, "partition text")->required();

    auto* verify = app.add_subcommand("verify", "exhaustive bijection verification");
    std::string ve_map = "f";
    int ve_n = 5;
    verify->add_option("--map", ve_map, "f, g, h, eta, psi, mu_rho, stirling or identities");
    verify->add_option("--n", ve_n, "rank");

    auto* poly = app.add_subcommand("poly", "recurrence polynomial families");
    std::string po_family = "T";
    int po_n = 5, po_s = 0;
    bool po_roots = false, po_inter = false, po_gamma = false;
    poly->add_option("--family", po_family, "T, Q, P_mf, P_ms, des, a, btilde");
    poly->add_option("--n", po_n, "rank");
    poly->add_option("--s", po_s, "succession index for the Q family");
    poly->add_flag("--certify-real-roots", po_roots, "attach a real-rootedness certificate");
    poly->add_flag("--certify-interlacing", po_inter, "certify against the previous rank");
    poly->add_flag("--gamma", po_gamma, "attach the gamma vector");

    auto* orbits = app.add_subcommand("orbits", "valley-hopping orbit report");
    int or_n = 5;
    orbits->add_option("--n", or_n, "rank");

    auto* homomesy = app.add_subcommand("homomesy", "per-orbit descent averages");
    int ho_n = 5;
    homomesy->add_option("--n", ho_n, "rank");

    auto* oeis = app.add_subcommand("oeis", "compare against embedded reference prefixes");
    std::string oe_id = "all";
    oeis->add_option("--id", oe_id, "A007405, A004211, A008299 or all");

    auto* flat = app.add_subcommand("flatten", "flatten a partition to a signed permutation");
    std::string fl_text;
    flat->add_option("--partition", fl_text, "partition text")->required();

    auto* stirling = app.add_subcommand("stirling", "flattened Stirling word encoding");
    std::string si_partition, si_word;
    stirling->add_option("--partition", si_partition, "encode this partition");
    stirling->add_option("--word", si_word, "decode this word");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) return run_enumerate(g, en_n, en_class, en_k, en_k_zero);
        if (*count) {
            if (co_family == "wks") return run_wks(g, co_max_n);
            return run_count(g, co_family, co_max_n, co_method);
        }
        if (*stats) return run_stats(g, st_text);
        if (*verify) return run_verify(g, ve_map, ve_n);
        if (*poly) return run_poly(g, po_family, po_n, po_s, po_roots, po_inter, po_gamma);
        if (*orbits) return run_orbits(g, or_n);
        if (*homomesy) return run_homomesy(g, ho_n);
        if (*oeis) return run_oeis(g, oe_id);
        if (*flat) return run_flatten(g, fl_text);
        if (*stirling) {
            if (si_partition.empty() && si_word.empty()) {
                std::cerr << "stirling: pass --partition or --word\n";
                return 2;
            }
            return run_stirling(g, si_partition, si_word);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input outside the domain: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
