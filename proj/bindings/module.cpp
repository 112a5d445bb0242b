#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "typeb/bijections.hpp"
#include "typeb/counting.hpp"
#include "typeb/oeis.hpp"
#include "typeb/partition.hpp"
#include "typeb/polynomial.hpp"
#include "typeb/realroots.hpp"
#include "typeb/signed_perms.hpp"
#include "typeb/stirling_words.hpp"

namespace py = pybind11;
using namespace typeb;

namespace {

py::int_ to_py_int(const BigInt& v) {
    py::object builtins = py::module_::import("builtins");
    return builtins.attr("int")(py::str(to_decimal(v)));
}

py::list row_to_list(const std::vector<BigInt>& row) {
    py::list out;
    for (const auto& v : row) out.append(to_py_int(v));
    return out;
}

py::object json_to_py(const std::string& text) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(text);
}

TypeBPartition map_by_name(const std::string& name, const TypeBPartition& p, bool inverse) {
    if (name == "f") return inverse ? from_merging_free(p) : to_merging_free(p);
    if (name == "g") return inverse ? from_separated(p) : to_separated(p);
    if (name == "h") return inverse ? from_mf_separated(p) : to_mf_separated(p);
    if (name == "eta") return inverse ? normalize_merging_inverse(p) : normalize_merging(p);
    throw std::invalid_argument("unknown map name: " + name);
}

}  // namespace

PYBIND11_MODULE(_typeb, m) {
    m.doc() = "exact enumeration and certification for type B set partitions";
    m.attr("__version__") = "0.1.0";

    py::class_<TypeBPartition>(m, "TypeBPartition")
        .def_readonly("n", &TypeBPartition::n)
        .def_readonly("zero_block", &TypeBPartition::zero_block)
        .def_readonly("blocks", &TypeBPartition::blocks)
        .def("__str__", &format_partition)
        .def("__repr__",
             [](const TypeBPartition& p) { return "TypeBPartition('" + format_partition(p) + "')"; })
        .def("__eq__", [](const TypeBPartition& a, const TypeBPartition& b) { return a == b; })
        .def("__hash__",
             [](const TypeBPartition& p) { return py::hash(py::str(format_partition(p))); });

    m.def("parse", &parse_partition, py::arg("text"));
    m.def("format", &format_partition, py::arg("partition"));
    m.def("normalize", &normalize_partition, py::arg("signed_blocks"), py::arg("zero_content"));

    m.def("enumerate_class", [](int n, const std::string& cls) {
        return enumerate_to_vector(n, partition_class_from_string(cls));
    }, py::arg("n"), py::arg("cls") = "all");

    m.def("stats", [](const TypeBPartition& p) {
        PartitionStats st = partition_stats(p);
        py::dict d;
        d["blocks"] = st.blocks_count;
        d["mb"] = st.mb;
        d["suc"] = st.suc;
        d["nmb"] = st.nmb;
        d["singletons"] = st.singletons;
        d["mb_set"] = st.mb_set;
        d["succ_set"] = st.succ_set;
        return d;
    }, py::arg("partition"));

    m.def("apply_map", &map_by_name, py::arg("name"), py::arg("partition"),
          py::arg("inverse") = false);

    m.def("verify_bijection", [](const std::string& name, int n, int jobs) {
        return json_to_py(verify_bijection(name, n, jobs).to_json());
    }, py::arg("name"), py::arg("n"), py::arg("jobs") = 1);

    m.def("table", [](const std::string& family, int max_n, const std::string& method) {
        SequenceTable t = table_by_name(family, max_n, d_method_from_string(method));
        py::list rows;
        for (const auto& row : t.rows) rows.append(row_to_list(row));
        return rows;
    }, py::arg("family"), py::arg("max_n"), py::arg("method") = "recurrence");

    m.def("sequence", [](const std::string& name, int max_n) {
        if (name == "bell") return row_to_list(bell_numbers(max_n));
        if (name == "dowling") return row_to_list(dowling_numbers(max_n));
        if (name == "double_factorial") return row_to_list(double_factorials(max_n));
        if (name == "w") return row_to_list(w_totals(max_n));
        throw std::invalid_argument("unknown sequence: " + name);
    }, py::arg("name"), py::arg("max_n"));

    m.def("poly", [](const std::string& family, int n, int s) {
        return row_to_list(recurrence_poly(family, n, s).coeffs());
    }, py::arg("family"), py::arg("n"), py::arg("s") = 0);

    m.def("certify_real_rooted", [](const std::vector<std::string>& coeffs) {
        std::vector<BigInt> c;
        for (const auto& s : coeffs) c.emplace_back(s);
        return json_to_py(certify_real_rooted(IntPolynomial(std::move(c))).to_json());
    }, py::arg("coefficients"));

    m.def("certify_interleaves", [](const std::vector<std::string>& f,
                                    const std::vector<std::string>& g) {
        std::vector<BigInt> cf, cg;
        for (const auto& s : f) cf.emplace_back(s);
        for (const auto& s : g) cg.emplace_back(s);
        return json_to_py(
            certify_interleaves(IntPolynomial(std::move(cf)), IntPolynomial(std::move(cg)))
                .to_json());
    }, py::arg("f"), py::arg("g"));

    m.def("gamma_vector", [](const std::vector<std::string>& coeffs, int center) {
        std::vector<BigInt> c;
        for (const auto& s : coeffs) c.emplace_back(s);
        GammaVector g = gamma_vector(IntPolynomial(std::move(c)), center);
        return row_to_list(g.gamma);
    }, py::arg("coefficients"), py::arg("center"));

    m.def("flatten", [](const TypeBPartition& p) { return format_permutation(flatten(p)); },
          py::arg("partition"));

    m.def("perm_stats", [](const std::string& text) {
        PermStats st = perm_stats(parse_permutation(text));
        py::dict d;
        d["des"] = st.des;
        d["maj"] = st.maj;
        d["des_set"] = st.des_set;
        d["peaks"] = st.peaks;
        d["valleys"] = st.valleys;
        d["double_ascents"] = st.double_ascents;
        d["double_descents"] = st.double_descents;
        d["mruns"] = st.mrun_ranges;
        return d;
    }, py::arg("text"));

    m.def("orbits_summary", [](int n) { return json_to_py(verify_orbits(n).to_json()); },
          py::arg("n"));
    m.def("homomesy", [](int n) { return json_to_py(homomesy_check(n).to_json()); }, py::arg("n"));
    m.def("des_gamma", [](int n) { return json_to_py(des_gamma_check(n).to_json()); },
          py::arg("n"));

    m.def("partition_to_word", [](const TypeBPartition& p) { return partition_to_word(p); },
          py::arg("partition"));
    m.def("word_to_partition", [](const std::vector<int>& w) { return word_to_partition(w); },
          py::arg("word"));
    m.def("classify_word", [](const std::vector<int>& w) { return to_string(classify_word(w).cls); },
          py::arg("word"));

    m.def("oeis_check", [](const std::string& id, const std::vector<std::string>& computed) {
        std::vector<BigInt> c;
        for (const auto& s : computed) c.emplace_back(s);
        return json_to_py(oeis_check(id, c).to_json());
    }, py::arg("id"), py::arg("computed"));
}
