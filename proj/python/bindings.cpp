#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvlab/json_io.hpp"
#include "mvlab/lagrangian.hpp"
#include "mvlab/maya_bz.hpp"
#include "mvlab/quiver.hpp"
#include "mvlab/verify.hpp"

namespace py = pybind11;
using namespace mvlab;

namespace {

LusztigDatum datum(int n, const std::vector<int>& entries) { return LusztigDatum(Rank(n), entries); }

std::string psi_json(int n, const std::vector<int>& entries) { return json::encode(psi(datum(n, entries))).dump(); }

std::string polytope_json(int n, const std::vector<int>& entries) {
    return json::encode(mv_vertices(star(psi(datum(n, entries))))).dump();
}

std::optional<std::vector<int>> apply_ops(int n, const std::vector<int>& entries, const std::string& ops) {
    const auto out = apply_word(datum(n, entries), parse_op_word(ops));
    if (!out) return std::nullopt;
    return out->entries();
}

std::vector<std::pair<int, int>> roots(int n, const std::vector<int>& word) {
    std::vector<std::pair<int, int>> out;
    for (const Root& r : roots_in_order(ReducedWord(Rank(n), word))) out.emplace_back(r.i, r.j);
    return out;
}

std::vector<int> transition_py(int n, const std::vector<int>& coords, const std::vector<int>& from,
                               const std::vector<int>& to) {
    return transition(coords, ReducedWord(Rank(n), from), ReducedWord(Rank(n), to));
}

py::dict quiver_info(int n, const std::vector<int>& members) {
    const MayaDiagram K(Rank(n), members);
    const Orientation omega = orientation_from_maya(K);
    const MayaComponents c = components(K);
    py::dict d;
    d["orientation"] = omega.to_string();
    d["sources"] = omega.sources();
    d["sinks"] = omega.sinks();
    d["out"] = c.out_set;
    d["in"] = c.in_set;
    d["s_K"] = c.s_K;
    d["t_K"] = c.t_K;
    if (const auto beta = characterizing_root(K))
        d["beta"] = std::make_pair(beta->i, beta->j);
    else
        d["beta"] = py::none();
    d["adapted_word"] = adapted_word(omega).letters();
    return d;
}

int m_k_point(int n, const std::vector<int>& entries, const std::vector<int>& members, std::uint64_t p,
              std::uint64_t seed) {
    return m_k_of_point(sample_conormal(datum(n, entries), p, seed), MayaDiagram(Rank(n), members));
}

std::string verify_json(const std::string& suite, std::optional<int> n, std::optional<int> max_height, unsigned jobs) {
    SuiteOptions options;
    options.jobs = jobs;
    if (n || max_height) options.slices = resolve_slices(suite, n, max_height);
    VerifyReport r;
    {
        py::gil_scoped_release release;
        r = run_suite(suite, options);
    }
    return report_json(r, false).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Type A crystal B(infinity): Lusztig data, BZ data, quivers";

    // Translators run newest first, so the subclass goes last.
    const auto base = py::register_exception<Error>(m, "MvlabError", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

    m.def("enumerate_by_height", [](int n, int h) {
        std::vector<std::vector<int>> out;
        for_each_by_height(Rank(n), h, [&](const LusztigDatum& a) { out.push_back(a.entries()); });
        return out;
    }, py::arg("n"), py::arg("max_height"));
    m.def("weight", [](int n, const std::vector<int>& e) { return weight(datum(n, e)).c; }, py::arg("n"), py::arg("entries"));
    m.def("epsilon", [](int n, const std::vector<int>& e, int i) { return epsilon(datum(n, e), i); },
          py::arg("n"), py::arg("entries"), py::arg("i"));
    m.def("epsilon_star", [](int n, const std::vector<int>& e, int i) { return epsilon_star(datum(n, e), i); },
          py::arg("n"), py::arg("entries"), py::arg("i"));
    m.def("apply", &apply_ops, py::arg("n"), py::arg("entries"), py::arg("ops"),
          "Applies an operator word left to right; None when it hits 0.");
    m.def("psi_json", &psi_json, py::arg("n"), py::arg("entries"));
    m.def("polytope_json", &polytope_json, py::arg("n"), py::arg("entries"));
    m.def("roots_in_order", &roots, py::arg("n"), py::arg("word"));
    m.def("transition", &transition_py, py::arg("n"), py::arg("coords"), py::arg("from_word"), py::arg("to_word"));
    m.def("quiver", &quiver_info, py::arg("n"), py::arg("maya"));
    m.def("m_k_of_point", &m_k_point, py::arg("n"), py::arg("entries"), py::arg("maya"),
          py::arg("p") = kDefaultPrime, py::arg("seed") = 1);
    m.def("suite_names", &suite_names);
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("n") = py::none(),
          py::arg("max_height") = py::none(), py::arg("jobs") = 1u);
}
