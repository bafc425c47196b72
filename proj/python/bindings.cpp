#include "orbit_atlas/acceptance.hpp"
#include "orbit_atlas/borbits.hpp"
#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orbit_atlas;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

PYBIND11_MODULE(_core, m) {
    m.doc() = "Borel orbits on flag varieties of (GL(n), GL(n-1)) and (SO(n), SO(n-1))";
    py::register_exception<AtlasError>(m, "AtlasError", PyExc_ValueError);

    m.def("korbits", [](const std::string& group) {
        GroupDatum g = parse_group(group);
        std::vector<std::pair<std::string, int>> out;
        for (const auto& t : enumerate_korbits(g)) out.emplace_back(t.to_string(), korbit_codim(g, t));
        return out;
    }, py::arg("group"), "(tag, codim) for every K-orbit");

    m.def("borbits", [](const std::string& group) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& b : enumerate_borbits(parse_group(group))) out.emplace_back(b.key(), borbit_dim(b));
        return out;
    }, py::arg("group"), "(key, dim) for every B-orbit");

    m.def("count", [](const std::string& group) {
        GroupDatum g = parse_group(group);
        return py::dict(py::arg("korbits") = enumerate_korbits(g).size(),
                        py::arg("borbits") = enumerate_borbits(g).size());
    }, py::arg("group"));

    m.def("dim", [](const std::string& key) { return borbit_dim(parse_key(key)); }, py::arg("key"));

    m.def("act", [](const std::string& key, const std::string& root) {
        MonoidOutcome o = act(parse_key(key), parse_root_ref(root));
        const char* kind = o.kind == MonoidOutcome::Raised ? "raised" : o.kind == MonoidOutcome::Fixed ? "fixed" : "deferred";
        py::object result = o.result ? py::object(py::str(o.result->key())) : py::object(py::none());
        py::object type = o.type ? py::object(py::str(to_string(*o.type))) : py::object(py::none());
        return py::dict(py::arg("kind") = kind, py::arg("result") = result, py::arg("type") = type,
                        py::arg("reason") = o.reason);
    }, py::arg("key"), py::arg("root"));

    m.def("rep", [](const std::string& key) { return borbit_rep(parse_key(key)).to_string(); }, py::arg("key"));

    m.def("weak_order_dot", [](const std::string& group) { return weak_order_graph(parse_group(group)).to_dot(); },
          py::arg("group"));

    m.def("oracle_sizes", [](const std::string& group, int q) {
        py::gil_scoped_release release;
        return orbit_partition(parse_group(group), q).class_size;
    }, py::arg("group"), py::arg("q"), "class sizes of the brute-force F_q partition");

    m.def("verify", [](std::set<int> ids) {
        std::vector<std::tuple<int, std::string, bool, std::string>> out;
        std::vector<CriterionResult> rs;
        {
            py::gil_scoped_release release;
            rs = run_acceptance(ids);
        }
        for (const auto& r : rs) out.emplace_back(r.id, r.name, r.pass, r.detail);
        return out;
    }, py::arg("ids") = std::set<int>{});

    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
}
