#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conftc/certificates.hpp"
#include "conftc/errors.hpp"
#include "conftc/report.hpp"
#include "conftc/symbols.hpp"
#include "conftc/tc_report.hpp"

namespace py = pybind11;
using namespace conftc;

namespace {

std::vector<std::string> names(const std::vector<Symbol>& cells) {
    std::vector<std::string> out;
    out.reserve(cells.size());
    for (const auto& s : cells) out.push_back(s.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cell complexes, disjoint-tori certificates and sequential TC of disks in a strip";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
    py::register_exception<NotApplicable>(m, "NotApplicable", error.ptr());
    py::register_exception<UnknownSpace>(m, "UnknownSpace", error.ptr());

    m.def("cell_counts", [](int n, int w) {
        const ComplexParams p{n, w};
        p.validate();
        std::vector<std::uint64_t> out;
        for (int d = 0; d <= p.top_dimension(); ++d) out.push_back(count_cells(p, d));
        return out;
    }, py::arg("n"), py::arg("w"));

    m.def("cells", [](int n, int w, int d) { return names(enumerate_cells({n, w}, d)); },
          py::arg("n"), py::arg("w"), py::arg("d"));
    m.def("faces", [](const std::string& s, int n, int w) { return names(faces(Symbol::parse(s), {n, w})); },
          py::arg("symbol"), py::arg("n"), py::arg("w"));
    m.def("cofaces", [](const std::string& s, int n, int w) { return names(cofaces(Symbol::parse(s), {n, w})); },
          py::arg("symbol"), py::arg("n"), py::arg("w"));

    m.def("betti_json", [](int n, int w, std::size_t budget) {
        BuildOptions o;
        if (budget) o.memory_budget_bytes = budget;
        py::gil_scoped_release release;
        return to_json(compute_betti({n, w}, o)).dump();
    }, py::arg("n"), py::arg("w"), py::arg("memory_budget") = 0);

    m.def("certify_json", [](int n, int w, int r, const std::string& verify) {
        VerifyOptions o;
        o.mode = parse_verify_mode(verify);
        py::gil_scoped_release release;
        return to_json(verify_certificate({n, w}, o), r).dump();
    }, py::arg("n"), py::arg("w"), py::arg("r") = 2, py::arg("verify") = "auto");

    m.def("tc_json", [](int n, int w, int r) { return to_json(dtc_value(n, w, r)).dump(); },
          py::arg("n"), py::arg("w"), py::arg("r"));
    m.def("witness_json", [](int m_, int l, int r) { return to_json(compute_witness(m_, l, r)).dump(); },
          py::arg("m"), py::arg("l"), py::arg("r"));
    m.def("reference_json", [](const std::string& space, int n, int k, int r) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : reference_values({space, n, k, r})) out.push_back(to_json(v));
        return out.dump();
    }, py::arg("space"), py::arg("n"), py::arg("k"), py::arg("r"));

    m.def("lower_bound", &lower_bound, py::arg("m"), py::arg("l"), py::arg("r"));
    m.def("bgrt_upper", &bgrt_upper, py::arg("hdim"), py::arg("conn"), py::arg("r"));
}
