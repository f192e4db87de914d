#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anloc/cli.hpp"
#include "anloc/errors.hpp"
#include "anloc/euler.hpp"
#include "anloc/hyperbolicity.hpp"
#include "anloc/io.hpp"
#include "anloc/polytopes.hpp"

namespace py = pybind11;
using namespace anloc;

namespace {

// Exact values cross the boundary as strings; the Python side wraps them in
// fractions.Fraction or int.
std::vector<std::vector<std::string>> rows_as_strings(const QuasiPolynomial& q) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : q.rows()) {
        auto& row = out.emplace_back();
        for (const auto& c : r) row.push_back(to_string(c));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_anloc, m) {
    m.doc() = "Exact local Euler characteristics of symmetric differentials at A_n singularities";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CrossCheckError>(m, "CrossCheckError", PyExc_RuntimeError);

    m.def(
        "chi_loc",
        [](std::int64_t n, std::int64_t m_, const std::string& method) {
            if (method == "closed") return euler::chi_loc_closed(n, m_);
            if (method == "genfun") return euler::chi_loc_series(n, m_ + 1).back();
            if (method == "delta") return euler::chi_loc_delta(n, m_);
            if (method == "weighted") return euler::chi_loc_weighted(n, m_);
            throw DomainError("unknown method " + method);
        },
        py::arg("n"), py::arg("m"), py::arg("method") = "closed");
    m.def(
        "chi0",
        [](std::int64_t n, std::int64_t m_, const std::string& method) -> std::int64_t {
            if (method == "direct") return euler::chi0_direct(n, m_);
            if (method == "polytopes") return euler::chi0_polytopes(n, m_);
            if (method == "qpoly") return to_int64(euler::chi0_qpoly(n)(m_));
            throw DomainError("unknown method " + method);
        },
        py::arg("n"), py::arg("m"), py::arg("method") = "direct");
    m.def("chi1", &euler::chi1, py::arg("n"), py::arg("m"));
    m.def("chi1_cubic_coefficient", [](std::int64_t n) { return to_string(euler::chi1_cubic_coefficient(n)); });
    m.def("g0_volume", [](std::int64_t n) { return to_string(euler::g0_volume(n)); });
    m.def(
        "qpoly",
        [](std::int64_t n, const std::string& of) {
            const QuasiPolynomial q = of == "chi0" ? euler::chi0_qpoly(n) : euler::chi_loc_qpoly(n);
            return py::make_tuple(q.period(), q.degree(), rows_as_strings(q));
        },
        py::arg("n"), py::arg("of") = "chi-loc");
    m.def(
        "piece_volume",
        [](std::int64_t n, std::int64_t i) {
            const auto pieces = polytopes::an_pieces(n);
            if (i == 0) return to_string(polytopes::volume(pieces.c));
            if (i < 1 || i > n) throw DomainError("piece index out of range");
            return to_string(polytopes::volume(pieces.p[i - 1]));
        },
        py::arg("n"), py::arg("i"), "i = 0 selects C_n, i >= 1 selects P_i");

    m.def("chi_smooth", [](std::int64_t d, std::int64_t m_) { return to_string(hyperbolicity::chi_smooth(d, m_)); });
    m.def("r_min", &hyperbolicity::r_min, py::arg("d"), py::arg("n"));
    m.def("miyaoka_max", &hyperbolicity::miyaoka_max, py::arg("d"), py::arg("n"));
    m.def("labs_check", [](std::int64_t k) {
        const auto v = hyperbolicity::labs_check(k);
        py::dict out;
        out["k"] = v.k;
        out["d"] = v.d;
        out["n"] = v.n;
        out["available"] = v.available;
        out["required"] = v.required;
        out["verdict"] = v.verdict;
        return out;
    });
    m.def("rdn_table", [](std::int64_t d_max, std::int64_t n_max) {
        std::vector<py::tuple> out;
        for (const auto& c : hyperbolicity::rdn_table(d_max, n_max).cells) out.push_back(py::make_tuple(c.d, c.n, c.r, c.flagged));
        return out;
    });

    m.def(
        "validate",
        [](std::int64_t n_max, std::int64_t m_max, const std::string& inject) {
            euler::Methods methods = euler::Methods::standard();
            if (!inject.empty()) {
                const auto mu = euler::parse_mutation(inject);
                if (!mu) throw DomainError("unknown mutation " + inject);
                methods = euler::mutated(*mu);
            }
            const auto r = euler::validate(n_max, m_max, methods);
            return py::make_tuple(r.ok, r.cells, r.methods, r.detail);
        },
        py::arg("n_max") = 4, py::arg("m_max") = 20, py::arg("inject") = "");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        const auto r = cli::run(args);
        return py::make_tuple(r.status, r.out, r.err);
    });
}
