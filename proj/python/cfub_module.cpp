#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "cfub/analytic.hpp"
#include "cfub/fubini.hpp"
#include "cfub/triangles.hpp"
#include "cfub/verify.hpp"

namespace py = pybind11;
using namespace cfub;

namespace {

FubiniRoute route_from(const std::string& name) {
    auto r = parse_route(name);
    if (!r) throw std::invalid_argument("unknown route '" + name + "'");
    return *r;
}

std::vector<std::string> poly_coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(static_cast<std::size_t>(i)).to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_cfub, m) {
    m.doc() = "Central Fubini-like numbers and polynomials (exact C++ core)";

    m.def(
        "c_poly",
        [](unsigned n, const std::string& route) {
            return poly_coeff_strings(c_poly(n, route_from(route)));
        },
        py::arg("n"), py::arg("route") = "definition",
        "Coefficients of c_n(x) as exact 'p/q' strings, ascending powers.");

    m.def(
        "c_poly_plain",
        [](unsigned n, const std::string& route, bool scaled) {
            Poly p = c_poly(n, route_from(route));
            if (scaled && n % 2 == 1) p = Rational(2).pow(n - 1) * p;
            return p.to_plain_string();
        },
        py::arg("n"), py::arg("route") = "definition", py::arg("scaled") = false);

    m.def(
        "c_number", [](unsigned n) { return c_number(n).to_string(); }, py::arg("n"),
        "c_n = c_n(1) as an exact 'p/q' string.");

    m.def(
        "stirling2_table",
        [](unsigned max_n) {
            auto t = build_stirling2(max_n);
            std::vector<std::vector<std::string>> rows;
            for (unsigned n = 0; n <= max_n; ++n) {
                std::vector<std::string> row;
                for (unsigned k = 0; k <= n; ++k) row.push_back(t.at(n, k).to_string());
                rows.push_back(std::move(row));
            }
            return rows;
        },
        py::arg("max_n"));

    m.def(
        "central_t_table",
        [](unsigned max_n) {
            auto t = build_central_T(max_n);
            std::vector<std::vector<std::string>> rows;
            for (unsigned n = 0; n <= max_n; ++n) {
                std::vector<std::string> row;
                for (unsigned k = 0; k <= n; ++k) row.push_back(t.at(n, k).to_string());
                rows.push_back(std::move(row));
            }
            return rows;
        },
        py::arg("max_n"));

    m.def(
        "delta_zero_power", [](unsigned mth) { return delta_zero_power(mth).to_string(); },
        py::arg("m"));

    m.def("integral_representation", &integral_representation, py::arg("n"), py::arg("x"),
          py::arg("panels") = 512);

    m.def(
        "asymptotic",
        [](const std::vector<unsigned>& ns) {
            py::list out;
            for (const auto& r : asymptotic_report(ns)) {
                py::dict d;
                d["n"] = r.n;
                d["exact"] = c_number(r.n).to_string();
                d["estimate"] = r.estimate;
                d["ratio"] = r.ratio;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("n_values"));

    m.def(
        "verify",
        [](unsigned max_n) {
            py::list out;
            for (const auto& r : run_verification(max_n)) {
                py::dict d;
                d["name"] = r.name;
                d["range"] = r.range;
                d["status"] = status_name(r.status);
                d["detail"] = r.detail;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("max_n") = 20);
}
