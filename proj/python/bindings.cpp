#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diraim/config.hpp"
#include "diraim/error.hpp"
#include "diraim/hypergeom.hpp"
#include "diraim/pekeris.hpp"
#include "diraim/qdeform.hpp"
#include "diraim/runner.hpp"

namespace py = pybind11;
using namespace diraim;

namespace {

py::dict state_dict(const BoundState& s)
{
    py::dict d;
    d["E"] = s.E;
    d["n"] = s.n;
    d["residual"] = s.residual;
    d["admissible"] = s.admissible;
    d["ell_prime"] = s.ell_prime;
    d["delta"] = s.shape.delta;
    d["gamma"] = s.shape.gamma;
    d["eps_n"] = s.shape.eps_n;
    d["reason"] = s.reason;
    return d;
}

TableRunOptions table_options(const std::string& data_dir, const std::string& reading)
{
    TableRunOptions o;
    if (!data_dir.empty())
        o.data_dir = data_dir;
    if (reading == "literal")
        o.reading = ChainReading::literal;
    else if (reading != "corrected")
        throw ParseError("reading must be 'corrected' or 'literal'", 0);
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bound states of the q-deformed Rosen-Morse plus Scarf Dirac problem";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotBoundError>(m, "NotBoundError", base.ptr());
    py::register_exception<SolverError>(m, "SolverError", base.ptr());

    m.def("sinh_q", [](double q, double x) { return sinh_q(Deformation(q), x); }, py::arg("q"), py::arg("x"));
    m.def("cosh_q", [](double q, double x) { return cosh_q(Deformation(q), x); }, py::arg("q"), py::arg("x"));
    m.def("tanh_q", [](double q, double x) { return tanh_q(Deformation(q), x); }, py::arg("q"), py::arg("x"));
    m.def("sech_q", [](double q, double x) { return sech_q(Deformation(q), x); }, py::arg("q"), py::arg("x"));
    m.def("deformation_shift", [](double q, double alpha) { return deformation_shift(Deformation(q), alpha); },
          py::arg("q"), py::arg("alpha"));

    m.def(
        "pekeris_coeffs",
        [](double q, double alpha, double r_e) {
            const PekerisCoeffs c = pekeris_coeffs(Deformation(q), alpha, r_e);
            return py::make_tuple(c.c0, c.c1, c.c2);
        },
        py::arg("q"), py::arg("alpha"), py::arg("r_e"), "(c0, c1, c2) matched at r_e");

    m.def("hyp2f1_terminating", &hypergeom_2f1_terminating, py::arg("n"), py::arg("b"), py::arg("c"), py::arg("z"),
          "2F1(-n, b; c; z)");

    m.def(
        "config_hash",
        [](const std::string& text) { return fnv1a64(parse_config(text).canonical()); }, py::arg("text"));

    m.def(
        "residual_at",
        [](const std::string& text, double E) {
            const ResidualPoint p = residual_at(parse_config(text).problem, E);
            return py::make_tuple(p.value, std::string(to_string(p.status)));
        },
        py::arg("text"), py::arg("E"), "(value, status) of the energy residual for a configuration text");

    m.def(
        "solve",
        [](const std::string& text) {
            const RunConfig cfg = parse_config(text);
            std::vector<BoundState> states;
            {
                py::gil_scoped_release release;
                states = solve_bound_states(cfg.problem, cfg.scan(), cfg.solve_options());
            }
            py::list out;
            for (const auto& s : states)
                out.append(state_dict(s));
            return out;
        },
        py::arg("text"), "bound states of a configuration text, sorted by energy");

    m.def(
        "table_csv",
        [](int id, const std::string& reading, const std::string& data_dir) {
            const TableRunOptions o = table_options(data_dir, reading);
            py::gil_scoped_release release;
            return table_csv(id, run_table(id, o), o);
        },
        py::arg("id"), py::arg("reading") = "corrected", py::arg("data_dir") = "");

    m.def(
        "wavefunction_csv",
        [](const std::string& text, const std::string& grid) { return wavefunction_csv(parse_config(text), parse_grid(grid)); },
        py::arg("text"), py::arg("grid"));
}
