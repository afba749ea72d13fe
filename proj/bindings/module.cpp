#include "gftiles/closedform.hpp"
#include "gftiles/fib.hpp"
#include "gftiles/series.hpp"
#include "gftiles/tilings.hpp"
#include "gftiles/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gftiles;

namespace {

// cpp_int -> arbitrary-precision Python int, via the decimal string.
py::object to_pyint(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

Int from_pyint(const py::object& o) { return Int(py::str(o).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hadamard products of rational generating functions over Z[a,b]";

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text) { return Polynomial::parse(text); }),
             py::arg("text"))
        .def_static("constant",
                    [](const py::object& c) { return Polynomial::constant(from_pyint(c)); })
        .def_static("variable", &Polynomial::variable, py::arg("name"))
        .def("is_zero", &Polynomial::is_zero)
        .def("degree", &Polynomial::degree, py::arg("variable"))
        .def("eval",
             [](const Polynomial& p, const py::object& a, const py::object& b) {
                 return to_pyint(p.eval(from_pyint(a), from_pyint(b)));
             },
             py::arg("a"), py::arg("b") = py::int_(0))
        .def("substitute",
             [](const Polynomial& p, char v, const py::object& value) {
                 return p.substitute(v, from_pyint(value));
             },
             py::arg("variable"), py::arg("value"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Polynomial& p, int e) { return p.pow(e); })
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; });

    py::class_<XPoly>(m, "XPoly")
        .def(py::init([](const std::string& text) { return XPoly::parse(text); }),
             py::arg("text"))
        .def("degree", &XPoly::degree)
        .def("coeff", [](const XPoly& p, std::size_t k) { return p.coeff(k); }, py::arg("k"))
        .def(py::self == py::self)
        .def("__str__", &XPoly::str)
        .def("__repr__", [](const XPoly& p) { return "XPoly('" + p.str() + "')"; });

    py::class_<RationalGF>(m, "RationalGF")
        .def(py::init([](const std::string& num, const std::string& den) {
                 return RationalGF::from_text(num, den);
             }),
             py::arg("num"), py::arg("den"))
        .def(py::init<XPoly, XPoly>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", &RationalGF::num)
        .def_property_readonly("den", &RationalGF::den)
        .def("substitute",
             [](const RationalGF& r, char v, const py::object& value) {
                 return r.substitute(v, from_pyint(value));
             },
             py::arg("variable"), py::arg("value"))
        .def("__str__", &RationalGF::str)
        .def("__repr__", [](const RationalGF& r) { return r.str(); });

    py::class_<SeriesTrunc>(m, "SeriesTrunc")
        .def_property_readonly("order", &SeriesTrunc::order)
        .def("coeff", [](const SeriesTrunc& s, int k) { return s.coeff(k); }, py::arg("k"))
        .def("coeffs",
             [](const SeriesTrunc& s) {
                 py::list out;
                 for (const auto& c : s.coeffs()) out.append(c);
                 return out;
             })
        .def(py::self == py::self)
        .def("__str__", [](const SeriesTrunc& s) {
            std::string out;
            for (int k = 0; k <= s.order(); ++k) {
                out += std::to_string(k) + "\t" + s.coeff(k).str() + "\n";
            }
            return out;
        });

    m.def("expand", &expand_rational, py::arg("gf"), py::arg("order"));
    m.def("hadamard_series", &hadamard_series, py::arg("s"), py::arg("t"));
    m.def("series_equal", &series_equal, py::arg("s"), py::arg("t"));
    m.def("hadamard_rational", &hadamard_rational, py::arg("u"), py::arg("v"));
    m.def("rgf_equal", &rgf_equal, py::arg("u"), py::arg("v"));

    m.def("fib_poly", &fib_poly, py::arg("n"), py::arg("variable") = 'a');
    m.def("binomial_fib_formula", &binomial_fib_formula, py::arg("n"),
          py::arg("variable") = 'a');
    m.def("lucas_poly", &lucas_poly, py::arg("n"), py::arg("variable") = 'a');
    m.def("lemma11_check", &lemma11_check, py::arg("m"), py::arg("n"));
    m.def("chebyshev_u", &chebyshev_u, py::arg("n"), py::arg("variable") = 'a');
    m.def("chebyshev_u_sign_pattern", &chebyshev_u_sign_pattern, py::arg("n"),
          py::arg("variable") = 'a');

    py::enum_<MaskSign>(m, "MaskSign")
        .value("statement", MaskSign::statement)
        .value("lemma", MaskSign::lemma);

    m.def("shapiro_product", &shapiro_product);
    m.def("prime_block_gf", &prime_block_gf, py::arg("n"));
    m.def("nblock_product", &nblock_product, py::arg("n"));
    m.def("shifted_product", &shifted_product, py::arg("m"));
    m.def("first_block_gf", &first_block_gf, py::arg("m"), py::arg("n"));
    m.def("shifted_nblock_product", &shifted_nblock_product, py::arg("m"), py::arg("n"));
    m.def("fib_progression_gf", &fib_progression_gf, py::arg("m"), py::arg("n"));
    m.def("masked_fib_product", &masked_fib_product, py::arg("m"), py::arg("n"),
          py::arg("sign") = MaskSign::statement);
    m.def("first_block_gf_top", &first_block_gf_top, py::arg("m"), py::arg("n"));
    m.def("chebyshev_bilinear_rhs", &chebyshev_bilinear_rhs);

    m.def("weighted_pair_count",
          [](const std::string& top, const std::string& bottom, int k) {
              return weighted_pair_count(RowSpec::parse(top), RowSpec::parse(bottom), k);
          },
          py::arg("top"), py::arg("bottom"), py::arg("k"));
    m.def("enumerate_prime_blocks",
          [](const std::string& top, const std::string& bottom, int k) {
              return enumerate_prime_blocks(RowSpec::parse(top), RowSpec::parse(bottom), k);
          },
          py::arg("top"), py::arg("bottom"), py::arg("k"));
    m.def("enumerate_row_tilings",
          [](const std::string& spec, int k) {
              py::list out;
              for (const auto& t : enumerate_row_tilings(RowSpec::parse(spec), k)) {
                  out.append(py::make_tuple(t.bricks, t.weight));
              }
              return out;
          },
          py::arg("spec"), py::arg("k"));

    py::class_<BijectionReport>(m, "BijectionReport")
        .def_readonly("matched_weight", &BijectionReport::matched_weight)
        .def_readonly("exceptional_a", &BijectionReport::exceptional_a)
        .def_readonly("exceptional_b", &BijectionReport::exceptional_b);
    m.def("lemma11_bijection_audit", &lemma11_bijection_audit, py::arg("m"), py::arg("n"));

    m.def("verify_all", []() {
        py::list out;
        for (const auto& r : run_acceptance()) {
            py::dict d;
            d["name"] = r.name;
            d["ok"] = r.ok;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    });
}
