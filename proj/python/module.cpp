#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvertex/identities.hpp"
#include "qvertex/vops.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace qvertex;

namespace {

mpq_class to_mpq(const py::object &x) { return parse_rational(py::str(x)); }

py::object to_fraction(const mpq_class &x)
{
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(x.get_num().get_str())), py::int_(py::str(x.get_den().get_str())));
}

py::object to_py(const json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

Partition to_partition(const std::vector<int> &parts) { return Partition::from_unsorted(parts); }

py::dict terms_of(const SymFunc &f)
{
    py::dict out;
    for (const auto &[la, c] : f.terms()) out[py::tuple(py::cast(la.parts()))] = c;
    return out;
}

std::vector<RationalFunctionQ> coeffs_of(const PowerSeriesX &s)
{
    std::vector<RationalFunctionQ> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(s[n]);
    return out;
}

template <class State>
void bind_state(py::module_ &m, const char *name)
{
    py::class_<State>(m, name)
        .def(py::init<SymFunc, int, int>(), "sym"_a, "lattice_k"_a, "sigma_twice"_a = 0)
        .def_static("vacuum", &State::vacuum)
        .def_property_readonly("sym", &State::sym)
        .def_property_readonly("lattice_k", &State::lattice_k)
        .def_property_readonly("sigma_twice", &State::sigma_twice)
        .def("is_zero", &State::is_zero)
        .def("to_json", [](const State &s) { return to_py(to_json(s)); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &State::to_string)
        .def("__repr__", [name](const State &s) { return std::string(name) + "(" + s.to_string() + ")"; });
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact vertex operator states and q-zonal functions";

    py::class_<RationalFunctionQ>(m, "Rational")
        .def(py::init<long>(), "c"_a = 0)
        .def_static("q_power", &RationalFunctionQ::q_power, "k"_a)
        .def("is_zero", &RationalFunctionQ::is_zero)
        .def("numerator", [](const RationalFunctionQ &r) { return r.num().to_string(); })
        .def("denominator", [](const RationalFunctionQ &r) { return r.den().to_string(); })
        .def("evaluate",
             [](const RationalFunctionQ &r, const py::object &q) -> py::object {
                 auto v = r.evaluate(to_mpq(q));
                 if (!v) throw py::value_error("q is a pole");
                 return to_fraction(*v);
             },
             "q"_a)
        .def("to_json", [](const RationalFunctionQ &r) { return to_py(to_json(r)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__radd__", [](const RationalFunctionQ &a, long b) { return a + RationalFunctionQ(b); })
        .def("__rmul__", [](const RationalFunctionQ &a, long b) { return a * RationalFunctionQ(b); })
        .def("__rsub__", [](const RationalFunctionQ &a, long b) { return RationalFunctionQ(b) - a; })
        .def("__rtruediv__", [](const RationalFunctionQ &a, long b) { return RationalFunctionQ(b) / a; })
        .def("__pow__", &RationalFunctionQ::pow)
        .def("__hash__", [](const RationalFunctionQ &r) { return py::hash(py::str(r.to_string())); })
        .def("__str__", &RationalFunctionQ::to_string)
        .def("__repr__", [](const RationalFunctionQ &r) { return "Rational(" + r.to_string() + ")"; });
    py::implicitly_convertible<long, RationalFunctionQ>();

    m.def("q", [](int k) { return RationalFunctionQ::q_power(k); }, "k"_a = 1, "q^k");
    m.def("qint", &qint, "n"_a);

    py::class_<SymFunc>(m, "SymFunc")
        .def(py::init<>())
        .def(py::init<const RationalFunctionQ &>(), "c"_a)
        .def_static("power_sum", [](const std::vector<int> &la, const RationalFunctionQ &c) { return SymFunc::power_sum(to_partition(la), c); },
                    "partition"_a, "c"_a = RationalFunctionQ(1))
        .def("terms", &terms_of, "partition tuple -> coefficient")
        .def("coeff", [](const SymFunc &f, const std::vector<int> &la) { return f.coeff(to_partition(la)); }, "partition"_a)
        .def("is_zero", &SymFunc::is_zero)
        .def("to_json", [](const SymFunc &f) { return to_py(to_json(f)); })
        .def("to_csv", [](const SymFunc &f) { return to_csv(f); })
        .def("evaluate", [](const SymFunc &f, const py::object &q) { return to_py(evaluated_json(f, to_mpq(q))); }, "q"_a)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * RationalFunctionQ())
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__len__", &SymFunc::size)
        .def("__str__", &SymFunc::to_string)
        .def("__repr__", [](const SymFunc &f) { return "SymFunc(" + f.to_string() + ")"; });

    bind_state<FockState>(m, "FockState");
    bind_state<DualFockState>(m, "DualFockState");

    m.def("partitions_of", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto &la : partitions_of(n)) out.push_back(la.parts());
        return out;
    }, "n"_a);
    m.def("z_q", [](const std::vector<int> &la) { return z_q(to_partition(la)); }, "partition"_a);
    m.def("inner_product", &inner_product_q, "f"_a, "g"_a);
    m.def("one_row_Z", &one_row_Z, "n"_a);
    m.def("two_row_Z", &two_row_Z, "r"_a, "m"_a);
    m.def("macdonald_P", [](const std::vector<int> &la) {
        return macdonald_P(to_partition(la), RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(2));
    }, "partition"_a, "P_la(q^4, q^2) by Gram-Schmidt");
    m.def("jack_P", [](const std::vector<int> &la, const py::object &alpha) { return jack_P(to_partition(la), to_mpq(alpha)); },
          "partition"_a, "alpha"_a = 2);
    m.def("specialize_q1", &specialize_q1, "f"_a);
    m.def("collinear_ratio", &collinear_ratio<RationalFunctionQ>, "f"_a, "g"_a);

    m.def("cn_series", [](int order) { return coeffs_of(cn_series(order)); }, "order"_a);
    m.def("one_row_vos", &one_row_vos_extracted, "n"_a);
    m.def("two_row_vos", &two_row_vos, "r"_a, "s"_a);
    m.def("dual_one_row_vos", &dual_one_row_vos, "n"_a);
    m.def("dual_two_row_vos", &dual_two_row_vos, "r"_a, "s"_a);
    m.def("pairing", &pairing, "dual"_a, "state"_a);
    m.def("matrix_element", &matrix_element, "m"_a, "n"_a);
    m.def("matrix_element_series", [](int order) { return coeffs_of(matrix_element_series(order)); }, "order"_a);
    m.def("qzonal_from_vos", &qzonal_from_vos, "n"_a, "m"_a);
    m.def("dual_qzonal_from_vos", &dual_qzonal_from_vos, "n"_a, "m"_a);

    m.def("identity_names", &identity_names);
    m.def("verify", [](const std::string &name, int order, std::optional<int> max_weight) {
        IdentityReport r;
        {
            py::gil_scoped_release release;
            r = run_identity(name, order, max_weight);
        }
        return to_py(to_json(r));
    }, "identity"_a, "order"_a = 8, "max_weight"_a = py::none());
}
