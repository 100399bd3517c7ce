#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfcore/birational.hpp"
#include "surfcore/corpus.hpp"
#include "surfcore/errors.hpp"
#include "surfcore/ideal.hpp"
#include "surfcore/io.hpp"
#include "surfcore/lattice.hpp"
#include "surfcore/verify.hpp"

namespace py = pybind11;
using namespace surfcore;

// mpz_class <-> int and mpq_class <-> fractions.Fraction, through decimal strings.
namespace pybind11::detail {

template <>
struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Integer(py::str(src).cast<std::string>());
        return true;
    }
    static handle cast(const Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = Rational(Integer(py::str(src).cast<std::string>()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
        value = Rational(Integer(py::str(src.attr("numerator")).cast<std::string>()),
                         Integer(py::str(src.attr("denominator")).cast<std::string>()));
        value.canonicalize();
        return true;
    }
    static handle cast(const Rational& v, return_value_policy, handle) {
        auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(py::reinterpret_steal<py::object>(
                            PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10)),
                        py::reinterpret_steal<py::object>(
                            PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10)))
            .release();
    }
};

// GraphPtr points to const; the class is registered with a mutable holder.
template <>
struct type_caster<GraphPtr> {
    using Holder = std::shared_ptr<DualGraph>;
    using Base = copyable_holder_caster<DualGraph, Holder>;
    PYBIND11_TYPE_CASTER(GraphPtr, const_name("Graph"));

    bool load(handle src, bool convert) {
        Base base;
        if (!base.load(src, convert)) return false;
        value = static_cast<Holder&>(base);
        return true;
    }
    static handle cast(const GraphPtr& v, return_value_policy policy, handle parent) {
        return Base::cast(std::const_pointer_cast<DualGraph>(v), policy, parent);
    }
};

}  // namespace pybind11::detail

namespace {

template <class T>
py::dict as_dict(const BasicCycle<T>& c) {
    py::dict d;
    for (std::size_t i = 0; i < c.size(); ++i) d[py::str(c.graph()->id(i))] = py::cast(c[i]);
    return d;
}

Cycle cycle_from(const GraphPtr& g, const std::map<std::string, Integer>& m) {
    return Cycle::from_map(g, m);
}

}  // namespace

PYBIND11_MODULE(_surfcore, m) {
    m.doc() = "Exact lattice computations on resolution graphs of surface singularities";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);

    py::class_<DualGraph, std::shared_ptr<DualGraph>>(m, "Graph")
        .def(py::init([](std::string name, const std::vector<std::tuple<std::string, long, long>>& vs,
                         const std::vector<std::tuple<std::string, std::string, long>>& es) {
                 std::vector<Vertex> vertices;
                 for (const auto& [id, s, k] : vs) vertices.push_back({id, s, k});
                 std::vector<Edge> edges;
                 for (const auto& [a, b, mult] : es) edges.push_back({a, b, mult});
                 return std::make_shared<DualGraph>(std::move(name), std::move(vertices), edges);
             }),
             py::arg("name"), py::arg("vertices"), py::arg("edges") = std::vector<std::tuple<std::string, std::string, long>>{},
             "vertices: (id, self_int, kappa); edges: (a, b, mult)")
        .def_static("from_json", [](const std::string& text) { return io::parse_graph_document(text).graph; })
        .def("to_json", [](const GraphPtr& g) { return io::emit(io::graph_document_json({g, {}, std::nullopt})); })
        .def_property_readonly("name", &DualGraph::name)
        .def_property_readonly("ids", [](const DualGraph& g) {
            std::vector<std::string> out;
            for (const auto& v : g.vertices()) out.push_back(v.id);
            return out;
        })
        .def("self_int", [](const DualGraph& g, const std::string& id) { return g.vertex(g.index_of(id)).self_int; })
        .def("kappa", [](const DualGraph& g, const std::string& id) { return g.vertex(g.index_of(id)).kappa; })
        .def("intersection", [](const DualGraph& g, const std::string& a, const std::string& b) {
            return g.intersection(g.index_of(a), g.index_of(b));
        })
        .def("is_valid", [](const DualGraph& g) { return validate_graph(g).valid(); })
        .def("failures", [](const DualGraph& g) { return validate_graph(g).failures; })
        .def("__len__", &DualGraph::size)
        .def("__repr__", [](const DualGraph& g) { return "<Graph " + g.name() + " with " + std::to_string(g.size()) + " vertices>"; });

    py::class_<Cycle>(m, "Cycle")
        .def(py::init(&cycle_from), py::arg("graph"), py::arg("coeffs") = std::map<std::string, Integer>{})
        .def_property_readonly("graph", &Cycle::graph)
        .def("coeffs", [](const Cycle& c) { return as_dict(c); })
        .def("__getitem__", [](const Cycle& c, const std::string& id) { return c[c.graph()->index_of(id)]; })
        .def("is_zero", &Cycle::is_zero)
        .def("is_effective", &Cycle::is_effective)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const Cycle& c, const Integer& k) { return k * c; })
        .def("__rmul__", [](const Cycle& c, const Integer& k) { return k * c; })
        .def(py::self == py::self)
        .def(py::self >= py::self)
        .def(py::self <= py::self)
        .def("__str__", [](const Cycle& c) { return format_cycle(c); })
        .def("__repr__", [](const Cycle& c) { return "<Cycle " + format_cycle(c) + ">"; });

    m.def("parse_cycle", [](const GraphPtr& g, const std::string& s) { return io::parse_cycle_spec(g, s); },
          "Cycle from 'id:coeff,...' or '0'.");

    m.def("pair", py::overload_cast<const Cycle&, const Cycle&>(&pair));
    m.def("fundamental_cycle", [](const GraphPtr& g) { return fundamental_cycle(g); });
    m.def("canonical_cycle", [](const GraphPtr& g) { return as_dict(canonical_cycle(g)); });
    m.def("is_numerically_gorenstein", &is_numerically_gorenstein);
    m.def("is_rational", &is_rational);
    m.def("is_antinef", &is_antinef);
    m.def("antinef_closure", [](const Cycle& d) { return antinef_closure(d); });
    m.def("arithmetic_genus", &arithmetic_genus);
    m.def("multiplicity", &multiplicity);
    m.def("colength", &colength, py::arg("z"), py::arg("pg"), py::arg("h1"));
    m.def("contracts_to_smooth", &contracts_to_smooth);

    py::class_<Tower>(m, "Tower")
        .def(py::init<GraphPtr>())
        .def("blowup_free", [](const Tower& t, const std::string& v, const std::string& id) {
            return t.blown_up(BlowupCenter{FreePoint{v}, id});
        })
        .def("blowup_edge", [](const Tower& t, const std::string& a, const std::string& b, const std::string& id) {
            return t.blown_up(BlowupCenter{EdgePoint{a, b}, id});
        })
        .def("contract_below", &Tower::contracted_below)
        .def("level", &Tower::level)
        .def_property_readonly("base", &Tower::base)
        .def_property_readonly("top", &Tower::top)
        .def_property_readonly("top_level", &Tower::top_level)
        .def("__len__", &Tower::size);

    m.def("minimal_tower", &minimal_tower);
    m.def("pullback", py::overload_cast<const Tower&, std::size_t, std::size_t, const Cycle&>(&pullback));
    m.def("pushforward", &pushforward);
    m.def("relative_canonical", &relative_canonical);

    py::class_<SingularityModel>(m, "Model")
        .def_static("rational", &SingularityModel::rational)
        .def_static("make", &SingularityModel::make, py::arg("base"), py::arg("pg"), py::arg("gorenstein"),
                    py::arg("cohom") = std::nullopt)
        .def_property_readonly("base", &SingularityModel::base)
        .def_property_readonly("is_rational", &SingularityModel::is_rational)
        .def_property_readonly("pg", &SingularityModel::pg)
        .def_property_readonly("gorenstein", &SingularityModel::gorenstein)
        .def_property_readonly("cohom", &SingularityModel::cohom_base);

    py::class_<IdealRep>(m, "Ideal")
        .def_readonly("model", &IdealRep::model)
        .def_readonly("tower", &IdealRep::tower)
        .def_readonly("level", &IdealRep::level)
        .def_readonly("z", &IdealRep::z)
        .def_readonly("cohom", &IdealRep::cohom);

    py::class_<CoreReport>(m, "CoreReport")
        .def_readonly("y", &CoreReport::y)
        .def_readonly("colon", &CoreReport::colon_cycle)
        .def_readonly("core", &CoreReport::core_cycle)
        .def_readonly("contracted", &CoreReport::contracted)
        .def_readonly("b", &CoreReport::b)
        .def_readonly("iterations_to_good", &CoreReport::iterations_to_good)
        .def_readonly("good", &CoreReport::good);

    m.def("represent", &represent, py::arg("model"), py::arg("tower"), py::arg("level"), py::arg("z"),
          py::arg("h1") = std::nullopt);
    m.def("is_pg_numeric", &is_pg_numeric);
    m.def("product", &product);
    m.def("colon_and_core", &colon_and_core);
    m.def("is_good", &is_good);
    m.def("good_closure", &good_closure);
    m.def("contained_in", &contained_in);
    m.def("core_monotone_check", &core_monotone_check, py::arg("larger"), py::arg("smaller"));

    py::class_<corpus::Entry>(m, "Entry")
        .def_readonly("name", &corpus::Entry::name)
        .def_readonly("description", &corpus::Entry::description)
        .def_readonly("model", &corpus::Entry::model)
        .def_readonly("tower", &corpus::Entry::tower)
        .def_property_readonly("graph", [](const corpus::Entry& e) { return e.tower.top(); })
        .def_property_readonly("cycles", [](const corpus::Entry& e) {
            py::dict d;
            for (const auto& [name, c] : e.cycles) d[py::str(name)] = py::cast(c);
            return d;
        });
    m.def("corpus", &corpus::lookup, "Built-in example by name.");
    m.def("corpus_names", &corpus::names);

    m.def("run_acceptance", [](std::uint64_t seed) {
        std::vector<std::tuple<int, std::string, bool, std::string>> out;
        for (const auto& r : verify::run_acceptance(seed)) out.emplace_back(r.id, r.title, r.passed, r.detail);
        return out;
    }, py::arg("seed") = verify::kDefaultSeed);
}
