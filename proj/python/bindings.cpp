#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "curvemul/dt.hpp"
#include "curvemul/error.hpp"
#include "curvemul/scene.hpp"
#include "curvemul/scene_io.hpp"
#include "curvemul/torus.hpp"
#include "curvemul/torus_scenes.hpp"
#include "curvemul/verify.hpp"

namespace py = pybind11;
using namespace curvemul;
using torus::TorusClass;

namespace {

torus::TwistDirection direction(bool negative) {
    return negative ? torus::TwistDirection::Negative : torus::TwistDirection::Positive;
}

scene::SmoothingConvention smoothing(bool flipped) {
    return flipped ? scene::SmoothingConvention::Flipped : scene::SmoothingConvention::Standard;
}

template <typename T>
T take(const py::dict& d, const char* key, T fallback) {
    return d.contains(key) ? d[key].cast<T>() : fallback;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    static py::exception<Error> error(m, "CurvemulError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.what()));
            inst.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<TorusClass>(m, "TorusClass")
        .def(py::init([](std::int64_t x, std::int64_t y) { return torus::normalize(x, y); }), py::arg("x"),
             py::arg("y"))
        .def(py::init([](py::tuple t) {
            if (t.size() != 2) throw Error(ErrorCode::MalformedInput, "a class is a pair (x, y)");
            return torus::normalize(t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>());
        }))
        .def_property_readonly("x", &TorusClass::x)
        .def_property_readonly("y", &TorusClass::y)
        .def_property_readonly("multiplicity", &TorusClass::multiplicity)
        .def("primitive", &TorusClass::primitive)
        .def("is_primitive", &TorusClass::is_primitive)
        .def("as_tuple", [](const TorusClass& c) { return py::make_tuple(c.x(), c.y()); })
        .def("__eq__", [](const TorusClass& a, const TorusClass& b) { return a == b; })
        .def("__hash__", [](const TorusClass& c) { return py::hash(py::make_tuple(c.x(), c.y())); })
        .def("__mul__", [](const TorusClass& a, const TorusClass& b) { return torus::multiply(a, b); })
        .def("__repr__", [](const TorusClass& c) { return "TorusClass" + c.to_string(); })
        .def("__str__", &TorusClass::to_string);
    py::implicitly_convertible<py::tuple, TorusClass>();

    m.def("normalize", &torus::normalize, py::arg("x"), py::arg("y"));
    m.def("intersection", &torus::intersection, py::arg("a"), py::arg("b"));
    m.def("multiply", &torus::multiply, py::arg("a"), py::arg("b"));
    m.def("power", &torus::power, py::arg("a"), py::arg("k"));
    m.def("signed_power_multiply", &torus::signed_power_multiply, py::arg("a"), py::arg("n"), py::arg("b"));
    m.def(
        "dehn_twist",
        [](const TorusClass& a, const TorusClass& b, bool negative) {
            return torus::dehn_twist(a, b, direction(negative));
        },
        py::arg("a"), py::arg("b"), py::arg("negative") = false);
    m.def(
        "convexity_profile",
        [](const TorusClass& alpha, const TorusClass& beta, const TorusClass& gamma, std::int64_t n_min,
           std::int64_t n_max) { return torus::convexity_profile(alpha, beta, gamma, n_min, n_max).values; },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("n_min"), py::arg("n_max"));

    py::class_<scene::Scene>(m, "Scene")
        .def_readonly("name", &scene::Scene::name)
        .def_property_readonly("curves",
                               [](const scene::Scene& s) {
                                   std::vector<std::string> ids;
                                   for (const auto& c : s.curves) ids.push_back(c.id);
                                   return ids;
                               })
        .def("to_text", &scene::scene_to_text)
        .def("save", &scene::save_scene, py::arg("path"))
        .def("__repr__", [](const scene::Scene& s) {
            return "<Scene '" + s.name + "' " + std::to_string(s.vertices.size()) + " vertices>";
        });

    m.def("load_scene", &scene::load_scene, py::arg("path"));
    m.def("scene_from_text", &scene::scene_from_text, py::arg("text"));
    m.def("torus_grid_scene", &scene::torus_grid_scene, py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"));
    m.def(
        "validate",
        [](const scene::Scene& s) {
            const auto d = scene::validate(s);
            py::dict out;
            out["vertices"] = d.vertices;
            out["edges"] = d.edges;
            out["faces"] = d.faces;
            out["euler_characteristic"] = d.euler_characteristic;
            out["genus"] = d.genus;
            out["crossings"] = d.crossings;
            out["junctions"] = d.junctions;
            return out;
        },
        py::arg("scene"));
    m.def(
        "resolve",
        [](const scene::Scene& s, const std::string& from, const std::string& to, bool flipped) {
            return scene::resolve(s, from, to, smoothing(flipped));
        },
        py::arg("scene"), py::arg("from_curve"), py::arg("to_curve"), py::arg("flipped") = false);
    m.def(
        "parallel_copies",
        [](const scene::Scene& s, const std::string& curve, std::int64_t n, bool distinct) {
            return scene::parallel_copies(s, curve, n, distinct ? scene::CopyLabels::Distinct : scene::CopyLabels::Shared);
        },
        py::arg("scene"), py::arg("curve"), py::arg("n"), py::arg("distinct") = false);
    m.def(
        "find_bigons",
        [](const scene::Scene& s, const std::string& a, const std::string& b) {
            return scene::find_bigons(s, a, b).size();
        },
        py::arg("scene"), py::arg("a"), py::arg("b"));
    m.def("crossing_count", &scene::crossing_count, py::arg("scene"), py::arg("a"), py::arg("b"));
    m.def("isomorphic", &scene::isomorphic, py::arg("a"), py::arg("b"));
    m.def(
        "census",
        [](const scene::Scene& s) {
            // (curve, class or None, trivial) per component
            const auto c = scene::components(s);
            const auto trivial = scene::trivial_components(s);
            py::list out;
            for (std::size_t i = 0; i < c.components.size(); ++i) {
                py::object cls = py::none();
                if (c.components[i].homology) cls = py::cast(scene::torus_class_of_component(c.components[i]));
                const bool is_trivial = std::find(trivial.begin(), trivial.end(), i) != trivial.end();
                out.append(py::make_tuple(c.components[i].curve, cls, is_trivial));
            }
            return out;
        },
        py::arg("scene"));

    py::class_<dt::DTCoords>(m, "DTCoords")
        .def(py::init([](std::vector<std::int64_t> mm, std::vector<std::int64_t> t, std::vector<std::int64_t> b) {
                 return dt::DTCoords{std::move(mm), std::move(t), std::move(b)};
             }),
             py::arg("m"), py::arg("t"), py::arg("b") = std::vector<std::int64_t>{})
        .def_readwrite("m", &dt::DTCoords::m)
        .def_readwrite("t", &dt::DTCoords::t)
        .def_readwrite("b", &dt::DTCoords::b)
        .def("__eq__", [](const dt::DTCoords& a, const dt::DTCoords& b) { return a == b; });

    py::class_<dt::DTFile>(m, "DTFile")
        .def_readonly("name", &dt::DTFile::name)
        .def_readwrite("coords", &dt::DTFile::coords)
        .def("validate", [](const dt::DTFile& f) { dt::validate_coords(f.decomposition, f.coords); })
        .def("to_text", &dt::dt_to_text)
        .def("save", &dt::save_dt, py::arg("path"));

    m.def("load_dt", &dt::load_dt, py::arg("path"));
    m.def("dt_curve_intersection", &dt::pants_curve_intersection, py::arg("coords"), py::arg("i"));
    m.def(
        "twist_multiply",
        [](const dt::DTCoords& x, const std::vector<std::int64_t>& k) { return dt::twist_multiply(x, k); },
        py::arg("coords"), py::arg("k"));
    m.def(
        "dt_dehn_twist",
        [](const dt::DTCoords& x, std::size_t i, bool negative) { return dt::dehn_twist(x, i, direction(negative)); },
        py::arg("coords"), py::arg("i"), py::arg("negative") = false);
    m.def("solve_twists", &dt::solve_twists, py::arg("x1"), py::arg("x2"));

    m.def("suite_names", &verify::suite_names);
    m.def("_verify_json", [](const std::vector<std::string>& suites, const py::dict& p) {
        verify::Config c;
        c.suites = suites;
        c.theorem1_bound = take(p, "theorem1_bound", c.theorem1_bound);
        c.convexity_bound = take(p, "convexity_bound", c.convexity_bound);
        c.n_min = take(p, "n_min", c.n_min);
        c.n_max = take(p, "n_max", c.n_max);
        c.theorem6_bound = take(p, "theorem6_bound", c.theorem6_bound);
        c.gamma_bound = take(p, "gamma_bound", c.gamma_bound);
        c.prop7_bound = take(p, "prop7_bound", c.prop7_bound);
        c.m_max = take(p, "m_max", c.m_max);
        c.lemma4_bound = take(p, "lemma4_bound", c.lemma4_bound);
        c.dt_trials = take(p, "dt_trials", c.dt_trials);
        c.seed = take(p, "seed", c.seed);
        if (p.contains("corpus_dir")) c.corpus_dir = p["corpus_dir"].cast<std::filesystem::path>();
        std::string out;
        {
            py::gil_scoped_release release;
            out = verify::run_all(c).to_json(true).dump();
        }
        return out;
    });
}
