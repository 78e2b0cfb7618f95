#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathfock/catalog.hpp"
#include "wreathfock/errors.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/io.hpp"
#include "wreathfock/reports.hpp"

namespace py = pybind11;
using namespace wreathfock;

namespace {

// Python-side handles; the library keeps its objects immutable and shared.
struct PyGroup {
  GroupPtr group;
};

struct PyClassFunction {
  ClassFunction f;
};

struct PyFock {
  std::shared_ptr<const FockAlgebra> algebra;
};

py::object big_int(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

std::vector<std::string> fraction_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_fraction_string(q));
  return out;
}

TypeMatrix type_from_entries(std::size_t n, const std::vector<std::array<std::size_t, 3>>& entries) {
  std::vector<TypeEntry> out;
  for (const auto& e : entries) out.push_back({e[0], e[1], e[2]});
  return TypeMatrix(n, std::move(out));
}

std::vector<std::array<std::size_t, 3>> entries_of(const TypeMatrix& t) {
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& e : t.entries()) out.push_back({e.cycle_length, e.class_index, e.multiplicity});
  return out;
}

}  // namespace

PYBIND11_MODULE(_wreathfock, m) {
  m.doc() = "Class functions on wreath products, pullbacks and the Fock algebra";

  static py::exception<Error> error(m, "Error");
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<ResourceError> resource_error(m, "ResourceError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const ResourceError& e) {
      py::set_error(resource_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("label", [](const PyGroup& g) { return g.group->label(); })
      .def_property_readonly("order", [](const PyGroup& g) { return g.group->size(); })
      .def_property_readonly("num_classes", [](const PyGroup& g) { return g.group->num_classes(); })
      .def_property_readonly("class_sizes", [](const PyGroup& g) { return g.group->classes().sizes; })
      .def("info_json", [](const PyGroup& g) { return group_info_report(*g.group).dump(); })
      .def("classes_json", [](const PyGroup& g) { return group_classes_report(*g.group).dump(); })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group " + g.group->label() + " of order " + std::to_string(g.group->size()) + ">";
      });

  m.def("default_max_order", &default_max_order);
  m.def("catalog", [](const std::string& name, std::size_t max_order) { return PyGroup{catalog_group(name, max_order)}; },
        py::arg("name"), py::arg("max_order") = default_max_order());
  m.def("group_from_json", [](const std::string& text) { return PyGroup{build_group(parse_group_definition(Json::parse(text)))}; });
  m.def("direct_product", [](const PyGroup& g, const PyGroup& h) { return PyGroup{direct_product(g.group, h.group).group}; });

  m.def("type_of",
        [](const PyGroup& base, const std::vector<Index>& parts, const std::vector<std::int32_t>& perm) {
          return entries_of(type_of(*base.group, WreathElement{parts, Permutation(perm)}));
        },
        py::arg("base"), py::arg("parts"), py::arg("perm"));
  m.def("wreath_classes_json", [](const PyGroup& base, std::size_t n) { return wreath_classes_report(base.group, n).dump(); });
  m.def("wreath_num_classes", [](const PyGroup& base, std::size_t n) { return classes_by_type(*base.group, n).size(); });
  m.def("wreath_centralizer_order",
        [](const PyGroup& base, std::size_t n, const std::vector<std::array<std::size_t, 3>>& entries) {
          return big_int(centralizer_order(*base.group, type_from_entries(n, entries)));
        });

  m.def("verify_iso_json", [](const std::string& scenario) {
    const Scenario s = load_scenario(scenario);
    const Report r = decomposition_json(build_pullback(s.alpha, s.beta));
    return r.json.dump();
  });
  m.def("check_closed_json", [](const std::string& scenario) {
    const Scenario s = load_scenario(scenario);
    return closedness_report(build_pullback(s.alpha, s.beta)).json.dump();
  });
  m.def("golden_examples_json", [] { return golden_examples_report().json.dump(); });
  m.def("kunneth_json", [](const PyGroup& g, const PyGroup& h, std::size_t max_level) {
    return kunneth_report(g.group, h.group, max_level).json.dump();
  });
  m.def("series_json", [](const PyGroup& g, std::size_t max_n) { return series_report(*g.group, max_n).json.dump(); });
  m.def("colored_partition_series", [](std::size_t colors, std::size_t max_n) {
    py::list out;
    for (const auto& z : colored_partition_series(colors, max_n)) out.append(big_int(z));
    return out;
  });

  py::class_<PyClassFunction>(m, "ClassFunction")
      .def_property_readonly("group", [](const PyClassFunction& f) { return f.f.space().label(); })
      .def_property_readonly("values", [](const PyClassFunction& f) { return fraction_strings(f.f.values()); })
      .def("to_json", [](const PyClassFunction& f) { return to_json(f.f).dump(); })
      .def("__eq__", [](const PyClassFunction& a, const PyClassFunction& b) { return a.f == b.f; })
      .def("__add__", [](const PyClassFunction& a, const PyClassFunction& b) { return PyClassFunction{a.f + b.f}; })
      .def("__sub__", [](const PyClassFunction& a, const PyClassFunction& b) { return PyClassFunction{a.f - b.f}; });
  m.def("inner_product", [](const PyClassFunction& a, const PyClassFunction& b) {
    return to_fraction_string(inner_product(a.f, b.f));
  });

  py::class_<PyFock>(m, "FockAlgebra")
      .def(py::init([](const PyGroup& g, std::size_t max_level) {
             return PyFock{std::make_shared<const FockAlgebra>(g.group, max_level)};
           }),
           py::arg("base"), py::arg("max_level") = kDefaultMaxLevel)
      .def_property_readonly("max_level", [](const PyFock& f) { return f.algebra->max_level(); })
      .def("num_classes", [](const PyFock& f, std::size_t n) { return f.algebra->level(n)->num_classes(); })
      .def("types", [](const PyFock& f, std::size_t n) {
        std::vector<std::vector<std::array<std::size_t, 3>>> out;
        for (const auto& c : f.algebra->level(n)->classes()) out.push_back(entries_of(c.type));
        return out;
      })
      .def("unit", [](const PyFock& f) { return PyClassFunction{f.algebra->unit()}; })
      .def("indicator", [](const PyFock& f, std::size_t n, std::size_t c) {
        return PyClassFunction{indicator(f.algebra->level(n), c)};
      })
      .def("delta", [](const PyFock& f, std::size_t n, std::size_t c) { return PyClassFunction{f.algebra->delta(n, c)}; })
      .def("monomial", [](const PyFock& f, std::size_t n, const std::vector<std::array<std::size_t, 3>>& entries) {
        return PyClassFunction{f.algebra->monomial_value(type_from_entries(n, entries))};
      })
      .def("product", [](const PyFock& f, const PyClassFunction& a, const PyClassFunction& b) {
        return PyClassFunction{f.algebra->product(a.f, b.f)};
      })
      .def("product_by_element_sum", [](const PyFock& f, const PyClassFunction& a, const PyClassFunction& b) {
        return PyClassFunction{fock_product_by_element_sum(*f.algebra, a.f, b.f)};
      })
      .def("change_of_basis", [](const PyFock& f, std::size_t n) {
        const RationalMatrix mat = f.algebra->change_of_basis(n);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t r = 0; r < mat.rows(); ++r) rows.push_back(fraction_strings(mat.row(r)));
        return rows;
      })
      .def("basis_report_json", [](const PyFock& f, std::size_t n) { return fock_basis_report(*f.algebra, n).json.dump(); });
}
