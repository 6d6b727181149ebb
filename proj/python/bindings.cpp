#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zgu/chartable.hpp"
#include "zgu/report.hpp"
#include "zgu/screen.hpp"
#include "zgu/twosub.hpp"
#include "zgu/units.hpp"

namespace py = pybind11;
using namespace zgu;

namespace {

// nlohmann::json -> native python objects (dict/list/str/int/bool/float)
py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::object: {
        py::dict d;
        for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
        return d;
    }
    case json::value_t::array: {
        py::list l;
        for (const auto& v : j) l.append(to_py(v));
        return l;
    }
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
    }
}

} // namespace

PYBIND11_MODULE(_zgu, m) {
    m.doc() = "Exact character tables, torsion-unit constraints and composition-factor "
              "screening for PSL(2,q)";

    m.def("group_order", &group_order, py::arg("q"));
    m.def("count_classes_of_order_r", &count_classes_of_order_r, py::arg("q"), py::arg("r"));
    m.def("divides_power_minus_one", &divides_power_minus_one, py::arg("a"), py::arg("n"),
          py::arg("m"));

    m.def("conjugacy_classes",
          [](long q) { return to_py(classes_json(conjugacy_classes(q))); }, py::arg("q"));
    m.def("conjugacy_classes_brute",
          [](long q) { return to_py(classes_json(conjugacy_classes_brute(q))); }, py::arg("q"));
    m.def("real_classes",
          [](long q) { return to_py(real_classes_json(conjugacy_classes(q))); }, py::arg("q"));

    m.def("char_table",
          [](long q) {
              auto classes = conjugacy_classes(q);
              return to_py(table_json(build_char_table(q), classes));
          },
          py::arg("q"));
    m.def("brauer_characters",
          [](long q) {
              json rows = json::array();
              for (const auto& row : brauer_characters(q)) {
                  json vals = json::object();
                  for (const auto& [label, v] : row.values) vals[label] = v;
                  rows.push_back({{"label", row.label},
                                  {"degree", row.degree},
                                  {"values", vals}});
              }
              return to_py(rows);
          },
          py::arg("q"));
    m.def("verify_orthogonality",
          [](long q) {
              auto classes = conjugacy_classes(q);
              return verify_orthogonality(build_char_table(q), classes).ok;
          },
          py::arg("q"));
    m.def("fs_indicator_xi",
          [](long q) {
              auto classes = conjugacy_classes(q);
              auto table = build_char_table(q);
              return fs_indicator(table, classes, test_character(table, classes).label);
          },
          py::arg("q"));

    m.def("two_subgroups", [](long q) { return to_py(json(theorem21_verdict(q))); },
          py::arg("q"));

    m.def("help_enumerate",
          [](long q, long n, long box) {
              HelpOptions opts;
              opts.box = box;
              return to_py(help_json(help_enumerate(q, n, opts)));
          },
          py::arg("q"), py::arg("order"), py::arg("box") = 10);

    m.def("screen",
          [](const std::string& tag, long q) {
              return to_py(json(screen(parse_candidate(tag), q)));
          },
          py::arg("candidate"), py::arg("q"));
    m.def("minimal_simple",
          [](const std::string& tag) { return to_py(json(minimal_simple_report(tag))); },
          py::arg("g"));
    m.def("suzuki_exclusion",
          [](long p, long n) { return to_py(json(suzuki_exclusion(p, n))); }, py::arg("p"),
          py::arg("n"));

    py::register_exception<Error>(m, "ZguError");
}
