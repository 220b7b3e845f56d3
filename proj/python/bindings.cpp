#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surflink/analysis.hpp"
#include "surflink/errors.hpp"
#include "surflink/group.hpp"
#include "surflink/quandle.hpp"
#include "surflink/sq_presentation.hpp"

namespace py = pybind11;
using namespace surflink;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.str())); }

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

BraidWord braid_for(const std::string& braid, int degree, int needed) {
  if (degree == 0) {
    const BraidWord probe = parse_braid(braid, 1000);
    int top = 1;
    for (int l : probe.letters()) top = std::max(top, (l < 0 ? -l : l) + 1);
    degree = std::max(top, needed);
  }
  return parse_braid(braid, degree);
}

FiniteSymmetricQuandle symmetric(const OpTable& table, const std::vector<int>& rho) {
  return FiniteSymmetricQuandle(FiniteQuandle(table), rho);
}

py::dict analysis_dict(const AnalysisReport& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["factors"] = r.factors;
  d["euler_characteristic"] = r.euler_characteristic;
  d["weak_boundary"] = to_string(r.weak.verdict);
  d["strict_boundary"] = r.strict;
  d["h1"] = to_py(r.h1);
  d["components"] = r.components ? py::cast(*r.components) : py::none();
  d["genus"] = r.genus ? py::cast(*r.genus) : py::none();
  d["order"] = (r.cosets && r.cosets->complete) ? py::cast(r.cosets->order) : py::none();
  py::dict col;
  for (const auto& c : r.colorings) col[py::str(c.target)] = c.count ? py::cast(*c.count) : py::none();
  d["colorings"] = col;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid systems, plat groups and symmetric quandle colorings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  m.def("analyze", [](const std::string& text, std::int64_t coset_limit, int battery_max) {
        AnalysisOptions o;
        o.coset_limit = coset_limit;
        o.battery_max = battery_max;
        return analysis_dict(analyze(parse_braid_system(text), o));
      },
      py::arg("text"), py::arg("coset_limit") = 100000, py::arg("battery_max") = 8);
  m.def("report", [](const std::string& text, std::int64_t coset_limit, int battery_max) {
        AnalysisOptions o;
        o.coset_limit = coset_limit;
        o.battery_max = battery_max;
        return render(analyze(parse_braid_system(text), o), o);
      },
      py::arg("text"), py::arg("coset_limit") = 100000, py::arg("battery_max") = 8);

  m.def("act_word", [](const std::string& braid, const std::string& word, int degree) {
        const Word w = parse_word(word);
        return artin_action(braid_for(braid, degree, w.max_generator()), w).str();
      },
      py::arg("braid"), py::arg("word"), py::arg("degree") = 0);
  m.def("act_fsq", [](const std::string& braid, const std::string& element, int degree) {
        const FSQElement e = parse_fsq_element(element);
        return braid_fsq_action(braid_for(braid, degree, e.max_generator()), e).str();
      },
      py::arg("braid"), py::arg("element"), py::arg("degree") = 0);

  m.def("case2_system", [](int k) { return format_braid_system(case2_system(k)); });
  m.def("slide", [](const std::string& text, int i, const std::string& dir) {
        if (dir != "left" && dir != "right") throw py::value_error("dir must be 'left' or 'right'");
        return format_braid_system(slide(parse_braid_system(text), i,
                                         dir == "left" ? SlideDirection::left : SlideDirection::right));
      },
      py::arg("text"), py::arg("i"), py::arg("dir") = "right");
  m.def("plat_abelianization", [](const std::string& text) {
    const BraidSystem sys = parse_braid_system(text);
    return to_py(abelianization(plat_exponent_sum_matrix(sys), sys.degree()));
  });
  m.def("todd_coxeter", [](const std::string& text, std::int64_t limit) {
        const CosetEnumeration c = todd_coxeter(parse_group_presentation(text), limit);
        return py::make_tuple(c.complete, c.complete ? py::cast(c.order) : py::none(), c.cosets_defined);
      },
      py::arg("presentation"), py::arg("limit") = 100000);
  m.def("plat_group", [](const std::string& text) {
    return format_group_presentation(plat_knot_group(parse_braid_system(text)));
  });

  m.def("dihedral", [](int n) { return dihedral(n).table(); });
  m.def("involution", &named_involution, py::arg("n"), py::arg("name"));
  m.def("good_involutions", [](const OpTable& t) { return enumerate_good_involutions(FiniteQuandle(t)); });
  m.def("is_kei", [](const OpTable& t) { return is_kei(FiniteQuandle(t)); });
  m.def("double", [](const OpTable& t) {
    const FiniteSymmetricQuandle d = double_quandle(FiniteQuandle(t));
    return py::make_tuple(d.quandle().table(), d.rho());
  });
  m.def("component_signature", [](const OpTable& t, const std::vector<int>& rho) {
    return component_signature(symmetric(t, rho));
  });
  m.def("isomorphism",
        [](const OpTable& t1, const std::vector<int>& r1, const OpTable& t2, const std::vector<int>& r2) {
          return symmetric_quandle_isomorphic(symmetric(t1, r1), symmetric(t2, r2));
        });

  m.def("colorings", [](const std::string& presentation, const std::string& target) {
    return count_colorings(parse_sq_presentation(presentation), parse_target(target));
  });
  m.def("plat_colorings", [](const std::string& braids, const std::string& target) {
    return count_plat_colorings(parse_braid_system(braids), parse_target(target));
  });
  m.def("plat_presentation", [](const std::string& braids) {
    return format_sq_presentation(plat_symmetric_quandle(parse_braid_system(braids)));
  });
}
