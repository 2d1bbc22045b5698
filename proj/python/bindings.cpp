// Python bindings for the parking-function library. Counts and coefficients
// are arbitrary-precision on the C++ side and cross the boundary as native
// python ints.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "naples/core.hpp"
#include "naples/enumeration.hpp"
#include "naples/fibers.hpp"
#include "naples/format.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"
#include "naples/qstats.hpp"
#include "naples/render.hpp"
#include "naples/verify.hpp"

namespace py = pybind11;
using namespace naples;

namespace {

py::object to_py_int(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

BigInt to_bigint(const py::object& value) {
  return BigInt(std::string(py::str(value)));
}

py::tuple to_tuple(const std::vector<int>& values) {
  py::tuple out(values.size());
  for (size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  return out;
}

std::string steps_string(const LatticePath& path) {
  std::string s;
  for (Step step : path.steps) s += step == Step::South ? 'S' : 'E';
  return s;
}

LatticePath path_from(const std::string& steps, const std::vector<int>& labels) {
  LatticePath path;
  for (char c : steps) {
    if (c == 'S') {
      path.steps.push_back(Step::South);
    } else if (c == 'E') {
      path.steps.push_back(Step::East);
    } else {
      throw std::invalid_argument("steps must be a string over {S, E}");
    }
  }
  path.labels = labels;
  return path;
}

py::dict series_to_dict(const IndexedSeries& series) {
  py::dict out;
  for (const auto& [index, coeff] : series.terms()) {
    out[to_py_int(index)] = to_py_int(coeff);
  }
  return out;
}

py::list poly_to_list(const QPolynomial& poly) {
  py::list out;
  for (int e = 0; e <= poly.degree(); ++e) out.append(to_py_int(poly.coefficient(e)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "parking functions and k-Naples parking functions";

  py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def(
      "simulate",
      [](const std::vector<int>& pref, int k) -> py::dict {
        auto result = simulate(ParkingPreference(pref), NaplesParameter(k));
        py::dict out;
        if (result) {
          out["sigma"] = result->sigma.values();
          out["pi"] = result->pi.values();
        } else {
          out["failed_car"] = result.error().car;
        }
        return out;
      },
      py::arg("pref"), py::arg("k") = 0,
      "Park all cars; returns {'sigma', 'pi'} or {'failed_car'}.");

  m.def(
      "phi_k",
      [](const std::vector<int>& pref, int k) -> std::optional<std::vector<int>> {
        auto result = phi_k(ParkingPreference(pref), NaplesParameter(k));
        if (!result) return std::nullopt;
        return result->values();
      },
      py::arg("pref"), py::arg("k") = 0,
      "Outcome permutation (spot -> car), or None if some car cannot park.");

  m.def(
      "is_naples_pf",
      [](const std::vector<int>& pref, int k) {
        return is_naples_pf(ParkingPreference(pref), NaplesParameter(k));
      },
      py::arg("pref"), py::arg("k") = 0);

  m.def(
      "ell", [](int i, const std::vector<int>& sigma) { return ell(i, Permutation(sigma)); },
      py::arg("i"), py::arg("sigma"));

  m.def(
      "ell_rev",
      [](int i, const std::vector<int>& sigma) { return ell_rev(i, Permutation(sigma)); },
      py::arg("i"), py::arg("sigma"));

  m.def(
      "ell_profile",
      [](const std::vector<int>& sigma, int k) {
        const EllProfile p = ell_profile(Permutation(sigma), NaplesParameter(k));
        py::dict out;
        out["x"] = p.x;
        out["y"] = p.y;
        out["ell_k"] = p.ell_k;
        return out;
      },
      py::arg("sigma"), py::arg("k") = 0);

  m.def(
      "fiber_size",
      [](const std::vector<int>& sigma, int k) {
        return to_py_int(fiber_size(Permutation(sigma), NaplesParameter(k)));
      },
      py::arg("sigma"), py::arg("k") = 0);

  m.def(
      "fiber_members",
      [](const std::vector<int>& sigma, int k) {
        py::list out;
        for (const ParkingPreference& p : fiber_members(Permutation(sigma), NaplesParameter(k))) {
          out.append(to_tuple(p.values()));
        }
        return out;
      },
      py::arg("sigma"), py::arg("k") = 0,
      "Fiber of sigma in lexicographic order, as tuples.");

  m.def(
      "admissible_sets",
      [](const std::vector<int>& sigma, int k) {
        return admissible_sets(Permutation(sigma), NaplesParameter(k)).sets;
      },
      py::arg("sigma"), py::arg("k") = 0);

  m.def("count_pf_closed", [](int n) { return to_py_int(count_pf_closed(n)); }, py::arg("n"));

  m.def(
      "count_npf_recursive",
      [](int n, int k) { return to_py_int(count_npf_recursive(n, NaplesParameter(k))); },
      py::arg("n"), py::arg("k") = 0);

  m.def(
      "count_npf_permsum",
      [](int n, int k, int threads, int ceiling) {
        return to_py_int(count_npf_permsum(n, NaplesParameter(k), threads, ceiling));
      },
      py::arg("n"), py::arg("k") = 0, py::arg("threads") = 0,
      py::arg("ceiling") = kDefaultEnumerationCeiling);

  m.def(
      "fiber_gf_direct",
      [](int n, int threads, int ceiling) {
        return series_to_dict(fiber_gf_direct(n, threads, ceiling));
      },
      py::arg("n"), py::arg("threads") = 0, py::arg("ceiling") = kDefaultEnumerationCeiling);

  m.def(
      "fiber_gf_recursive", [](int n) { return series_to_dict(fiber_gf_recursive(n)); },
      py::arg("n"));

  m.def(
      "c_coeff",
      [](int n, const py::object& i) { return to_py_int(c_coeff(n, to_bigint(i))); },
      py::arg("n"), py::arg("i"));

  m.def("log_gf", [](int n) { return series_to_dict(log_gf(n)); }, py::arg("n"));

  m.def("q_int", [](int m_) { return poly_to_list(q_int(m_)); }, py::arg("m"));

  m.def(
      "area", [](const std::vector<int>& pref) { return area(ParkingPreference(pref)); },
      py::arg("pref"));

  m.def(
      "area_k",
      [](const std::vector<int>& pref, int k) {
        return area_k(ParkingPreference(pref), NaplesParameter(k));
      },
      py::arg("pref"), py::arg("k") = 0);

  m.def(
      "fiber_area_poly",
      [](const std::vector<int>& sigma, int k) {
        return poly_to_list(fiber_area_poly(Permutation(sigma), NaplesParameter(k)));
      },
      py::arg("sigma"), py::arg("k") = 0,
      "Coefficients of the area_k distribution over the fiber, ascending.");

  m.def(
      "area_distribution",
      [](int n, int k, int threads, int ceiling) {
        return poly_to_list(area_distribution(n, NaplesParameter(k), threads, ceiling));
      },
      py::arg("n"), py::arg("k") = 0, py::arg("threads") = 0,
      py::arg("ceiling") = kDefaultEnumerationCeiling);

  m.def(
      "qt_distribution",
      [](int n, const std::function<long long(const std::vector<int>&)>& stat, int k) {
        const QtPolynomial joint = qt_distribution(
            n, [&stat](const Permutation& sigma) { return stat(sigma.values()); },
            NaplesParameter(k));
        py::dict out;
        for (const auto& [key, coeff] : joint.terms) {
          out[py::make_tuple(key.first, key.second)] = to_py_int(coeff);
        }
        return out;
      },
      py::arg("n"), py::arg("stat"), py::arg("k") = 0,
      "Joint (q, t) distribution keyed by (area exponent, stat value).");

  m.def(
      "latex_polynomial",
      [](const std::vector<py::object>& coeffs) {
        std::vector<BigInt> big;
        big.reserve(coeffs.size());
        for (const py::object& c : coeffs) big.push_back(to_bigint(c));
        return latex_polynomial(QPolynomial(std::move(big)));
      },
      py::arg("coeffs"), "Descending-exponent polynomial string for coefficients[e] = q^e.");

  m.def(
      "pf_to_labeled_dyck",
      [](const std::vector<int>& pref) {
        const LatticePath path = pf_to_labeled_dyck(ParkingPreference(pref));
        py::dict out;
        out["steps"] = steps_string(path);
        out["labels"] = path.labels;
        return out;
      },
      py::arg("pref"));

  m.def(
      "labeled_dyck_to_pf",
      [](const std::string& steps, const std::vector<int>& labels) {
        return labeled_dyck_to_pf(path_from(steps, labels)).values();
      },
      py::arg("steps"), py::arg("labels"));

  m.def(
      "decreasing_npf_check",
      [](const std::vector<int>& pref, int k) {
        return decreasing_npf_check(ParkingPreference(pref), NaplesParameter(k));
      },
      py::arg("pref"), py::arg("k") = 0);

  m.def(
      "decreasing_to_klattice",
      [](const std::vector<int>& pref, int k) {
        return steps_string(decreasing_to_klattice(ParkingPreference(pref), NaplesParameter(k)));
      },
      py::arg("pref"), py::arg("k") = 0);

  m.def(
      "count_decreasing_npf",
      [](int n, int k) { return to_py_int(count_decreasing_npf(n, NaplesParameter(k))); },
      py::arg("n"), py::arg("k") = 0);

  m.def(
      "oracle_fibers",
      [](int n, int k, int ceiling) {
        py::dict out;
        for (const auto& [sigma, members] : oracle_fibers(n, NaplesParameter(k), ceiling)) {
          py::list group;
          for (const ParkingPreference& p : members) group.append(to_tuple(p.values()));
          out[to_tuple(sigma.values())] = group;
        }
        return out;
      },
      py::arg("n"), py::arg("k") = 0, py::arg("ceiling") = kDefaultOracleCeiling);

  m.def(
      "verify",
      [](int n_max, int threads) {
        py::list out;
        for (const CheckResult& c : verify(n_max, threads).checks) {
          py::dict item;
          item["check"] = c.name;
          item["params"] = c.params;
          item["passed"] = c.passed;
          item["counterexample"] = c.counterexample;
          item["elapsed_ms"] = c.elapsed_ms;
          out.append(item);
        }
        return out;
      },
      py::arg("n_max"), py::arg("threads") = 0);

  m.def(
      "render_tikz",
      [](const std::vector<int>& pref, std::optional<int> k) {
        if (k.has_value()) {
          return render_tikz(decreasing_to_klattice(ParkingPreference(pref), NaplesParameter(*k)),
                             *k);
        }
        return render_tikz(pf_to_labeled_dyck(ParkingPreference(pref)));
      },
      py::arg("pref"), py::arg("k") = py::none());

  m.def(
      "render_svg",
      [](const std::vector<int>& pref, std::optional<int> k) {
        if (k.has_value()) {
          return render_svg(decreasing_to_klattice(ParkingPreference(pref), NaplesParameter(*k)),
                            *k);
        }
        return render_svg(pf_to_labeled_dyck(ParkingPreference(pref)));
      },
      py::arg("pref"), py::arg("k") = py::none());

  m.attr("__version__") = "0.1.0";
}
