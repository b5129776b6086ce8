#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "bmhull/brownian.hpp"
#include "bmhull/constants.hpp"
#include "bmhull/exit_laws.hpp"
#include "bmhull/geometry.hpp"
#include "bmhull/monte_carlo.hpp"
#include "bmhull/special_functions.hpp"

namespace py = pybind11;
using namespace bmhull;

namespace {

using PointList = std::vector<std::pair<double, double>>;

std::vector<Point2> to_points(const PointList& pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return out;
}

PointList from_points(const std::vector<Point2>& pts) {
    PointList out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

AngleSet to_angle_set(const py::object& omega) {
    if (py::isinstance<py::str>(omega)) {
        const std::string name = omega.cast<std::string>();
        if (name == "circle") return AngleSet::full_circle();
        if (auto p = preset_from_name(name)) return preset_angles(*p);
        throw py::value_error("unknown preset '" + name + "'");
    }
    return AngleSet::finite(omega.cast<std::vector<double>>());
}

ExitLaw to_law(const std::string& name, double a) {
    if (name == "halfplane") return ExitLaw::half_plane();
    if (name == "strip") return ExitLaw::strip();
    if (name == "cone60") return ExitLaw::cone60();
    if (name == "triangle-unit") return ExitLaw::triangle_unit();
    if (name == "triangle-pomega") return ExitLaw::triangle_p_omega();
    if (name == "bessel3") return ExitLaw::bessel3(a);
    if (name == "disk") return ExitLaw::disk();
    throw py::value_error("unknown exit law '" + name + "'");
}

py::dict estimate_dict(const Estimate& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["std_error"] = e.std_error;
    d["n_paths"] = e.n_paths;
    d["n_steps"] = e.n_steps;
    d["total_time"] = e.total_time;
    d["estimator"] = e.estimator == Estimator::hull ? "hull" : "support";
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "mean perimeter constants of convex hulls of rotated planar Brownian motion";

    // geometry
    m.def("convex_hull",
          [](const PointList& pts) { return from_points(convex_hull(to_points(pts)).vertices); },
          py::arg("points"), "Convex hull vertices in counterclockwise order");
    m.def("hull_perimeter",
          [](const PointList& pts) { return perimeter(convex_hull(to_points(pts))); },
          py::arg("points"));
    m.def("support_value",
          [](const PointList& pts, double theta) { return support_value(to_points(pts), theta); },
          py::arg("points"), py::arg("theta"));
    m.def("rotated_hull_perimeter",
          [](const PointList& pts, const py::object& omega) {
              return rotated_hull_perimeter(to_points(pts), to_angle_set(omega));
          },
          py::arg("points"), py::arg("omega"),
          "Perimeter of the hull of rotated copies; omega is a preset name or angle list");

    // sampling
    m.def("sample_path",
          [](std::uint64_t n_steps, double total_time, std::uint64_t seed,
             std::uint64_t path_index) {
              return from_points(sample_path({n_steps, total_time, seed, path_index}).points);
          },
          py::arg("n_steps"), py::arg("total_time") = 1.0, py::arg("seed") = 0,
          py::arg("path_index") = 0);
    m.def("sample_halfplane_exit", &sample_halfplane_exit, py::arg("seed"), py::arg("index"));

    // special functions
    m.def("bessel_i0", &bessel_i0, py::arg("x"));
    m.def("normal_cdf", &normal_cdf, py::arg("z"));
    m.def("max_abs_cdf", &max_abs_cdf, py::arg("z"));
    m.def("chi3", &chi3, py::arg("n"));
    m.def("dirichlet_l_chi3", &dirichlet_l_chi3, py::arg("s"));
    m.def("rect_integral", &rect_integral, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"));

    // exit laws
    m.def("laplace_transform",
          [](const std::string& law, double lam, double a) {
              return laplace_transform(to_law(law, a), lam);
          },
          py::arg("law"), py::arg("lam"), py::arg("a") = 0.0);
    m.def("survival",
          [](const std::string& law, double t, double a) { return survival(to_law(law, a), t); },
          py::arg("law"), py::arg("t"), py::arg("a") = 0.0);
    m.def("density",
          [](const std::string& law, double t, double a) { return density(to_law(law, a), t); },
          py::arg("law"), py::arg("t"), py::arg("a") = 0.0);
    m.def("inv_sqrt_moment",
          [](const std::string& law, double a) { return inv_sqrt_moment(to_law(law, a)); },
          py::arg("law"), py::arg("a") = 0.0);
    m.def("mellin_triangle", &mellin_triangle, py::arg("s"));

    // constants
    m.def("analytic_ell",
          [](const std::string& preset) {
              const auto p = preset_from_name(preset);
              if (!p) throw py::value_error("unknown preset '" + preset + "'");
              const EllValue v = analytic_ell(*p);
              py::dict d;
              d["value"] = v.value;
              d["route"] = route_name(v.route);
              d["est_abs_error"] = v.est_abs_error;
              return d;
          },
          py::arg("preset"));
    m.def("ell_via_laplace",
          [](const std::string& law, double a) { return ell_via_laplace(to_law(law, a)).value; },
          py::arg("law"), py::arg("a") = 0.0);
    m.def("preset_names", [] {
        std::vector<std::string> names;
        for (OmegaPreset p : kAllPresets) names.emplace_back(preset_name(p));
        return names;
    });

    // Monte Carlo
    m.def("estimate_ell",
          [](const py::object& omega, std::uint64_t n_steps, std::uint64_t n_paths,
             std::uint64_t seed, double total_time, const std::string& method, int threads) {
              const AngleSet w = to_angle_set(omega);
              const Estimate e = method == "support"
                                     ? estimate_ell_support(w, n_steps, n_paths, seed,
                                                            total_time, threads)
                                     : estimate_ell_hull(w, n_steps, n_paths, seed, total_time,
                                                         threads);
              return estimate_dict(e);
          },
          py::arg("omega"), py::arg("n_steps"), py::arg("n_paths"), py::arg("seed") = 0,
          py::arg("total_time") = 1.0, py::arg("method") = "hull", py::arg("threads") = 0);
    m.def("verify_all",
          [](std::uint64_t n_steps, std::uint64_t n_paths, std::uint64_t seed, double rel_tol,
             int threads) {
              const VerifyReport rep = verify_all(n_steps, n_paths, seed, rel_tol, threads);
              py::list rows;
              for (const VerifyRow& r : rep.rows) {
                  py::dict d;
                  d["preset"] = preset_name(r.preset);
                  d["mc"] = r.mc;
                  d["std_error"] = r.std_error;
                  d["analytic"] = r.analytic;
                  d["rel_err"] = r.rel_err;
                  d["pass"] = r.pass;
                  rows.append(d);
              }
              py::dict d;
              d["rows"] = rows;
              d["all_pass"] = rep.all_pass;
              return d;
          },
          py::arg("n_steps"), py::arg("n_paths"), py::arg("seed") = 0,
          py::arg("rel_tol") = 0.015, py::arg("threads") = 0);
}
