#include "bmhull/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bmhull/constants.hpp"
#include "bmhull/exit_laws.hpp"
#include "bmhull/monte_carlo.hpp"

namespace bmhull {

namespace {
constexpr double kPi = 3.14159265358979323846;

struct Field {
    std::string name;
    std::string text;
    bool quoted = false;  // JSON: strings quoted, numbers/bools bare
};
using Row = std::vector<Field>;

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_int(std::uint64_t v) { return std::to_string(v); }

Field num(std::string name, double v) { return {std::move(name), fmt_num(v), false}; }
Field str(std::string name, std::string v) { return {std::move(name), std::move(v), true}; }
Field boolean(std::string name, bool v) { return {std::move(name), v ? "true" : "false", false}; }
Field integer(std::string name, std::uint64_t v) { return {std::move(name), fmt_int(v), false}; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    q += '"';
    return q;
}

void emit_csv(const std::vector<Row>& rows, std::ostream& out) {
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        out << (i ? "," : "") << rows[0][i].name;
    out << "\n";
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(row[i].text);
        out << "\n";
    }
}

void emit_json(const std::vector<Row>& rows, std::ostream& out) {
    out << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "  {";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            const Field& f = rows[r][i];
            out << (i ? ", " : "") << "\"" << f.name << "\": ";
            if (f.quoted)
                out << "\"" << f.text << "\"";
            else
                out << f.text;
        }
        out << "}" << (r + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
}

void emit(const std::vector<Row>& rows, const std::string& format,
          const std::string& output_path, std::ostream& out) {
    std::ostringstream buf;
    if (format == "json")
        emit_json(rows, buf);
    else
        emit_csv(rows, buf);
    if (output_path.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + output_path);
    file << buf.str();
}

AngleSet parse_omega(const std::string& spec) {
    if (auto p = preset_from_name(spec)) return preset_angles(*p);
    // comma-separated list of angles in degrees
    std::vector<double> degs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            degs.push_back(v);
        } catch (const std::exception&) {
            throw std::domain_error(
                "unknown omega '" + spec +
                "': expected a preset (one, two, perp, cone, three-quarters, "
                "triangle, square, circle) or comma-separated degrees");
        }
    }
    if (degs.empty()) throw std::domain_error("empty omega list");
    std::sort(degs.begin(), degs.end());
    std::vector<double> rad;
    for (double d : degs) {
        if (d < 0.0 || d >= 360.0)
            throw std::domain_error("omega angles must lie in [0, 360) degrees");
        rad.push_back(d * kPi / 180.0);
    }
    return AngleSet::finite(std::move(rad));
}

ExitLaw parse_shape(const std::string& spec) {
    if (spec == "halfplane") return ExitLaw::half_plane();
    if (spec == "strip") return ExitLaw::strip();
    if (spec == "cone60") return ExitLaw::cone60();
    if (spec == "triangle-unit") return ExitLaw::triangle_unit();
    if (spec == "triangle-pomega") return ExitLaw::triangle_p_omega();
    if (spec == "disk") return ExitLaw::disk();
    if (spec.rfind("bessel3=", 0) == 0) {
        const std::string num = spec.substr(8);
        try {
            std::size_t pos = 0;
            const double a = std::stod(num, &pos);
            if (pos != num.size()) throw std::invalid_argument(num);
            return ExitLaw::bessel3(a);
        } catch (const std::exception&) {
            throw std::domain_error("bad bessel3 level '" + num + "'");
        }
    }
    throw std::domain_error("unknown shape '" + spec +
                            "': expected halfplane, strip, cone60, triangle-unit, "
                            "triangle-pomega, bessel3=<a> or disk");
}

int env_threads() {
    const char* v = std::getenv("BMHULL_THREADS");
    if (!v) return 0;
    const int n = std::atoi(v);
    return n > 0 ? n : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mean perimeter constants of rotated Brownian convex hulls"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string output_path;
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", output_path, "write output to a file");
    };

    auto* c_constants =
        app.add_subcommand("constants", "analytic constants for the eight presets");
    add_io(c_constants);

    auto* c_simulate = app.add_subcommand("simulate", "Monte Carlo estimate for one angle set");
    std::string omega_spec = "one";
    std::uint64_t steps = 65536, paths = 20000, seed = 0;
    double total_time = 1.0;
    std::string method = "hull";
    int threads = -1;
    c_simulate->add_option("--omega", omega_spec, "preset name or comma-separated degrees");
    c_simulate->add_option("--steps", steps, "path steps");
    c_simulate->add_option("--paths", paths, "number of paths");
    c_simulate->add_option("--seed", seed, "stream seed");
    c_simulate->add_option("--time", total_time, "path duration");
    c_simulate->add_option("--method", method, "hull or support")
        ->check(CLI::IsMember({"hull", "support"}));
    c_simulate->add_option("--threads", threads, "worker count (default: BMHULL_THREADS or all cores)");
    add_io(c_simulate);

    auto* c_dist = app.add_subcommand("dist", "exit-law curves on a linear grid");
    std::string shape_spec, quantity;
    double grid_from = 0.0, grid_to = 0.0;
    int grid_points = 100;
    c_dist->add_option("--shape", shape_spec, "halfplane|strip|cone60|triangle-unit|triangle-pomega|bessel3=<a>|disk")
        ->required();
    c_dist->add_option("--quantity", quantity, "survival, density or laplace")
        ->required()
        ->check(CLI::IsMember({"survival", "density", "laplace"}));
    c_dist->add_option("--from", grid_from, "grid start")->required();
    c_dist->add_option("--to", grid_to, "grid end")->required();
    c_dist->add_option("--points", grid_points, "grid size")->check(CLI::PositiveNumber);
    add_io(c_dist);

    auto* c_mellin = app.add_subcommand("mellin", "E[T^s] of the unit-triangle exit time");
    double mellin_s = 0.0;
    c_mellin->add_option("--s", mellin_s, "exponent, s > -1/2")->required();
    add_io(c_mellin);

    auto* c_verify =
        app.add_subcommand("verify", "Monte Carlo vs analytic for all eight presets");
    double tol = 0.015;
    c_verify->add_option("--steps", steps, "path steps");
    c_verify->add_option("--paths", paths, "number of paths");
    c_verify->add_option("--seed", seed, "stream seed");
    c_verify->add_option("--tol", tol, "relative tolerance");
    c_verify->add_option("--threads", threads, "worker count");
    add_io(c_verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const int n_threads = threads >= 0 ? threads : env_threads();

    try {
        std::vector<Row> rows;
        if (*c_constants) {
            for (OmegaPreset p : kAllPresets) {
                const EllValue v = analytic_ell(p);
                rows.push_back({str("preset", preset_name(p)), num("value", v.value),
                                str("route", route_name(v.route)),
                                num("est_abs_error", v.est_abs_error)});
            }
            emit(rows, format, output_path, out);
            return 0;
        }
        if (*c_simulate) {
            const AngleSet omega = parse_omega(omega_spec);
            const Estimate e =
                method == "support"
                    ? estimate_ell_support(omega, steps, paths, seed, total_time, n_threads)
                    : estimate_ell_hull(omega, steps, paths, seed, total_time, n_threads);
            rows.push_back({str("omega", omega_spec), str("method", method),
                            num("mean", e.mean), num("std_error", e.std_error),
                            integer("n_paths", e.n_paths), integer("n_steps", e.n_steps),
                            num("total_time", e.total_time)});
            emit(rows, format, output_path, out);
            return 0;
        }
        if (*c_dist) {
            const ExitLaw law = parse_shape(shape_spec);
            const std::string xname = quantity == "laplace" ? "lambda" : "t";
            for (int i = 0; i < grid_points; ++i) {
                const double x =
                    grid_points == 1
                        ? grid_from
                        : grid_from + (grid_to - grid_from) * i / (grid_points - 1.0);
                double v;
                if (quantity == "survival")
                    v = survival(law, x);
                else if (quantity == "density")
                    v = density(law, x);
                else
                    v = laplace_transform(law, x);
                rows.push_back({num(xname, x), num("value", v)});
            }
            emit(rows, format, output_path, out);
            return 0;
        }
        if (*c_mellin) {
            rows.push_back({num("s", mellin_s), num("value", mellin_triangle(mellin_s))});
            emit(rows, format, output_path, out);
            return 0;
        }
        if (*c_verify) {
            const VerifyReport report = verify_all(steps, paths, seed, tol, n_threads);
            for (const VerifyRow& r : report.rows) {
                rows.push_back({str("preset", preset_name(r.preset)), num("mc", r.mc),
                                num("std_error", r.std_error), num("analytic", r.analytic),
                                num("rel_err", r.rel_err), boolean("pass", r.pass)});
            }
            emit(rows, format, output_path, out);
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace bmhull
