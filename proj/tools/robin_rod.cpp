// robin_rod: exact steady-state temperatures for a Robin-cooled rod heated by
// piecewise-constant sources, sharp extremal bounds over source classes, and a
// brute-force verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robin/approx.hpp"
#include "robin/extremal.hpp"
#include "robin/figures.hpp"
#include "robin/green.hpp"
#include "robin/io.hpp"
#include "robin/oracle.hpp"
#include "robin/solver.hpp"

namespace {

using robin::kPi;
namespace ext = robin::extremal;
namespace orc = robin::oracle;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct CommonOptions {
    double alpha = 1.0;
    double m = 0.0;
    double M = 1.0;
    double s = 0.5;
    std::optional<double> x0;
    std::string out;
    std::string format = "json";
    orc::OracleConfig oracle;
};

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        robin::io::write_file(out_path, content);
    }
}

int run_solve(const std::string& source_path, const CommonOptions& opt) {
    std::ifstream in(source_path);
    if (!in) {
        std::cerr << "error: cannot read source file " << source_path << "\n";
        return kExitUsage;
    }
    robin::io::json j;
    in >> j;
    const robin::StepSource f = robin::io::step_source_from_json(j);
    const robin::RobinParams params = robin::make_params(opt.alpha);
    const robin::PiecewiseQuadratic u = solve_step(params, f);

    robin::io::json result{{"solution", robin::io::to_json(u)},
                           {"extrema", robin::io::to_json(extrema(u))}};
    emit(result.dump(2) + "\n", opt.out);
    return kExitOk;
}

int run_bound(int theorem, const CommonOptions& opt) {
    const robin::RobinParams params = robin::make_params(opt.alpha);
    const robin::SourceClass cls = robin::make_class(opt.m, opt.M, opt.s);

    robin::io::json result;
    if (theorem == 1) {
        result = robin::io::to_json(ext::max_osc_bound(params, cls));
    } else {
        if (!opt.x0) {
            std::cerr << "error: --theorem " << theorem << " needs --x0\n";
            return kExitUsage;
        }
        if (theorem == 2) {
            const auto bounds = ext::point_value_bounds(params, cls, *opt.x0);
            result = robin::io::json{{"upper", robin::io::to_json(bounds.upper)},
                                     {"lower", robin::io::to_json(bounds.lower)}};
        } else {
            result = robin::io::to_json(ext::edge_gap_bound(params, cls, *opt.x0));
        }
    }
    emit(result.dump(2) + "\n", opt.out);
    return kExitOk;
}

struct VerifyState {
    bool all_passed = true;

    void report(const std::string& name, bool pass, double oracle, double closed,
                double tol, const std::string& params_desc) {
        const double gap = std::abs(oracle - closed);
        std::printf("[%s] %-28s oracle=%s closed=%s |gap|=%s tol=%s\n",
                    pass ? "PASS" : "FAIL", name.c_str(),
                    robin::io::format_double(oracle).c_str(),
                    robin::io::format_double(closed).c_str(),
                    robin::io::format_double(gap).c_str(),
                    robin::io::format_double(tol).c_str());
        if (!pass) {
            std::printf("       violated: |oracle - closed| <= tol at %s\n",
                        params_desc.c_str());
            all_passed = false;
        }
    }

    void check(const std::string& name, bool pass, const std::string& invariant,
               const std::string& params_desc) {
        std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(),
                    invariant.c_str());
        if (!pass) {
            std::printf("       violated at %s\n", params_desc.c_str());
            all_passed = false;
        }
    }
};

int run_verify(bool run_all, const CommonOptions& opt) {
    const robin::RobinParams params = robin::make_params(opt.alpha);
    const robin::SourceClass cls = robin::make_class(opt.m, opt.M, opt.s);
    const double x0 = opt.x0.value_or(kPi / 2);
    const double span = cls.M - cls.m;
    const double tol = robin::default_tolerance();

    std::ostringstream desc;
    desc << "alpha=" << opt.alpha << " m=" << opt.m << " M=" << opt.M
         << " s=" << opt.s << " x0=" << x0 << " seed=" << opt.oracle.seed;
    const std::string at = desc.str();

    VerifyState st;

    // Gap bound vs. exhaustive center scan.
    {
        const auto bound = ext::max_osc_bound(params, cls);
        const double grid_tol =
            std::max(tol, std::pow(2.0 * kPi / static_cast<double>(opt.oracle.n_grid), 2));
        const auto verdict =
            orc::grid_search_gap(params, cls, opt.oracle, bound.bound, grid_tol);
        st.report("gap_bound.grid_search", verdict.pass, verdict.oracle_value,
                  verdict.closed_form_value, grid_tol, at);
    }

    // Pointwise and edge bounds vs. the greedy mass-packing oracle.
    const double packing_tol =
        std::max(tol, 5e-3 * std::max(1.0, span) *
                          std::pow(2000.0 / static_cast<double>(opt.oracle.n_cells), 2));
    {
        const auto bounds = ext::point_value_bounds(params, cls, x0);
        const auto kernel = orc::point_kernel(params, x0, opt.oracle.n_cells);
        const auto verdict = orc::bathtub_max(cls, kernel, opt.oracle,
                                              bounds.upper.bound, packing_tol);
        st.report("point_bound.mass_packing", verdict.pass, verdict.oracle_value,
                  verdict.closed_form_value, packing_tol, at);
    }
    {
        const auto bound = ext::edge_gap_bound(params, cls, x0);
        const auto kernel = orc::edge_kernel(params, x0, opt.oracle.n_cells);
        const auto verdict =
            orc::bathtub_max(cls, kernel, opt.oracle, bound.bound, packing_tol);
        st.report("edge_bound.mass_packing", verdict.pass, verdict.oracle_value,
                  verdict.closed_form_value, packing_tol, at);
    }

    // Closed forms vs. the exact solver.
    {
        const auto pm = ext::point_max(params, x0, cls.half_length);
        const double nu_solver =
            solve_interval(params, pm.center, cls.half_length).value(x0);
        st.report("consistency.point_max", std::abs(pm.max_value - nu_solver) <= 1e-10,
                  nu_solver, pm.max_value, 1e-10, at);

        const double mu_solver =
            solve_interval(params, -kPi + cls.half_length, cls.half_length).value(x0);
        st.report("consistency.point_min", std::abs(pm.min_value - mu_solver) <= 1e-10,
                  mu_solver, pm.min_value, 1e-10, at);
    }
    {
        const auto eg = ext::edge_gap(params, x0, cls.half_length);
        const auto u = solve_interval(params, eg.center, cls.half_length);
        const double tau_solver = u.value(x0) - u.value(-kPi);
        st.report("consistency.edge_gap", std::abs(eg.max_gap - tau_solver) <= 1e-10,
                  tau_solver, eg.max_gap, 1e-10, at);
    }
    {
        const auto g = ext::osc_max(params, cls.half_length, cls.baseline);
        const double osc_solver =
            extrema(solve_step(params, robin::StepSource::class_interval(cls, g.center)))
                .osc;
        st.report("consistency.osc_max",
                  std::abs(span * g.max_osc - osc_solver) <= 1e-10 * std::max(1.0, span),
                  osc_solver, span * g.max_osc, 1e-10 * std::max(1.0, span), at);
    }

    // Random members of the class: never beat the bound, satisfy the equation.
    {
        const auto bound = ext::max_osc_bound(params, cls);
        const auto sources = orc::random_feasible(cls, opt.oracle);
        bool within = true;
        bool pde_ok = true;
        double worst = -1e300;
        for (const auto& f : sources) {
            const auto u = solve_step(params, f);
            worst = std::max(worst, extrema(u).osc);
            within = within && extrema(u).osc <= bound.bound + tol;
            const auto [left, right] = boundary_residuals(u, params);
            pde_ok = pde_ok && std::abs(left) <= 1e-9 && std::abs(right) <= 1e-9;
            for (std::size_t seg = 0; seg < u.segments().size(); ++seg) {
                const auto& piece = u.segments()[seg];
                const double density = f.value_at(0.5 * (piece.lo + piece.hi));
                pde_ok = pde_ok && std::abs(-2.0 * piece.q2 - density) <= 1e-12;
            }
        }
        st.check("gap_bound.random_sources", within,
                 "every sampled osc (worst " + robin::io::format_double(worst) +
                     ") stays below the bound " +
                     robin::io::format_double(bound.bound) + " + tol",
                 at + " n_samples=" + std::to_string(sources.size()));
        st.check("pde.residuals", pde_ok,
                 "boundary residuals <= 1e-9 and -u'' == f per cell (1e-12)", at);

        // Complementary-source identity: u_f + u_{M+m-f} == (M+m) * uniform.
        bool dual_ok = true;
        for (std::size_t i = 0; i < std::min<std::size_t>(sources.size(), 20); ++i) {
            const auto& f = sources[i];
            std::vector<double> complemented = f.values();
            for (double& v : complemented) v = cls.M + cls.m - v;
            const auto u = solve_step(params, f);
            const auto u_c =
                solve_step(params, robin::StepSource(f.breakpoints(), complemented));
            for (int k = 0; k <= 1000; ++k) {
                const double x = -kPi + 2.0 * kPi * k / 1000.0;
                const double expected =
                    (cls.M + cls.m) * robin::uniform_temperature(params, x);
                dual_ok = dual_ok && std::abs(u.value(x) + u_c.value(x) - expected) <= 1e-10;
            }
        }
        st.check("duality.complement", dual_ok,
                 "u_f + u_{M+m-f} == (M+m) * uniform temperature (1e-10)", at);
    }

    if (run_all) {
        // Step-approximation convergence for a smooth in-class source.
        const auto f = [](double x) { return 1.0 + 0.5 * std::sin(x); };
        const std::vector<std::size_t> ns{8, 16, 32, 64};
        const auto rows = orc::convergence_report(params, f, ns);
        if (!opt.out.empty()) {
            robin::io::write_file(opt.out, robin::io::csv_convergence(rows));
        }
        bool monotone = true;
        bool enveloped = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0) monotone = monotone && rows[i].sup_norm < rows[i - 1].sup_norm;
            enveloped = enveloped && rows[i].sup_norm <= rows[i].envelope + 1e-12;
        }
        st.check("convergence.monotone", monotone,
                 "sup-norm strictly decreases over n = 8,16,32,64", at);
        st.check("convergence.envelope", enveloped,
                 "sup-norm <= max G * L1 distance per row (1e-12 slack)", at);

        // Continuity of the gap bound across its regime threshold.
        if ((1.0 + cls.baseline) * cls.half_length >
            cls.baseline * cls.complement_half_length) {
            const double alpha_g = ext::transition_alpha(cls.half_length, cls.baseline);
            if (alpha_g > 1e-7) {
                const double below =
                    ext::osc_max(robin::make_params(alpha_g - 1e-8), cls.half_length,
                                 cls.baseline)
                        .max_osc;
                const double above =
                    ext::osc_max(robin::make_params(alpha_g + 1e-8), cls.half_length,
                                 cls.baseline)
                        .max_osc;
                st.report("regime.continuity", std::abs(below - above) <= 1e-6, below,
                          above, 1e-6, at + " alpha_g=" + std::to_string(alpha_g));
            }
        }
    }

    std::printf("%s\n", st.all_passed ? "verify: all checks passed"
                                      : "verify: FAILURES detected");
    return st.all_passed ? kExitOk : kExitVerifyFailed;
}

int run_figure(const std::string& kind, const CommonOptions& opt,
               std::vector<double> alphas) {
    const bool svg = opt.format == "svg";

    if (kind == "fig1a") {
        const auto rows = robin::figures::max_gap_vs_alpha(opt.m, opt.M, opt.s, 400, 2.0);
        emit(svg ? robin::io::svg_polylines({{"max_gap", rows}})
                 : robin::io::csv_xy("alpha", "max_gap", rows),
             opt.out);
        return kExitOk;
    }
    if (kind == "fig1b") {
        const auto rows = robin::figures::extremal_profile(
            robin::make_params(opt.alpha), opt.m, opt.M, opt.s, 800);
        emit(svg ? robin::io::svg_polylines({{"u", rows}})
                 : robin::io::csv_xy("x", "u", rows),
             opt.out);
        return kExitOk;
    }
    if (kind == "fig2") {
        if (alphas.empty()) alphas = {0.2, 0.4, 1.0};
        const robin::SourceClass cls = robin::make_class(opt.m, opt.M, opt.s);
        const auto rows =
            robin::figures::osc_curves(cls.half_length, cls.baseline, alphas, 400);
        if (svg) {
            std::vector<robin::io::Series> series;
            for (double alpha : alphas) {
                robin::io::Series s{"alpha=" + robin::io::format_double(alpha), {}};
                for (const auto& r : rows) {
                    if (r.alpha == alpha) s.points.push_back({r.center, r.value});
                }
                series.push_back(std::move(s));
            }
            emit(robin::io::svg_polylines(series), opt.out);
        } else {
            emit(robin::io::csv_osc_curves(rows), opt.out);
        }
        return kExitOk;
    }
    std::cerr << "error: unknown figure kind '" << kind
              << "' (expected fig1a, fig1b, or fig2)\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state Robin rod temperatures, sharp extremal bounds, "
                 "and brute-force verification"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string source_path;
    int theorem = 1;
    bool run_all = false;
    std::string figure_kind;
    std::vector<double> figure_alphas;
    double x0_value = 0.0;

    auto add_common = [&](CLI::App* cmd, bool with_class) {
        cmd->add_option("--alpha", opt.alpha, "Robin parameter (> 0)");
        if (with_class) {
            cmd->add_option("--m", opt.m, "ground heat");
            cmd->add_option("--M", opt.M, "top heat");
            cmd->add_option("--s", opt.s, "average heat");
        }
        cmd->add_option("--out", opt.out, "output path (default: stdout)");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve for a step source from JSON");
    solve->add_option("--source", source_path, "step source JSON file")->required();
    add_common(solve, false);
    solve->add_option("--format", opt.format, "json")
        ->check(CLI::IsMember({"json"}));

    CLI::App* bound = app.add_subcommand("bound", "sharp extremal bounds for a class");
    bound->add_option("--theorem", theorem, "1: gap, 2: pointwise, 3: point-vs-edge")
        ->check(CLI::Range(1, 3));
    CLI::Option* bound_x0 = bound->add_option("--x0", x0_value, "evaluation spot");
    add_common(bound, true);
    bound->add_option("--format", opt.format, "json")
        ->check(CLI::IsMember({"json"}));

    CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");
    verify->add_flag("--all", run_all, "include convergence and regime checks");
    CLI::Option* verify_x0 = verify->add_option("--x0", x0_value,
                                                "evaluation spot (default pi/2)");
    add_common(verify, true);
    verify->add_option("--n-cells", opt.oracle.n_cells, "oracle discretization");
    verify->add_option("--n-grid", opt.oracle.n_grid, "center-scan resolution");
    verify->add_option("--n-samples", opt.oracle.n_samples, "random sources");
    verify->add_option("--seed", opt.oracle.seed, "RNG seed");

    CLI::App* figure = app.add_subcommand("figure", "emit figure data (CSV or SVG)");
    figure->add_option("kind", figure_kind, "fig1a | fig1b | fig2")->required();
    figure->add_option("--alpha", figure_alphas, "Robin parameter(s); fig2 takes several");
    figure->add_option("--m", opt.m, "ground heat");
    figure->add_option("--M", opt.M, "top heat");
    figure->add_option("--s", opt.s, "average heat");
    figure->add_option("--out", opt.out, "output path (default: stdout)");
    figure->add_option("--format", opt.format, "csv | svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            opt.format = solve->count("--format") ? opt.format : "json";
            return run_solve(source_path, opt);
        }
        if (bound->parsed()) {
            if (*bound_x0) opt.x0 = x0_value;
            return run_bound(theorem, opt);
        }
        if (verify->parsed()) {
            if (*verify_x0) opt.x0 = x0_value;
            return run_verify(run_all, opt);
        }
        if (figure->parsed()) {
            opt.format = figure->count("--format") ? opt.format : "csv";
            if (!figure_alphas.empty()) opt.alpha = figure_alphas.front();
            if (figure_kind == "fig1b" && figure_alphas.empty()) opt.alpha = 0.5;
            if (figure_kind == "fig1b" || figure_kind == "fig1a") {
                if (figure->count("--m") + figure->count("--M") + figure->count("--s") == 0) {
                    opt.m = 1.0;
                    opt.M = 3.0;
                    opt.s = 1.4;
                }
            }
            return run_figure(figure_kind, opt, figure_alphas);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
