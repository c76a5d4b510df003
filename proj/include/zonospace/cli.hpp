#pragma once

#include "zonospace/body.hpp"
#include "zonospace/campaign.hpp"
#include "zonospace/error.hpp"
#include "zonospace/inequalities.hpp"
#include "zonospace/io.hpp"
#include "zonospace/lifted.hpp"
#include "zonospace/oracle.hpp"
#include "zonospace/rkhs.hpp"
#include "zonospace/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace zonospace::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

struct Command {
    std::string input;
    std::string second_input;
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t max_diangles = 10;
    double tol = 1e-9;
    std::size_t nodes = 16;
    double ridge = 0.0;
    int polygonize_disc = 0;
    bool csv = false;
    bool svg = false;
    double scalar = 0.0;
};

namespace detail {

using io::json;

inline Body load_body(const std::string& path, int polygonize)
{
    Body b = io::body_from_json(io::read_json_file(path), "");
    return polygonize > 0 ? oracle::polygonize(b, polygonize) : b;
}

inline LiftedVector load_lifted(const std::string& path) { return io::lifted_from_json(io::read_json_file(path)); }

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json body_stats(const Body& b)
{
    const double o = perimeter(b);
    const double m = area(b);
    return {{"area", m},
            {"perimeter", o},
            {"diangles", b.size()},
            {"disc", b.disc_radius()},
            {"circumradius", max_support(b)},
            {"isoperimetric_deficit", o * o - 4.0 * pi * m},
            {"canonical", io::to_json(b)}};
}

inline json lifted_stats(const LiftedVector& x)
{
    return {{"canonical", io::to_json(x)},
            {"perimeter_ext", perimeter_ext(x)},
            {"measure_ext", measure_ext(x)},
            {"deficit", deficit(x)},
            {"norm", norm(x)},
            {"norm_c", norm_c(x)},
            {"norm_bp", norm_bp(x)},
            {"disc_multiple", equality_case_check(x)}};
}

inline json campaign_json(const CampaignReport& r, const Command& c)
{
    return {{"check", check_name(r.kind)},
            {"seed", c.seed},
            {"trials", r.trials},
            {"max_diangles", c.max_diangles},
            {"tol", c.tol},
            {"evaluated", r.evaluated},
            {"skipped", r.skipped},
            {"violations", r.violations},
            {"min_slack", r.min_slack},
            {"min_scaled_slack", r.min_scaled_slack},
            {"worst_trial", r.worst_trial}};
}

// Nodes k pi / n for k < n. The closed grid cannot be used for fitting
// because k_0 and k_pi are the same vector.
inline std::vector<double> half_open_nodes(std::size_t n)
{
    std::vector<double> nodes(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = pi * static_cast<double>(k) / static_cast<double>(n);
    }
    return nodes;
}

struct Outcome {
    std::string text;
    int code = exit_ok;
};

inline Outcome rotation_fn_report(const Body& u, const Body& v, const Command& c)
{
    const std::vector<double> grid = uniform_nodes(std::max<std::size_t>(c.nodes, 2));
    const SingularMin sm = singular_min(u, v);
    const std::vector<double> cands = singular_candidates(u, v);
    const double offset = area(u) + area(v);
    double drift = 0.0;
    double grid_min = INFINITY;
    std::ostringstream csv;
    csv << "kind,phi,E,F\n";
    json rows = json::array();
    auto row = [&](const char* kind, double phi) {
        const double e = rotation_fn_E(u, v, phi);
        const double f = rotation_fn_F(u, v, phi);
        drift = std::max(drift, std::fabs(e - 2.0 * f - offset));
        csv << kind << ',' << io::format_double(phi) << ',' << io::format_double(e) << ',' << io::format_double(f)
            << '\n';
        return json{{"phi", phi}, {"E", e}, {"F", f}};
    };
    for (double phi : grid) {
        rows.push_back(row("grid", phi));
        grid_min = std::min(grid_min, rows.back()["F"].get<double>());
    }
    json cand_rows = json::array();
    for (double phi : cands) {
        cand_rows.push_back(row("candidate", phi));
    }
    row("min", sm.phi_star);
    if (c.csv) {
        return {csv.str()};
    }
    return {dump({{"grid", rows},
                  {"candidates", cand_rows},
                  {"phi_star", sm.phi_star},
                  {"F_min", sm.F_min},
                  {"grid_F_min", grid_min},
                  {"E_minus_2F_drift", drift}})};
}

inline Outcome reduce_report(const Body& u, const Body& v, const Command& c)
{
    const ReductionTrace t = reduce_pair(u, v);
    const TraceValidation check = validate_trace(t);
    Outcome out;
    out.code = check.ok() ? exit_ok : exit_verification_failed;
    if (c.csv) {
        out.text = io::to_csv(t);
        return out;
    }
    out.text = io::to_json_lines(t);
    json verdict = {{"validation",
                     {{"ok", check.ok()},
                      {"within_step_bound", check.within_step_bound},
                      {"sides_decreasing", check.sides_decreasing},
                      {"max_perimeter_drift", check.max_perimeter_drift},
                      {"min_measure_increment", check.min_measure_increment},
                      {"witness_isoperimetric", check.witness_isoperimetric}}}};
    out.text += verdict.dump() + "\n";
    return out;
}

inline Outcome kernel_interp_report(const LiftedVector& x, const Command& c)
{
    const std::vector<double> nodes = half_open_nodes(std::max<std::size_t>(c.nodes, 1));
    std::vector<double> values;
    for (double phi : nodes) {
        values.push_back(evaluate(x, phi));
    }
    const KernelExpansion fit = interpolate(nodes, values, c.ridge);
    double node_residual = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        node_residual = std::max(node_residual, std::fabs(fit(nodes[i]) - values[i]));
    }
    double off_residual = 0.0;
    constexpr int checks = 100;
    for (int k = 0; k < checks; ++k) {
        const double phi = pi * (k + 0.5) / checks;
        off_residual = std::max(off_residual, std::fabs(fit(phi) - evaluate(x, phi)));
    }
    return {dump({{"nodes", fit.nodes},
                  {"coefficients", fit.coefficients},
                  {"ridge", c.ridge},
                  {"max_node_residual", node_residual},
                  {"max_offnode_residual", off_residual}})};
}

} // namespace detail

/// Runs one CLI invocation. args excludes the program name. Returns 0 on
/// success, 1 when a verification fails, 2 on usage or input errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    using detail::json;
    Command c;
    CLI::App app{"Minkowski algebra of centrally symmetric plane bodies, the lifted space and its kernel", "zonospace"};
    app.require_subcommand(1);

    auto out_opt = [&](CLI::App* s) { s->add_option("--out", c.out_path, "Write output to PATH instead of stdout"); };
    auto poly_opt = [&](CLI::App* s) {
        s->add_option("--polygonize-disc", c.polygonize_disc, "Replace discs by a circumscribed 2N-gon")
            ->check(CLI::PositiveNumber);
    };
    auto campaign_opts = [&](CLI::App* s) {
        s->add_option("--trials", c.trials, "Number of random trials");
        s->add_option("--seed", c.seed, "Master seed");
        s->add_option("--max-diangles", c.max_diangles, "Max diangles per random body")->check(CLI::PositiveNumber);
        s->add_option("--tol", c.tol, "Absolute and relative tolerance");
        out_opt(s);
    };

    CLI::App* body = app.add_subcommand("body", "Quantities of a single body");
    body->require_subcommand(1);
    CLI::App* body_stats = body->add_subcommand("stats", "Area, perimeter, circumradius");
    CLI::App* body_vertices = body->add_subcommand("vertices", "Counterclockwise vertex list");
    CLI::App* body_svg = body->add_subcommand("svg", "SVG rendering");
    for (CLI::App* s : {body_stats, body_vertices, body_svg}) {
        s->add_option("body", c.input, "Body JSON file")->required();
        poly_opt(s);
        out_opt(s);
    }
    body_vertices->add_flag("--csv", c.csv, "CSV output");
    body_stats->add_flag("--svg", c.svg, "Emit SVG instead of JSON");

    CLI::App* lift_cmd = app.add_subcommand("lift", "Lifted-space vectors [plus, minus]");
    lift_cmd->require_subcommand(1);
    CLI::App* lift_stats = lift_cmd->add_subcommand("stats", "Extended measure, perimeter, deficit, norms");
    lift_stats->add_option("vector", c.input, "LiftedVector JSON file")->required();
    CLI::App* lift_add = lift_cmd->add_subcommand("add", "Sum of two vectors");
    lift_add->add_option("x", c.input, "LiftedVector JSON file")->required();
    lift_add->add_option("y", c.second_input, "LiftedVector JSON file")->required();
    CLI::App* lift_scale = lift_cmd->add_subcommand("scale", "Real multiple of a vector");
    lift_scale->add_option("vector", c.input, "LiftedVector JSON file")->required();
    lift_scale->add_option("lambda", c.scalar, "Real factor")->required();
    CLI::App* lift_eval = lift_cmd->add_subcommand("eval", "Evaluation functional E_phi");
    lift_eval->add_option("vector", c.input, "LiftedVector JSON file")->required();
    lift_eval->add_option("phi", c.scalar, "Angle in [0, pi]")->required();
    for (CLI::App* s : {lift_stats, lift_add, lift_scale, lift_eval}) {
        out_opt(s);
    }

    CLI::App* check = app.add_subcommand("check", "Fuzz campaigns for the inequalities");
    check->require_subcommand(1);
    CLI::App* check_iso = check->add_subcommand("iso", "Generalized isoperimetric inequality");
    CLI::App* check_bm = check->add_subcommand("bm", "Classical Brunn-Minkowski inequality");
    CLI::App* check_bmgen = check->add_subcommand("bmgen", "Generalized Brunn-Minkowski inequality");
    CLI::App* check_schwarz = check->add_subcommand("schwarz", "Schwarz inequality for the deficit form");
    for (CLI::App* s : {check_iso, check_bm, check_bmgen, check_schwarz}) {
        campaign_opts(s);
    }

    CLI::App* reduce = app.add_subcommand("reduce", "Singular-position reduction trace of a zonogon pair");
    reduce->add_option("u", c.input, "Body JSON file")->required();
    reduce->add_option("v", c.second_input, "Body JSON file")->required();
    reduce->add_flag("--csv", c.csv, "CSV trace instead of JSON lines");
    poly_opt(reduce);
    out_opt(reduce);

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "Reproducing kernel");
    kernel_cmd->require_subcommand(1);
    CLI::App* kernel_gram = kernel_cmd->add_subcommand("gram", "Gram matrix on the uniform grid");
    CLI::App* kernel_eig = kernel_cmd->add_subcommand("eig", "Smallest Gram eigenvalue");
    CLI::App* kernel_eval = kernel_cmd->add_subcommand("eval", "Sampled width function of a vector");
    CLI::App* kernel_interp = kernel_cmd->add_subcommand("interp", "Kernel interpolation of a sampled vector");
    for (CLI::App* s : {kernel_gram, kernel_eig, kernel_eval, kernel_interp}) {
        s->add_option("--nodes", c.nodes, "Number of nodes")->check(CLI::PositiveNumber);
        out_opt(s);
    }
    kernel_gram->add_flag("--csv", c.csv, "CSV output");
    kernel_eval->add_flag("--csv", c.csv, "CSV output");
    kernel_eval->add_option("vector", c.input, "LiftedVector JSON file")->required();
    kernel_interp->add_option("vector", c.input, "LiftedVector JSON file")->required();
    kernel_interp->add_option("--ridge", c.ridge, "Ridge added to the Gram diagonal");

    CLI::App* rotation = app.add_subcommand("rotation-fn", "Rotation functions E and F over a grid");
    rotation->add_option("u", c.input, "Body JSON file")->required();
    rotation->add_option("v", c.second_input, "Body JSON file")->required();
    rotation->add_option("--nodes", c.nodes, "Grid size")->check(CLI::PositiveNumber);
    rotation->add_flag("--csv", c.csv, "CSV output");
    poly_opt(rotation);
    out_opt(rotation);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    detail::Outcome result;
    try {
        if (body_stats->parsed()) {
            const Body b = detail::load_body(c.input, c.polygonize_disc);
            result.text = c.svg ? svg::render(b) : detail::dump(detail::body_stats(b));
        } else if (body_vertices->parsed()) {
            const std::vector<Point> v = vertices(detail::load_body(c.input, c.polygonize_disc));
            if (c.csv) {
                result.text = "x,y\n";
                for (const Point& p : v) {
                    result.text += io::format_double(p.x) + "," + io::format_double(p.y) + "\n";
                }
            } else {
                json pts = json::array();
                for (const Point& p : v) {
                    pts.push_back({p.x, p.y});
                }
                result.text = detail::dump({{"vertices", pts}});
            }
        } else if (body_svg->parsed()) {
            result.text = svg::render(detail::load_body(c.input, c.polygonize_disc));
        } else if (lift_stats->parsed()) {
            result.text = detail::dump(detail::lifted_stats(detail::load_lifted(c.input)));
        } else if (lift_add->parsed()) {
            const LiftedVector s = detail::load_lifted(c.input) + detail::load_lifted(c.second_input);
            result.text = detail::dump(io::to_json(s));
        } else if (lift_scale->parsed()) {
            result.text = detail::dump(io::to_json(scale_real(detail::load_lifted(c.input), c.scalar)));
        } else if (lift_eval->parsed()) {
            const LiftedVector x = detail::load_lifted(c.input);
            result.text = detail::dump({{"phi", c.scalar},
                                        {"value", evaluate(x, c.scalar)},
                                        {"inner_with_kernel_vector", inner(x, kernel_vector(c.scalar))}});
        } else if (check->parsed()) {
            CampaignOptions opt;
            opt.kind = check_iso->parsed()       ? CheckKind::isoperimetric
                       : check_bm->parsed()      ? CheckKind::bm_classical
                       : check_bmgen->parsed()   ? CheckKind::bm_generalized
                                                 : CheckKind::schwarz;
            opt.trials = c.trials;
            opt.seed = c.seed;
            opt.max_diangles = c.max_diangles;
            opt.tol = c.tol;
            const CampaignReport rep = run_campaign(opt);
            result.text = detail::dump(detail::campaign_json(rep, c));
            result.code = rep.violations == 0 ? exit_ok : exit_verification_failed;
        } else if (reduce->parsed()) {
            result = detail::reduce_report(detail::load_body(c.input, c.polygonize_disc),
                                           detail::load_body(c.second_input, c.polygonize_disc), c);
        } else if (kernel_gram->parsed()) {
            const GramMatrix g = gram(uniform_nodes(std::max<std::size_t>(c.nodes, 2)));
            result.text = c.csv ? io::to_csv(g) : detail::dump(io::to_json(g));
        } else if (kernel_eig->parsed()) {
            const GramMatrix g = gram(uniform_nodes(std::max<std::size_t>(c.nodes, 2)));
            const std::vector<double> eig = jacobi_eigenvalues(g.entries);
            result.text = detail::dump({{"nodes", g.nodes.size()},
                                        {"min_eigenvalue", eig.front()},
                                        {"max_eigenvalue", eig.back()},
                                        {"psd", eig.front() >= -1e-9}});
            result.code = eig.front() >= -1e-9 ? exit_ok : exit_verification_failed;
        } else if (kernel_eval->parsed()) {
            const LiftedVector x = detail::load_lifted(c.input);
            const WidthFunction w = sample(x, std::max<std::size_t>(c.nodes, 2));
            if (c.csv) {
                result.text = io::to_csv(w);
            } else {
                double err_max = 0.0;
                for (std::size_t i = 0; i < w.nodes.size(); ++i) {
                    err_max = std::max(err_max, std::fabs(inner(x, kernel_vector(w.nodes[i])) - w.values[i]));
                }
                json j = io::to_json(w);
                j["max_reproducing_error"] = err_max;
                result.text = detail::dump(j);
            }
        } else if (kernel_interp->parsed()) {
            result = detail::kernel_interp_report(detail::load_lifted(c.input), c);
        } else if (rotation->parsed()) {
            result = detail::rotation_fn_report(detail::load_body(c.input, c.polygonize_disc),
                                                detail::load_body(c.second_input, c.polygonize_disc), c);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (c.out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.out_path << '\n';
            return exit_usage;
        }
        f << result.text;
    }
    return result.code;
}

} // namespace zonospace::cli
