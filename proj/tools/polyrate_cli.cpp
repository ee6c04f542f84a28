// Command-line driver: node generation, Lebesgue/normality diagnostics,
// Peano kernel dumps, Remez baselines and convergence-rate sweeps, emitted
// as CSV or JSON tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyrate/barycentric.hpp"
#include "polyrate/errors.hpp"
#include "polyrate/lebesgue.hpp"
#include "polyrate/normality.hpp"
#include "polyrate/peano.hpp"
#include "polyrate/pointsystems.hpp"
#include "polyrate/rates.hpp"
#include "polyrate/remez.hpp"

namespace {

using nlohmann::json;
using namespace polyrate;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Rows of named values, serializable as CSV (header always present) or as a
// JSON array of objects. Column order is fixed by first insertion.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header_comments;

    void set_columns(std::vector<std::string> cols) { columns = std::move(cols); }

    void add_row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }

    void write(std::ostream& os, const std::string& format) const
    {
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) {
                json obj;
                for (size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = r[c];
                arr.push_back(obj);
            }
            os << arr.dump(2) << "\n";
            return;
        }
        for (const auto& c : header_comments) os << "# " << c << "\n";
        for (size_t c = 0; c < columns.size(); ++c)
            os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
        for (const auto& r : rows)
            for (size_t c = 0; c < r.size(); ++c)
                os << r[c] << (c + 1 < r.size() ? "," : "\n");
    }
};

struct CommonOpts {
    std::string family = "cheb1";
    double alpha = 0.0;
    double beta = 0.0;
    int n = 16;
    std::vector<int> n_list;
    std::string fn = "|x|";
    int deriv_order = 0;
    double grid_step = 0.001;
    unsigned seed = 0;
    std::string out;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--family", o.family,
                    "pointsystem: gauss-jacobi|lobatto|radau+1|radau-1|cheb1|cheb2|equispaced");
    cmd->add_option("--alpha", o.alpha, "Jacobi alpha");
    cmd->add_option("--beta", o.beta, "Jacobi beta");
    cmd->add_option("--n", o.n, "point count");
    cmd->add_option("--n-list", o.n_list, "sweep of point counts")->delimiter(',');
    cmd->add_option("--fn", o.fn, "test function name");
    cmd->add_option("--deriv-order", o.deriv_order, "derivative order (0, 1 or 2)");
    cmd->add_option("--grid-step", o.grid_step, "error grid step");
    cmd->add_option("--seed", o.seed, "seed recorded in output headers");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
}

PointSystemSpec make_spec(const CommonOpts& o, int n)
{
    return {parse_family(o.family), {o.alpha, o.beta}, n};
}

void emit(const Table& t, const CommonOpts& o)
{
    if (o.out.empty()) {
        t.write(std::cout, o.format);
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw precondition_error("cannot open output file: " + o.out);
    t.write(f, o.format);
}

std::vector<int> sweep(const CommonOpts& o)
{
    if (!o.n_list.empty()) return o.n_list;
    std::vector<int> ns;
    for (int n = 10; n <= 1000; n += 10) ns.push_back(n);
    return ns;
}

int run(int argc, char** argv)
{
    CLI::App app{"polynomial interpolation convergence-rate toolkit"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* nodes_cmd = app.add_subcommand("nodes", "emit nodes and barycentric weights");
    add_common_flags(nodes_cmd, o);

    auto* lebesgue_cmd =
        app.add_subcommand("lebesgue", "Lebesgue constants and max basis norms over a sweep");
    add_common_flags(lebesgue_cmd, o);

    auto* normality_cmd = app.add_subcommand("normality", "strong-normality diagnostics");
    add_common_flags(normality_cmd, o);

    auto* kernel_cmd = app.add_subcommand("kernel", "Peano kernel K_s on a grid");
    add_common_flags(kernel_cmd, o);
    double kernel_x = 0.3;
    int kernel_s = 1;
    kernel_cmd->add_option("--x", kernel_x, "fixed evaluation point of the error functional");
    kernel_cmd->add_option("--s", kernel_s, "kernel order");

    auto* remez_cmd = app.add_subcommand("remez", "minimax baseline for a test function");
    add_common_flags(remez_cmd, o);
    int remez_degree = 10;
    remez_cmd->add_option("--degree", remez_degree, "polynomial degree");

    auto* converge_cmd = app.add_subcommand("converge", "convergence-rate sweep with verdict");
    add_common_flags(converge_cmd, o);

    auto* derivs_cmd =
        app.add_subcommand("derivs", "interpolant vs minimax derivative errors");
    add_common_flags(derivs_cmd, o);

    CLI11_PARSE(app, argc, argv);

    Table t;
    t.header_comments.push_back("seed=" + std::to_string(o.seed));

    if (nodes_cmd->parsed()) {
        NodeSet ns = generate_nodes(make_spec(o, o.n));
        t.set_columns({"node", "weight"});
        for (int j = 0; j < ns.size(); ++j)
            t.add_row({fmt(ns.nodes[j]), fmt(ns.bary_weights[j])});
    } else if (lebesgue_cmd->parsed()) {
        t.set_columns({"n", "lambda", "max_basis_norm", "argmax"});
        std::vector<int> ns_sweep = o.n_list.empty() ? std::vector<int>{o.n} : o.n_list;
        for (int n : ns_sweep) {
            NodeSet ns = generate_nodes(make_spec(o, n));
            auto lc = lebesgue_constant(ns);
            auto mb = max_basis_norm(ns);
            t.add_row({std::to_string(n), fmt(lc.value), fmt(mb.value), fmt(lc.argmax)});
        }
    } else if (normality_cmd->parsed()) {
        NodeSet ns = generate_nodes(make_spec(o, o.n));
        auto rep = normality_report(ns);
        t.set_columns({"k", "min_v_k", "min_v", "strongly_normal"});
        for (int k = 0; k < ns.size(); ++k)
            t.add_row({std::to_string(k), fmt(rep.per_k_min[k]), fmt(rep.min_v),
                       rep.is_strongly_normal ? "1" : "0"});
    } else if (kernel_cmd->parsed()) {
        NodeSet ns = generate_nodes(make_spec(o, o.n));
        PeanoKernel k = make_peano_kernel(std::move(ns), kernel_x, kernel_s);
        t.set_columns({"t", "K"});
        const long steps = std::lround(2.0 / o.grid_step);
        for (long i = 0; i <= steps; ++i) {
            const double tt = -1.0 + 2.0 * static_cast<double>(i) / steps;
            t.add_row({fmt(tt), fmt(kernel_eval(k, tt))});
        }
    } else if (remez_cmd->parsed()) {
        const TestFunction& tf = find_test_function(o.fn);
        RemezResult res = remez(tf.f, remez_degree);
        if (!res.converged)
            std::cerr << "warning: exchange stopped after " << res.iterations
                      << " iterations; reporting last iterate\n";
        t.set_columns({"degree", "error", "k", "alternation_point"});
        for (size_t k = 0; k < res.alternation_points.size(); ++k)
            t.add_row({std::to_string(remez_degree), fmt(res.error), std::to_string(k),
                       fmt(res.alternation_points[k])});
    } else if (converge_cmd->parsed()) {
        RateReport rep =
            run_convergence(make_spec(o, o.n), o.fn, sweep(o), o.deriv_order, o.grid_step);
        std::ostringstream meta;
        meta << "fitted_slope=" << fmt(rep.fitted_slope);
        if (rep.has_prediction)
            meta << " predicted_slope=" << fmt(rep.predicted_slope)
                 << " verdict=" << (rep.verdict ? "pass" : "fail");
        if (rep.exact) meta << " exact=1";
        t.header_comments.push_back(meta.str());
        t.set_columns({"n", "error", "bound", "predicted_line"});
        const double anchor = rep.rows.empty() ? 1.0 : rep.rows.front().error;
        const double n0 = rep.rows.empty() ? 1.0 : rep.rows.front().n;
        for (const auto& r : rep.rows) {
            const double line = rep.has_prediction
                                    ? anchor * std::pow(r.n / n0, rep.predicted_slope)
                                    : 0.0;
            t.add_row({std::to_string(r.n), fmt(r.error), fmt(r.bound), fmt(line)});
        }
    } else if (derivs_cmd->parsed()) {
        auto rows = run_derivative_comparison(make_spec(o, o.n), o.fn, sweep(o), {0, 1, 2},
                                              o.grid_step);
        t.set_columns({"n", "m", "interp_error", "remez_error"});
        for (const auto& r : rows)
            t.add_row({std::to_string(r.n), std::to_string(r.order), fmt(r.interp_error),
                       fmt(r.remez_error)});
    }

    emit(t, o);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const polyrate::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const polyrate::numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
