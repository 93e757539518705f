#include "tonelli/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "tonelli/cantor.hpp"
#include "tonelli/convergence.hpp"
#include "tonelli/fubini.hpp"
#include "tonelli/lebesgue.hpp"

namespace tonelli {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json value_json(const Value& v) {
    if (v.is_exact()) return rat_str(v.rat());
    return fmt_double(v.dbl());
}

json trace_json(const std::vector<StageRow>& trace) {
    json rows = json::array();
    for (const auto& r : trace) {
        rows.push_back({{"n", r.n},
                        {"witnessLength", rat_str(r.witness_length)},
                        {"riemann", value_json(r.riemann_value)},
                        {"riemannTol", rat_str(r.riemann_tol)}});
    }
    return rows;
}

const char* verdict_str(IntegralVerdict v) {
    switch (v) {
        case IntegralVerdict::number: return "number";
        case IntegralVerdict::plus_infinity: return "+inf";
        case IntegralVerdict::minus_infinity: return "-inf";
        case IntegralVerdict::not_integrable: return "not-integrable";
    }
    return "?";
}

json integral_json(const IntegralResult& r) {
    return {{"value", value_json(r.value)},
            {"errorBound", rat_str(r.error_bound)},
            {"verdict", verdict_str(r.verdict)},
            {"exact", r.exact},
            {"trace", trace_json(r.trace)}};
}

std::string csv_of_trace(const std::vector<StageRow>& trace) {
    std::string out = "n,witnessLength,riemann,riemannTol\n";
    for (const auto& r : trace) {
        out += std::to_string(r.n) + "," + rat_str(r.witness_length) + "," +
               (r.riemann_value.is_exact() ? rat_str(r.riemann_value.rat())
                                           : fmt_double(r.riemann_value.dbl())) +
               "," + rat_str(r.riemann_tol) + "\n";
    }
    return out;
}

Rectangle parse_box(const std::string& text) {
    // "[0,1]" or "[0,1]x[0,1]" ...
    std::vector<Interval> sides;
    std::string cur;
    for (char c : text) {
        if (c == 'x' || c == 'X') {
            sides.push_back(Interval::parse(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) sides.push_back(Interval::parse(cur));
    return Rectangle(std::move(sides));
}

void write_svg_rects(const std::string& path, const Multirectangle& m) {
    std::ofstream f(path);
    if (m.empty() || m.dim() > 2) {
        f << "<svg xmlns='http://www.w3.org/2000/svg'/>\n";
        return;
    }
    const double s = 512;
    f << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 512 512'>\n";
    for (const auto& r : m.components()) {
        double x0 = rat_to_double(r.side(0).lo()), x1 = rat_to_double(r.side(0).hi());
        double y0 = 0, y1 = 1;
        if (m.dim() == 2) {
            y0 = rat_to_double(r.side(1).lo());
            y1 = rat_to_double(r.side(1).hi());
        }
        f << "<rect x='" << x0 * s << "' y='" << (1 - y1) * s << "' width='" << (x1 - x0) * s
          << "' height='" << (y1 - y0) * s
          << "' fill='steelblue' fill-opacity='0.6' stroke='black' stroke-width='0.5'/>\n";
    }
    f << "</svg>\n";
}

void write_svg_decay(const std::string& path, const std::vector<double>& ys) {
    std::ofstream f(path);
    f << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 512 256'>\n<polyline points='";
    double maxv = 1e-12;
    for (double y : ys) maxv = std::max(maxv, std::abs(y));
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double x = ys.size() > 1 ? 512.0 * i / (ys.size() - 1) : 0;
        f << x << "," << 256 - 240 * (ys[i] / maxv) << " ";
    }
    f << "' fill='none' stroke='crimson' stroke-width='2'/>\n</svg>\n";
}

struct CommonOpts {
    bool as_json = true;
    bool as_csv = false;
    std::string svg_path;
    unsigned long seed = 0;
};

int emit(const json& report, const CommonOpts& opts, const std::string& csv, std::string& out,
         int status) {
    if (opts.as_csv && !csv.empty())
        out += csv;
    else
        out += report.dump(2) + "\n";
    return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    CLI::App app{"constructive Lebesgue integration toolkit"};
    app.require_subcommand(1);
    CommonOpts opts;
    app.add_flag("--json", opts.as_json, "JSON report (default)");
    app.add_flag("--csv", opts.as_csv, "CSV report where meaningful");
    app.add_option("--svg", opts.svg_path, "write an SVG snapshot to PATH");
    app.add_option("--seed", opts.seed, "seed for randomized trials");

    // integrate
    auto* integ = app.add_subcommand("integrate", "Lebesgue integral of a DSL function");
    std::string fn, domain_s, set_s;
    int stages = 64;
    std::string rtol_s = "1e-8";
    integ->add_option("--fn", fn, "function DSL")->required();
    integ->add_option("--domain", domain_s, "integration box, e.g. \"[0,1]\"");
    integ->add_option("--set", set_s, "restrict to a characteristic DSL function");
    integ->add_option("--stages", stages, "witness stages (default 64)");
    integ->add_option("--rtol", rtol_s, "stage Riemann tolerance");

    // riemann
    auto* riem = app.add_subcommand("riemann", "equispaced Darboux integration");
    std::string r_fn, r_interval = "[0,1]", r_tol = "1e-8";
    riem->add_option("--fn", r_fn, "function DSL")->required();
    riem->add_option("--interval", r_interval, "interval literal");
    riem->add_option("--tol", r_tol, "bracket tolerance");

    // dini
    auto* dini = app.add_subcommand("dini", "Dini oscillation test");
    std::string d_fn, d_alpha, d_eps, d_interval = "[0,1]";
    long d_maxn = 1 << 14;
    dini->add_option("--fn", d_fn, "function DSL")->required();
    dini->add_option("--alpha", d_alpha, "oscillation threshold p/q")->required();
    dini->add_option("--eps", d_eps, "heavy-length budget p/q")->required();
    dini->add_option("--interval", d_interval, "interval literal");
    dini->add_option("--maxn", d_maxn, "partition budget");

    // measure
    auto* meas = app.add_subcommand("measure", "measure of a multirectangle");
    std::string m_set;
    meas->add_option("--set", m_set, "multirectangle JSON")->required();

    // decompose
    auto* deco = app.add_subcommand("decompose", "dyadic decomposition of an open set");
    std::string dc_set;
    int dc_depth = 4;
    deco->add_option("--set", dc_set, "open multirectangle JSON")->required();
    deco->add_option("--depth", dc_depth, "maximum dyadic level");

    // cantor
    auto* cant = app.add_subcommand("cantor", "Cantor / Smith-Volterra stages");
    std::string c_kind = "ternary", c_emit = "measure";
    int c_stage = 1;
    cant->add_option("--kind", c_kind, "ternary|svc")->required();
    cant->add_option("--stage", c_stage, "stage index J >= 1")->required();
    cant->add_option("--emit", c_emit, "intervals|measure");

    // egorov
    auto* ego = app.add_subcommand("egorov", "finite-stage Egorov-Severini witness");
    std::string e_seq, e_eps, e_sigmas = "1/2,1/4,1/8";
    ego->add_option("--seq", e_seq, "sequence DSL")->required();
    ego->add_option("--eps", e_eps, "witness budget p/q")->required();
    ego->add_option("--sigmas", e_sigmas, "comma-separated sigma list");

    // converge
    auto* conv = app.add_subcommand("converge", "convergence-theorem checkers");
    std::string v_law, v_seq, v_dom;
    int v_stages = 16;
    conv->add_option("--law", v_law, "monotone|dominated|fatou")->required();
    conv->add_option("--seq", v_seq, "sequence DSL")->required();
    conv->add_option("--dominator", v_dom, "dominator DSL (dominated law)");
    conv->add_option("--stages", v_stages, "geometric stage count");

    // fubini
    auto* fub = app.add_subcommand("fubini", "reduction-formula verifier");
    std::string f_fn, f_rect = "[0,1]x[0,1]", f_tol = "1e-6";
    fub->add_option("--fn", f_fn, "2-D function DSL")->required();
    fub->add_option("--rect", f_rect, "rectangle, e.g. \"[0,1]x[0,1]\"");
    fub->add_option("--tol", f_tol, "comparison tolerance");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    }

    try {
        if (integ->parsed()) {
            QCFunction f = parse_function(fn);
            if (!set_s.empty()) f = restrict_to_set(f, parse_function(set_s));
            double rtol = rat_to_double(parse_rational(rtol_s));
            IntegralResult r;
            if (!domain_s.empty()) {
                Rectangle box = parse_box(domain_s);
                r = integrate_bounded(f, box, stages, rtol);
            } else {
                r = integrate_general(f, TruncationSchedule{}, std::min(stages, 8), rtol);
            }
            json rep = integral_json(r);
            int status = r.verdict == IntegralVerdict::number ? 0 : 1;
            return emit(rep, opts, csv_of_trace(r.trace), out, status);
        }
        if (riem->parsed()) {
            QCFunction f = parse_function(r_fn);
            RiemannResult r =
                riemann_integrate(f, Interval::parse(r_interval), rat_to_double(parse_rational(r_tol)));
            json rep = {{"converged", r.converged},
                        {"value", value_json(r.value)},
                        {"achievedGap", fmt_double(r.achieved_gap)},
                        {"cells", r.cells}};
            if (!r.converged) rep["error"] = "NotRiemannIntegrable";
            return emit(rep, opts, "", out, r.converged ? 0 : 1);
        }
        if (dini->parsed()) {
            QCFunction f = parse_function(d_fn);
            DiniResult r = dini_test(f, Interval::parse(d_interval), parse_rational(d_alpha),
                                     parse_rational(d_eps), d_maxn);
            json rep = {{"pass", r.pass},
                        {"heavyLength", rat_str(r.heavy_length)},
                        {"cells", r.cells}};
            return emit(rep, opts, "", out, r.pass ? 0 : 1);
        }
        if (meas->parsed()) {
            Multirectangle m = parse_multirectangle(m_set);
            Rational lam = measure(m);
            json rep = {{"lambda", rat_str(lam)}, {"L", rat_str(length(m))}};
            if (m.dim() == 1) {
                IntegralResult via = measure_via_integral(
                    indicator_of(m),
                    Rectangle::from_interval(Interval::closed(
                        m.intervals().front().lo() - 1, m.intervals().back().hi() + 1)));
                rep["viaIntegral"] = value_json(via.value);
                rep["agree"] = via.value.is_exact() && via.value.rat() == lam;
            }
            if (!opts.svg_path.empty()) write_svg_rects(opts.svg_path, m);
            return emit(rep, opts, "", out, 0);
        }
        if (deco->parsed()) {
            OpenSetDescriptor o(parse_multirectangle(dc_set));
            Multirectangle cubes = dyadic_decompose(o, dc_depth);
            json rep = {{"cubes", cubes.size()},
                        {"L", rat_str(cubes.empty() ? Rational(0) : length(cubes))},
                        {"lambdaOpenSet", rat_str(o.measure())}};
            if (cubes.size() <= 512) rep["multirectangle"] = json::parse(multirectangle_str(cubes));
            if (!opts.svg_path.empty()) write_svg_rects(opts.svg_path, cubes);
            return emit(rep, opts, "", out, 0);
        }
        if (cant->parsed()) {
            CantorKind kind;
            if (c_kind == "ternary")
                kind = CantorKind::ternary;
            else if (c_kind == "svc")
                kind = CantorKind::smith_volterra;
            else
                throw std::invalid_argument("cantor: --kind must be ternary|svc");
            json rep = {{"kind", c_kind},
                        {"stage", c_stage},
                        {"measureRemoved", rat_str(removed_measure(kind, c_stage))},
                        {"measureRetained",
                         rat_str(Rational(1) - removed_measure(kind, c_stage))},
                        {"limitRemoved", rat_str(limit_removed_measure(kind))}};
            if (c_emit == "intervals") {
                CantorStage st = build_stage(kind, c_stage);
                rep["removed"] = json::parse(multirectangle_str(st.removed));
                rep["retained"] = json::parse(multirectangle_str(st.retained));
                if (!opts.svg_path.empty()) write_svg_rects(opts.svg_path, st.retained);
            }
            return emit(rep, opts, "", out, 0);
        }
        if (ego->parsed()) {
            QCSequence seq = catalog_sequence(e_seq);
            std::vector<Rational> sigmas;
            std::string cur;
            for (char c : e_sigmas + ",") {
                if (c == ',') {
                    if (!cur.empty()) sigmas.push_back(parse_rational(cur));
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            try {
                EgorovWitness w = egorov_witness(seq, parse_rational(e_eps), sigmas);
                json table = json::array();
                std::vector<double> sups;
                for (const auto& row : w.table) {
                    table.push_back({{"sigma", rat_str(row.sigma)},
                                     {"stage", row.stage},
                                     {"sup", fmt_double(row.sup)},
                                     {"pass", row.pass}});
                    sups.push_back(row.sup);
                }
                json rep = {{"eps", rat_str(w.eps)},
                            {"excludedL",
                             rat_str(w.excluded.empty() ? Rational(0) : length(w.excluded))},
                            {"excluded", json::parse(multirectangle_str(w.excluded))},
                            {"table", table},
                            {"pass", w.pass}};
                if (!opts.svg_path.empty()) write_svg_decay(opts.svg_path, sups);
                return emit(rep, opts, "", out, w.pass ? 0 : 1);
            } catch (const std::domain_error& e) {
                json rep = {{"error", e.what()}, {"pass", false}};
                out += rep.dump(2) + "\n";
                return 1;
            }
        }
        if (conv->parsed()) {
            QCSequence seq = catalog_sequence(v_seq);
            ConvergenceReport rep;
            if (v_law == "monotone")
                rep = check_monotone(seq, v_stages);
            else if (v_law == "dominated")
                rep = check_dominated(seq, v_dom.empty() ? catalog("const:1") : parse_function(v_dom),
                                      v_stages);
            else if (v_law == "fatou")
                rep = fatou_gap(seq, v_stages);
            else
                throw std::invalid_argument("converge: --law must be monotone|dominated|fatou");
            json stages_j = json::array();
            std::vector<double> ys;
            for (const auto& s : rep.stages) {
                stages_j.push_back({{"n", s.n}, {"integral", fmt_double(s.integral)}});
                ys.push_back(s.integral);
            }
            json j = {{"law", v_law},
                      {"stages", stages_j},
                      {"limitIntegral", fmt_double(rep.limit_integral)},
                      {"sequenceLimit", fmt_double(rep.sequence_limit)},
                      {"gap", fmt_double(rep.gap)},
                      {"hypothesisViolated", rep.hypothesis_violated},
                      {"violation", rep.violation},
                      {"pass", rep.pass}};
            if (!opts.svg_path.empty()) write_svg_decay(opts.svg_path, ys);
            return emit(j, opts, "", out, rep.pass ? 0 : 1);
        }
        if (fub->parsed()) {
            QCFunction f = parse_function(f_fn);
            ReductionReport rep = fubini_check(f, parse_box(f_rect),
                                               rat_to_double(parse_rational(f_tol)));
            json j;
            if (rep.not_summable) {
                j = {{"verdict", "NotSummable"}, {"pass", false}};
                out += j.dump(2) + "\n";
                return 1;
            }
            j = {{"direct", integral_json(rep.direct)},
                 {"iteratedOuterX", integral_json(rep.iterated_outer_x)},
                 {"iteratedOuterY", integral_json(rep.iterated_outer_y)},
                 {"gapX", fmt_double(rep.gap_x)},
                 {"gapY", fmt_double(rep.gap_y)},
                 {"pass", rep.pass}};
            return emit(j, opts, "", out, rep.pass ? 0 : 1);
        }
    } catch (const std::invalid_argument& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const std::exception& e) {
        err += std::string(e.what()) + "\n";
        return 1;
    }
    err += "no subcommand\n";
    return 2;
}

}  // namespace tonelli
