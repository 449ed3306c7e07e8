#include "adaptcoord/cli.hpp"

#include "adaptcoord/error.hpp"
#include "adaptcoord/oscillatory.hpp"
#include "adaptcoord/parse.hpp"
#include "adaptcoord/quasihomog.hpp"
#include "adaptcoord/report.hpp"
#include "adaptcoord/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace adaptcoord {

namespace {

using nlohmann::json;

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string vtext(const Vertex& v) { return "(" + std::to_string(v.A) + "," + std::to_string(v.B) + ")"; }

struct AnalyzeArgs {
    std::string expr;
    bool json = false;
    std::string svg;
    int max_steps = 0;
    bool no_adapt = false;
};

struct DecayArgs {
    std::string expr;
    double lambda_min = 0, lambda_max = 0;
    int points = 0;
    double radius = QuadratureOptions{}.radius;
    bool json = false;
};

struct ClustersArgs {
    std::string expr;
    int depth = 1;
};

struct PredictArgs {
    std::string expr;
    std::string b;
    bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    AnalyzeOptions opt;
    opt.run_adapt = !a.no_adapt;
    opt.max_steps = a.max_steps > 0 ? a.max_steps : default_max_steps();
    AnalysisReport r = analyze_polynomial(a.expr, opt);
    if (!a.svg.empty()) {
        BiPoly f = parse_polynomial(a.expr);
        std::vector<DiagramPanel> panels{make_panel("f", f)};
        if (r.final_polynomial && !r.steps.empty()) panels.push_back(make_panel("adapted", parse_polynomial(*r.final_polynomial)));
        std::ofstream file(a.svg, std::ios::binary);
        if (!file) raise(ErrorCode::InvalidArgument, "cannot write '" + a.svg + "'");
        file << render_svg(panels);
    }
    if (a.json)
        out << json(r).dump(2) << "\n";
    else
        out << to_text(r);
    return kExitOk;
}

int cmd_decay(const DecayArgs& a, std::ostream& out) {
    BiPoly f = parse_polynomial(a.expr);
    Rational h = height(f);
    QuadratureOptions opt;
    opt.radius = a.radius;
    DecayEstimate est = fit_decay(f, a.lambda_min, a.lambda_max, a.points, opt);
    Rational inv = 1 / h;
    if (a.json) {
        json samples = json::array();
        for (std::size_t i = 0; i < est.lambdas.size(); ++i)
            samples.push_back({{"lambda", est.lambdas[i]},
                               {"magnitude", est.magnitudes[i]},
                               {"grid", json::array({est.grids[i].n1, est.grids[i].n2})}});
        json j = {{"input", a.expr},
                  {"radius", est.radius},
                  {"samples", samples},
                  {"fitted_exponent", est.fitted_exponent},
                  {"fitted_log_power", est.fitted_log_power},
                  {"residual", est.residual},
                  {"height", to_string(h)},
                  {"reference_exponent", to_string(inv)}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "polynomial:      " << to_string(f) << "\n";
    out << "radius:          " << est.radius << "\n";
    for (std::size_t i = 0; i < est.lambdas.size(); ++i)
        out << "  lambda " << fixed(est.lambdas[i], 2) << "  |I| = " << fixed(est.magnitudes[i], 8) << "  grid "
            << est.grids[i].n1 << "x" << est.grids[i].n2 << "\n";
    out << "fitted exponent: " << fixed(est.fitted_exponent, 4) << "\n";
    out << "log power:       " << est.fitted_log_power << "\n";
    out << "residual:        " << fixed(est.residual, 4) << "\n";
    out << "reference 1/h:   " << to_string(inv) << " (" << fixed(inv.get_d(), 4) << ")\n";
    return kExitOk;
}

int cmd_clusters(const ClustersArgs& a, std::ostream& out) {
    BiPoly f = parse_polynomial(a.expr);
    json j = cluster_level_to_json(top_clusters(f, a.depth));
    j["input"] = a.expr;
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_predict(const PredictArgs& a, std::ostream& out) {
    BiPoly P = parse_polynomial(a.expr);
    Rational b = parse_rational(a.b);
    ShearPrediction pred = predict_shear_vertices(P, b);
    WeightDetection wd = detect_weight(P);
    Rational m = wd.weight.kappa2 / wd.weight.kappa1;
    std::vector<Vertex> actual = build_polyhedron(apply_shear(P, {ShearTarget::X2, b, static_cast<int>(to_long(m))})).vertices();
    Vertex first = actual.front(), last = actual.back();
    bool agree = first == pred.first && last == pred.last;
    if (a.json) {
        json j = {{"input", a.expr},
                  {"b", to_string(b)},
                  {"m", to_long(m)},
                  {"predicted", {{"first", {pred.first.A, pred.first.B}}, {"last", {pred.last.A, pred.last.B}}}},
                  {"recomputed", {{"first", {first.A, first.B}}, {"last", {last.A, last.B}}}},
                  {"agree", agree}};
        out << j.dump(2) << "\n";
    } else {
        out << "shear:      x2 <- x2 + " << to_string(b) << "*x1^" << to_long(m) << "\n";
        out << "predicted:  " << vtext(pred.first) << " ... " << vtext(pred.last) << "\n";
        out << "recomputed: " << vtext(first) << " ... " << vtext(last) << "\n";
        out << "agree:      " << (agree ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NonIntegerExponent:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InvalidArgument: return kExitUsage;
    case ErrorCode::IterationCapExceeded: return kExitIterationCap;
    case ErrorCode::InternalInvariantViolation: return kExitInternal;
    default: return kExitPrecondition;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adapted coordinates and heights of real-analytic phase functions", "adaptcoord"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Newton polyhedron, adaptedness, height and adapting jet");
    analyze->add_option("expr", an.expr, "Polynomial in x1, x2")->required();
    analyze->add_flag("--json", an.json, "Emit the JSON report");
    analyze->add_option("--svg", an.svg, "Write the Newton diagram to PATH");
    analyze->add_option("--max-steps", an.max_steps, "Cap on shear steps")->check(CLI::PositiveNumber);
    analyze->add_flag("--no-adapt", an.no_adapt, "Skip the adaptation loop");

    DecayArgs de;
    auto* decay = app.add_subcommand("decay", "Fit the decay rate of the oscillatory integral");
    decay->add_option("expr", de.expr, "Polynomial in x1, x2")->required();
    decay->add_option("--lambda-min", de.lambda_min)->required()->check(CLI::PositiveNumber);
    decay->add_option("--lambda-max", de.lambda_max)->required()->check(CLI::PositiveNumber);
    decay->add_option("--points", de.points)->required()->check(CLI::Range(2, 1000));
    decay->add_option("--radius", de.radius)->check(CLI::PositiveNumber);
    decay->add_flag("--json", de.json);

    ClustersArgs cl;
    auto* clusters = app.add_subcommand("clusters", "Dump root clusters as JSON");
    clusters->add_option("expr", cl.expr, "Polynomial in x1, x2")->required();
    clusters->add_option("--depth", cl.depth)->check(CLI::Range(1, 16));

    PredictArgs pr;
    auto* predict = app.add_subcommand("predict-shear", "Extreme vertices after the shear x2 <- x2 + b x1^m");
    predict->add_option("expr", pr.expr, "Quasi-homogeneous polynomial with weight (1, m)")->required();
    predict->add_option("--b", pr.b, "Shear coefficient p or p/q")->required();
    predict->add_flag("--json", pr.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            if (an.no_adapt && an.max_steps > 0) raise(ErrorCode::InvalidArgument, "--max-steps has no effect with --no-adapt");
            return cmd_analyze(an, out);
        }
        if (decay->parsed()) {
            if (!(de.lambda_min < de.lambda_max)) raise(ErrorCode::InvalidArgument, "--lambda-min must be below --lambda-max");
            return cmd_decay(de, out);
        }
        if (clusters->parsed()) return cmd_clusters(cl, out);
        if (predict->parsed()) return cmd_predict(pr, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

} // namespace adaptcoord
