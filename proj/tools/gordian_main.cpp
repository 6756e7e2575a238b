// Command-line front end: invariant computation, Gordian-distance queries,
// finite universe construction, hyperbolicity/QI audits, Delta-move walks,
// and static SVG/CSV plots.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gordian/audit.hpp"
#include "gordian/braid.hpp"
#include "gordian/burau.hpp"
#include "gordian/conway.hpp"
#include "gordian/diagram.hpp"
#include "gordian/errors.hpp"
#include "gordian/metric.hpp"
#include "gordian/plot.hpp"
#include "gordian/poly.hpp"
#include "gordian/universe.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitAuditFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct GlobalOptions {
    std::string out;
    std::string format;  // "", "json", "csv", "text", "svg"
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool strict = false;
    std::optional<long long> cap;
};

std::optional<long long> env_cap() {
    const char* v = std::getenv("GORDIAN_CAP");
    if (!v || !*v) return std::nullopt;
    try {
        return std::stoll(v);
    } catch (...) {
        throw gordian::ValidationError("GORDIAN_CAP must be an integer, got '" + std::string(v) +
                                       "'");
    }
}

long long effective_cap(const GlobalOptions& g, long long fallback) {
    if (g.cap) return *g.cap;
    if (auto e = env_cap()) return *e;
    return fallback;
}

void emit(const GlobalOptions& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(g.out, std::ios::binary);
        if (!out) throw gordian::ValidationError("cannot write output file: " + g.out);
        out << payload;
    }
}

std::string pick_format(const GlobalOptions& g, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
    std::string f = g.format.empty() ? fallback : g.format;
    for (const auto& a : allowed)
        if (f == a) return f;
    std::string msg = "format '" + f + "' not valid here; expected one of:";
    for (const auto& a : allowed) msg += " " + a;
    throw gordian::ValidationError(msg);
}

// ---------------------------------------------------------------------------
// input plumbing shared by invariant/distance
// ---------------------------------------------------------------------------

struct DiagramInput {
    gordian::LinkDiagram diagram;
    std::optional<gordian::BraidWord> braid;  // present for braid inputs
    std::string source;
};

DiagramInput load_diagram_input(const std::optional<std::string>& braid_text,
                                const std::optional<std::string>& pd_text) {
    if (braid_text.has_value() == pd_text.has_value())
        throw gordian::ValidationError("provide exactly one of --braid or --pd");
    if (braid_text) {
        gordian::BraidWord w = gordian::parse_braid(*braid_text);
        return {gordian::braid_closure(w), w, "braid"};
    }
    return {gordian::parse_pd(*pd_text), std::nullopt, "pd"};
}

json polynomial_json(const gordian::ConwayPolynomial& p) {
    json coeffs = json::array();
    for (const gordian::Integer& c : p.coeffs()) {
        // keep JSON numbers exact: fall back to strings outside the safe range
        if (c >= -9007199254740991ll && c <= 9007199254740991ll)
            coeffs.push_back(static_cast<std::int64_t>(c));
        else
            coeffs.push_back(c.str());
    }
    return json{{"text", p.to_text()}, {"list", std::move(coeffs)}};
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_invariant(const GlobalOptions& g, const std::optional<std::string>& braid_text,
                  const std::optional<std::string>& pd_text) {
    DiagramInput input = load_diagram_input(braid_text, pd_text);
    gordian::SkeinLimits limits;
    limits.max_crossings = static_cast<std::size_t>(effective_cap(g, 24));

    gordian::ConwayPolynomial nabla = gordian::conway_polynomial(input.diagram, limits);
    std::optional<std::int64_t> a2;
    if (input.diagram.component_count() == 1) a2 = gordian::a2(nabla);

    std::string format = pick_format(g, "text", {"text", "json"});
    if (format == "json") {
        json j{{"schema_version", 1},
               {"kind", "invariant"},
               {"source", input.source},
               {"crossings", input.diagram.crossing_count()},
               {"components", input.diagram.component_count()},
               {"conway", polynomial_json(nabla)},
               {"a2", a2 ? json(*a2) : json(nullptr)}};
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "conway: " << nabla.to_text() << "\n";
        out << "list: " << nabla.to_list() << "\n";
        if (a2) out << "a2: " << *a2 << "\n";
        out << "components: " << input.diagram.component_count() << "\n";
        out << "crossings: " << input.diagram.crossing_count() << "\n";
        emit(g, out.str());
    }
    return kExitPass;
}

int cmd_distance(const GlobalOptions& g, const std::vector<std::string>& class_texts,
                 const std::vector<std::string>& braid_texts,
                 const std::vector<std::string>& pd_texts) {
    std::vector<gordian::ConwayClass> classes;
    for (const auto& t : class_texts)
        classes.emplace_back(gordian::ConwayPolynomial::parse_list(t));
    gordian::SkeinLimits limits;
    limits.max_crossings = static_cast<std::size_t>(effective_cap(g, 24));
    for (const auto& t : braid_texts)
        classes.push_back(
            gordian::conway_class(gordian::braid_closure(gordian::parse_braid(t)), limits));
    for (const auto& t : pd_texts)
        classes.push_back(gordian::conway_class(gordian::parse_pd(t), limits));
    if (classes.size() != 2)
        throw gordian::ValidationError("distance needs exactly two inputs (--class/--braid/--pd), got " +
                                       std::to_string(classes.size()));

    std::int64_t d = gordian::delta_nabla_distance(classes[0], classes[1]);
    std::set<std::int64_t> xb = gordian::x_nabla_distance_bounds(classes[0], classes[1]);

    std::string format = pick_format(g, "text", {"text", "json"});
    if (format == "json") {
        json bounds = json::array();
        for (std::int64_t b : xb) bounds.push_back(b);
        json j{{"schema_version", 1},
               {"kind", "distance"},
               {"u", classes[0].to_list()},
               {"v", classes[1].to_list()},
               {"delta_distance", d},
               {"x_distance_bounds", std::move(bounds)}};
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "u: " << classes[0].to_text() << "\n";
        out << "v: " << classes[1].to_text() << "\n";
        out << "delta-distance: " << d << "\n";
        out << "x-distance bounds: {";
        bool first = true;
        for (std::int64_t b : xb) {
            if (!first) out << ", ";
            out << b;
            first = false;
        }
        out << "}\n";
        emit(g, out.str());
    }
    return kExitPass;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto sep = text.find(':');
    if (sep == std::string::npos)
        throw gordian::ValidationError("expected a range MIN:MAX, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, sep)), std::stoll(text.substr(sep + 1))};
    } catch (...) {
        throw gordian::ValidationError("malformed range '" + text + "'");
    }
}

int cmd_universe(const GlobalOptions& g, const std::string& a2_range, int depth,
                 std::int64_t coeff_bound) {
    auto [a2_min, a2_max] = parse_range(a2_range);
    gordian::UniverseParams params{a2_min, a2_max, depth, coeff_bound};
    std::size_t cap = static_cast<std::size_t>(
        effective_cap(g, static_cast<long long>(gordian::FiniteUniverse::kDefaultVertexCap)));
    gordian::FiniteUniverse u = gordian::FiniteUniverse::build(params, cap);

    std::string format = pick_format(g, "json", {"json"});
    (void)format;
    emit(g, gordian::universe_to_json(u));
    std::cerr << "universe: " << u.size() << " vertices, " << u.edge_count() << " edges\n";
    return kExitPass;
}

int cmd_audit(const GlobalOptions& g, const std::string& kind, const std::string& universe_path,
              bool sampled, std::optional<std::size_t> sample_size, bool fallback) {
    gordian::FiniteUniverse u = gordian::load_universe(universe_path);

    gordian::AuditConfig config;
    config.mode = sampled ? gordian::AuditMode::sampled : gordian::AuditMode::exhaustive;
    config.seed = g.seed;
    config.sample_size = sample_size.value_or(0);
    config.sampling_fallback = fallback;
    if (g.cap || env_cap()) {
        long long cap = effective_cap(g, 0);
        config.triangle_budget = static_cast<std::size_t>(cap);
        config.quadruple_budget = static_cast<std::size_t>(cap);
    }

    gordian::AuditReport report;
    if (kind == "slim")
        report = gordian::audit_slimness(u, config);
    else if (kind == "fourpoint")
        report = gordian::audit_four_point(u, config);
    else if (kind == "qi")
        report = gordian::audit_quasi_isometry(u);
    else if (kind == "triangle-free")
        report = gordian::audit_triangle_free(u);
    else
        throw gordian::ValidationError("unknown audit kind '" + kind +
                                       "' (expected slim, fourpoint, qi, or triangle-free)");

    std::string format = pick_format(g, "json", {"json", "text"});
    if (format == "json") {
        emit(g, report.to_json());
    } else {
        std::ostringstream out;
        out << "audit: " << report.kind << "\n"
            << "pass: " << (report.pass ? "true" : "false") << "\n";
        emit(g, out.str());
    }
    std::cerr << "audit " << report.kind << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (!report.pass && g.strict) return kExitAuditFail;
    return kExitPass;
}

int cmd_delta_walk(const GlobalOptions& g, const std::string& braid_text, std::size_t steps) {
    gordian::BraidWord start = gordian::parse_braid(braid_text);
    gordian::AuditReport report = gordian::audit_delta_walk(start, steps, g.seed);

    std::string format = pick_format(g, "json", {"json", "text", "csv"});
    if (format == "json") {
        emit(g, report.to_json());
    } else if (format == "csv") {
        std::ostringstream out;
        out << "step,a2\n";
        auto trace = report.delta_walk->a2_trace();
        for (std::size_t i = 0; i < trace.size(); ++i) out << i << "," << trace[i] << "\n";
        emit(g, out.str());
    } else {
        std::ostringstream out;
        out << "a2 trace:";
        for (std::int64_t a : report.delta_walk->a2_trace()) out << " " << a;
        out << "\npass: " << (report.pass ? "true" : "false") << "\n";
        emit(g, out.str());
    }
    std::cerr << "delta-walk: " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (!report.pass && g.strict) return kExitAuditFail;
    return kExitPass;
}

gordian::ConwayClass parse_class_arg(const std::string& text) {
    return gordian::ConwayClass(gordian::ConwayPolynomial::parse_list(text));
}

int cmd_plot(const GlobalOptions& g, const std::string& universe_path,
             const std::optional<std::string>& triangle, const std::optional<std::string>& ball) {
    gordian::FiniteUniverse u = gordian::load_universe(universe_path);

    gordian::PlotOptions options;
    options.vertex_cap = static_cast<std::size_t>(effective_cap(g, 500));
    if (triangle) {
        std::array<gordian::ConwayClass, 3> corners = {gordian::ConwayClass::unknot(),
                                                       gordian::ConwayClass::unknot(),
                                                       gordian::ConwayClass::unknot()};
        std::string rest = *triangle;
        for (int i = 0; i < 3; ++i) {
            auto sep = rest.find(';');
            std::string part = sep == std::string::npos ? rest : rest.substr(0, sep);
            if (part.empty())
                throw gordian::ValidationError(
                    "--highlight-triangle expects three ';'-separated class lists");
            corners[static_cast<std::size_t>(i)] = parse_class_arg(part);
            if (i < 2) {
                if (sep == std::string::npos)
                    throw gordian::ValidationError(
                        "--highlight-triangle expects three ';'-separated class lists");
                rest = rest.substr(sep + 1);
            } else if (sep != std::string::npos) {
                throw gordian::ValidationError("--highlight-triangle takes exactly three corners");
            }
        }
        options.triangle_corners = corners;
    }
    if (ball) {
        auto sep = ball->rfind(':');
        if (sep == std::string::npos)
            throw gordian::ValidationError("--highlight-ball expects CLASS:RADIUS");
        options.ball = {parse_class_arg(ball->substr(0, sep)),
                        std::stoll(ball->substr(sep + 1))};
    }

    std::string format = pick_format(g, "svg", {"svg", "csv"});
    emit(g, format == "svg" ? gordian::render_svg(u, options) : gordian::render_csv(u, options));
    return kExitPass;
}

int cmd_twist(const GlobalOptions& g, int m) {
    gordian::BraidWord w = gordian::twist_knot(m);
    gordian::SkeinLimits limits;
    limits.max_crossings = static_cast<std::size_t>(effective_cap(g, 64));
    gordian::ConwayPolynomial nabla = gordian::conway_via_matrix(w);

    std::string format = pick_format(g, "text", {"text", "json"});
    if (format == "json") {
        json j{{"schema_version", 1},
               {"kind", "twist"},
               {"m", m},
               {"braid", w.to_text()},
               {"conway", polynomial_json(nabla)}};
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "braid: " << w.to_text() << "\n";
        out << "conway: " << nabla.to_text() << "\n";
        emit(g, out.str());
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway-polynomial invariants and metric audits of the Delta-move Gordian graph"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format: json, csv, text, or svg");
    app.add_option("--seed", g.seed, "Seed for randomized commands (default 0)");
    app.add_flag("--strict", g.strict, "Exit nonzero when an audit fails");
    long long cap_value = 0;
    auto* cap_opt = app.add_option("--cap", cap_value,
                                   "Override the primary resource cap of the subcommand "
                                   "(also settable via GORDIAN_CAP)");

    // invariant
    auto* invariant = app.add_subcommand("invariant", "Conway polynomial and a2 of a diagram");
    invariant->fallthrough();
    std::optional<std::string> inv_braid, inv_pd;
    invariant->add_option("--braid", inv_braid, "Braid word input");
    invariant->add_option("--pd", inv_pd, "PD code input");

    // distance
    auto* distance = app.add_subcommand("distance", "Gordian distances between two classes");
    distance->fallthrough();
    std::vector<std::string> dist_classes, dist_braids, dist_pds;
    distance->add_option("--class", dist_classes, "Class in compact list form, e.g. [1,0,1]")
        ->allow_extra_args(false);
    distance->add_option("--braid", dist_braids, "Braid word input (class computed first)")
        ->allow_extra_args(false);
    distance->add_option("--pd", dist_pds, "PD code input (class computed first)")
        ->allow_extra_args(false);

    // universe
    auto* universe = app.add_subcommand("universe", "Build a finite truncation of the vertex set");
    universe->fallthrough();
    std::string uni_a2;
    int uni_depth = 1;
    std::int64_t uni_coeff = 0;
    universe->add_option("--a2", uni_a2, "Level range MIN:MAX")->required();
    universe->add_option("--depth", uni_depth, "Highest tracked power z^(2*depth)")->required();
    universe->add_option("--coeff", uni_coeff, "Bound for higher coefficients")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "Run a hyperbolicity/QI/structure audit");
    audit->fallthrough();
    std::string audit_kind, audit_universe;
    bool audit_sampled = false, audit_exhaustive = false, audit_fallback = false;
    std::optional<std::size_t> audit_samples;
    audit->add_option("kind", audit_kind, "slim | fourpoint | qi | triangle-free")->required();
    audit->add_option("--universe", audit_universe, "Universe file")->required();
    audit->add_flag("--sampled", audit_sampled, "Seeded sampling instead of exhaustion");
    audit->add_flag("--exhaustive", audit_exhaustive, "Exhaustive enumeration (default)");
    audit->add_option("--sample-size", audit_samples, "Number of sampled configurations");
    audit->add_flag("--fallback", audit_fallback,
                    "Fall back to sampling when the exhaustive budget is exceeded");

    // delta-walk
    auto* walk = app.add_subcommand("delta-walk", "Random walk of Delta-moves, tracking a2");
    walk->fallthrough();
    std::string walk_braid;
    std::size_t walk_steps = 0;
    walk->add_option("--braid", walk_braid, "Start braid word (closure must be a knot)")
        ->required();
    walk->add_option("--steps", walk_steps, "Number of Delta-moves")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "Static SVG/CSV picture of a universe");
    plot->fallthrough();
    std::string plot_universe;
    std::optional<std::string> plot_triangle, plot_ball;
    plot->add_option("--universe", plot_universe, "Universe file")->required();
    plot->add_option("--highlight-triangle", plot_triangle,
                     "Three ';'-separated corner classes, e.g. \"[1];[1,0,2];[1,0,1,0,1]\"");
    plot->add_option("--highlight-ball", plot_ball, "CLASS:RADIUS, e.g. \"[1]:1\"");

    // twist
    auto* twist = app.add_subcommand("twist", "Braid word of the twist knot K_m");
    twist->fallthrough();
    int twist_m = 0;
    twist->add_option("m", twist_m, "Twist parameter")->required();

    try {
        app.parse(argc, argv);
        if (*cap_opt) g.cap = cap_value;

        if (*invariant) return cmd_invariant(g, inv_braid, inv_pd);
        if (*distance) return cmd_distance(g, dist_classes, dist_braids, dist_pds);
        if (*universe) return cmd_universe(g, uni_a2, uni_depth, uni_coeff);
        if (*audit) {
            if (audit_sampled && audit_exhaustive)
                throw gordian::ValidationError("--sampled and --exhaustive are exclusive");
            return cmd_audit(g, audit_kind, audit_universe, audit_sampled, audit_samples,
                             audit_fallback);
        }
        if (*walk) return cmd_delta_walk(g, walk_braid, walk_steps);
        if (*plot) return cmd_plot(g, plot_universe, plot_triangle, plot_ball);
        if (*twist) return cmd_twist(g, twist_m);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const gordian::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gordian::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gordian::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
