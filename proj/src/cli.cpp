#include "fusionkit/cli.hpp"

#include "fusionkit/axioms.hpp"
#include "fusionkit/catalog.hpp"
#include "fusionkit/ring_file.hpp"
#include "fusionkit/spectral.hpp"
#include "fusionkit/window.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace fusionkit {

namespace {

constexpr std::size_t kDefaultCap = 200000;

[[noreturn]] void bad_param(const std::string& what) { throw FusionError(ErrorKind::InvalidParam, what); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_top_level(std::string_view text) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(' || c == '[') {
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        } else if (c == ',' && depth == 0) {
            parts.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(text.substr(start)));
    if (parts.size() == 1 && parts.front().empty()) {
        parts.clear();
    }
    return parts;
}

/// Splits "L=v" at the last top-level '='.
std::pair<std::string_view, std::string_view> split_assignment(std::string_view item) {
    const auto eq = item.rfind('=');
    if (eq == std::string_view::npos) {
        bad_param("expected LABEL=VALUE, got \"" + std::string(item) + "\"");
    }
    return {trim(item.substr(0, eq)), trim(item.substr(eq + 1))};
}

long long parse_integer(std::string_view text) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception&) {
        bad_param("expected an integer, got \"" + std::string(text) + "\"");
    }
}

double parse_real(std::string_view text) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception&) {
        bad_param("expected a number, got \"" + std::string(text) + "\"");
    }
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_quantity(const Quantity& q) {
    if (q.is_exact() && denominator(q.rational()) == 1) {
        return numerator(q.rational()).str();
    }
    return csv_number(q.value());
}

std::string render_set(const FusionRing& ring, const LabelSet& labels) {
    constexpr std::size_t kShown = 40;
    std::string out = "{";
    std::size_t i = 0;
    for (const auto& label : labels) {
        if (i == kShown) {
            out += ", ...";
            break;
        }
        out += (i++ ? ", " : "") + ring.render(label);
    }
    out += "}";
    if (labels.size() > kShown) {
        out += " (" + std::to_string(labels.size()) + " labels)";
    }
    return out;
}

LabelSet default_support(const FusionRing& ring, const std::string& spec) {
    if (!spec.empty()) {
        return parse_label_list(ring, spec);
    }
    const auto gens = ring.generators();
    return LabelSet(gens.begin(), gens.end());
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream csv(path);
    if (!csv) {
        bad_param("cannot write " + path);
    }
    return csv;
}

// ---- subcommands ----

struct Common {
    std::string ring;
};

int cmd_axioms(const Common& c, int radius, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring, false);
    const auto gens = ring.generators();
    const TruncationWindow window = build_window(ring, LabelSet(gens.begin(), gens.end()), radius, kDefaultCap);
    const AxiomReport report = verify_axioms(ring, window);
    out << "ring: " << ring.description() << "\n";
    out << "window: radius " << radius << ", " << window.size() << " labels\n";
    for (const auto& check : report.checks) {
        out << std::left << std::setw(28) << check.name << (check.passed ? "PASS" : "FAIL") << "  probes "
            << check.probes;
        if (!check.passed) {
            out << "  witness " << check.witness;
        }
        out << "\n";
    }
    out << "result: " << (report.all_passed() ? "all axioms hold" : "violation found") << "\n";
    return report.all_passed() ? kExitYes : kExitNo;
}

void print_report(const FusionRing& ring, const FoelnerReport& r, std::ostream& out) {
    out << "condition: " << condition_name(r.condition) << "\n";
    if (r.condition == Condition::FC1) {
        out << "measure support: " << render_set(ring, r.support) << "\n";
    } else {
        out << "support: " << render_set(ring, r.support) << "\n";
    }
    out << "F: " << render_set(ring, r.F) << "\n";
    out << "epsilon: " << format_number(r.epsilon) << "\n";
    for (const auto& [xi, value] : r.per_generator) {
        out << "value[" << ring.render(xi) << "]: " << format_quantity(value) << "\n";
    }
    out << "lhs: " << format_quantity(r.lhs) << "\n";
    out << "rhs: " << format_quantity(r.rhs) << "\n";
    out << "weight_F: " << format_quantity(r.weight_F) << "\n";
    out << "ratio: " << format_number(r.ratio) << "\n";
    if (r.support_identity) {
        out << "support identity: " << (*r.support_identity ? "holds" : "fails") << "\n";
    }
    out << "satisfied: " << (r.satisfied ? "yes" : "no") << "\n";
}

int cmd_foelner(const Common& c, const std::string& support, double eps, const std::string& strategy,
                std::size_t budget, const std::string& csv_path, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring);
    const LabelSet S = default_support(ring, support);
    const SearchStrategy how = strategy == "greedy" ? SearchStrategy::Greedy : SearchStrategy::Balls;
    const SearchResult result = foelner_search(ring, S, eps, how, budget);
    const FoelnerReport& r = result.report;

    out << "strategy: " << strategy << "\n";
    out << "budget: " << budget << "\n";
    out << (result.found ? "found: yes" : "found: no") << "\n";
    out << "set size: " << r.F.size() << "\n";
    print_report(ring, r, out);
    if (!result.found) {
        out << "best ratio: " << format_number(r.ratio) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream csv = open_csv(csv_path);
        csv << "step,set_size,weight_F,weight_boundary,ratio\n";
        for (const auto& p : r.curve) {
            csv << p.step << "," << p.set_size << "," << csv_quantity(p.weight_F) << ","
                << csv_quantity(p.weight_boundary) << "," << csv_number(p.ratio) << "\n";
        }
    }
    if (result.found) {
        return kExitYes;
    }
    return result.budget_exhausted ? kExitBudget : kExitNo;
}

std::vector<int> parse_radii(const FusionRing&, const std::string& text) {
    std::vector<int> radii;
    for (auto part : split_top_level(text)) {
        const long long r = parse_integer(part);
        if (r < 0 || r > std::numeric_limits<int>::max()) {
            bad_param("radius out of range: " + std::string(part));
        }
        radii.push_back(static_cast<int>(r));
    }
    if (radii.empty()) {
        bad_param("--radii needs at least one radius");
    }
    return radii;
}

int cmd_spectrum(const Common& c, const std::string& measure, const std::string& radii_text, double tol,
                 std::size_t cap, const std::string& csv_path, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring);
    const ProbMeasure mu = parse_measure_spec(ring, measure);
    AmenabilityOptions options;
    options.tol = tol;
    options.cap = cap;
    const AmenabilityReport report = amenability_estimate(ring, mu, parse_radii(ring, radii_text), options);

    out << "measure: " << measure << " on " << render_set(ring, mu.support()) << "\n";
    for (const auto& e : report.estimates) {
        out << "radius " << e.radius << "  window " << e.window_size << "  lambda_max "
            << format_number(e.lambda_max) << "  residual " << format_number(e.residual) << "\n";
    }
    out << "gap: " << format_number(report.gap) << "\n";
    out << "verdict: " << verdict_name(report.verdict) << "\n";
    if (!report.note.empty()) {
        out << "note: " << report.note << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream csv = open_csv(csv_path);
        csv << "radius,window_size,lambda_max\n";
        for (const auto& e : report.estimates) {
            csv << e.radius << "," << e.window_size << "," << csv_number(e.lambda_max) << "\n";
        }
    }
    return report.verdict == Verdict::EvidenceNonamenable ? kExitNo : kExitYes;
}

int cmd_check(const Common& c, const std::string& condition, const std::string& set_spec, const std::string& support,
              const std::string& measure, double eps, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring);
    FoelnerReport report;
    if (condition == "fc1") {
        if (measure.empty()) {
            bad_param("fc1 needs --measure");
        }
        const ProbMeasure mu = parse_measure_spec(ring, measure);
        const LabelSet F = parse_set_spec(ring, set_spec, mu.support());
        report = fc1_check(ring, mu, F, eps);
    } else {
        const LabelSet S = default_support(ring, support);
        const LabelSet F = parse_set_spec(ring, set_spec, S);
        report = condition == "fc2" ? fc2_check(ring, S, F, eps) : fc3_check(ring, S, F, eps);
    }
    print_report(ring, report, out);
    return report.satisfied ? kExitYes : kExitNo;
}

Function parse_function_spec(const FusionRing& ring, std::string_view spec, const LabelSet& generators) {
    if (spec.starts_with("values:")) {
        std::map<Label, double> values;
        for (auto item : split_top_level(spec.substr(7))) {
            const auto [label, value] = split_assignment(item);
            values[ring.parse(label)] += parse_real(value);
        }
        return Function(ring, values);
    }
    return Function::indicator(ring, parse_set_spec(ring, spec, generators));
}

int cmd_dirichlet(const Common& c, const std::string& measure, const std::string& fn, int r, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring);
    const ProbMeasure mu = parse_measure_spec(ring, measure);
    const Function f = parse_function_spec(ring, fn, mu.support());
    const double dirichlet = dirichlet_norm(ring, mu, f, r);
    const double norm = weighted_norm(f, r);
    out << "r: " << r << "\n";
    out << "dirichlet: " << format_number(dirichlet) << "\n";
    out << "norm: " << format_number(norm) << "\n";
    if (norm > 0.0) {
        out << "ratio: " << format_number(dirichlet / norm) << "\n";
    } else {
        out << "ratio: undefined (f = 0)\n";
    }
    if (r == 2) {
        const double energy = weighted_inner(f, f) - weighted_inner(rho_measure_apply(ring, mu, f), f);
        out << "energy: " << format_number(energy) << "\n";
        out << "energy residual: " << format_number(dirichlet * dirichlet - energy) << "\n";
    }
    return kExitYes;
}

int cmd_export(const Common& c, const std::string& support, int radius, const std::string& path, std::ostream& out) {
    const FusionRing ring = load_ring_argument(c.ring);
    const TruncationWindow window = build_window(ring, default_support(ring, support), radius, kDefaultCap);
    const std::string doc = export_table_json(ring, window);
    if (path.empty()) {
        out << doc << "\n";
    } else {
        std::ofstream file(path);
        if (!file) {
            bad_param("cannot write " + path);
        }
        file << doc << "\n";
        out << "wrote " << window.size() << " labels to " << path << "\n";
    }
    return kExitYes;
}

}  // namespace

FusionRing load_ring_argument(const std::string& argument, bool verify) {
    RingLoadOptions options;
    options.verify = verify;
    if (const auto t = trim(argument); !t.empty() && t.front() == '{') {
        return ring_from_json(t, options);
    }
    return load_ring_file(argument, options);
}

LabelSet parse_label_list(const FusionRing& ring, std::string_view text) {
    LabelSet labels;
    for (auto part : split_top_level(text)) {
        if (part.empty()) {
            bad_param("empty label in list \"" + std::string(text) + "\"");
        }
        labels.insert(ring.parse(part));
    }
    return labels;
}

ProbMeasure parse_measure_spec(const FusionRing& ring, std::string_view spec) {
    spec = trim(spec);
    if (spec == "uniform-gens") {
        return uniform_generator_measure(ring);
    }
    if (spec.starts_with("delta:")) {
        return ProbMeasure::delta(ring, ring.parse(trim(spec.substr(6))));
    }
    if (spec.starts_with("uniform:")) {
        return ProbMeasure::uniform(ring, parse_label_list(ring, spec.substr(8)));
    }
    if (spec.starts_with("decomp:")) {
        std::map<Label, Integer> decomposition;
        for (auto item : split_top_level(spec.substr(7))) {
            const auto [label, k] = split_assignment(item);
            decomposition[ring.parse(label)] += parse_integer(k);
        }
        return measure_from_decomposition(ring, decomposition);
    }
    if (spec.starts_with("weights:")) {
        std::map<Label, double> weights;
        for (auto item : split_top_level(spec.substr(8))) {
            const auto [label, w] = split_assignment(item);
            weights[ring.parse(label)] += parse_real(w);
        }
        return ProbMeasure(ring, weights);
    }
    bad_param("unknown measure spec \"" + std::string(spec) + "\"");
}

LabelSet parse_set_spec(const FusionRing& ring, std::string_view spec, const LabelSet& generators) {
    spec = trim(spec);
    if (spec.starts_with("interval:")) {
        const auto body = spec.substr(9);
        const auto dots = body.find("..");
        if (dots == std::string_view::npos) {
            bad_param("interval spec must look like interval:A..B");
        }
        const long long lo = parse_integer(trim(body.substr(0, dots)));
        const long long hi = parse_integer(trim(body.substr(dots + 2)));
        if (lo > hi) {
            bad_param("empty interval " + std::string(body));
        }
        LabelSet labels;
        for (long long k = lo; k <= hi; ++k) {
            const auto label = ring.rules().from_integer(k);
            if (!label) {
                bad_param("interval sets need an integer-labelled ring");
            }
            ring.require(*label);
            labels.insert(*label);
        }
        return labels;
    }
    if (spec.starts_with("set:")) {
        return parse_label_list(ring, spec.substr(4));
    }
    if (spec.starts_with("ball:")) {
        const long long r = parse_integer(trim(spec.substr(5)));
        if (r < 0 || r > std::numeric_limits<int>::max()) {
            bad_param("ball radius out of range");
        }
        return build_window(ring, generators, static_cast<int>(r), kDefaultCap).label_set();
    }
    bad_param("unknown set spec \"" + std::string(spec) + "\"");
}

std::string format_number(double x) {
    if (std::isfinite(x) && x == std::trunc(x) && std::fabs(x) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_quantity(const Quantity& q) {
    if (q.is_exact() && denominator(q.rational()) == 1) {
        const Integer n = numerator(q.rational());
        if (abs(n) < Integer(1000000000000000LL)) {
            return n.str();
        }
        // round the decimal digits directly so values past double range still print
        std::string digits = Integer(abs(n)).str();
        int exponent = static_cast<int>(digits.size()) - 1;
        Integer head(digits.substr(0, 13));
        head = (head + 5) / 10;
        std::string kept = head.str();
        if (kept.size() > 12) {
            kept.pop_back();
            ++exponent;
        }
        while (kept.size() > 1 && kept.back() == '0') {
            kept.pop_back();
        }
        std::string out = n < 0 ? "-" : "";
        out += kept.substr(0, 1);
        if (kept.size() > 1) {
            out += "." + kept.substr(1);
        }
        return out + "e+" + std::to_string(exponent);
    }
    return format_number(q.value());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fusion algebra amenability toolkit", "fusionkit"};
    app.require_subcommand(1);
    Common common;

    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("ring", common.ring, "Ring document (path, or inline JSON)")->required();
    };

    int radius = 4;
    auto* axioms = app.add_subcommand("axioms", "Verify the fusion algebra axioms on a generator window");
    add_ring(axioms);
    axioms->add_option("--radius", radius, "Window radius")->check(CLI::NonNegativeNumber);

    std::string support;
    double eps = 0.0;
    std::string strategy = "balls";
    std::size_t budget = 200;
    std::string csv_path;
    auto* foelner = app.add_subcommand("foelner", "Search for a Foelner set");
    add_ring(foelner);
    foelner->add_option("--support", support, "Generating labels S (default: ring generators)");
    foelner->add_option("--eps", eps, "Target ratio")->required();
    foelner->add_option("--strategy", strategy, "balls or greedy")->check(CLI::IsMember({"balls", "greedy"}));
    foelner->add_option("--budget", budget, "Largest set size tried");
    foelner->add_option("--csv", csv_path, "Write the search curve here");

    std::string measure = "uniform-gens";
    std::string radii = "1,2,4,8";
    double tol = 1e-10;
    std::size_t cap = kDefaultCap;
    auto* spectrum = app.add_subcommand("spectrum", "Top of the spectrum of l_mu on growing windows");
    add_ring(spectrum);
    spectrum->add_option("--measure", measure, "Measure spec");
    spectrum->add_option("--radii", radii, "Comma-separated radii");
    spectrum->add_option("--tol", tol, "Eigenvalue residual tolerance");
    spectrum->add_option("--cap", cap, "Largest window size");
    spectrum->add_option("--csv", csv_path, "Write radius,window_size,lambda_max rows here");

    std::string condition;
    std::string set_spec;
    std::string check_measure;
    auto* check = app.add_subcommand("check", "Evaluate FC1, FC2 or FC3 on a given set");
    add_ring(check);
    check->add_option("--condition", condition, "fc1, fc2 or fc3")
        ->required()
        ->check(CLI::IsMember({"fc1", "fc2", "fc3"}));
    check->add_option("--set", set_spec, "Set spec for F")->required();
    check->add_option("--support", support, "Generating labels S (fc2, fc3)");
    check->add_option("--measure", check_measure, "Measure spec (fc1)");
    check->add_option("--eps", eps, "Epsilon")->required();

    std::string fn;
    int r = 1;
    auto* dirichlet = app.add_subcommand("dirichlet", "Dirichlet r-norm of a function");
    add_ring(dirichlet);
    dirichlet->add_option("--measure", measure, "Measure spec");
    dirichlet->add_option("--fn", fn, "Set spec (indicator) or values:L=v,...")->required();
    dirichlet->add_option("--r", r, "Norm order");

    std::string out_path;
    int export_radius = 2;
    auto* exporter = app.add_subcommand("export", "Write a window of the ring as a table document");
    add_ring(exporter);
    exporter->add_option("--support", support, "Generating labels S (default: ring generators)");
    exporter->add_option("--radius", export_radius, "Window radius")->check(CLI::NonNegativeNumber);
    exporter->add_option("--out", out_path, "Output path (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (axioms->parsed()) {
            return cmd_axioms(common, radius, out);
        }
        if (foelner->parsed()) {
            return cmd_foelner(common, support, eps, strategy, budget, csv_path, out);
        }
        if (spectrum->parsed()) {
            return cmd_spectrum(common, measure, radii, tol, cap, csv_path, out);
        }
        if (check->parsed()) {
            return cmd_check(common, condition, set_spec, support, check_measure, eps, out);
        }
        if (dirichlet->parsed()) {
            return cmd_dirichlet(common, measure, fn, r, out);
        }
        if (exporter->parsed()) {
            return cmd_export(common, support, export_radius, out_path, out);
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const FusionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace fusionkit
