// regspec: exact spectral moments of weighted random regular graphs, plus the
// Monte Carlo machinery to check them. Subcommands: capps, moments, simulate,
// compare.

#include "regspec/capp.hpp"
#include "regspec/moments.hpp"
#include "regspec/spectra.hpp"
#include "regspec/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using json = nlohmann::json;
using namespace regspec;

constexpr const char* kRngTag = "mt19937_64+splitmix64/v1";

// exit codes: 0 success / all gates pass, 1 tolerance gate failed, 2 error
constexpr int kExitOk = 0;
constexpr int kExitGateFailed = 1;
constexpr int kExitError = 2;

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_double(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

std::ostream& open_output(std::optional<std::ofstream>& file, const std::string& path) {
    if (path.empty()) {
        return std::cout;
    }
    file.emplace(path);
    if (!*file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    return *file;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        out.push_back(std::stoi(piece));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

// ---------------------------------------------------------------------------
// capps

struct CappsArgs {
    int length = 0;
    std::string signature_filter;
    bool counts_only = false;
    int max_length = 20;
    std::string format = "json";
    std::string output;
};

int run_capps(const CappsArgs& args) {
    const EnumerationOptions opts{args.max_length};
    Signature filter;
    if (!args.signature_filter.empty()) {
        filter = sorted_signature(parse_int_list(args.signature_filter));
    }

    std::optional<std::ofstream> file;
    std::ostream& rows = open_output(file, args.output);

    std::uint64_t emitted = 0;
    auto emit_row = [&](const CappView& view) {
        Signature sig(view.symbol_counts.begin(), view.symbol_counts.end());
        if (!filter.empty() && sorted_signature(sig) != filter) {
            return;
        }
        ++emitted;
        if (args.counts_only) {
            return;
        }
        std::ostringstream pattern;
        for (std::size_t i = 0; i < view.symbols.size(); ++i) {
            pattern << (i ? " " : "") << view.symbols[i];
        }
        if (args.format == "json") {
            json row = {{"pattern", pattern.str()},
                        {"signature", sig},
                        {"multiplicity_roots",
                         std::vector<int>(view.multiplicity_roots.begin(),
                                          view.multiplicity_roots.end())}};
            rows << row.dump() << '\n';
        } else {
            std::ostringstream sig_text, roots_text;
            for (std::size_t i = 0; i < sig.size(); ++i) {
                sig_text << (i ? "," : "") << sig[i];
            }
            for (std::size_t i = 0; i < view.multiplicity_roots.size(); ++i) {
                roots_text << (i ? "," : "") << view.multiplicity_roots[i];
            }
            rows << pattern.str() << ',' << csv_quote(sig_text.str()) << ','
                 << csv_quote(roots_text.str()) << '\n';
        }
    };
    if (!args.counts_only && args.format == "csv") {
        rows << "pattern,signature,multiplicity_roots\n";
    }
    if (!args.counts_only || !filter.empty()) {
        for_each_capp(args.length, emit_row, opts);
    }

    const SignatureCensus census = count_by_signature(args.length, opts);
    std::ostream& info = (args.output.empty() && !args.counts_only) ? std::cerr : std::cout;
    if (args.length % 2 != 0) {
        info << "note: no patterns exist at odd length " << args.length << "\n";
    }
    info << "length " << args.length << ": " << census.total << " patterns";
    if (!filter.empty()) {
        info << " (" << emitted << " matching signature filter)";
    }
    info << "\n";
    for (const auto& [partition, count] : census.counts) {
        info << "  signature " << signature_str(partition) << ": " << count << "\n";
    }
    info << "  |P^(2)| = " << census.all_twos << ", |P^(4)| = " << census.one_four
         << ", |P^o| = " << census.open_total << ", |T| = " << census.adjacent_pair_total
         << "\n";
    const bool serendipity = census.adjacent_pair_total == 2 * census.one_four;
    info << "  serendipity |T| == 2|P^(4)|: " << (serendipity ? "holds" : "VIOLATED") << "\n";
    return serendipity ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------------------
// moments

struct MomentsArgs {
    int order = 8;
    int d = 3;
    int max_order = 8;
    std::string weights = "constant";
    std::string d_range = "3:10";
    std::string orders = "8,10,12";
    int max_length = 20;
    std::string format = "csv";
    std::string output;
};

json rational_json(const Rational& r) {
    return {{"value", rational_str(r)},
            {"value_num", numerator(r).str()},
            {"value_den", denominator(r).str()}};
}

int run_moments_expand(const MomentsArgs& args) {
    const EnumerationOptions opts{args.max_length};
    const MomentSequence weights = weight_moment_sequence(WeightSpec::parse(args.weights),
                                                          std::max(args.order, 0));
    const Rational value = moment_expansion(args.order, args.d, weights, opts);
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output);
    if (args.format == "json") {
        json row = {{"kind", "expand"}, {"d", args.d}, {"order", args.order},
                    {"weights", args.weights}};
        row.update(rational_json(value));
        out << row.dump() << '\n';
    } else {
        out << "d,order,weights,value\n"
            << args.d << ',' << args.order << ',' << csv_quote(args.weights) << ','
            << rational_str(value) << '\n';
    }
    return kExitOk;
}

int run_moments_symbolic(const MomentsArgs& args, bool with_weights) {
    const EnumerationOptions opts{args.max_length};
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output);

    const auto& groups = signature_expansion(args.order, opts);
    if (args.format == "json") {
        json rows = json::array();
        for (const SignatureGroup& group : groups) {
            std::vector<std::string> coeffs;
            for (const Rational& c : group.multiplicity_sum.coeffs()) {
                coeffs.push_back(rational_str(c));
            }
            rows.push_back({{"signature", group.partition},
                            {"pattern_count", group.pattern_count},
                            {"multiplicity_sum", group.multiplicity_sum.str()},
                            {"coefficients", coeffs}});
        }
        json doc = {{"kind", "symbolic"}, {"order", args.order}, {"groups", rows}};
        if (with_weights) {
            const MomentSequence weights =
                weight_moment_sequence(WeightSpec::parse(args.weights), args.order);
            const PolyInD total = moment_expansion_symbolic(args.order, weights, opts);
            std::vector<std::string> coeffs;
            for (const Rational& c : total.coeffs()) {
                coeffs.push_back(rational_str(c));
            }
            doc["weights"] = args.weights;
            doc["total"] = {{"polynomial", total.str()}, {"coefficients", coeffs}};
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "signature,pattern_count,multiplicity_sum,coefficients\n";
        for (const SignatureGroup& group : groups) {
            std::ostringstream coeffs;
            const auto& c = group.multiplicity_sum.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                coeffs << (i ? "," : "") << rational_str(c[i]);
            }
            out << csv_quote(signature_str(group.partition)) << ',' << group.pattern_count
                << ',' << csv_quote(group.multiplicity_sum.str()) << ','
                << csv_quote(coeffs.str()) << '\n';
        }
        if (with_weights) {
            const MomentSequence weights =
                weight_moment_sequence(WeightSpec::parse(args.weights), args.order);
            const PolyInD total = moment_expansion_symbolic(args.order, weights, opts);
            out << "# total with weights " << args.weights << ": " << total.str() << '\n';
        }
    }
    return kExitOk;
}

int run_moments_eigen(const MomentsArgs& args) {
    const EnumerationOptions opts{args.max_length};
    const EigenmomentTable table = eigenmoments(args.d, args.max_order, opts);
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output);
    if (args.format == "json") {
        for (int k = 2; k <= table.max_order(); k += 2) {
            json row = {{"kind", "eigen"}, {"d", args.d}, {"order", k}};
            row.update(rational_json(table.moment(k)));
            out << row.dump() << '\n';
        }
    } else {
        out << "d,order,value\n";
        for (int k = 2; k <= table.max_order(); k += 2) {
            out << args.d << ',' << k << ',' << rational_str(table.moment(k)) << '\n';
        }
    }
    return kExitOk;
}

int run_moments_kesten(const MomentsArgs& args) {
    const EnumerationOptions opts{args.max_length};
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output);
    if (args.format == "json") {
        for (int k = 2; k <= args.max_order; k += 2) {
            json row = {{"kind", "kesten"}, {"d", args.d}, {"order", k}};
            row.update(rational_json(kesten_moment_exact(args.d, k, opts)));
            out << row.dump() << '\n';
        }
    } else {
        out << "d,order,value\n";
        for (int k = 2; k <= args.max_order; k += 2) {
            out << args.d << ',' << k << ','
                << rational_str(kesten_moment_exact(args.d, k, opts)) << '\n';
        }
    }
    return kExitOk;
}

int run_moments_deviation(const MomentsArgs& args) {
    const EnumerationOptions opts{args.max_length};
    const auto [d_min, d_max] = parse_range(args.d_range);
    const std::vector<int> orders = parse_int_list(args.orders);
    const auto rows = deviation_table(d_min, d_max, orders, opts);
    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output);
    if (args.format == "json") {
        for (const DeviationRow& row : rows) {
            json obj = {{"kind", "deviation"}, {"d", row.d}, {"order", row.order}};
            obj.update(rational_json(row.scaled_deviation));
            out << obj.dump() << '\n';
        }
    } else {
        out << "d,order,d2_scaled_deviation\n";
        for (const DeviationRow& row : rows) {
            out << row.d << ',' << row.order << ',' << rational_str(row.scaled_deviation)
                << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate / compare

struct SimulateArgs {
    int n_vertices = 200;
    int degree = 4;
    std::string weights = "constant";
    int trials = 100;
    int max_order = 8;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int bins = 50;
    bool density = true;
    int threads = 1;
    int max_length = 20;
    std::string output = ".";
    // compare tolerances: max(z_max * se, rel_tol * |exact| + abs_coef / N * d^k)
    double rel_tol = 0.02;
    double abs_coef = 0.5;
    double z_max = 5.0;
};

struct ComparisonRow {
    int order;
    Rational exact;
    double mc_mean;
    double mc_se;
    double z;
    double tolerance;
    bool pass;
};

std::vector<ComparisonRow> build_comparison(const SimulateArgs& args,
                                            const MonteCarloResult& mc) {
    const MomentSequence weights =
        weight_moment_sequence(WeightSpec::parse(args.weights), args.max_order);
    std::vector<ComparisonRow> rows;
    for (const MomentEstimate& est : mc.estimates) {
        const Rational exact = moment_expansion(est.order, args.degree, weights,
                                                EnumerationOptions{args.max_length});
        const double exact_d = to_double(exact);
        const double tolerance =
            std::max(args.z_max * est.std_error,
                     args.rel_tol * std::abs(exact_d) +
                         args.abs_coef / args.n_vertices *
                             std::pow(args.degree, est.order));
        const double diff = est.mean - exact_d;
        const double z = est.std_error > 0 ? diff / est.std_error : 0.0;
        rows.push_back(ComparisonRow{est.order, exact, est.mean, est.std_error, z,
                                     tolerance, std::abs(diff) <= tolerance});
    }
    return rows;
}

json manifest_json(const SimulateArgs& args, const char* command) {
    return json{{"command", command},
                {"N", args.n_vertices},
                {"d", args.degree},
                {"weights", WeightSpec::parse(args.weights).str()},
                {"trials", args.trials},
                {"max_order", args.max_order},
                {"seed", args.seed},
                {"bins", args.bins},
                {"density", args.density},
                {"rng", kRngTag},
                {"tolerances",
                 {{"rel_tol", args.rel_tol}, {"abs_coef", args.abs_coef}, {"z_max", args.z_max}}}};
}

void write_moments_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "order,exact_prediction,mc_mean,mc_se,z_score\n";
    for (const ComparisonRow& row : rows) {
        out << row.order << ',' << rational_str(row.exact) << ',' << fmt_double(row.mc_mean)
            << ',' << fmt_double(row.mc_se) << ',' << fmt_double(row.z) << '\n';
    }
}

double semicircle_reference_density(double variance, double x) {
    const double radius = 2.0 * std::sqrt(variance);
    if (std::abs(x) > radius) {
        return 0.0;
    }
    return 2.0 / (std::numbers::pi * radius * radius) *
           std::sqrt(radius * radius - x * x);
}

void write_density_csv(std::ostream& out, const SimulateArgs& args, const Histogram& hist) {
    // reference semicircle matches the ensemble's limiting variance d*mu_W(2)
    const double ref_variance =
        args.degree * to_double(weight_moments(WeightSpec::parse(args.weights), 2));
    out << "bin_center,empirical_density,kesten_density,semicircle_ref\n";
    for (std::size_t b = 0; b < hist.centers.size(); ++b) {
        out << fmt_double(hist.centers[b]) << ',' << fmt_double(hist.density[b]) << ','
            << fmt_double(kesten_density(args.degree, hist.centers[b])) << ','
            << fmt_double(semicircle_reference_density(ref_variance, hist.centers[b]))
            << '\n';
    }
}

Histogram simulate_histogram(const SimulateArgs& args, const MonteCarloResult& mc) {
    const WeightSpec spec = WeightSpec::parse(args.weights);
    double lo, hi;
    if (spec.kind == WeightSpec::Kind::ConstantOne) {
        const double radius = kesten_radius(args.degree) * 1.05;
        lo = -radius;
        hi = radius;
    } else {
        // data-driven range, trimmed of the Perron-type outliers by ignoring
        // nothing: weighted spectra have no deterministic top eigenvalue
        lo = mc.eigenvalues.front();
        hi = mc.eigenvalues.back();
    }
    return empirical_density(mc.eigenvalues, args.bins, lo, hi);
}

int run_simulate(const SimulateArgs& args) {
    if (!args.seed_given) {
        throw std::invalid_argument("simulate requires an explicit --seed for reproducibility");
    }
    if (args.trials < 1) {
        throw std::invalid_argument("need --trials >= 1");
    }
    MonteCarloOptions options;
    options.collect_eigenvalues = args.density;
    options.threads = args.threads;
    const MonteCarloResult mc =
        monte_carlo_moments(args.n_vertices, args.degree, WeightSpec::parse(args.weights),
                            args.trials, args.max_order, args.seed, options);
    const auto rows = build_comparison(args, mc);

    const std::filesystem::path dir(args.output);
    std::filesystem::create_directories(dir);

    std::ofstream moments_csv(dir / "moments.csv");
    write_moments_csv(moments_csv, rows);

    json manifest = manifest_json(args, "simulate");
    manifest["outputs"] = {{"moments_csv", (dir / "moments.csv").string()}};
    if (args.density) {
        const Histogram hist = simulate_histogram(args, mc);
        std::ofstream density_csv(dir / "density.csv");
        write_density_csv(density_csv, args, hist);
        manifest["outputs"]["density_csv"] = (dir / "density.csv").string();
        manifest["histogram"] = {{"bins", args.bins}, {"lo", hist.lo}, {"hi", hist.hi},
                                 {"in_range", hist.total_in_range}, {"total", hist.total}};
    }
    std::ofstream manifest_out(dir / "manifest.json");
    manifest_out << manifest.dump(2) << '\n';

    std::cout << "wrote " << (dir / "moments.csv").string();
    if (args.density) {
        std::cout << " and " << (dir / "density.csv").string();
    }
    std::cout << " (manifest.json records the full configuration)\n";
    return kExitOk;
}

int run_compare(const SimulateArgs& args) {
    if (!args.seed_given) {
        throw std::invalid_argument("compare requires an explicit --seed for reproducibility");
    }
    if (args.trials < 1) {
        throw std::invalid_argument("need --trials >= 1");
    }
    MonteCarloOptions options;
    options.threads = args.threads;
    const MonteCarloResult mc =
        monte_carlo_moments(args.n_vertices, args.degree, WeightSpec::parse(args.weights),
                            args.trials, args.max_order, args.seed, options);
    const auto rows = build_comparison(args, mc);

    std::optional<std::ofstream> file;
    std::ostream& out = open_output(file, args.output == "." ? "" : args.output);
    out << "order,exact,mc_mean,mc_se,z,tolerance,pass\n";
    bool all_pass = true;
    for (const ComparisonRow& row : rows) {
        out << row.order << ',' << rational_str(row.exact) << ',' << fmt_double(row.mc_mean)
            << ',' << fmt_double(row.mc_se) << ',' << fmt_double(row.z) << ','
            << fmt_double(row.tolerance) << ',' << (row.pass ? "pass" : "FAIL") << '\n';
        all_pass = all_pass && row.pass;
    }
    std::cout << (all_pass ? "all orders within tolerance\n"
                           : "TOLERANCE GATE FAILED for at least one order\n");
    return all_pass ? kExitOk : kExitGateFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo spectral moments of weighted random regular graphs"};
    app.require_subcommand(1);
    app.set_config("--config");

    CappsArgs capps;
    auto* capps_cmd = app.add_subcommand("capps", "enumerate closed acyclic path patterns");
    capps_cmd->add_option("--length", capps.length, "pattern length (even; odd yields none)")
        ->required();
    capps_cmd->add_option("--signature", capps.signature_filter,
                          "only patterns with this signature, e.g. 4,2");
    capps_cmd->add_flag("--counts-only", capps.counts_only, "suppress per-pattern rows");
    capps_cmd->add_option("--max-length", capps.max_length, "enumeration cap override")
        ->envname("REGSPEC_MAX_LENGTH");
    capps_cmd->add_option("--format", capps.format, "json (lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("REGSPEC_FORMAT");
    capps_cmd->add_option("--output,-o", capps.output, "row output file (default stdout)");

    MomentsArgs moments;
    auto* moments_cmd = app.add_subcommand("moments", "exact moment computations");
    moments_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-length", moments.max_length, "enumeration cap override")
            ->envname("REGSPEC_MAX_LENGTH");
        cmd->add_option("--format", moments.format, "csv or json")
            ->check(CLI::IsMember({"json", "csv"}))
            ->envname("REGSPEC_FORMAT");
        cmd->add_option("--output,-o", moments.output, "output file (default stdout)");
    };
    auto* expand_cmd = moments_cmd->add_subcommand("expand", "mu_{d,W}(k) at integer d");
    expand_cmd->add_option("--order", moments.order)->required();
    expand_cmd->add_option("--d", moments.d)->required();
    expand_cmd->add_option("--weights", moments.weights, "weight spec (default constant)");
    add_common(expand_cmd);
    auto* symbolic_cmd =
        moments_cmd->add_subcommand("symbolic", "per-signature expansion with d symbolic");
    symbolic_cmd->add_option("--order", moments.order)->required();
    auto* symbolic_weights = symbolic_cmd->add_option("--weights", moments.weights,
                                                      "also collapse with these weight moments");
    add_common(symbolic_cmd);
    auto* eigen_cmd = moments_cmd->add_subcommand("eigen", "eigendistribution moments");
    eigen_cmd->add_option("--d", moments.d)->required();
    eigen_cmd->add_option("--max", moments.max_order, "largest (even) order");
    add_common(eigen_cmd);
    auto* kesten_cmd = moments_cmd->add_subcommand("kesten", "unweighted (Kesten) moments");
    kesten_cmd->add_option("--d", moments.d)->required();
    kesten_cmd->add_option("--max", moments.max_order, "largest (even) order");
    add_common(kesten_cmd);
    auto* deviation_cmd =
        moments_cmd->add_subcommand("deviation", "d^2-scaled deviation from the semicircle");
    deviation_cmd->add_option("--d", moments.d_range, "d range, e.g. 3:10");
    deviation_cmd->add_option("--orders,--order", moments.orders, "comma list, e.g. 8,10,12");
    add_common(deviation_cmd);

    SimulateArgs sim;
    auto add_sim_options = [&](CLI::App* cmd, bool with_density) {
        cmd->add_option("--N", sim.n_vertices, "vertex count")->required();
        cmd->add_option("--d", sim.degree, "regularity degree")->required();
        cmd->add_option("--weights", sim.weights, "weight spec (default constant)");
        cmd->add_option("--trials", sim.trials, "number of sampled graphs");
        cmd->add_option("--max-order", sim.max_order, "largest trace moment order");
        cmd->add_option("--seed", sim.seed, "master seed (required)")
            ->envname("REGSPEC_SEED")
            ->each([&](const std::string&) { sim.seed_given = true; });
        cmd->add_option("--threads", sim.threads, "worker threads across trials")
            ->envname("REGSPEC_THREADS");
        cmd->add_option("--max-length", sim.max_length, "enumeration cap override")
            ->envname("REGSPEC_MAX_LENGTH");
        cmd->add_option("--rel-tol", sim.rel_tol, "relative tolerance component");
        cmd->add_option("--abs-coef", sim.abs_coef, "finite-size allowance coefficient");
        cmd->add_option("--z-max", sim.z_max, "statistical tolerance in standard errors");
        if (with_density) {
            cmd->add_option("--bins", sim.bins, "histogram bins");
            cmd->add_flag("!--no-density", sim.density, "skip eigenvalues and density output");
            cmd->add_option("--output,-o", sim.output, "output directory (default .)");
        } else {
            cmd->add_option("--output,-o", sim.output, "output file (default stdout)");
        }
    };
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo ensemble run with CSV outputs");
    add_sim_options(simulate_cmd, true);
    auto* compare_cmd =
        app.add_subcommand("compare", "Monte Carlo vs exact predictions with a pass/fail gate");
    add_sim_options(compare_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (capps_cmd->parsed()) {
            return run_capps(capps);
        }
        if (moments_cmd->parsed()) {
            if (expand_cmd->parsed()) {
                return run_moments_expand(moments);
            }
            if (symbolic_cmd->parsed()) {
                return run_moments_symbolic(moments, symbolic_weights->count() > 0);
            }
            if (eigen_cmd->parsed()) {
                return run_moments_eigen(moments);
            }
            if (kesten_cmd->parsed()) {
                return run_moments_kesten(moments);
            }
            if (deviation_cmd->parsed()) {
                return run_moments_deviation(moments);
            }
        }
        if (simulate_cmd->parsed()) {
            return run_simulate(sim);
        }
        if (compare_cmd->parsed()) {
            return run_compare(sim);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
