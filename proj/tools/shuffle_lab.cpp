#include "shuffle_lab/bounds.hpp"
#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/lifting.hpp"
#include "shuffle_lab/parallel.hpp"
#include "shuffle_lab/simulation.hpp"
#include "shuffle_lab/spectra.hpp"
#include "shuffle_lab/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace shuffle_lab;

namespace {

constexpr int exit_verification = 1;
constexpr int exit_validation = 2;

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ShuffleArgs {
    std::string json;
    std::string kind;
    int n = 0;
    std::optional<double> alpha;
};

void add_shuffle_options(CLI::App& cmd, ShuffleArgs& args) {
    cmd.add_option("--shuffle", args.json, "Shuffle as JSON text or a path to a JSON file");
    cmd.add_option("--kind", args.kind, "Shuffle kind, e.g. OST, RT, B_RT");
    cmd.add_option("--n", args.n, "Deck size");
    cmd.add_option("--alpha", args.alpha, "Power-law exponent for the biased kinds");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ShuffleSpec make_spec(const ShuffleArgs& args) {
    if (!args.json.empty()) {
        if (!args.kind.empty() || args.n != 0 || args.alpha) throw ValidationError("give --shuffle or --kind/--n/--alpha, not both");
        const auto start = args.json.find_first_not_of(" \t\n");
        return spec_from_json(start != std::string::npos && args.json[start] == '{' ? args.json : read_file(args.json));
    }
    if (args.kind.empty() || args.n == 0) throw ValidationError("a shuffle needs --shuffle or both --kind and --n");
    nlohmann::json j{{"kind", args.kind}, {"n", args.n}};
    if (args.alpha) j["alpha"] = *args.alpha;
    return spec_from_json(j.dump());
}

std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> grid;
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<int> parts;
            std::stringstream in(text);
            for (std::string item; std::getline(in, item, ':');) parts.push_back(std::stoi(item));
            if (parts.size() < 2 || parts.size() > 3) throw ValidationError("grid range must be start:stop or start:stop:step");
            const int step = parts.size() == 3 ? parts[2] : 1;
            if (step <= 0) throw ValidationError("grid step must be positive");
            for (int t = parts[0]; t <= parts[1]; t += step) grid.push_back(t);
        } else {
            std::stringstream in(text);
            for (std::string item; std::getline(in, item, ',');) grid.push_back(std::stoi(item));
        }
    } catch (const std::logic_error&) {
        throw ValidationError("bad time grid: " + text);
    }
    for (int t : grid)
        if (t < 0) throw ValidationError("grid times must be non-negative");
    if (grid.empty()) throw ValidationError("empty time grid");
    return grid;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    try {
        for (std::string item; std::getline(in, item, ',');)
            if (item.find_first_not_of(" ") != std::string::npos) parts.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
        throw ValidationError("bad partition: " + text);
    }
    for (int p : parts)
        if (p <= 0) throw ValidationError("partition parts must be positive: " + text);
    if (!Partition::is_partition(parts)) throw ValidationError("parts must be non-increasing: " + text);
    return Partition(parts);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + out_path);
    out << text;
}

std::string report_text(const std::vector<CheckReport>& reports) {
    std::string s;
    for (const auto& r : reports) {
        s += (r.passed ? "PASS " : "FAIL ") + r.name + " (cases=" + std::to_string(r.cases) + ")";
        if (!r.passed) s += " witness: " + r.witness;
        s += '\n';
    }
    return s;
}

int run_eigs(const ShuffleSpec& spec, bool exact_only, const std::string& out) {
    if (exact_only && !spec.exact()) throw ValidationError("--exact needs rational weights");
    const auto catalog = build_catalog(spec);
    std::string csv = "index,value,exact,multiplicity\n";
    for (const auto& e : catalog.entries()) {
        csv += "\"" + index_to_string(e.index) + "\"," + to_decimal_string(e.value, 15) + "," +
               (e.exact_value ? to_fraction_string(*e.exact_value) : "") + "," + std::to_string(e.multiplicity) + "\n";
    }
    emit(csv, out);
    return 0;
}

int run_curve(const ShuffleSpec& spec, int t_max, const std::string& out) {
    if (t_max < 0) throw ValidationError("--t-max must be non-negative");
    std::string csv = "t,tv,sep,tv_exact,sep_exact\n";
    for (const auto& p : distance_curve(spec, t_max)) {
        csv += std::to_string(p.t) + "," + to_decimal_string(p.tv, 15) + "," + to_decimal_string(p.sep, 15) + "," +
               (p.exact_tv ? to_fraction_string(*p.exact_tv) : "") + "," + (p.exact_sep ? to_fraction_string(*p.exact_sep) : "") +
               "\n";
    }
    emit(csv, out);
    return 0;
}

int run_bounds(const ShuffleSpec& spec, const std::string& grid, int top_fraction, int threads, const std::string& out) {
    BoundOptions options;
    options.top_fraction = top_fraction;
    options.threads = threads;
    emit(bound_csv(bound_table(spec, parse_grid(grid), options)), out);
    return 0;
}

int run_verify(const std::string& suite, int n_max, int trials, std::uint64_t seed, int threads, const std::string& out) {
    if (n_max < 1) throw ValidationError("--n-max must be at least 1");
    std::vector<CheckReport> reports;
    if (suite == "oracle") reports = oracle_suite(n_max, threads);
    else if (suite == "lifting") reports = lifting_suite(n_max, threads);
    else if (suite == "ordering") reports = ordering_suite(n_max);
    else if (suite == "identities") reports = identity_suite(n_max, trials, seed);
    else throw ValidationError("unknown suite " + suite);
    emit(report_text(reports), out);
    return all_passed(reports) ? 0 : exit_verification;
}

int run_lift(const ShuffleSpec& spec, const std::string& shape, const std::string& out) {
    std::vector<LiftedVector> basis;
    if (spec.group() == GroupKind::hyperoctahedral) {
        const auto bar = shape.find('|');
        if (bar == std::string::npos) throw ValidationError("B_n shapes are written first|second, e.g. 2,1|1");
        basis = build_eigenbasis(BiPartition(parse_partition(shape.substr(0, bar)), parse_partition(shape.substr(bar + 1))), spec);
    } else {
        if (shape.find('|') != std::string::npos) throw ValidationError("S_n shapes have a single component");
        basis = build_eigenbasis(parse_partition(shape), spec);
    }
    std::string text;
    bool ok = true;
    for (const auto& lifted : basis) {
        const auto check = verify_eigenvector(lifted.vector, spec, lifted.eigenvalue);
        ok = ok && check.passed;
        text += "# tableau " + std::visit([](const auto& t) { return t.to_string(); }, lifted.tableau) + " eigenvalue " +
                to_fraction_string(lifted.eigenvalue) + (check.passed ? " verified" : " FAILED: " + check.witness) + "\n";
        text += lifted.vector.dump();
    }
    emit(text, out);
    return ok ? 0 : exit_verification;
}

template <class T>
T manifest_value(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(std::string("manifest field \"") + key + "\" has the wrong type");
    }
}

std::string tail_columns(const TailEstimate& tail) {
    return to_general_string(tail.probability) + "," + to_general_string(tail.sigma) + "," +
           to_general_string(tail.probability + 3 * tail.sigma);
}

std::string summary_columns(const std::vector<std::int64_t>& sample) {
    const auto s = summarize(sample);
    std::string out = to_general_string(s.mean) + "," + to_general_string(s.variance);
    for (const auto& [level, value] : s.quantiles) out += "," + to_general_string(value);
    return out;
}

int run_simulate(const std::string& manifest_path, int threads, const std::string& out) {
    nlohmann::json m;
    try {
        m = nlohmann::json::parse(read_file(manifest_path));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid manifest: ") + e.what());
    }
    if (!m.is_object() || !m.contains("experiment")) throw ValidationError("manifest needs an \"experiment\" field");
    const auto experiment = manifest_value<std::string>(m, "experiment", "");
    MonteCarloOptions options;
    options.seed = manifest_value<std::uint64_t>(m, "seed", 1);
    options.replicas = manifest_value<std::int64_t>(m, "replicas", 1000);
    options.threads = manifest_value<int>(m, "threads", threads);
    if (options.replicas < 1) throw ValidationError("replicas must be positive");
    const auto c_values = manifest_value<std::vector<double>>(m, "c_values", {0.5, 1.0, 2.0});
    const std::string stats_header = "mean,variance,q05,q25,q50,q75,q95";
    std::string csv;

    if (experiment == "sst") {
        if (!m.contains("shuffle")) throw ValidationError("sst experiments need a \"shuffle\" object");
        const auto spec = spec_from_json(m.at("shuffle").dump());
        const auto sample = simulate_sst(spec, options);
        const double n = spec.n();
        const auto alpha = spec.weight() ? spec.weight()->exponent() : std::optional<double>{};
        const double scale = alpha ? biased_time_scale(spec.n(), *alpha) : n;
        csv = "c,threshold,tail_probability,sigma,tail_upper_3sigma,reference_bound," + stats_header + "\n";
        const std::string stats = summary_columns(sample);
        for (double c : c_values) {
            const double threshold = scale * (std::log(n) + c);
            csv += to_general_string(c) + "," + to_general_string(threshold) + "," + tail_columns(upper_tail(sample, threshold)) +
                   "," + to_general_string(std::exp(-c)) + "," + stats + "\n";
        }
    } else if (experiment == "coupon") {
        CouponParams params;
        params.n = manifest_value<int>(m, "n", 0);
        if (params.n < 2) throw ValidationError("coupon experiments need n >= 2");
        params.m = std::log(static_cast<double>(params.n));
        if (m.contains("m")) {
            const auto& value = m.at("m");
            if (value.is_number()) params.m = value.get<double>();
            else if (value != "log") throw ValidationError("manifest field \"m\" must be a number or \"log\"");
        }
        if (m.contains("alpha")) params.alpha = manifest_value<double>(m, "alpha", 0.0);
        const auto sample = coupon_hitting_times(params, options);
        const double n = params.n;
        const double scale = params.alpha ? biased_time_scale(params.n, *params.alpha) : n;
        csv = "c,threshold,lower_tail_probability,sigma,tail_upper_3sigma,reference_bound," + stats_header + "\n";
        const std::string stats = summary_columns(sample);
        for (double c : c_values) {
            const double threshold = scale * (std::log(n) - std::log(std::log(n)) - c);
            const std::string bound = !params.alpha && c > 2 ? to_general_string(M_PI * M_PI / (6 * (c - 2) * (c - 2))) : "";
            csv += to_general_string(c) + "," + to_general_string(threshold) + "," + tail_columns(lower_tail(sample, threshold)) +
                   "," + bound + "," + stats + "\n";
        }
    } else if (experiment == "feature") {
        if (!m.contains("shuffle")) throw ValidationError("feature experiments need a \"shuffle\" object");
        const auto spec = spec_from_json(m.at("shuffle").dump());
        const int top = manifest_value<int>(m, "top_fraction", 2);
        const auto grid = manifest_value<std::vector<int>>(m, "t_grid", {0});
        csv = "t,estimate,sigma,ci_lower,ci_upper\n";
        for (int t : grid) {
            if (t < 0) throw ValidationError("t_grid entries must be non-negative");
            const auto e = empirical_tv_feature(spec, t, top, options);
            csv += std::to_string(t) + "," + to_general_string(e.estimate) + "," + to_general_string(e.sigma) + "," +
                   to_general_string(e.lower) + "," + to_general_string(e.upper) + "\n";
        }
    } else {
        throw ValidationError("unknown experiment \"" + experiment + "\" (sst, coupon, feature)");
    }
    emit(csv, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transposition-shuffle laboratory"};
    app.require_subcommand(1);
    int threads = 0;
    std::string out;
    app.add_option("--threads", threads, "Worker cap (default: SHUFFLE_LAB_THREADS or all cores)");
    app.add_option("--out", out, "Write to this path instead of stdout");

    ShuffleArgs shuffle;
    bool exact = false;
    auto* eigs = app.add_subcommand("eigs", "Eigenvalue catalog as CSV");
    add_shuffle_options(*eigs, shuffle);
    eigs->add_flag("--exact", exact, "Require rational weights");

    int t_max = 20;
    auto* curve = app.add_subcommand("curve", "Exact TV and separation distance CSV");
    add_shuffle_options(*curve, shuffle);
    curve->add_option("--t-max", t_max, "Last time step");

    std::string grid = "0:20";
    int top_fraction = 2;
    auto* bounds = app.add_subcommand("bounds", "Upper and lower bound CSV");
    add_shuffle_options(*bounds, shuffle);
    bounds->add_option("--t-grid", grid, "Times as a,b,c or start:stop[:step]");
    bounds->add_option("--top-fraction", top_fraction, "m in the top ceil(n/m) window of the lower bound");

    std::string suite;
    int n_max = 5;
    int trials = 1000;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "oracle, lifting, ordering or identities")
        ->required()
        ->check(CLI::IsMember({"oracle", "lifting", "ordering", "identities"}));
    verify->add_option("--n-max", n_max, "Largest deck size");
    verify->add_option("--trials", trials, "Random vectors per n for the identities suite");
    verify->add_option("--seed", seed, "Seed for the identities suite");

    std::string shape;
    auto* lift = app.add_subcommand("lift", "Dump the lifted eigenvectors of one shape");
    add_shuffle_options(*lift, shuffle);
    lift->add_option("--shape", shape, "Partition such as 3,2, or first|second for B_n")->required();

    std::string manifest;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo experiment from a JSON manifest");
    simulate->add_option("--experiment", manifest, "Path to the manifest")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }
    if (threads < 0) {
        std::cerr << "error: --threads must be non-negative\n";
        return exit_validation;
    }
    if (threads == 0) threads = default_threads();

    try {
        if (eigs->parsed()) return run_eigs(make_spec(shuffle), exact, out);
        if (curve->parsed()) return run_curve(make_spec(shuffle), t_max, out);
        if (bounds->parsed()) return run_bounds(make_spec(shuffle), grid, top_fraction, threads, out);
        if (verify->parsed()) return run_verify(suite, n_max, trials, seed, threads, out);
        if (lift->parsed()) return run_lift(make_spec(shuffle), shape, out);
        if (simulate->parsed()) return run_simulate(manifest, threads, out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verification;
    }
    return exit_validation;
}
