/*
* Copyright (C) 2026 netepi contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "netepi/cli.h"
#include "netepi/equilibria.h"
#include "netepi/format.h"
#include "netepi/graph.h"
#include "netepi/io.h"
#include "netepi/network_dynamics.h"
#include "netepi/scalar_models.h"
#include "netepi/threshold.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace netepi::cli
{

namespace
{

std::shared_ptr<spdlog::logger> logger()
{
    static const auto instance = [] {
        auto lg = std::make_shared<spdlog::logger>("netepi", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        lg->set_pattern("[netepi %l] %v");
        return lg;
    }();
    return instance;
}

// NETEPI_LOG=trace|debug|info|warn|error|off, default warn
void configure_logging()
{
    const char* env = std::getenv("NETEPI_LOG");
    logger()->set_level(env != nullptr ? spdlog::level::from_str(env) : spdlog::level::warn);
}

Error bad_config(const std::string& message)
{
    return Error(ErrorCode::InvalidArgument, message);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw bad_config("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double single(const std::vector<double>& values, const char* name)
{
    if (values.size() != 1) {
        throw bad_config(std::string("--") + name + " needs exactly one value for this command");
    }
    return values.front();
}

double required(const std::optional<double>& value, const char* name)
{
    if (!value) {
        throw bad_config(std::string("--") + name + " is required for this command");
    }
    return *value;
}

ModelKind model_of(const RunConfig& c)
{
    if (!c.model) {
        throw bad_config("--model is required for this command");
    }
    return parse_model_kind(*c.model);
}

void require_format(const RunConfig& c, std::string_view expected)
{
    if (c.format && *c.format != expected) {
        throw bad_config("this command only emits " + std::string(expected));
    }
}

struct GraphLoadFailure {
    Error error;
};

Graph load(const RunConfig& c)
{
    if (!c.graph_path) {
        throw bad_config("--graph is required for this command");
    }
    try {
        return load_graph_file(*c.graph_path);
    }
    catch (const Error& e) {
        throw GraphLoadFailure{e};
    }
}

bool has_initial_condition(const RunConfig& c)
{
    return c.x0_uniform || c.seed_node || c.x0_file;
}

Eigen::VectorXd infected_start(const RunConfig& c, Eigen::Index n)
{
    const int given = int(c.x0_uniform.has_value()) + int(c.seed_node.has_value()) + int(c.x0_file.has_value());
    if (given != 1) {
        throw bad_config("give exactly one of --x0-uniform, --seed-node, --x0-file");
    }
    if (c.x0_uniform) {
        if (!(*c.x0_uniform >= 0.0 && *c.x0_uniform <= 1.0)) {
            throw bad_config("--x0-uniform must lie in [0, 1]");
        }
        return Eigen::VectorXd::Constant(n, *c.x0_uniform);
    }
    if (c.seed_node) {
        if (*c.seed_node < 1 || *c.seed_node > n) {
            throw bad_config("--seed-node must be between 1 and " + std::to_string(n));
        }
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        x[*c.seed_node - 1] = 1.0;
        return x;
    }
    Eigen::VectorXd x = parse_vector(read_file(*c.x0_file));
    if (x.size() != n) {
        throw bad_config("--x0-file has " + std::to_string(x.size()) + " entries, graph has " + std::to_string(n));
    }
    return x;
}

Eigen::VectorXd recovered_start(const RunConfig& c, Eigen::Index n)
{
    if (!c.r0_file) {
        return Eigen::VectorXd::Zero(n);
    }
    Eigen::VectorXd r = parse_vector(read_file(*c.r0_file));
    if (r.size() != n) {
        throw bad_config("--r0-file has " + std::to_string(r.size()) + " entries, graph has " + std::to_string(n));
    }
    return r;
}

EpidemicState initial_state(const RunConfig& c, ModelKind kind, Eigen::Index n)
{
    const Eigen::VectorXd x = infected_start(c, n);
    if (kind != ModelKind::SIR) {
        if (c.r0_file) {
            throw bad_config("--r0-file only applies to SIR");
        }
        return EpidemicState::from_infected(x);
    }
    auto state = EpidemicState::from_infected_recovered(x, recovered_start(c, n));
    if (state.s.minCoeff() < -1e-12) {
        throw bad_config("x(0) + r(0) exceeds 1 at some node");
    }
    state.s = state.s.cwiseMax(0.0);
    return state;
}

IntegrateOptions integrate_options(const RunConfig& c)
{
    IntegrateOptions opts;
    if (c.dt) {
        if (!(*c.dt > 0.0)) {
            throw bad_config("--dt must be positive");
        }
        opts.dt = *c.dt;
    }
    opts.record_stride        = c.stride.value_or(1);
    opts.stop_at_steady_state = c.steady.value_or(false);
    return opts;
}

FixedPointOptions fixed_point_options(const RunConfig& c)
{
    FixedPointOptions opts;
    if (c.tol) {
        if (!(*c.tol > 0.0)) {
            throw bad_config("--tol must be positive");
        }
        opts.tol = *c.tol;
    }
    return opts;
}

std::string run_simulate(const RunConfig& c)
{
    require_format(c, "csv");
    const auto kind = model_of(c);
    const Graph g   = load(c);
    ModelParams params{kind, single(c.beta, "beta"), kind == ModelKind::SI ? 1.0 : single(c.gamma, "gamma")};
    const auto init = initial_state(c, kind, g.size());
    const double t_end = required(c.t_end, "t-end");
    logger()->info("simulating {} on n = {} until t = {}", to_string(kind), g.size(), t_end);
    const auto traj = integrate(init, params, g, t_end, integrate_options(c));
    logger()->info("recorded {} states, steady state reached: {}", traj.times.size(), traj.reached_steady_state);
    return c.means.value_or(false) ? trajectory_means_csv(traj) : trajectory_csv(traj);
}

std::string run_endemic(const RunConfig& c)
{
    require_format(c, "json");
    const Graph g = load(c);
    const auto bracket = parse_bracket(c.bracket.value_or("lower"));
    const auto result  = sis_endemic(g, single(c.beta, "beta"), single(c.gamma, "gamma"), bracket,
                                     fixed_point_options(c));
    for (const auto& w : result.warnings) {
        logger()->warn("{}", w);
    }
    return to_json(result).dump(2) + "\n";
}

std::string run_asymptotic(const RunConfig& c)
{
    require_format(c, "json");
    const Graph g     = load(c);
    const auto n      = g.size();
    const auto state  = initial_state(c, ModelKind::SIR, n);
    const SirInitial init{state.s, state.x, state.r};
    const double beta  = single(c.beta, "beta");
    const double gamma = single(c.gamma, "gamma");
    const std::string start = c.start.value_or("zero");
    if (start == "both") {
        return to_json(sir_asymptotic_bracketed(g, beta, gamma, init, fixed_point_options(c))).dump(2) + "\n";
    }
    const auto which = parse_sir_start(start);
    if (which == SirStart::Custom) {
        throw bad_config("--start must be zero, upper or both");
    }
    return to_json(sir_asymptotic(g, beta, gamma, init, which, fixed_point_options(c))).dump(2) + "\n";
}

struct SweepItem {
    double beta;
    double gamma;
};

std::string run_threshold(const RunConfig& c, std::ostream& err)
{
    require_format(c, "json");
    if (c.model && parse_model_kind(*c.model) != ModelKind::SIR && (has_initial_condition(c) || c.trajectory_path)) {
        throw bad_config("crossing times are defined for the SIR model only");
    }
    if (c.beta.empty() || c.gamma.empty()) {
        throw bad_config("--beta and --gamma are required for this command");
    }
    const Graph g = load(c);

    std::vector<SweepItem> items;
    for (double b : c.beta) {
        for (double gm : c.gamma) {
            items.push_back({b, gm});
        }
    }
    if (c.series_out && items.size() != 1) {
        throw bad_config("--series-out needs a single (beta, gamma) pair");
    }

    std::optional<Trajectory> supplied;
    if (c.trajectory_path) {
        supplied = parse_trajectory_csv(read_file(*c.trajectory_path), {ModelKind::SIR, items[0].beta, items[0].gamma});
        if (supplied->states.front().size() != g.size()) {
            throw bad_config("trajectory does not match the graph size");
        }
    }
    std::optional<EpidemicState> init;
    if (!supplied && has_initial_condition(c)) {
        init = initial_state(c, ModelKind::SIR, g.size());
        required(c.t_end, "t-end");
    }
    const auto opts = integrate_options(c);

    std::vector<nlohmann::json> docs(items.size());
    std::vector<std::string> series_text(items.size());
    std::vector<std::exception_ptr> failures(items.size());
    auto evaluate = [&](size_t i) {
        const auto [beta, gamma] = items[i];
        auto report              = reproduction_number(g, beta, gamma);
        std::vector<ReproductionSample> series;
        if (supplied) {
            series = effective_r_series(*supplied, g, beta, gamma);
        }
        else if (init) {
            const auto traj = integrate(*init, {ModelKind::SIR, beta, gamma}, g, *c.t_end, opts);
            series          = effective_r_series(traj, g, beta, gamma);
        }
        if (!series.empty()) {
            report.crossing_time = time_to_subthreshold(series);
            series_text[i]       = r_series_csv(series);
        }
        docs[i] = to_json(report);
        if (items.size() > 1) {
            docs[i]["beta"]  = beta;
            docs[i]["gamma"] = gamma;
        }
    };

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < items.size(); i = next++) {
            try {
                evaluate(i);
            }
            catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(c.jobs, static_cast<int>(items.size())));
    if (jobs == 1) {
        worker();
    }
    else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    if (c.series_out) {
        std::ofstream file(*c.series_out);
        if (!file) {
            throw bad_config("cannot write '" + *c.series_out + "'");
        }
        file << series_text[0];
        if (series_text[0].empty()) {
            err << "warning: no trajectory given, R(t) series is empty\n";
        }
    }
    if (items.size() == 1) {
        return docs[0].dump(2) + "\n";
    }
    return nlohmann::json(docs).dump(2) + "\n";
}

std::string run_scalar(const RunConfig& c)
{
    const auto kind    = model_of(c);
    const double beta  = single(c.beta, "beta");
    const std::string format = c.format.value_or("csv");
    if (format != "csv" && format != "json") {
        throw bad_config("--format must be csv or json");
    }

    if (kind == ModelKind::SIR) {
        const double gamma = single(c.gamma, "gamma");
        const double s0    = required(c.s0, "s0");
        const double r0    = c.r0.value_or(0.0);
        const double rinf  = sir_rinf(s0, r0, beta, gamma);
        const double x0    = 1.0 - s0 - r0;
        std::vector<std::pair<std::string, double>> rows = {
            {"r_inf", rinf},
            {"s_inf", 1.0 - rinf},
            {"R0", beta / gamma},
        };
        if (beta * s0 / gamma >= 1.0 && x0 > 0.0) {
            rows.emplace_back("x_max", sir_xmax(s0, x0, beta, gamma));
        }
        if (format == "json") {
            nlohmann::json doc;
            for (const auto& [k, v] : rows) {
                doc[k] = v;
            }
            return doc.dump(2) + "\n";
        }
        std::string out = "quantity,value\n";
        for (const auto& [k, v] : rows) {
            out += k + "," + format_shortest(v) + "\n";
        }
        return out;
    }

    const double x0 = c.x0 ? *c.x0 : required(c.x0_uniform, "x0");
    const double gamma = kind == ModelKind::SIS ? single(c.gamma, "gamma") : 1.0;
    const double t_end = c.t_end.value_or(20.0);
    const double dt    = c.dt.value_or(0.1);
    if (!(dt > 0.0) || !(t_end >= 0.0)) {
        throw bad_config("--dt must be positive and --t-end nonnegative");
    }
    const auto steps = static_cast<long long>(std::floor(t_end / dt + 1e-9));
    std::vector<double> ts;
    std::vector<double> xs;
    for (long long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        ts.push_back(t);
        xs.push_back(kind == ModelKind::SI ? si_closed_form(x0, beta, t) : sis_closed_form(x0, beta, gamma, t));
    }
    if (format == "json") {
        return nlohmann::json{{"t", ts}, {"x", xs}}.dump(2) + "\n";
    }
    std::string out = "t,x\n";
    for (size_t k = 0; k < ts.size(); ++k) {
        out += format_shortest(ts[k]) + "," + format_shortest(xs[k]) + "\n";
    }
    return out;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out)
{
    if (!c.out || *c.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) {
        throw bad_config("cannot write '" + *c.out + "'");
    }
    file << text;
}

} // namespace

int exit_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyInput:
    case ErrorCode::MalformedLine:
    case ErrorCode::NonpositiveWeight:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::ReducibleMatrix:
        return ExitGraphError;
    case ErrorCode::BelowThreshold:
        return ExitBelowThreshold;
    case ErrorCode::NonConvergence:
    case ErrorCode::InvariantViolation:
    case ErrorCode::NotANumber:
        return ExitNonConvergence;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidArgument:
        return ExitBadConfig;
    }
    return ExitBadConfig;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    configure_logging();
    try {
        std::string text;
        switch (config.command) {
        case Command::Simulate:
            text = run_simulate(config);
            break;
        case Command::Endemic:
            text = run_endemic(config);
            break;
        case Command::Asymptotic:
            text = run_asymptotic(config);
            break;
        case Command::Threshold:
            text = run_threshold(config, err);
            break;
        case Command::Scalar:
            text = run_scalar(config);
            break;
        }
        emit(config, text, out);
        return ExitOk;
    }
    catch (const GraphLoadFailure& f) {
        err << "graph error: " << f.error.what() << "\n";
        return ExitGraphError;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_status(e.code());
    }
}

namespace
{

std::string normalize_key(std::string key)
{
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

// Fills config from a JSON object whose keys are flag names (dashes or underscores).
void apply_json(const nlohmann::json& doc, RunConfig& c)
{
    if (!doc.is_object()) {
        throw bad_config("config file must hold a JSON object");
    }
    auto numbers = [](const nlohmann::json& v) {
        return v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
    };
    for (const auto& [raw_key, v] : doc.items()) {
        const auto key = normalize_key(raw_key);
        try {
            if (key == "command") {
                continue; // the subcommand on the command line decides
            }
            else if (key == "graph") c.graph_path = v.get<std::string>();
            else if (key == "model") c.model = v.get<std::string>();
            else if (key == "beta") c.beta = numbers(v);
            else if (key == "gamma") c.gamma = numbers(v);
            else if (key == "x0_uniform") c.x0_uniform = v.get<double>();
            else if (key == "seed_node") c.seed_node = v.get<long>();
            else if (key == "x0_file") c.x0_file = v.get<std::string>();
            else if (key == "r0_file") c.r0_file = v.get<std::string>();
            else if (key == "s0") c.s0 = v.get<double>();
            else if (key == "r0") c.r0 = v.get<double>();
            else if (key == "x0") c.x0 = v.get<double>();
            else if (key == "t_end") c.t_end = v.get<double>();
            else if (key == "dt") c.dt = v.get<double>();
            else if (key == "tol") c.tol = v.get<double>();
            else if (key == "bracket") c.bracket = v.get<std::string>();
            else if (key == "start") c.start = v.get<std::string>();
            else if (key == "out") c.out = v.get<std::string>();
            else if (key == "format") c.format = v.get<std::string>();
            else if (key == "stride") c.stride = v.get<long>();
            else if (key == "steady") c.steady = v.get<bool>();
            else if (key == "means") c.means = v.get<bool>();
            else if (key == "trajectory") c.trajectory_path = v.get<std::string>();
            else if (key == "series_out") c.series_out = v.get<std::string>();
            else if (key == "jobs") c.jobs = v.get<int>();
            else throw bad_config("unknown config key '" + raw_key + "'");
        }
        catch (const nlohmann::json::exception&) {
            throw bad_config("config key '" + raw_key + "' has the wrong type");
        }
    }
}

template <class T>
void override_with(std::optional<T>& target, const std::optional<T>& flag)
{
    if (flag) {
        target = flag;
    }
}

} // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Deterministic SI/SIS/SIR epidemic models on weighted contact networks"};
    app.require_subcommand(1);

    RunConfig flags;
    std::optional<std::string> config_file;
    bool steady = false;
    bool means  = false;
    std::optional<int> jobs;

    auto add_graph = [&](CLI::App* s) {
        s->add_option("--graph", flags.graph_path, "edge-list or JSON matrix file");
    };
    auto add_rates = [&](CLI::App* s) {
        s->add_option("--beta", flags.beta, "infection rate")->expected(1, -1);
        s->add_option("--gamma", flags.gamma, "recovery rate")->expected(1, -1);
    };
    auto add_initial = [&](CLI::App* s) {
        s->add_option("--x0-uniform", flags.x0_uniform, "same infected fraction at every node");
        s->add_option("--seed-node", flags.seed_node, "fully infect one node (1-based)");
        s->add_option("--x0-file", flags.x0_file, "infected fractions, one per node");
        s->add_option("--r0-file", flags.r0_file, "recovered fractions, one per node (SIR)");
    };
    auto add_common = [&](CLI::App* s) {
        s->add_option("--config", config_file, "JSON config file; flags override its values");
        s->add_option("--out", flags.out, "output file (default: standard output)");
        s->add_option("--format", flags.format, "csv or json");
        s->add_option("--jobs", jobs, "worker threads for parameter sweeps");
    };

    auto* simulate = app.add_subcommand("simulate", "integrate a network model and emit the trajectory CSV");
    add_graph(simulate);
    simulate->add_option("--model", flags.model, "SI, SIS or SIR");
    add_rates(simulate);
    add_initial(simulate);
    simulate->add_option("--t-end", flags.t_end, "final time");
    simulate->add_option("--dt", flags.dt, "RK4 step (default 1e-3 min(1/beta, 1/gamma))");
    simulate->add_option("--stride", flags.stride, "record every k-th step");
    simulate->add_flag("--steady", steady, "stop early once ||dx/dt||_inf < 1e-10");
    simulate->add_flag("--means", means, "emit node-averaged t,mean_s,mean_x,mean_r instead");
    add_common(simulate);

    auto* endemic = app.add_subcommand("endemic", "SIS endemic state by monotone fixed-point iteration");
    add_graph(endemic);
    add_rates(endemic);
    endemic->add_option("--tol", flags.tol, "stopping tolerance (default 1e-10)");
    endemic->add_option("--bracket", flags.bracket, "lower or upper initialization");
    add_common(endemic);

    auto* asymptotic = app.add_subcommand("asymptotic", "asymptotic SIR state by fixed-point iteration");
    add_graph(asymptotic);
    add_rates(asymptotic);
    add_initial(asymptotic);
    asymptotic->add_option("--tol", flags.tol, "stopping tolerance (default 1e-10)");
    asymptotic->add_option("--start", flags.start, "zero, upper or both");
    add_common(asymptotic);

    auto* threshold = app.add_subcommand("threshold", "reproduction number, classification and R(t) crossing");
    add_graph(threshold);
    threshold->add_option("--model", flags.model, "SIR (only model with a crossing time)");
    add_rates(threshold);
    add_initial(threshold);
    threshold->add_option("--t-end", flags.t_end, "integration horizon for the crossing time");
    threshold->add_option("--dt", flags.dt, "RK4 step");
    threshold->add_option("--stride", flags.stride, "record every k-th step");
    threshold->add_option("--trajectory", flags.trajectory_path, "SIR trajectory CSV from simulate");
    threshold->add_option("--series-out", flags.series_out, "write the t,R_t series here");
    add_common(threshold);

    auto* scalar = app.add_subcommand("scalar", "closed-form scalar SI/SIS curves and SIR final size");
    scalar->add_option("--model", flags.model, "SI, SIS or SIR");
    add_rates(scalar);
    scalar->add_option("--x0", flags.x0, "initial infected fraction (SI/SIS)");
    scalar->add_option("--x0-uniform", flags.x0_uniform, "alias of --x0");
    scalar->add_option("--s0", flags.s0, "initial susceptible fraction (SIR)");
    scalar->add_option("--r0", flags.r0, "initial recovered fraction (SIR)");
    scalar->add_option("--t-end", flags.t_end, "grid end (default 20)");
    scalar->add_option("--dt", flags.dt, "grid spacing (default 0.1)");
    add_common(scalar);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitOk : ExitBadConfig;
    }

    RunConfig config;
    try {
        if (config_file) {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(read_file(*config_file));
            }
            catch (const nlohmann::json::parse_error& e) {
                throw bad_config(std::string("config file: ") + e.what());
            }
            apply_json(doc, config);
        }
    }
    catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitBadConfig;
    }

    const auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    config.command = name == "simulate"     ? Command::Simulate
                     : name == "endemic"    ? Command::Endemic
                     : name == "asymptotic" ? Command::Asymptotic
                     : name == "threshold"  ? Command::Threshold
                                            : Command::Scalar;

    override_with(config.graph_path, flags.graph_path);
    override_with(config.model, flags.model);
    if (!flags.beta.empty()) {
        config.beta = flags.beta;
    }
    if (!flags.gamma.empty()) {
        config.gamma = flags.gamma;
    }
    // one initial-condition source wins: flags replace the whole group from the file
    if (flags.x0_uniform || flags.seed_node || flags.x0_file) {
        config.x0_uniform = flags.x0_uniform;
        config.seed_node  = flags.seed_node;
        config.x0_file    = flags.x0_file;
    }
    override_with(config.r0_file, flags.r0_file);
    override_with(config.s0, flags.s0);
    override_with(config.r0, flags.r0);
    override_with(config.x0, flags.x0);
    override_with(config.t_end, flags.t_end);
    override_with(config.dt, flags.dt);
    override_with(config.tol, flags.tol);
    override_with(config.bracket, flags.bracket);
    override_with(config.start, flags.start);
    override_with(config.out, flags.out);
    override_with(config.format, flags.format);
    override_with(config.stride, flags.stride);
    override_with(config.trajectory_path, flags.trajectory_path);
    override_with(config.series_out, flags.series_out);
    if (steady) {
        config.steady = true;
    }
    if (means) {
        config.means = true;
    }
    if (jobs) {
        config.jobs = *jobs;
    }
    if (config.jobs < 1) {
        err << "error: --jobs must be >= 1\n";
        return ExitBadConfig;
    }
    return run(config, out, err);
}

} // namespace netepi::cli
