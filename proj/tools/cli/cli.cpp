#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli/commands.hpp"
#include "jcsim/errors.hpp"

#ifndef JCSIM_VERSION
#define JCSIM_VERSION "0.0.0"
#endif

namespace jcsim::cli {
namespace {

using nlohmann::json;

// Flags registered on one subcommand, keyed by their JSON config name. A key
// from the config file is applied only if its flag was not given, so flags win.
class Bindings {
public:
    explicit Bindings(CLI::App& app) : app_(app) {}

    template <typename T>
    CLI::Option* add(const std::string& key, T& field, const std::string& help) {
        CLI::Option* opt = app_.add_option("--" + key, field, help);
        if constexpr (!is_optional<T>::value) {
            opt->capture_default_str();
        }
        appliers_[key] = {opt, [&field](const json& value) { assign(field, value); }};
        return opt;
    }

    void apply(const json& config) const {
        if (!config.is_object()) {
            throw ArgumentError("config file must contain a JSON object");
        }
        for (const auto& [key, value] : config.items()) {
            const auto it = appliers_.find(key);
            if (it == appliers_.end()) {
                throw ArgumentError("unknown config key '" + key + "' for " + app_.get_name());
            }
            if (it->second.option->count() > 0) {
                continue;
            }
            try {
                it->second.assign(value);
            } catch (const json::exception&) {
                throw ArgumentError("config key '" + key + "' has the wrong type");
            }
        }
    }

private:
    template <typename T>
    struct is_optional : std::false_type {};
    template <typename T>
    struct is_optional<std::optional<T>> : std::true_type {};

    template <typename T>
    static void assign(T& field, const json& value) {
        if constexpr (is_optional<T>::value) {
            if (value.is_null()) {
                field.reset();
            } else {
                field = value.get<typename T::value_type>();
            }
        } else if constexpr (std::is_unsigned_v<T>) {
            // json would silently wrap a negative number.
            if (!value.is_number_unsigned()) {
                throw ArgumentError("expected a non-negative integer, got " + value.dump());
            }
            field = value.get<T>();
        } else {
            field = value.get<T>();
        }
    }

    struct Applier {
        CLI::Option* option;
        std::function<void(const json&)> assign;
    };

    CLI::App& app_;
    std::map<std::string, Applier> appliers_;
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot read config file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError("malformed config file " + path + ": " + e.what());
    }
}

unsigned parse_thread_count(const std::string& text, const std::string& source) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-' || value == 0 || value > 4096) {
        throw ArgumentError(source + " must be a positive integer, got '" + text + "'");
    }
    return static_cast<unsigned>(value);
}

unsigned env_threads() {
    const char* env = std::getenv("JCSIM_THREADS");
    if (env == nullptr) {
        return 0;
    }
    return parse_thread_count(env, "JCSIM_THREADS");
}

int report(std::ostream& err, const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.category() == ErrorCategory::invalid_argument ? kExitInvalidArgs : kExitNumeric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dispersive Jaynes-Cummings simulator", "jcsim"};
    app.set_version_flag("--version", JCSIM_VERSION);
    app.require_subcommand(1);

    EvolveConfig evolve;
    PeriodConfig period;
    CatgenConfig catgen;
    ValidateConfig validate;
    std::string config_path;
    std::string threads_text;

    auto* evolve_cmd = app.add_subcommand("evolve", "Sweep photon statistics of a two-Fock state over phi");
    Bindings evolve_keys(*evolve_cmd);
    evolve_keys.add("n1", evolve.n1, "Lower photon number");
    evolve_keys.add("n2", evolve.n2, "Upper photon number");
    evolve_keys.add("c1", evolve.c1, "Real weight of |n1> (default equal weights)");
    evolve_keys.add("c2", evolve.c2, "Real weight of |n2>");
    evolve_keys.add("phi-min", evolve.phi_min, "First phase lambda' t");
    evolve_keys.add("phi-max", evolve.phi_max, "Last phase (default: phi-min + one period)");
    evolve_keys.add("steps", evolve.steps, "Number of samples, endpoints included");
    evolve_keys.add("output", evolve.output, "CSV path (default stdout)");
    evolve_keys.add("plot", evolve.plot, "Optional SVG path");
    auto* evolve_threads = evolve_keys.add("threads", threads_text, "Worker threads (default: all cores)");

    auto* period_cmd = app.add_subcommand("period", "Print the statistics period of a pair");
    Bindings period_keys(*period_cmd);
    period_keys.add("n1", period.n1, "Lower photon number");
    period_keys.add("n2", period.n2, "Upper photon number");

    auto* catgen_cmd = app.add_subcommand("catgen", "Photon distribution of the N-atom cat-state scheme");
    Bindings catgen_keys(*catgen_cmd);
    catgen_keys.add("atoms", catgen.atoms, "Number of atoms N");
    catgen_keys.add("alpha", catgen.alpha, "Coherent amplitude (real, > 0)");
    catgen_keys.add("parity", catgen.parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    catgen_keys.add("cutoff", catgen.cutoff, "Initial photon cutoff (grown until converged)");
    catgen_keys.add("dominant", catgen.dominant, "How many dominant components to report");
    catgen_keys.add("output", catgen.output, "CSV path (default stdout)");
    catgen_keys.add("plot", catgen.plot, "Optional SVG bar chart path");

    auto* validate_cmd =
        app.add_subcommand("validate-dispersive", "Compare exact JC dynamics with the dispersive model");
    Bindings validate_keys(*validate_cmd);
    validate_keys.add("ratios", validate.ratios, "Detuning ratios delta/lambda, comma separated")
        ->delimiter(',');
    validate_keys.add("n-max", validate.n_max, "Largest photon number checked");
    validate_keys.add("phi-max", validate.phi_max, "End of the lambda' t window");
    validate_keys.add("lambda", validate.lambda, "Coupling constant");
    validate_keys.add("omega", validate.omega, "Field frequency");
    validate_keys.add("samples-per-cycle", validate.samples_per_cycle, "Time samples per Rabi cycle");
    validate_keys.add("output", validate.output, "CSV path (default stdout)");
    auto* validate_threads = validate_keys.add("threads", threads_text, "Worker threads (default: all cores)");

    for (auto* cmd : {evolve_cmd, period_cmd, catgen_cmd, validate_cmd}) {
        cmd->add_option("--config", config_path, "JSON file of parameters; flags take precedence");
    }

    // CLI11 wants argv order reversed when given a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? kExitOk : kExitInvalidArgs;
    }

    try {
        const Bindings* keys = nullptr;
        if (evolve_cmd->parsed()) {
            keys = &evolve_keys;
        } else if (period_cmd->parsed()) {
            keys = &period_keys;
        } else if (catgen_cmd->parsed()) {
            keys = &catgen_keys;
        } else {
            keys = &validate_keys;
        }
        const bool threads_flag = (evolve_threads->count() + validate_threads->count()) > 0;
        if (!config_path.empty()) {
            const json config = load_config(config_path);
            if (config.contains("threads") && config["threads"].is_number_unsigned() && !threads_flag) {
                threads_text = std::to_string(config["threads"].get<unsigned long>());
                json rest = config;
                rest.erase("threads");
                keys->apply(rest);
            } else {
                keys->apply(config);
            }
        }
        // Precedence: flag, then config file, then JCSIM_THREADS, then all cores.
        const unsigned threads = threads_text.empty() ? env_threads() : parse_thread_count(threads_text, "--threads");
        evolve.threads = threads;
        validate.threads = threads;

        if (evolve_cmd->parsed()) {
            return cmd_evolve(evolve, out, err);
        }
        if (period_cmd->parsed()) {
            return cmd_period(period, out, err);
        }
        if (catgen_cmd->parsed()) {
            return cmd_catgen(catgen, out, err);
        }
        return cmd_validate_dispersive(validate, out, err);
    } catch (const Error& e) {
        return report(err, e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace jcsim::cli
