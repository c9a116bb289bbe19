#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace jcsim::cli {

// Parameter records for each subcommand. Field names double as the keys of
// the JSON config file, with '_' spelled '-' (e.g. "phi-max").

struct EvolveConfig {
    unsigned n1 = 1;
    unsigned n2 = 3;
    // Real amplitudes; rescaled to unit norm. Both unset means equal weights.
    std::optional<double> c1;
    std::optional<double> c2;
    double phi_min = 0.0;
    // Defaults to phi_min plus one period.
    std::optional<double> phi_max;
    std::size_t steps = 1000;
    std::string output;
    std::string plot;
    unsigned threads = 0;
};

struct PeriodConfig {
    unsigned n1 = 1;
    unsigned n2 = 3;
};

struct CatgenConfig {
    unsigned atoms = 2;
    double alpha = 1.009;
    std::string parity = "odd";
    unsigned cutoff = 64;
    std::size_t dominant = 2;
    std::string output;
    std::string plot;
};

struct ValidateConfig {
    std::vector<double> ratios = {20.0, 50.0, 100.0};
    unsigned n_max = 5;
    // Upper end of the lambda' t window.
    double phi_max = 2.0 * std::numbers::pi;
    double lambda = 1.0;
    double omega = 1000.0;
    unsigned samples_per_cycle = 16;
    std::string output;
    unsigned threads = 0;
};

int cmd_evolve(const EvolveConfig& config, std::ostream& out, std::ostream& err);
int cmd_period(const PeriodConfig& config, std::ostream& out, std::ostream& err);
int cmd_catgen(const CatgenConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate_dispersive(const ValidateConfig& config, std::ostream& out, std::ostream& err);

/// "%.12g"-style rendering used for every number in CSV output.
std::string format_number(double value);

}  // namespace jcsim::cli
