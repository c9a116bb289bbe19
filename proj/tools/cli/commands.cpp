#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/svg_plot.hpp"
#include "jcsim/catgen.hpp"
#include "jcsim/errors.hpp"
#include "jcsim/jc_oracle.hpp"
#include "jcsim/parallel.hpp"
#include "jcsim/stats.hpp"

#ifndef JCSIM_VERSION
#define JCSIM_VERSION "0.0.0"
#endif

namespace jcsim::cli {

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";  // no "-0"
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ArgumentError("cannot open output file: " + path);
    }
    body(file);
    if (!file) {
        throw ArgumentError("failed writing output file: " + path);
    }
}

// Where human-readable reports go: stdout unless stdout carries the CSV.
std::ostream& report_stream(const std::string& csv_path, std::ostream& out, std::ostream& err) {
    return (csv_path.empty() || csv_path == "-") ? err : out;
}

std::string optional_field(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

TwoFockSpec evolve_spec(const EvolveConfig& config) {
    if (config.n1 >= config.n2) {
        throw ArgumentError("evolve requires n1 < n2");
    }
    if (config.c1.has_value() != config.c2.has_value()) {
        throw ArgumentError("give both --c1 and --c2, or neither");
    }
    if (!config.c1) {
        return TwoFockSpec::equal_weights(config.n1, config.n2);
    }
    const double norm = std::hypot(*config.c1, *config.c2);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ArgumentError("weights c1, c2 must be finite and not both zero");
    }
    return TwoFockSpec(config.n1, config.n2, *config.c1 / norm, *config.c2 / norm);
}

}  // namespace

int cmd_evolve(const EvolveConfig& config, std::ostream& out, std::ostream& err) {
    const TwoFockSpec spec = evolve_spec(config);
    const double phi_max = config.phi_max.value_or(config.phi_min + period(spec.n1(), spec.n2()));
    if (config.steps < 2) {
        throw ArgumentError("--steps must be at least 2");
    }
    const SweepResult result = sweep(spec, config.phi_min, phi_max, config.steps, config.threads);

    write_to(config.output, out, [&](std::ostream& os) {
        os << "# jcsim " << JCSIM_VERSION << " evolve n1=" << spec.n1() << " n2=" << spec.n2()
           << " c1=" << format_number(spec.c1().real()) << " c2=" << format_number(spec.c2().real())
           << " phi_min=" << format_number(config.phi_min) << " phi_max=" << format_number(phi_max)
           << " steps=" << config.steps << "\n";
        os << "phi,p_n1,p_n2,mean_n,var_n,mandel_q,degenerate\n";
        for (const auto& s : result.samples) {
            os << format_number(s.phi) << ',';
            if (s.degenerate) {
                os << ",,,,,1\n";
                continue;
            }
            os << format_number(s.p_n1) << ',' << format_number(s.p_n2) << ',' << format_number(s.mean_n)
               << ',' << format_number(s.var_n) << ',' << optional_field(s.mandel_q) << ",0\n";
        }
    });

    if (!config.plot.empty()) {
        Series p1{"P(n1=" + std::to_string(spec.n1()) + ")", "crimson", {}, {}};
        Series p2{"P(n2=" + std::to_string(spec.n2()) + ")", "navy", {}, {}};
        Series q{"Mandel Q", "darkgreen", {}, {}};
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        for (const auto& s : result.samples) {
            p1.x.push_back(s.phi);
            p2.x.push_back(s.phi);
            q.x.push_back(s.phi);
            p1.y.push_back(s.degenerate ? nan : s.p_n1);
            p2.y.push_back(s.degenerate ? nan : s.p_n2);
            q.y.push_back(s.mandel_q.value_or(nan));
        }
        write_to(config.plot, out, [&](std::ostream& os) {
            write_line_plot(os,
                            "n1=" + std::to_string(spec.n1()) + ", n2=" + std::to_string(spec.n2()),
                            "phi (rad)", {{"probability", {p1, p2}}, {"Q", {q}}});
        });
    }

    const bool all_degenerate = std::all_of(result.samples.begin(), result.samples.end(),
                                            [](const StatisticsSample& s) { return s.degenerate; });
    if (all_degenerate) {
        err << "error: every sample in the range is degenerate (ground detection impossible)\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int cmd_period(const PeriodConfig& config, std::ostream& out, std::ostream&) {
    const TwoFockSpec spec = TwoFockSpec::equal_weights(config.n1, config.n2);  // validates the pair
    const PiFraction p = period_fraction(spec.n1(), spec.n2());
    out << p.to_string() << " (" << format_number(p.radians()) << ")\n";
    return kExitOk;
}

int cmd_catgen(const CatgenConfig& config, std::ostream& out, std::ostream& err) {
    CatSpec spec;
    spec.atoms = config.atoms;
    spec.alpha = config.alpha;
    spec.cutoff = config.cutoff;
    if (config.parity == "even" || config.parity == "+") {
        spec.parity = Parity::even;
    } else if (config.parity == "odd" || config.parity == "-") {
        spec.parity = Parity::odd;
    } else {
        throw ArgumentError("--parity must be 'even' or 'odd'");
    }
    if (config.dominant < 1) {
        throw ArgumentError("--dominant must be at least 1");
    }
    spec.validate();
    const CatDistribution dist = cat_distribution(spec);

    write_to(config.output, out, [&](std::ostream& os) {
        os << "# jcsim " << JCSIM_VERSION << " catgen atoms=" << spec.atoms
           << " alpha=" << format_number(spec.alpha) << " parity=" << config.parity
           << " cutoff=" << spec.cutoff << " effective_cutoff=" << dist.spec.cutoff << "\n";
        os << "n,probability\n";
        for (PhotonNumber n = 0; n <= dist.spec.cutoff; ++n) {
            os << n << ',' << format_number(dist.probabilities[n]) << '\n';
        }
    });

    if (!config.plot.empty()) {
        write_to(config.plot, out, [&](std::ostream& os) {
            write_bar_chart(os,
                            "N=" + std::to_string(spec.atoms) + ", alpha=" + format_number(spec.alpha) +
                                ", " + config.parity,
                            dist.probabilities);
        });
    }

    std::ostream& report = report_stream(config.output, out, err);
    const auto top = dominant_components(dist, config.dominant);
    report << "dominant pair: ";
    for (std::size_t i = 0; i < std::min<std::size_t>(2, top.size()); ++i) {
        report << (i ? "," : "") << top[i];
    }
    report << '\n';
    if (config.dominant > 2) {
        report << "dominant components:";
        for (auto n : top) {
            report << ' ' << n;
        }
        report << '\n';
    }
    if (top.size() >= 2) {
        const double pair = dist.probabilities[top[0]] + dist.probabilities[top[1]];
        report << "top-two probability: " << format_number(pair) << '\n';
    }
    return kExitOk;
}

int cmd_validate_dispersive(const ValidateConfig& config, std::ostream& out, std::ostream& err) {
    if (config.ratios.empty()) {
        throw ArgumentError("--ratios needs at least one value");
    }
    for (double r : config.ratios) {
        if (!(r >= kMinDispersiveRatio) || !std::isfinite(r)) {
            throw ArgumentError("detuning ratio " + format_number(r) + " is outside the dispersive regime (< " +
                                format_number(kMinDispersiveRatio) + ")");
        }
    }
    std::vector<double> ratios = config.ratios;
    std::sort(ratios.begin(), ratios.end());

    std::vector<DispersiveComparison> results(ratios.size());
    parallel_for(ratios.size(), config.threads, [&](std::size_t i) {
        const JCParams params{config.omega, config.omega + ratios[i] * config.lambda, config.lambda,
                              config.n_max + 1};
        results[i] = compare_dispersive(params, config.n_max, config.phi_max, config.samples_per_cycle);
    });

    write_to(config.output, out, [&](std::ostream& os) {
        os << "# jcsim " << JCSIM_VERSION << " validate-dispersive ratios=";
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            os << (i ? ";" : "") << format_number(ratios[i]);
        }
        os << " n_max=" << config.n_max << " phi_max=" << format_number(config.phi_max)
           << " lambda=" << format_number(config.lambda) << " omega=" << format_number(config.omega)
           << " samples_per_cycle=" << config.samples_per_cycle << "\n";
        os << "detuning_ratio,n,fidelity,leakage,phase_slope,lambda_eff_theory\n";
        for (const auto& r : results) {
            for (const auto& row : r.rows) {
                os << format_number(r.detuning_ratio) << ',' << row.n << ',' << format_number(row.fidelity)
                   << ',' << format_number(row.leakage) << ',' << format_number(r.phase_slope) << ','
                   << format_number(r.lambda_eff_theory) << '\n';
            }
        }
    });

    for (std::size_t i = 1; i < results.size(); ++i) {
        for (std::size_t n = 0; n <= config.n_max; ++n) {
            if (!(results[i].rows[n].fidelity > results[i - 1].rows[n].fidelity)) {
                err << "error: fidelity not strictly increasing with detuning ratio at n=" << n << '\n';
                return kExitNumeric;
            }
        }
    }
    return kExitOk;
}

}  // namespace jcsim::cli
