#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jcsim/dispersive.hpp"
#include "jcsim/fock.hpp"

namespace jcsim {

inline constexpr double kDefaultClassifyTolerance = 1e-9;

/// Exact angle numerator*pi/denominator, kept reduced with denominator > 0.
struct PiFraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    static PiFraction make(std::int64_t numerator, std::int64_t denominator);

    double radians() const;
    /// "0", "pi", "2pi/5", "5pi/3", ...
    std::string to_string() const;

    friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

struct ComponentDistribution {
    double p_n1 = 0.0;
    double p_n2 = 0.0;
};

ComponentDistribution distribution(const EvolvedTwoFock& state);
double mean_photon(const EvolvedTwoFock& state);
double second_moment(const EvolvedTwoFock& state);
/// <n^2> - <n>^2, evaluated as p1*p2*(n2 - n1)^2 so it is never negative.
double photon_variance(const EvolvedTwoFock& state);
/// Mandel Q = (variance - mean)/mean. Throws `UndefinedQError` when the mean
/// photon number is below 1e-12.
double mandel_q(const EvolvedTwoFock& state);

enum class StatisticsClass { sub_poissonian, poissonian, super_poissonian };

StatisticsClass classify(double q, double tolerance = kDefaultClassifyTolerance);
std::string_view to_string(StatisticsClass c);

/// Least common period 2*pi/gcd(n1, n2) of cos^2(phi*n1/2) and cos^2(phi*n2/2).
/// Throws `InvalidSpecError` when both numbers are zero.
PiFraction period_fraction(PhotonNumber n1, PhotonNumber n2);
PhaseAngle period(PhotonNumber n1, PhotonNumber n2);

/// A phase at which the evolved state collapses onto |surviving>.
struct PurityEvent {
    PiFraction phi;
    PhotonNumber surviving = 0;

    double radians() const { return phi.radians(); }
};

/// Purity events in [0, period), ascending. Found from the exact zeros
/// phi = (2k+1)pi/n_j of cos(phi*n_j/2), dropping phases where the other
/// cosine vanishes too (ground detection impossible there).
std::vector<PurityEvent> purity_times(const TwoFockSpec& spec);

struct StatisticsSample {
    PhaseAngle phi = 0.0;
    double p_n1 = 0.0;
    double p_n2 = 0.0;
    double mean_n = 0.0;
    double var_n = 0.0;
    std::optional<double> mandel_q;
    // Ground detection impossible at this phase; statistics fields are unset.
    bool degenerate = false;
};

StatisticsSample sample_at(const TwoFockSpec& spec, PhaseAngle phi);

struct SweepResult {
    TwoFockSpec spec;
    std::vector<StatisticsSample> samples;
    PhaseAngle period = 0.0;
    // Purity events falling inside [phi_min, phi_max].
    std::vector<PurityEvent> purity_events;
};

/// `steps` uniformly spaced samples over [phi_min, phi_max], endpoints
/// included. `threads` = 0 uses every hardware thread; the samples are the
/// same for any thread count.
SweepResult sweep(const TwoFockSpec& spec, PhaseAngle phi_min, PhaseAngle phi_max,
                  std::size_t steps, unsigned threads = 1);

/// Minimum quadrature variances of the evolved field over `phi_grid`, with
/// X = (a + a^dag)/2 and Y = (a - a^dag)/2i (vacuum level 1/4). Degenerate
/// phases are skipped; an all-degenerate grid returns +infinity for both.
QuadratureVariances squeezing_check(const TwoFockSpec& spec, std::span<const PhaseAngle> phi_grid);

}  // namespace jcsim
