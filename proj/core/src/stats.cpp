#include "jcsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "jcsim/errors.hpp"
#include "jcsim/parallel.hpp"

namespace jcsim {

PiFraction PiFraction::make(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw ArgumentError("PiFraction with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    return {numerator, denominator};
}

double PiFraction::radians() const {
    return std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string PiFraction::to_string() const {
    if (numerator == 0) {
        return "0";
    }
    std::string s;
    if (numerator == -1) {
        s = "-pi";
    } else if (numerator == 1) {
        s = "pi";
    } else {
        s = std::to_string(numerator) + "pi";
    }
    if (denominator != 1) {
        s += "/" + std::to_string(denominator);
    }
    return s;
}

ComponentDistribution distribution(const EvolvedTwoFock& state) {
    return {std::norm(state.amplitude1()), std::norm(state.amplitude2())};
}

double mean_photon(const EvolvedTwoFock& state) {
    const auto [p1, p2] = distribution(state);
    return p1 * state.spec.n1() + p2 * state.spec.n2();
}

double second_moment(const EvolvedTwoFock& state) {
    const auto [p1, p2] = distribution(state);
    const double n1 = state.spec.n1();
    const double n2 = state.spec.n2();
    return p1 * n1 * n1 + p2 * n2 * n2;
}

double photon_variance(const EvolvedTwoFock& state) {
    const auto [p1, p2] = distribution(state);
    const double gap = static_cast<double>(state.spec.n2()) - static_cast<double>(state.spec.n1());
    return p1 * p2 * gap * gap;
}

double mandel_q(const EvolvedTwoFock& state) {
    const double mean = mean_photon(state);
    if (mean <= 1e-12) {
        throw UndefinedQError("Mandel Q undefined for vanishing mean photon number");
    }
    return photon_variance(state) / mean - 1.0;
}

StatisticsClass classify(double q, double tolerance) {
    if (q < -tolerance) {
        return StatisticsClass::sub_poissonian;
    }
    if (q > tolerance) {
        return StatisticsClass::super_poissonian;
    }
    return StatisticsClass::poissonian;
}

std::string_view to_string(StatisticsClass c) {
    switch (c) {
        case StatisticsClass::sub_poissonian:
            return "sub-Poissonian";
        case StatisticsClass::poissonian:
            return "Poissonian";
        case StatisticsClass::super_poissonian:
            return "super-Poissonian";
    }
    return "unknown";
}

PiFraction period_fraction(PhotonNumber n1, PhotonNumber n2) {
    if (n1 == 0 && n2 == 0) {
        throw InvalidSpecError("period undefined for n1 = n2 = 0");
    }
    return PiFraction::make(2, std::gcd(std::int64_t{n1}, std::int64_t{n2}));
}

PhaseAngle period(PhotonNumber n1, PhotonNumber n2) {
    return period_fraction(n1, n2).radians();
}

namespace {

// True when cos(phi*n/2) vanishes at phi = odd*pi/den, i.e. when
// odd*n/den is an odd integer.
bool cosine_vanishes(std::int64_t odd, std::int64_t den, std::int64_t n) {
    const std::int64_t num = odd * n;
    return num % den == 0 && (num / den) % 2 != 0;
}

}  // namespace

std::vector<PurityEvent> purity_times(const TwoFockSpec& spec) {
    const PiFraction per = period_fraction(spec.n1(), spec.n2());
    const std::int64_t n[2] = {spec.n1(), spec.n2()};
    const double weight[2] = {std::norm(spec.c1()), std::norm(spec.c2())};

    std::vector<PurityEvent> events;
    for (int j = 0; j < 2; ++j) {
        const int i = 1 - j;
        if (n[j] == 0 || weight[i] <= 0.0) {
            continue;
        }
        // phi = (2k+1)pi/n_j < per.numerator*pi/per.denominator
        for (std::int64_t odd = 1; odd * per.denominator < per.numerator * n[j]; odd += 2) {
            if (cosine_vanishes(odd, n[j], n[i])) {
                continue;
            }
            events.push_back({PiFraction::make(odd, n[j]), static_cast<PhotonNumber>(n[i])});
        }
    }
    std::sort(events.begin(), events.end(), [](const PurityEvent& a, const PurityEvent& b) {
        // Compare a.num/a.den < b.num/b.den exactly.
        return a.phi.numerator * b.phi.denominator < b.phi.numerator * a.phi.denominator;
    });
    return events;
}

StatisticsSample sample_at(const TwoFockSpec& spec, PhaseAngle phi) {
    StatisticsSample s;
    s.phi = phi;
    try {
        const EvolvedTwoFock state = evolved_two_fock(spec, phi);
        const auto [p1, p2] = distribution(state);
        s.p_n1 = p1;
        s.p_n2 = p2;
        s.mean_n = mean_photon(state);
        s.var_n = photon_variance(state);
        if (s.mean_n > 1e-12) {
            s.mandel_q = s.var_n / s.mean_n - 1.0;
        }
    } catch (const DegenerateEventError&) {
        s = StatisticsSample{};
        s.phi = phi;
        s.degenerate = true;
    }
    return s;
}

SweepResult sweep(const TwoFockSpec& spec, PhaseAngle phi_min, PhaseAngle phi_max,
                  std::size_t steps, unsigned threads) {
    if (steps < 2) {
        throw ArgumentError("sweep needs at least 2 steps");
    }
    if (!std::isfinite(phi_min) || !std::isfinite(phi_max) || !(phi_min < phi_max)) {
        throw ArgumentError("sweep requires finite phi_min < phi_max");
    }

    SweepResult result{spec, std::vector<StatisticsSample>(steps), period(spec.n1(), spec.n2()), {}};
    const double span = phi_max - phi_min;
    const double last = static_cast<double>(steps - 1);
    parallel_for(steps, threads, [&](std::size_t k) {
        const double phi = (k + 1 == steps) ? phi_max : phi_min + span * static_cast<double>(k) / last;
        result.samples[k] = sample_at(spec, phi);
    });

    // Replicate the one-period purity events across the sweep range.
    const PiFraction per = period_fraction(spec.n1(), spec.n2());
    const auto base = purity_times(spec);
    const auto first_period = static_cast<std::int64_t>(std::floor(phi_min / result.period)) - 1;
    const auto last_period = static_cast<std::int64_t>(std::ceil(phi_max / result.period)) + 1;
    for (std::int64_t m = first_period; m <= last_period; ++m) {
        for (const auto& e : base) {
            // e.phi + m * per, exactly
            const PiFraction shifted = PiFraction::make(
                e.phi.numerator * per.denominator + m * per.numerator * e.phi.denominator,
                e.phi.denominator * per.denominator);
            const double r = shifted.radians();
            if (r >= phi_min && r <= phi_max) {
                result.purity_events.push_back({shifted, e.surviving});
            }
        }
    }
    return result;
}

QuadratureVariances squeezing_check(const TwoFockSpec& spec, std::span<const PhaseAngle> phi_grid) {
    QuadratureVariances minimum{std::numeric_limits<double>::infinity(),
                                std::numeric_limits<double>::infinity()};
    for (const PhaseAngle phi : phi_grid) {
        std::optional<EvolvedTwoFock> state;
        try {
            state = evolved_two_fock(spec, phi);
        } catch (const DegenerateEventError&) {
            continue;
        }
        const auto v = quadrature_variances(state->field());
        minimum.x = std::min(minimum.x, v.x);
        minimum.y = std::min(minimum.y, v.y);
    }
    return minimum;
}

}  // namespace jcsim
