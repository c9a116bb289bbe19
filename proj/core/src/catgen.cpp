#include "jcsim/catgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// |sum_{j=0}^{M-1} exp(i pi n j / M)|^2 with M = 2^{N-1}, evaluated from the
// closed form of the geometric series so that vanishing sums are exactly 0.
double phase_sum_norm(unsigned atoms, PhotonNumber n) {
    const std::uint64_t m = std::uint64_t{1} << (atoms - 1);
    const std::uint64_t r = n % (2 * m);
    if (r == 0) {
        return static_cast<double>(m) * static_cast<double>(m);
    }
    if (r % 2 == 0) {
        return 0.0;
    }
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(2 * m));
    return 1.0 / (s * s);
}

bool parity_allows(Parity parity, PhotonNumber n) {
    return (n % 2 == 0) == (parity == Parity::even);
}

std::vector<double> log_weights(const CatSpec& spec, PhotonNumber cutoff) {
    std::vector<double> lw(static_cast<std::size_t>(cutoff) + 1);
    for (PhotonNumber n = 0; n <= cutoff; ++n) {
        lw[n] = log_unnormalized_weight(spec, n);
    }
    return lw;
}

double max_finite(const std::vector<double>& lw) {
    double m = kNegInf;
    for (double x : lw) {
        m = std::max(m, x);
    }
    return m;
}

double shifted_sum(const std::vector<double>& lw, std::size_t count, double shift) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        if (lw[i] != kNegInf) {
            s += std::exp(lw[i] - shift);
        }
    }
    return s;
}

}  // namespace

void CatSpec::validate() const {
    if (atoms < 1 || atoms > 30) {
        throw ArgumentError("number of atoms must be in [1, 30]");
    }
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw ArgumentError("alpha must be positive and finite");
    }
    if (cutoff < 1) {
        throw ArgumentError("cat cutoff must be at least 1");
    }
}

double CatDistribution::total() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

double log_unnormalized_weight(const CatSpec& spec, PhotonNumber n) {
    if (!parity_allows(spec.parity, n)) {
        return kNegInf;
    }
    const double sum_norm = phase_sum_norm(spec.atoms, n);
    if (sum_norm == 0.0) {
        return kNegInf;
    }
    const double dn = static_cast<double>(n);
    // |(-1)^n +/- 1|^2 = 4 on the allowed parity.
    return 2.0 * dn * std::log(spec.alpha) - std::lgamma(dn + 1.0) + std::log(4.0) +
           std::log(sum_norm);
}

double unnormalized_weight(const CatSpec& spec, PhotonNumber n) {
    const double lw = log_unnormalized_weight(spec, n);
    return lw == kNegInf ? 0.0 : std::exp(lw);
}

double beta_reference(unsigned atoms, double alpha_sq, Parity parity) {
    if (atoms < 1) {
        throw ArgumentError("number of atoms must be positive");
    }
    const double sign = parity == Parity::even ? 1.0 : -1.0;
    const auto beta1 = [sign](double x) { return 0.5 * (std::exp(x) + sign * std::exp(-x)); };
    if (atoms == 1) {
        return beta1(alpha_sq);
    }
    const double m = std::ldexp(1.0, static_cast<int>(atoms) - 1);  // 2^{N-1}
    const double two_n = 2.0 * m;                                  // 2^N
    double sum = 0.0;
    for (int k = 0; k < static_cast<int>(m); ++k) {
        const double angle = std::numbers::pi * k / m;
        sum += (two_n - 2.0 * k) * std::cos(alpha_sq * std::sin(angle)) *
               beta1(alpha_sq * std::cos(angle));
    }
    return beta1(alpha_sq) / m + sum / (m * m);
}

CatDistribution cat_distribution(const CatSpec& spec) {
    spec.validate();
    for (PhotonNumber cutoff = spec.cutoff; cutoff <= kMaxCatCutoff; cutoff *= 2) {
        const auto lw = log_weights(spec, 2 * cutoff);
        const double shift = max_finite(lw);
        const double inner = shifted_sum(lw, cutoff + 1, shift);
        const double outer = shifted_sum(lw, lw.size(), shift);
        if (outer - inner > kCatTailTolerance * outer) {
            continue;
        }
        CatDistribution dist{spec, std::vector<double>(cutoff + 1, 0.0), NormalizationMode::numeric};
        dist.spec.cutoff = cutoff;
        for (PhotonNumber n = 0; n <= cutoff; ++n) {
            if (lw[n] != kNegInf) {
                dist.probabilities[n] = std::exp(lw[n] - shift) / inner;
            }
        }
        return dist;
    }
    throw ConvergenceError("cat distribution did not converge below cutoff " +
                           std::to_string(kMaxCatCutoff));
}

CatDistribution cat_distribution_beta_reference(const CatSpec& spec) {
    spec.validate();
    const double alpha_sq = spec.alpha * spec.alpha;
    const double beta = beta_reference(spec.atoms, alpha_sq, spec.parity);
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ConvergenceError("reference normalization is not positive and finite");
    }
    // log of [2^{2N} e^{alpha^2} beta]^{-1} e^{-alpha^2}
    const double log_prefactor =
        -(2.0 * spec.atoms * std::numbers::ln2 + alpha_sq + std::log(beta)) - alpha_sq;
    CatDistribution dist{spec, std::vector<double>(spec.cutoff + 1, 0.0),
                         NormalizationMode::beta_reference};
    for (PhotonNumber n = 0; n <= spec.cutoff; ++n) {
        const double lw = log_unnormalized_weight(spec, n);
        if (lw != kNegInf) {
            dist.probabilities[n] = std::exp(lw + log_prefactor);
        }
    }
    return dist;
}

std::vector<PhotonNumber> dominant_components(const CatDistribution& dist, std::size_t k) {
    if (k < 1) {
        throw ArgumentError("dominant_components needs k >= 1");
    }
    std::vector<PhotonNumber> nonzero;
    for (PhotonNumber n = 0; n < dist.probabilities.size(); ++n) {
        if (dist.probabilities[n] > 0.0) {
            nonzero.push_back(n);
        }
    }
    const auto by_probability = [&](PhotonNumber a, PhotonNumber b) {
        const double pa = dist.probabilities[a];
        const double pb = dist.probabilities[b];
        return pa != pb ? pa > pb : a < b;
    };
    const std::size_t take = std::min(k, nonzero.size());
    std::partial_sort(nonzero.begin(), nonzero.begin() + static_cast<std::ptrdiff_t>(take),
                      nonzero.end(), by_probability);
    nonzero.resize(take);
    return nonzero;
}

TwoFockSpec as_two_fock_spec(const CatDistribution& dist, double min_fraction) {
    const auto top = dominant_components(dist, 2);
    if (top.size() < 2) {
        throw NotTwoComponentError("distribution has fewer than two nonzero components");
    }
    const double pa = dist.probabilities[top[0]];
    const double pb = dist.probabilities[top[1]];
    const double pair = pa + pb;
    if (pair < min_fraction * dist.total()) {
        throw NotTwoComponentError("top two components carry only " + std::to_string(pair / dist.total()) +
                                   " of the probability");
    }
    const PhotonNumber n1 = std::min(top[0], top[1]);
    const PhotonNumber n2 = std::max(top[0], top[1]);
    const double p1 = dist.probabilities[n1] / pair;
    const double p2 = dist.probabilities[n2] / pair;
    return TwoFockSpec(n1, n2, std::sqrt(p1), std::sqrt(p2));
}

}  // namespace jcsim
