#include "jcsim/fock.hpp"

#include <cmath>
#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {

namespace {

void prune(std::map<PhotonNumber, Complex>& amplitudes, double threshold) {
    std::erase_if(amplitudes, [threshold](const auto& kv) {
        return std::abs(kv.second) < threshold;
    });
}

double squared_norm(const std::map<PhotonNumber, Complex>& amplitudes) {
    double sum = 0.0;
    for (const auto& [n, a] : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

void require_same_cutoff(const FockVector& a, const FockVector& b) {
    if (a.cutoff() != b.cutoff()) {
        throw ShapeError("cutoff mismatch: " + std::to_string(a.cutoff()) + " vs " +
                         std::to_string(b.cutoff()));
    }
}

}  // namespace

FockVector::FockVector(PhotonNumber cutoff, double prune_threshold)
    : cutoff_(cutoff), prune_threshold_(prune_threshold) {}

FockVector::FockVector(PhotonNumber cutoff, double prune_threshold,
                       std::map<PhotonNumber, Complex> amplitudes)
    : cutoff_(cutoff), prune_threshold_(prune_threshold), amplitudes_(std::move(amplitudes)) {
    prune(amplitudes_, prune_threshold_);
    norm_squared_ = squared_norm(amplitudes_);
}

FockVector FockVector::from_amplitudes(PhotonNumber cutoff,
                                       const std::map<PhotonNumber, Complex>& amplitudes,
                                       double prune_threshold) {
    for (const auto& [n, a] : amplitudes) {
        if (n > cutoff) {
            throw TruncationError("photon number " + std::to_string(n) + " exceeds cutoff " +
                                  std::to_string(cutoff));
        }
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NormalizationError("non-finite amplitude at n=" + std::to_string(n));
        }
    }
    FockVector v(cutoff, prune_threshold, amplitudes);
    if (v.norm_squared_ > 1.0 + kNormTolerance) {
        throw NormalizationError("squared norm exceeds 1");
    }
    return v;
}

Complex FockVector::amplitude(PhotonNumber n) const {
    auto it = amplitudes_.find(n);
    return it == amplitudes_.end() ? Complex{} : it->second;
}

bool FockVector::is_normalized() const noexcept {
    return std::abs(norm_squared_ - 1.0) <= kNormTolerance;
}

FockVector FockVector::scaled(Complex factor) const {
    return transformed([factor](PhotonNumber, Complex a) { return factor * a; });
}

FockVector FockVector::normalized() const {
    if (norm_squared_ <= 0.0) {
        throw DegenerateStateError("cannot normalize the zero vector");
    }
    return scaled(1.0 / std::sqrt(norm_squared_));
}

FockVector make_fock(PhotonNumber n, PhotonNumber cutoff) {
    if (n > cutoff) {
        throw TruncationError("photon number " + std::to_string(n) + " exceeds cutoff " +
                              std::to_string(cutoff));
    }
    return FockVector::from_amplitudes(cutoff, {{n, Complex{1.0, 0.0}}});
}

FockVector superpose(std::span<const std::pair<Complex, FockVector>> terms) {
    if (terms.empty()) {
        throw DegenerateStateError("empty superposition");
    }
    const FockVector& first = terms.front().second;
    std::map<PhotonNumber, Complex> sum;
    for (const auto& [c, v] : terms) {
        require_same_cutoff(first, v);
        for (const auto& [n, a] : v.amplitudes()) {
            sum[n] += c * a;
        }
    }
    FockVector raw(first.cutoff(), first.prune_threshold(), std::move(sum));
    if (raw.norm_squared() < kNormTolerance) {
        throw DegenerateStateError("superposition has zero norm");
    }
    return raw.normalized();
}

FockVector combine(Complex ca, const FockVector& a, Complex cb, const FockVector& b) {
    require_same_cutoff(a, b);
    std::map<PhotonNumber, Complex> sum;
    for (const auto& [n, x] : a.amplitudes()) {
        sum[n] += ca * x;
    }
    for (const auto& [n, x] : b.amplitudes()) {
        sum[n] += cb * x;
    }
    FockVector out(a.cutoff(), a.prune_threshold(), std::move(sum));
    if (out.norm_squared() > 1.0 + kNormTolerance) {
        throw NormalizationError("linear combination exceeds unit norm");
    }
    return out;
}

Complex inner_product(const FockVector& a, const FockVector& b) {
    require_same_cutoff(a, b);
    Complex sum{};
    const auto& small = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
    for (const auto& [n, x] : small.amplitudes()) {
        sum += std::conj(a.amplitude(n)) * b.amplitude(n);
    }
    return sum;
}

double fidelity(const FockVector& a, const FockVector& b) {
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na <= 0.0 || nb <= 0.0) {
        return 0.0;
    }
    return std::norm(inner_product(a, b)) / (na * nb);
}

double number_moment(const FockVector& state, int k) {
    if (k < 1) {
        throw ArgumentError("moment order must be positive");
    }
    if (!state.is_normalized()) {
        throw NormalizationError("number_moment requires a normalized state");
    }
    double sum = 0.0;
    for (const auto& [n, a] : state.amplitudes()) {
        sum += std::pow(static_cast<double>(n), k) * std::norm(a);
    }
    return sum;
}

QuadratureVariances quadrature_variances(const FockVector& state) {
    if (!state.is_normalized()) {
        throw NormalizationError("quadrature_variances requires a normalized state");
    }
    // <a>, <a^2> and <a^dag a> from the sparse amplitudes.
    Complex a1{};
    Complex a2{};
    double mean = 0.0;
    for (const auto& [n, c] : state.amplitudes()) {
        const double dn = static_cast<double>(n);
        mean += dn * std::norm(c);
        if (n >= 1) {
            a1 += std::sqrt(dn) * std::conj(state.amplitude(n - 1)) * c;
        }
        if (n >= 2) {
            a2 += std::sqrt(dn * (dn - 1.0)) * std::conj(state.amplitude(n - 2)) * c;
        }
    }
    const double x_mean = a1.real();
    const double y_mean = a1.imag();
    const double x2 = (2.0 * a2.real() + 2.0 * mean + 1.0) / 4.0;
    const double y2 = (-2.0 * a2.real() + 2.0 * mean + 1.0) / 4.0;
    return {x2 - x_mean * x_mean, y2 - y_mean * y_mean};
}

}  // namespace jcsim
