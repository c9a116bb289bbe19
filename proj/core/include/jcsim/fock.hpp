#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>

namespace jcsim {

using PhotonNumber = std::uint32_t;
using Complex = std::complex<double>;

// Tolerance on squared norms for a state to count as normalized.
inline constexpr double kNormTolerance = 1e-12;
// Amplitudes with magnitude below this are dropped from the sparse map.
inline constexpr double kDefaultPruneThreshold = 1e-15;

/// Truncated single-mode field state in the photon-number basis.
///
/// Amplitudes are stored sparsely; every stored photon number is at most
/// `cutoff()`. Instances are immutable once built. The global phase is kept
/// as computed, so compare states with `fidelity` rather than amplitude
/// equality when phases are not meaningful.
class FockVector {
public:
    explicit FockVector(PhotonNumber cutoff,
                        double prune_threshold = kDefaultPruneThreshold);

    /// Builds a state from explicit amplitudes. Throws `TruncationError` for
    /// any n above `cutoff`, `NormalizationError` if the squared norm
    /// exceeds 1 + kNormTolerance or an amplitude is not finite.
    static FockVector from_amplitudes(PhotonNumber cutoff,
                                      const std::map<PhotonNumber, Complex>& amplitudes,
                                      double prune_threshold = kDefaultPruneThreshold);

    PhotonNumber cutoff() const noexcept { return cutoff_; }
    double prune_threshold() const noexcept { return prune_threshold_; }
    const std::map<PhotonNumber, Complex>& amplitudes() const noexcept { return amplitudes_; }

    Complex amplitude(PhotonNumber n) const;
    double probability(PhotonNumber n) const { return std::norm(amplitude(n)); }
    double norm_squared() const noexcept { return norm_squared_; }
    bool is_normalized() const noexcept;
    bool empty() const noexcept { return amplitudes_.empty(); }

    FockVector scaled(Complex factor) const;
    /// Unit-norm copy; throws `DegenerateStateError` for the zero vector.
    FockVector normalized() const;

    /// Applies `f(n, amplitude)` to every stored amplitude.
    template <typename F>
    FockVector transformed(F&& f) const {
        std::map<PhotonNumber, Complex> out;
        for (const auto& [n, a] : amplitudes_) {
            out.emplace(n, f(n, a));
        }
        return FockVector(cutoff_, prune_threshold_, std::move(out));
    }

private:
    FockVector(PhotonNumber cutoff, double prune_threshold,
               std::map<PhotonNumber, Complex> amplitudes);

    friend FockVector combine(Complex, const FockVector&, Complex, const FockVector&);
    friend FockVector superpose(std::span<const std::pair<Complex, FockVector>>);

    PhotonNumber cutoff_;
    double prune_threshold_;
    std::map<PhotonNumber, Complex> amplitudes_;
    double norm_squared_ = 0.0;
};

/// Basis state |n>. Throws `TruncationError` if n > cutoff.
FockVector make_fock(PhotonNumber n, PhotonNumber cutoff);

/// Normalized linear combination of the given terms. All terms must share a
/// cutoff (`ShapeError`); a vanishing result throws `DegenerateStateError`.
FockVector superpose(std::span<const std::pair<Complex, FockVector>> terms);

/// ca*a + cb*b without renormalization. The result must still have squared
/// norm at most 1 + kNormTolerance.
FockVector combine(Complex ca, const FockVector& a, Complex cb, const FockVector& b);

/// <a|b>, antilinear in the first argument.
Complex inner_product(const FockVector& a, const FockVector& b);

/// |<a|b>|^2 / (<a|a><b|b>); 0 if either vector is zero.
double fidelity(const FockVector& a, const FockVector& b);

/// sum_n n^k |a_n|^2 for a normalized state.
double number_moment(const FockVector& state, int k);

// Quadrature variances for X = (a + a^dag)/2 and Y = (a - a^dag)/2i.
// The vacuum gives 1/4 for both; a value below 1/4 means squeezing.
struct QuadratureVariances {
    double x = 0.0;
    double y = 0.0;
};

QuadratureVariances quadrature_variances(const FockVector& state);

}  // namespace jcsim
