#pragma once

#include <map>
#include <vector>

#include "jcsim/dispersive.hpp"
#include "jcsim/fock.hpp"

namespace jcsim {

enum class Parity { even, odd };

// Hard ceiling for the adaptive cutoff search in `cat_distribution`.
inline constexpr PhotonNumber kMaxCatCutoff = 4096;
// Mass allowed beyond the final cutoff.
inline constexpr double kCatTailTolerance = 1e-10;

/// Field left in the cavity after `atoms` atoms have crossed it, starting
/// from a coherent state of real amplitude `alpha`.
struct CatSpec {
    unsigned atoms = 1;
    double alpha = 1.0;
    Parity parity = Parity::even;
    // Initial cutoff; `cat_distribution` grows it until the tail is negligible.
    PhotonNumber cutoff = 64;

    /// Throws `ArgumentError` unless atoms >= 1 (and <= 30), alpha > 0 and
    /// finite, and cutoff >= 1.
    void validate() const;
};

enum class NormalizationMode {
    // Probabilities rescaled to sum to one over the retained photon numbers.
    numeric,
    // Closed-form reference prefactor [2^{2N} e^{alpha^2} beta_N]^{-1} e^{-alpha^2}.
    beta_reference,
};

struct CatDistribution {
    CatSpec spec;  // spec.cutoff holds the cutoff actually used
    std::vector<double> probabilities;  // indexed by photon number 0..cutoff
    NormalizationMode normalization_mode = NormalizationMode::numeric;

    double probability(PhotonNumber n) const {
        return n < probabilities.size() ? probabilities[n] : 0.0;
    }
    double total() const;
};

/// |alpha^n ((-1)^n +/- 1) / sqrt(n!) * sum_{j<2^{N-1}} e^{i pi n j / 2^{N-1}}|^2,
/// the n-dependent part of the squared cat-state coefficient. Zeros from the
/// parity factor and from the phase sum are exact.
double unnormalized_weight(const CatSpec& spec, PhotonNumber n);

/// Natural log of `unnormalized_weight`; -infinity where the weight is zero.
double log_unnormalized_weight(const CatSpec& spec, PhotonNumber n);

/// The closed-form normalization function beta_N^{+/-}(alpha^2), evaluated
/// literally. Only used to report how far that prefactor is from unit
/// total probability.
double beta_reference(unsigned atoms, double alpha_sq, Parity parity);

/// Photon-number distribution of the cat state. The cutoff starts at
/// spec.cutoff and doubles until the mass beyond it is below
/// kCatTailTolerance; exceeding kMaxCatCutoff throws `ConvergenceError`.
/// Probabilities come out of log-space weights normalized numerically.
CatDistribution cat_distribution(const CatSpec& spec);

/// Same weights over exactly spec.cutoff, scaled with the closed-form beta
/// prefactor instead of numerically.
CatDistribution cat_distribution_beta_reference(const CatSpec& spec);

/// The k most probable photon numbers, most probable first (ties: smaller n
/// first). Zero-probability numbers are never returned.
std::vector<PhotonNumber> dominant_components(const CatDistribution& dist, std::size_t k);

inline constexpr double kDefaultDominanceFraction = 0.9;

/// Two-Fock spec built from the two dominant components, with real
/// non-negative amplitudes sqrt(p_i / (p_1 + p_2)). Throws
/// `NotTwoComponentError` if those two carry less than `min_fraction` of the
/// total probability.
TwoFockSpec as_two_fock_spec(const CatDistribution& dist,
                             double min_fraction = kDefaultDominanceFraction);

}  // namespace jcsim
