#pragma once

#include <array>
#include <vector>

#include "jcsim/dispersive.hpp"
#include "jcsim/fock.hpp"

namespace jcsim {

/// Parameters of H = omega a^dag a + (omega0/2) sigma_z + lambda (sigma_+ a + a^dag sigma_-)
/// on the field space truncated at `cutoff` photons (hbar = 1).
struct JCParams {
    double omega = 1.0;
    double omega0 = 1.0;
    double lambda = 0.1;
    PhotonNumber cutoff = 8;

    double detuning() const noexcept { return omega0 - omega; }
    /// Throws `ArgumentError` unless omega, omega0, lambda > 0 and cutoff >= 1.
    void validate() const;
};

/// Diagonalization data of the two-level block span{|e,n>, |g,n+1>}.
struct DressedBlock {
    PhotonNumber n = 0;
    // sqrt(detuning^2 + 4 lambda^2 (n+1))
    double rabi_frequency = 0.0;
    // tan(2*angle) = 2 lambda sqrt(n+1) / detuning
    double mixing_angle = 0.0;
};

DressedBlock dressed_block(const JCParams& params, PhotonNumber n);

/// exp(-iHt) on block n applied to the amplitudes (<e,n|psi>, <g,n+1|psi>).
std::array<Complex, 2> propagate_block(const JCParams& params, PhotonNumber n,
                                       std::array<Complex, 2> amplitudes, double t);

/// Exact JC evolution by 2x2 blocks plus the uncoupled |g,0> phase. The kept
/// space is |g,0> and the complete blocks n = 0..cutoff-1, so any excited
/// amplitude at n = cutoff throws `TruncationError`.
AtomFieldState evolve_exact(const JCParams& params, const AtomFieldState& initial, double t);

struct CommutatorNorms {
    double h0_v = 0.0;    // ||[H0, V]||
    double h0p_vp = 0.0;  // ||[H0', V']||
};

/// Spectral norms of [H0, V] and of [H0', V'] with H0' = omega (a^dag a + sigma_z/2)
/// and V' = (detuning/2) sigma_z + V, built from truncated a, a^dag and atomic
/// operators and restricted to complete excitation blocks. Needs cutoff >= 2.
CommutatorNorms verify_commutators(const JCParams& params);

inline constexpr double kMinDispersiveRatio = 5.0;

struct DispersiveRow {
    PhotonNumber n = 0;
    // Worst-case fidelity over the time window between the exact evolution of
    // |e> (|0> + ... + |n>)/sqrt(n+1) and the dispersive model, which maps
    // |e,m> to exp(-i lambda' t m)|e,m>. Compared in the interaction picture of
    // H0', where the free evolution is a phase per block.
    double fidelity = 0.0;
    // Worst-case probability of leaving |e,n> over the time window.
    double leakage = 0.0;
};

struct DispersiveComparison {
    double detuning_ratio = 0.0;     // detuning / lambda
    double lambda_eff_theory = 0.0;  // lambda^2 / detuning
    // Least-squares fit shift(n) = slope*n + intercept of the exact level shift
    // of the dressed state connected to |e,n>, sign(D)(Omega_n - |D|)/2. The
    // phase accumulated by |e,n> is shift(n)*t; the intercept is the offset
    // between the (n+1) dependence of the exact shift and the n of the model.
    double phase_slope = 0.0;
    double phase_intercept = 0.0;
    std::vector<DispersiveRow> rows;  // n = 0..n_max
};

/// Validates the dispersive phase model against the exact solution over
/// lambda' t in (0, phi_max]. Requires detuning/lambda >= kMinDispersiveRatio,
/// 1 <= n_max and n_max + 1 <= cutoff (else `ArgumentError`/`TruncationError`).
/// The time grid resolves every Rabi cycle with `samples_per_cycle` points.
DispersiveComparison compare_dispersive(const JCParams& params, PhotonNumber n_max,
                                        double phi_max, unsigned samples_per_cycle = 16);

}  // namespace jcsim
