#pragma once

#include "jcsim/fock.hpp"

namespace jcsim {

/// Accumulated dispersive phase phi = lambda' * t, in radians.
using PhaseAngle = double;

enum class AtomicLevel { ground, excited };

/// Joint atom-field state |g>|g_branch> + |e>|e_branch>.
///
/// Both branches share one cutoff and the joint squared norm is 1.
class AtomFieldState {
public:
    /// Throws `ShapeError` on a cutoff mismatch and `NormalizationError`
    /// when the joint norm is not 1 within kNormTolerance.
    AtomFieldState(FockVector g_branch, FockVector e_branch);

    const FockVector& g_branch() const noexcept { return g_branch_; }
    const FockVector& e_branch() const noexcept { return e_branch_; }
    const FockVector& branch(AtomicLevel level) const noexcept {
        return level == AtomicLevel::ground ? g_branch_ : e_branch_;
    }
    PhotonNumber cutoff() const noexcept { return g_branch_.cutoff(); }
    double norm_squared() const noexcept {
        return g_branch_.norm_squared() + e_branch_.norm_squared();
    }

private:
    FockVector g_branch_;
    FockVector e_branch_;
};

/// Initial two-component field c1|n1> + c2|n2> with n1 < n2.
class TwoFockSpec {
public:
    /// Throws `InvalidSpecError` unless n1 < n2 and |c1|^2 + |c2|^2 = 1.
    TwoFockSpec(PhotonNumber n1, PhotonNumber n2, Complex c1, Complex c2);

    /// (|n1> + |n2>)/sqrt(2).
    static TwoFockSpec equal_weights(PhotonNumber n1, PhotonNumber n2);

    PhotonNumber n1() const noexcept { return n1_; }
    PhotonNumber n2() const noexcept { return n2_; }
    Complex c1() const noexcept { return c1_; }
    Complex c2() const noexcept { return c2_; }

    /// The initial field over the given cutoff (defaults to n2).
    FockVector field(PhotonNumber cutoff) const;
    FockVector field() const { return field(n2_); }

private:
    PhotonNumber n1_;
    PhotonNumber n2_;
    Complex c1_;
    Complex c2_;
};

/// Closed-form field after the dispersive passage, Ramsey zone and detection
/// of the atom in |g>:
///
///   eta * [c1 e^{i theta1} cos(theta1)|n1> + c2 e^{i theta2} cos(theta2)|n2>]
///
/// with theta_i = phi*n_i/2. `eta` is the factor that makes this unit norm,
/// (|c1|^2 cos^2 theta1 + |c2|^2 cos^2 theta2)^{-1/2}. For equal weights this is
/// sqrt(2) times (cos^2 theta1 + cos^2 theta2)^{-1/2}, the sqrt(2) absorbing the
/// 1/sqrt(2) carried by c1 = c2.
struct EvolvedTwoFock {
    TwoFockSpec spec;
    PhaseAngle phi = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double eta = 0.0;
    double detection_probability = 0.0;

    Complex amplitude1() const;
    Complex amplitude2() const;
    /// Explicit state over a cutoff of at least n2.
    FockVector field(PhotonNumber cutoff) const;
    FockVector field() const { return field(spec.n2()); }
};

/// Multiplies the amplitude at n by e^{i phi n}.
FockVector phase_evolve(const FockVector& field, PhaseAngle phi);

/// Atom enters in (|e> + |g>)/sqrt(2); the dispersive interaction leaves the
/// |g> branch alone and phase-shifts the |e> branch.
AtomFieldState entangle(const FockVector& field, PhaseAngle phi);

/// Ramsey zone: |e> -> (|e> + |g>)/sqrt(2), |g> -> (|g> - |e>)/sqrt(2).
AtomFieldState ramsey(const AtomFieldState& state);

struct Projection {
    double probability = 0.0;
    FockVector field;
};

/// Detects the atom in `outcome`. Throws `DegenerateEventError` if that
/// outcome has probability below kNormTolerance.
Projection project_atom(const AtomFieldState& state, AtomicLevel outcome);

/// Closed form of project_atom(ramsey(entangle(spec.field(), phi)), ground).
/// Throws `DegenerateEventError` when the ground outcome has probability
/// below kNormTolerance.
EvolvedTwoFock evolved_two_fock(const TwoFockSpec& spec, PhaseAngle phi);

}  // namespace jcsim
