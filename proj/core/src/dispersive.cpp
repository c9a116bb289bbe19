#include "jcsim/dispersive.hpp"

#include <cmath>
#include <algorithm>
#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_normalized(const FockVector& field, const char* what) {
    if (!field.is_normalized()) {
        throw NormalizationError(std::string(what) + " requires a normalized field");
    }
}

}  // namespace

AtomFieldState::AtomFieldState(FockVector g_branch, FockVector e_branch)
    : g_branch_(std::move(g_branch)), e_branch_(std::move(e_branch)) {
    if (g_branch_.cutoff() != e_branch_.cutoff()) {
        throw ShapeError("atom-field branches have different cutoffs");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw NormalizationError("atom-field state is not jointly normalized");
    }
}

TwoFockSpec::TwoFockSpec(PhotonNumber n1, PhotonNumber n2, Complex c1, Complex c2)
    : n1_(n1), n2_(n2), c1_(c1), c2_(c2) {
    if (n1 >= n2) {
        throw InvalidSpecError("two-Fock spec requires n1 < n2 (got " + std::to_string(n1) +
                               ", " + std::to_string(n2) + ")");
    }
    const double total = std::norm(c1) + std::norm(c2);
    if (!std::isfinite(total) || std::abs(total - 1.0) > kNormTolerance) {
        throw InvalidSpecError("two-Fock weights must satisfy |c1|^2 + |c2|^2 = 1");
    }
}

TwoFockSpec TwoFockSpec::equal_weights(PhotonNumber n1, PhotonNumber n2) {
    return TwoFockSpec(n1, n2, kInvSqrt2, kInvSqrt2);
}

FockVector TwoFockSpec::field(PhotonNumber cutoff) const {
    return FockVector::from_amplitudes(cutoff, {{n1_, c1_}, {n2_, c2_}});
}

Complex EvolvedTwoFock::amplitude1() const {
    return eta * spec.c1() * std::polar(std::cos(theta1), theta1);
}

Complex EvolvedTwoFock::amplitude2() const {
    return eta * spec.c2() * std::polar(std::cos(theta2), theta2);
}

FockVector EvolvedTwoFock::field(PhotonNumber cutoff) const {
    return FockVector::from_amplitudes(cutoff,
                                       {{spec.n1(), amplitude1()}, {spec.n2(), amplitude2()}});
}

FockVector phase_evolve(const FockVector& field, PhaseAngle phi) {
    require_normalized(field, "phase_evolve");
    return field.transformed([phi](PhotonNumber n, Complex a) {
        return a * std::polar(1.0, phi * static_cast<double>(n));
    });
}

AtomFieldState entangle(const FockVector& field, PhaseAngle phi) {
    require_normalized(field, "entangle");
    return AtomFieldState(field.scaled(kInvSqrt2), phase_evolve(field, phi).scaled(kInvSqrt2));
}

AtomFieldState ramsey(const AtomFieldState& state) {
    const FockVector& g = state.g_branch();
    const FockVector& e = state.e_branch();
    return AtomFieldState(combine(kInvSqrt2, g, kInvSqrt2, e),
                          combine(-kInvSqrt2, g, kInvSqrt2, e));
}

Projection project_atom(const AtomFieldState& state, AtomicLevel outcome) {
    const FockVector& branch = state.branch(outcome);
    const double p = branch.norm_squared();
    if (p < kNormTolerance) {
        throw DegenerateEventError(
            std::string("atomic outcome ") + (outcome == AtomicLevel::ground ? "g" : "e") +
            " has zero probability");
    }
    return {std::min(p, 1.0), branch.normalized()};
}

EvolvedTwoFock evolved_two_fock(const TwoFockSpec& spec, PhaseAngle phi) {
    const double theta1 = phi * static_cast<double>(spec.n1()) / 2.0;
    const double theta2 = phi * static_cast<double>(spec.n2()) / 2.0;
    const double cos1 = std::cos(theta1);
    const double cos2 = std::cos(theta2);
    const double p_ground = std::norm(spec.c1()) * cos1 * cos1 + std::norm(spec.c2()) * cos2 * cos2;
    if (p_ground < kNormTolerance) {
        throw DegenerateEventError("ground-state detection has zero probability at phi=" +
                                   std::to_string(phi));
    }
    return EvolvedTwoFock{spec, phi, theta1, theta2, 1.0 / std::sqrt(p_ground), p_ground};
}

}  // namespace jcsim
