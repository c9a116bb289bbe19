#include "jcsim/jc_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jcsim/errors.hpp"

namespace jcsim {

namespace {

constexpr Complex kI{0.0, 1.0};

// exp(-iKt) for K = [[D/2, g], [g, -D/2]], returned row-major.
std::array<Complex, 4> block_rotation(double detuning, double coupling, double t) {
    const double rabi = std::hypot(detuning, 2.0 * coupling);
    const double c = std::cos(rabi * t / 2.0);
    const double s = std::sin(rabi * t / 2.0);
    const double dz = detuning / rabi;
    const double dx = 2.0 * coupling / rabi;
    return {Complex{c, -s * dz}, -kI * s * dx, -kI * s * dx, Complex{c, s * dz}};
}

double coupling(const JCParams& params, PhotonNumber n) {
    return params.lambda * std::sqrt(static_cast<double>(n) + 1.0);
}

}  // namespace

void JCParams::validate() const {
    if (!(omega > 0.0) || !(omega0 > 0.0) || !(lambda > 0.0) || !std::isfinite(omega) ||
        !std::isfinite(omega0) || !std::isfinite(lambda)) {
        throw ArgumentError("JC frequencies and coupling must be positive and finite");
    }
    if (cutoff < 1) {
        throw ArgumentError("JC cutoff must be at least 1");
    }
}

DressedBlock dressed_block(const JCParams& params, PhotonNumber n) {
    const double g = coupling(params, n);
    return {n, std::hypot(params.detuning(), 2.0 * g), 0.5 * std::atan2(2.0 * g, params.detuning())};
}

std::array<Complex, 2> propagate_block(const JCParams& params, PhotonNumber n,
                                       std::array<Complex, 2> amplitudes, double t) {
    const auto u = block_rotation(params.detuning(), coupling(params, n), t);
    // Both block states have bare energy omega (n + 1/2) relative to the shared center.
    const Complex free = std::polar(1.0, -params.omega * (static_cast<double>(n) + 0.5) * t);
    return {free * (u[0] * amplitudes[0] + u[1] * amplitudes[1]),
            free * (u[2] * amplitudes[0] + u[3] * amplitudes[1])};
}

AtomFieldState evolve_exact(const JCParams& params, const AtomFieldState& initial, double t) {
    params.validate();
    const PhotonNumber cutoff = params.cutoff;
    if (initial.cutoff() != cutoff) {
        throw ShapeError("initial state cutoff differs from JC cutoff");
    }
    if (initial.e_branch().amplitude(cutoff) != Complex{}) {
        throw TruncationError("excited amplitude at the cutoff couples outside the truncated space");
    }

    std::map<PhotonNumber, Complex> g_out;
    std::map<PhotonNumber, Complex> e_out;
    const Complex g0 = initial.g_branch().amplitude(0);
    if (g0 != Complex{}) {
        g_out[0] = g0 * std::polar(1.0, params.omega0 * t / 2.0);
    }
    for (PhotonNumber n = 0; n < cutoff; ++n) {
        const Complex e = initial.e_branch().amplitude(n);
        const Complex g = initial.g_branch().amplitude(n + 1);
        if (e == Complex{} && g == Complex{}) {
            continue;
        }
        const auto out = propagate_block(params, n, {e, g}, t);
        e_out[n] = out[0];
        g_out[n + 1] = out[1];
    }
    const double prune = initial.g_branch().prune_threshold();
    return AtomFieldState(FockVector::from_amplitudes(cutoff, g_out, prune),
                          FockVector::from_amplitudes(cutoff, e_out, prune));
}

CommutatorNorms verify_commutators(const JCParams& params) {
    params.validate();
    if (params.cutoff < 2) {
        throw ArgumentError("commutator check needs cutoff >= 2");
    }
    using Matrix = Eigen::MatrixXd;
    const Eigen::Index levels = static_cast<Eigen::Index>(params.cutoff) + 1;

    Matrix a = Matrix::Zero(levels, levels);
    for (Eigen::Index n = 1; n < levels; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    const Matrix adag = a.transpose();
    const Matrix number = adag * a;
    const Matrix field_id = Matrix::Identity(levels, levels);

    // Atomic basis {|g>, |e>}.
    Matrix sz(2, 2), sp(2, 2), sm(2, 2), atom_id = Matrix::Identity(2, 2);
    sz << -1, 0, 0, 1;
    sp << 0, 0, 1, 0;
    sm << 0, 1, 0, 0;

    // Joint index 2n + atom.
    const auto kron = [](const Matrix& field, const Matrix& atom) {
        Matrix out(field.rows() * atom.rows(), field.cols() * atom.cols());
        for (Eigen::Index i = 0; i < field.rows(); ++i) {
            for (Eigen::Index j = 0; j < field.cols(); ++j) {
                out.block(i * atom.rows(), j * atom.cols(), atom.rows(), atom.cols()) =
                    field(i, j) * atom;
            }
        }
        return out;
    };

    const Matrix h0 = params.omega * kron(number, atom_id) + 0.5 * params.omega0 * kron(field_id, sz);
    const Matrix v = params.lambda * (kron(a, sp) + kron(adag, sm));
    const Matrix h0p = params.omega * (kron(number, atom_id) + 0.5 * kron(field_id, sz));
    const Matrix vp = 0.5 * params.detuning() * kron(field_id, sz) + v;

    // Drop |e, cutoff>, whose block partner |g, cutoff+1> is not represented.
    const Eigen::Index kept = 2 * levels - 1;
    const auto restrict = [kept](const Matrix& m) { return Matrix(m.topLeftCorner(kept, kept)); };
    const auto norm_of_commutator = [&](const Matrix& x, const Matrix& y) {
        const Matrix xr = restrict(x);
        const Matrix yr = restrict(y);
        const Matrix c = xr * yr - yr * xr;
        if (c.isZero(0.0)) {
            return 0.0;
        }
        return Eigen::JacobiSVD<Matrix>(c).singularValues()(0);
    };
    return {norm_of_commutator(h0, v), norm_of_commutator(h0p, vp)};
}

DispersiveComparison compare_dispersive(const JCParams& params, PhotonNumber n_max, double phi_max,
                                        unsigned samples_per_cycle) {
    params.validate();
    const double detuning = params.detuning();
    const double ratio = detuning / params.lambda;
    if (!(ratio >= kMinDispersiveRatio)) {
        throw ArgumentError("dispersive comparison needs detuning/lambda >= " +
                            std::to_string(kMinDispersiveRatio) + " (got " + std::to_string(ratio) + ")");
    }
    if (n_max < 1) {
        throw ArgumentError("dispersive comparison needs n_max >= 1");
    }
    if (n_max + 1 > params.cutoff) {
        throw TruncationError("n_max + 1 exceeds the JC cutoff");
    }
    if (!(phi_max > 0.0) || !std::isfinite(phi_max) || samples_per_cycle < 1) {
        throw ArgumentError("dispersive comparison needs phi_max > 0 and samples_per_cycle >= 1");
    }

    DispersiveComparison out;
    out.detuning_ratio = ratio;
    out.lambda_eff_theory = params.lambda * params.lambda / detuning;

    // Level shifts of the dressed states connected to |e,n>, and their linear fit.
    std::vector<double> shift(n_max + 1);
    for (PhotonNumber n = 0; n <= n_max; ++n) {
        const double rabi = dressed_block(params, n).rabi_frequency;
        shift[n] = std::copysign(0.5 * (rabi - std::abs(detuning)), detuning);
    }
    {
        const double count = static_cast<double>(n_max) + 1.0;
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (PhotonNumber n = 0; n <= n_max; ++n) {
            const double x = n;
            sx += x;
            sy += shift[n];
            sxx += x * x;
            sxy += x * shift[n];
        }
        out.phase_slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        out.phase_intercept = (sy - out.phase_slope * sx) / count;
    }

    const double t_max = phi_max / out.lambda_eff_theory;
    const double fastest = dressed_block(params, n_max).rabi_frequency;
    const double cycles = fastest * t_max / (2.0 * std::numbers::pi);
    const auto samples = static_cast<std::size_t>(
        std::max(256.0, std::ceil(samples_per_cycle * cycles)));

    out.rows.resize(n_max + 1);
    for (PhotonNumber n = 0; n <= n_max; ++n) {
        out.rows[n] = {n, 1.0, 0.0};
    }
    std::vector<Complex> stay(n_max + 1);
    for (std::size_t k = 1; k <= samples; ++k) {
        const double t = t_max * static_cast<double>(k) / static_cast<double>(samples);
        // Interaction picture of H0': the block's common free phase drops out.
        for (PhotonNumber n = 0; n <= n_max; ++n) {
            stay[n] = block_rotation(detuning, coupling(params, n), t)[0];
        }
        Complex overlap{};
        for (PhotonNumber n = 0; n <= n_max; ++n) {
            const double model_phase = out.lambda_eff_theory * t * static_cast<double>(n);
            overlap += std::polar(1.0, model_phase) * stay[n];
            DispersiveRow& row = out.rows[n];
            row.leakage = std::max(row.leakage, 1.0 - std::norm(stay[n]));
            const double f = std::norm(overlap) / ((n + 1.0) * (n + 1.0));
            row.fidelity = std::min(row.fidelity, f);
        }
    }
    return out;
}

}  // namespace jcsim
