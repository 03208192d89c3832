#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

#include "lratm/tensor.hpp"

namespace lratm {

enum class InitScheme { Spectral, Random };

/// Solver hyperparameters. Per-mode lists may be empty (defaults) or hold a
/// single value (broadcast to every mode); resolved() expands them for a
/// concrete tensor shape and validates the invariants.
struct LratmConfig {
    std::vector<std::size_t> ranks;  // empty: 0.5% spectrum-count rule per mode
    std::vector<double> alpha;       // empty: 1/N each; must sum to 1
    std::vector<double> tau;         // factor-encoding penalty weights, default 0.01
    std::vector<double> lambda;      // factor-library penalty weights, default 0.01
    std::vector<double> rho;         // proximal/ALM weights, default 0.1
    double gamma_x = 0.1;            // surrogate sharpness for the X factors
    double gamma_a = 2.5;            // surrogate sharpness for the A factors
    std::size_t max_iter = 500;
    double tol = 1e-5;               // relative Y-change stopping threshold
    InitScheme init = InitScheme::Spectral;
    std::uint64_t seed = 0;
    /// Baseline veneer: forces tau = lambda = 0 and freezes the Lagrange
    /// multipliers at zero, reducing the sweep to damped alternating least
    /// squares on the parallel factorization model.
    bool tmac = false;

    /// Broadcast the per-mode lists to shape.size() entries, fill defaults,
    /// clamp infeasible ranks (with a warning) and check all invariants.
    LratmConfig resolved(const Shape& shape) const;
};

/// Full iterate of the block scheme: the completion Y, per-mode factor pairs
/// (A_n, X_n), their ALM splitting copies (J_n, Z_n), the multipliers, and
/// cached spectra of Z_n / J_n (the shrinkage weights of the next sweep are
/// evaluated at the previous auxiliaries' singular values).
struct SolverState {
    DenseTensor Y;
    std::vector<Eigen::MatrixXd> A;        // I_n x r_n
    std::vector<Eigen::MatrixXd> X;        // r_n x s_n
    std::vector<Eigen::MatrixXd> Z;        // ALM copy of X
    std::vector<Eigen::MatrixXd> J;        // ALM copy of A
    std::vector<Eigen::MatrixXd> mult_x;   // multipliers for X - Z
    std::vector<Eigen::MatrixXd> mult_a;   // multipliers for A - J
    std::vector<Eigen::VectorXd> z_sigma;  // spectrum of Z (empty when tau_n = 0)
    std::vector<Eigen::VectorXd> j_sigma;  // spectrum of J (empty when lambda_n = 0)
    std::size_t iter = 0;
    std::vector<double> objective_history;
    std::vector<double> y_change_history;
};

struct CompletionResult {
    DenseTensor tensor;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> objective_history;
    std::vector<double> y_change_history;
};

struct FactorUpdate {
    Eigen::MatrixXd value;
    Eigen::VectorXd sigma;
};

/// Called after every sweep with the updated state.
using SweepObserver = std::function<void(const SolverState&)>;

/// sum_n [ alpha_n/2 * ||Y_(n) - A_n X_n||_F^2
///         + tau_n * ||X_n||_gamma_x + lambda_n * ||A_n||_gamma_a ].
double objective(const SolverState& state, const LratmConfig& config);

/// Shrink the ALM copy of X_n: weighted singular value thresholding of
/// P = X_n + mult_x_n / rho_n with weights grad_phi(sigma(Z_n), gamma_x) * tau_n / rho_n.
FactorUpdate update_Z(const SolverState& state, std::size_t n, const LratmConfig& config);

/// Exact minimizer of the quadratic X_n subproblem:
/// (alpha_n A_n^T A_n + 2 rho_n I) X = alpha_n A_n^T Y_(n) + rho_n (X_n + Z_n - mult_x_n / rho_n).
Eigen::MatrixXd update_X(const SolverState& state, std::size_t n,
                         const Eigen::MatrixXd& y_unfold, const LratmConfig& config);

/// Shrink the ALM copy of A_n (mirror of update_Z with lambda and gamma_a).
FactorUpdate update_J(const SolverState& state, std::size_t n, const LratmConfig& config);

/// Exact minimizer of the quadratic A_n subproblem:
/// A (alpha_n X_n X_n^T + 2 rho_n I) = alpha_n Y_(n) X_n^T + rho_n (J_n - mult_a_n / rho_n + A_n).
Eigen::MatrixXd update_A(const SolverState& state, std::size_t n,
                         const Eigen::MatrixXd& y_unfold, const LratmConfig& config);

/// On the unobserved set, the convex combination
/// (sum_n alpha_n fold_n(A_n X_n) + rho_bar * Y) / (1 + rho_bar) with
/// rho_bar = mean(rho); observed entries are re-imposed from F bit-exactly.
DenseTensor update_Y(const SolverState& state, const DenseTensor& f,
                     const ObservationMask& mask, const LratmConfig& config);

/// One full pass: per mode Z, X, J, A (modes are independent and may run in
/// parallel), then Y, then the multiplier ascent steps; appends the objective
/// and the relative Y-change to the histories.
void sweep(SolverState& state, const DenseTensor& f, const ObservationMask& mask,
           const LratmConfig& config);

/// Y = F; factors from a rank-r_n truncated SVD of each unfolding of the
/// zero-filled tensor (Spectral) or i.i.d. normal entries scaled by
/// 1/sqrt(r_n) (Random); Z = X, J = A, multipliers zero.
SolverState init_state(const DenseTensor& f, const ObservationMask& mask,
                       const LratmConfig& config);

/// Run sweeps until the relative Y-change drops below config.tol or
/// config.max_iter is reached. The observed tensor is projected on entry.
CompletionResult solve(const DenseTensor& f, const ObservationMask& mask,
                       const LratmConfig& config, const SweepObserver& observer = {});

/// r_n = max(1, round(fraction * min(I_n, prod_{j != n} I_j))): the count of
/// the largest `fraction` of the mode-n spectrum.
std::vector<std::size_t> estimate_ranks(const Shape& shape, double fraction);
std::vector<std::size_t> estimate_ranks(const DenseTensor& t, double fraction);

/// Tensor-times-matrix along `mode`: replaces extent I_mode by u.rows();
/// u must have I_mode columns.
DenseTensor mode_product(const DenseTensor& t, const Eigen::MatrixXd& u, std::size_t mode);

/// Random tensor of exact multilinear rank <= ranks: a normal core multiplied
/// along each mode by a random orthonormal-column factor. Deterministic per seed.
DenseTensor synth_lowrank(const Shape& shape, const std::vector<std::size_t>& ranks,
                          std::uint64_t seed);

}  // namespace lratm
