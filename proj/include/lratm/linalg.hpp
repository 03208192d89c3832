#pragma once

#include <Eigen/Core>

namespace lratm {

/// Thin SVD m = U * diag(sigma) * V^T with t = min(rows, cols) columns.
/// sigma is nonincreasing and nonnegative; U and V have orthonormal columns.
struct SvdFactors {
    Eigen::MatrixXd U;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd V;
};

/// Thin SVD. Throws on non-finite input.
SvdFactors svd(const Eigen::MatrixXd& m);

/// Singular values only (nonincreasing).
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Count of singular values above 1e-12 * sigma_max.
std::size_t numerical_rank(const Eigen::MatrixXd& m);

/// phi(x) = 1 - exp(-x/gamma), the scalar rank surrogate. Throws if gamma <= 0.
double phi(double x, double gamma);

/// phi'(x) = exp(-x/gamma) / gamma; positive and strictly decreasing in x.
double grad_phi(double x, double gamma);

/// ||m||_gamma = sum_t phi(sigma_t(m), gamma), a smooth nonconvex surrogate
/// for rank(m); lies in [0, min(rows, cols)].
double gamma_norm(const Eigen::MatrixXd& m, double gamma);

/// Nonnegative, nondecreasing shrinkage weights (the hypothesis under which
/// weighted singular value thresholding is globally optimal). Validated at
/// construction.
class WeightVector {
public:
    explicit WeightVector(Eigen::VectorXd weights);

    /// weights[i] = scale * grad_phi(sigma[i], gamma) for a nonincreasing
    /// spectrum; nondecreasing automatically since grad_phi decreases.
    static WeightVector from_spectrum(const Eigen::VectorXd& sigma_nonincreasing,
                                      double gamma, double scale);

    const Eigen::VectorXd& values() const { return weights_; }
    Eigen::Index size() const { return weights_.size(); }

private:
    Eigen::VectorXd weights_;
};

/// Weighted singular value thresholding: with p = U*diag(sigma)*V^T, returns
/// U * diag(max(sigma_i - w_i, 0)) * V^T. For nondecreasing nonnegative
/// weights this globally minimizes
///   sum_i w_i * sigma_i(Z) + 0.5 * ||Z - p||_F^2.
Eigen::MatrixXd wsvt(const Eigen::MatrixXd& p, const WeightVector& weights);

/// Same, but also reports the shrunk singular values of the result.
struct WsvtResult {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd sigma;
};
WsvtResult wsvt_with_spectrum(const Eigen::MatrixXd& p, const WeightVector& weights);

}  // namespace lratm
