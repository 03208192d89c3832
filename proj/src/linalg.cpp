#include "lratm/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace lratm {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite input");
}

void require_gamma(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
}

}  // namespace

SvdFactors svd(const Eigen::MatrixXd& m) {
    require_finite(m, "svd");
    Eigen::BDCSVD<Eigen::MatrixXd> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return SvdFactors{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
    require_finite(m, "singular_values");
    Eigen::BDCSVD<Eigen::MatrixXd> dec(m);
    return dec.singularValues();
}

std::size_t numerical_rank(const Eigen::MatrixXd& m) {
    const Eigen::VectorXd s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double floor = 1e-12 * s(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > floor;
    return rank;
}

double phi(double x, double gamma) {
    require_gamma(gamma);
    return 1.0 - std::exp(-x / gamma);
}

double grad_phi(double x, double gamma) {
    require_gamma(gamma);
    return std::exp(-x / gamma) / gamma;
}

double gamma_norm(const Eigen::MatrixXd& m, double gamma) {
    require_gamma(gamma);
    const Eigen::VectorXd s = singular_values(m);
    double total = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) total += phi(s(i), gamma);
    return total;
}

WeightVector::WeightVector(Eigen::VectorXd weights) : weights_(std::move(weights)) {
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        if (!(weights_(i) >= 0.0)) {
            throw std::invalid_argument("shrinkage weights must be nonnegative");
        }
        if (i > 0 && weights_(i) < weights_(i - 1)) {
            throw std::invalid_argument("shrinkage weights must be nondecreasing");
        }
    }
}

WeightVector WeightVector::from_spectrum(const Eigen::VectorXd& sigma_nonincreasing,
                                         double gamma, double scale) {
    if (!(scale >= 0.0)) throw std::invalid_argument("weight scale must be nonnegative");
    Eigen::VectorXd w(sigma_nonincreasing.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        w(i) = scale * grad_phi(sigma_nonincreasing(i), gamma);
    }
    return WeightVector(std::move(w));
}

WsvtResult wsvt_with_spectrum(const Eigen::MatrixXd& p, const WeightVector& weights) {
    const Eigen::Index t = std::min(p.rows(), p.cols());
    if (weights.size() != t) {
        throw std::invalid_argument("wsvt: weight length must equal min(rows, cols)");
    }
    SvdFactors f = svd(p);
    Eigen::VectorXd shrunk(t);
    for (Eigen::Index i = 0; i < t; ++i) {
        shrunk(i) = std::max(f.sigma(i) - weights.values()(i), 0.0);
    }
    WsvtResult out;
    out.matrix = f.U * shrunk.asDiagonal() * f.V.transpose();
    out.sigma = std::move(shrunk);
    return out;
}

Eigen::MatrixXd wsvt(const Eigen::MatrixXd& p, const WeightVector& weights) {
    return wsvt_with_spectrum(p, weights).matrix;
}

}  // namespace lratm
