#include "lratm/tensor.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lratm/kernels.hpp"
#include "lratm/rng.hpp"

namespace lratm {

std::size_t shape_elements(const Shape& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) n *= e;
    return n;
}

namespace {

void validate_shape(const Shape& shape) {
    if (shape.empty()) throw std::invalid_argument("tensor shape must have at least one mode");
    for (std::size_t e : shape) {
        if (e == 0) throw std::invalid_argument("tensor extents must be positive");
    }
}

void require_same_shape(const Shape& a, const Shape& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

DenseTensor::DenseTensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    validate_shape(shape_);
    if (data_.size() != shape_elements(shape_)) {
        throw std::invalid_argument("tensor data length does not match shape");
    }
}

DenseTensor DenseTensor::zeros(Shape shape) {
    validate_shape(shape);
    std::vector<double> data(shape_elements(shape), 0.0);
    return DenseTensor(std::move(shape), std::move(data));
}

ObservationMask::ObservationMask(Shape shape, std::vector<std::uint8_t> observed)
    : shape_(std::move(shape)), observed_(std::move(observed)) {
    validate_shape(shape_);
    if (observed_.size() != shape_elements(shape_)) {
        throw std::invalid_argument("mask length does not match shape");
    }
}

ObservationMask ObservationMask::full(Shape shape) {
    validate_shape(shape);
    std::vector<std::uint8_t> flags(shape_elements(shape), 1);
    return ObservationMask(std::move(shape), std::move(flags));
}

std::size_t ObservationMask::observed_count() const {
    std::size_t n = 0;
    for (std::uint8_t f : observed_) n += f != 0;
    return n;
}

double ObservationMask::sampling_rate() const {
    return static_cast<double>(observed_count()) / static_cast<double>(observed_.size());
}

double inner_product(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a.shape(), b.shape(), "inner_product");
    return kernels::dot(a.data().data(), b.data().data(), a.size());
}

double frobenius_norm(const DenseTensor& a) {
    return std::sqrt(kernels::sum_squares(a.data().data(), a.size()));
}

ModeMatrix unfold(const DenseTensor& a, std::size_t mode) {
    if (mode >= a.order()) throw std::invalid_argument("unfold: mode out of range");
    const std::size_t rows = a.shape()[mode];
    const std::size_t cols = a.size() / rows;
    ModeMatrix m{mode, Eigen::MatrixXd(rows, cols)};
    kernels::unfold_gather(a.data().data(), a.shape(), mode, m.values.data());
    return m;
}

DenseTensor fold(const Eigen::MatrixXd& m, const Shape& shape, std::size_t mode) {
    validate_shape(shape);
    if (mode >= shape.size()) throw std::invalid_argument("fold: mode out of range");
    const std::size_t total = shape_elements(shape);
    if (static_cast<std::size_t>(m.rows()) != shape[mode] ||
        static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()) != total) {
        throw std::invalid_argument("fold: matrix dimensions inconsistent with shape/mode");
    }
    DenseTensor t = DenseTensor::zeros(shape);
    kernels::fold_scatter(m.data(), shape, mode, t.data().data());
    return t;
}

DenseTensor fold(const ModeMatrix& m, const Shape& shape, std::size_t mode) {
    if (m.mode != mode) throw std::invalid_argument("fold: mode does not match matrix");
    return fold(m.values, shape, mode);
}

DenseTensor project(const DenseTensor& a, const ObservationMask& mask) {
    require_same_shape(a.shape(), mask.shape(), "project");
    DenseTensor out = DenseTensor::zeros(a.shape());
    kernels::mask_project(a.data().data(), mask.flags().data(), a.size(), out.data().data());
    return out;
}

DenseTensor project_complement(const DenseTensor& a, const ObservationMask& mask) {
    require_same_shape(a.shape(), mask.shape(), "project_complement");
    DenseTensor out = DenseTensor::zeros(a.shape());
    const auto& flags = mask.flags();
    const auto& src = a.data();
    auto& dst = out.data();
    kernels::parallel_for(a.size(), [&](std::size_t i) { dst[i] = flags[i] ? 0.0 : src[i]; });
    return out;
}

ObservationMask sample_mask(const Shape& shape, double sr, std::uint64_t seed) {
    validate_shape(shape);
    if (sr < 0.0 || sr > 1.0) throw std::invalid_argument("sample_mask: sr must be in [0,1]");
    const std::size_t total = shape_elements(shape);
    const auto count = static_cast<std::size_t>(std::llround(sr * static_cast<double>(total)));

    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(seed);
    // Partial Fisher-Yates: the first `count` slots end up a uniform sample
    // without replacement.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::uint8_t> flags(total, 0);
    for (std::size_t i = 0; i < count; ++i) flags[idx[i]] = 1;
    return ObservationMask(Shape(shape), std::move(flags));
}

double relative_error(const DenseTensor& est, const DenseTensor& ref) {
    require_same_shape(est.shape(), ref.shape(), "relative_error");
    const double ref_norm = frobenius_norm(ref);
    if (ref_norm == 0.0) throw std::invalid_argument("relative_error: reference norm is zero");
    const double diff =
        std::sqrt(kernels::sum_squared_diff(est.data().data(), ref.data().data(), est.size()));
    return diff / ref_norm;
}

}  // namespace lratm
