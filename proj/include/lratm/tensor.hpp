#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace lratm {

using Shape = std::vector<std::size_t>;

std::size_t shape_elements(const Shape& shape);

/// Dense N-way tensor of doubles. Entries are stored flat in lexicographic
/// order with the FIRST index varying fastest (the column-major
/// generalization), so the linear index of (i_0, ..., i_{N-1}) is
/// i_0 + I_0*(i_1 + I_1*(i_2 + ...)). Modes are 0-based throughout the code;
/// file formats and CLI output use 1-based indices.
class DenseTensor {
public:
    DenseTensor(Shape shape, std::vector<double> data);
    static DenseTensor zeros(Shape shape);

    const Shape& shape() const { return shape_; }
    std::size_t order() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

private:
    Shape shape_;
    std::vector<double> data_;
};

/// Index set of observed entries, stored as a dense 0/1 tensor in the same
/// lexicographic order as the tensor it masks.
class ObservationMask {
public:
    ObservationMask(Shape shape, std::vector<std::uint8_t> observed);
    static ObservationMask full(Shape shape);

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return observed_.size(); }
    std::size_t observed_count() const;
    double sampling_rate() const;

    bool operator[](std::size_t i) const { return observed_[i] != 0; }
    const std::vector<std::uint8_t>& flags() const { return observed_; }

private:
    Shape shape_;
    std::vector<std::uint8_t> observed_;
};

/// Mode-n unfolding: rows = I_n, one column per mode-n fiber in lexicographic
/// order of the remaining indices (earlier indices vary fastest). Column-major
/// storage, so each fiber is contiguous.
struct ModeMatrix {
    std::size_t mode = 0;
    Eigen::MatrixXd values;
};

double inner_product(const DenseTensor& a, const DenseTensor& b);
double frobenius_norm(const DenseTensor& a);

ModeMatrix unfold(const DenseTensor& a, std::size_t mode);
DenseTensor fold(const ModeMatrix& m, const Shape& shape, std::size_t mode);
DenseTensor fold(const Eigen::MatrixXd& m, const Shape& shape, std::size_t mode);

/// Keep observed entries, zero the rest.
DenseTensor project(const DenseTensor& a, const ObservationMask& mask);
/// Keep unobserved entries, zero the observed ones.
DenseTensor project_complement(const DenseTensor& a, const ObservationMask& mask);

/// Exactly round(sr * elements) entries observed, chosen uniformly without
/// replacement; deterministic per seed.
ObservationMask sample_mask(const Shape& shape, double sr, std::uint64_t seed);

/// ||est - ref||_F / ||ref||_F. Throws if the reference norm is zero.
double relative_error(const DenseTensor& est, const DenseTensor& ref);

}  // namespace lratm
