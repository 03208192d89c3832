#include "lratm/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lratm::kernels {

namespace {
std::atomic<Exec> g_mode{
#ifdef _OPENMP
    Exec::Parallel
#else
    Exec::Serial
#endif
};
}  // namespace

Exec execution_mode() { return g_mode.load(std::memory_order_relaxed); }

void set_execution_mode(Exec mode) { g_mode.store(mode, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

bool in_parallel_region() {
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}

namespace detail {

void run_indexed(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef _OPENMP
    if (execution_mode() == Exec::Parallel && !in_parallel_region() && n > 1) {
        const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            body(ctx, static_cast<std::size_t>(i));
        }
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(ctx, i);
}

}  // namespace detail

double dot(const double* a, const double* b, std::size_t n) {
    return chunked_sum(n, [&](std::size_t i) { return a[i] * b[i]; });
}

double sum_squares(const double* a, std::size_t n) {
    return chunked_sum(n, [&](std::size_t i) { return a[i] * a[i]; });
}

double sum_squared_diff(const double* a, const double* b, std::size_t n) {
    return chunked_sum(n, [&](std::size_t i) {
        const double d = a[i] - b[i];
        return d * d;
    });
}

void mask_project(const double* t, const std::uint8_t* observed, std::size_t n, double* out) {
    parallel_for(n, [&](std::size_t i) { out[i] = observed[i] ? t[i] : 0.0; });
}

void blend_completion(const double* acc, const double* y_prev, const double* f,
                      const std::uint8_t* observed, double rho, std::size_t n, double* out) {
    const double inv = 1.0 / (1.0 + rho);
    parallel_for(n, [&](std::size_t i) {
        out[i] = observed[i] ? f[i] : (acc[i] + rho * y_prev[i]) * inv;
    });
}

void axpy(double alpha, const double* m, std::size_t n, double* acc) {
    parallel_for(n, [&](std::size_t i) { acc[i] += alpha * m[i]; });
}

namespace {

struct ModeStrides {
    std::size_t extent;  // shape[mode]
    std::size_t inner;   // product of extents before `mode`
    std::size_t block;   // inner * extent
};

ModeStrides mode_strides(const std::vector<std::size_t>& shape, std::size_t mode) {
    ModeStrides s{shape[mode], 1, 0};
    for (std::size_t d = 0; d < mode; ++d) s.inner *= shape[d];
    s.block = s.inner * s.extent;
    return s;
}

}  // namespace

void unfold_gather(const double* tensor, const std::vector<std::size_t>& shape,
                   std::size_t mode, double* matrix) {
    std::size_t total = 1;
    for (std::size_t e : shape) total *= e;
    const ModeStrides s = mode_strides(shape, mode);
    const std::size_t rows = s.extent;
    parallel_for(total, [&](std::size_t p) {
        const std::size_t inner = p % s.inner;
        const std::size_t row = (p / s.inner) % s.extent;
        const std::size_t outer = p / s.block;
        const std::size_t col = inner + s.inner * outer;
        matrix[row + rows * col] = tensor[p];
    });
}

void fold_scatter(const double* matrix, const std::vector<std::size_t>& shape,
                  std::size_t mode, double* tensor) {
    std::size_t total = 1;
    for (std::size_t e : shape) total *= e;
    const ModeStrides s = mode_strides(shape, mode);
    const std::size_t rows = s.extent;
    parallel_for(total, [&](std::size_t p) {
        const std::size_t inner = p % s.inner;
        const std::size_t row = (p / s.inner) % s.extent;
        const std::size_t outer = p / s.block;
        const std::size_t col = inner + s.inner * outer;
        tensor[p] = matrix[row + rows * col];
    });
}

}  // namespace lratm::kernels
