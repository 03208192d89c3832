#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lratm::kernels {

/// Execution mode for the data-parallel kernels. Parallel uses OpenMP when
/// compiled in; Serial runs the identical loop structure on one thread.
/// Both modes produce bit-identical results: element-wise kernels write each
/// output exactly once, and reductions always accumulate per fixed-size chunk
/// with the chunk partials combined in index order.
enum class Exec { Serial, Parallel };

Exec execution_mode();
void set_execution_mode(Exec mode);

/// Number of OpenMP threads a Parallel region may use (1 without OpenMP).
int max_threads();

/// True while inside an active parallel region (nested calls fall back to
/// the serial loop; the chunk structure keeps results identical).
bool in_parallel_region();

namespace detail {
void run_indexed(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

/// Apply `body(i)` for i in [0, n). Iterations must be independent.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
    auto thunk = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_indexed(n, &body, thunk);
}

inline constexpr std::size_t kReductionChunk = 4096;

/// Deterministic sum of term(i) for i in [0, n). The sum is assembled from
/// per-chunk partials (chunks of kReductionChunk consecutive indices) added
/// in chunk order, so the result does not depend on the execution mode or
/// thread count.
template <typename F>
double chunked_sum(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nchunks = (n + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(nchunks);
    parallel_for(nchunks, [&](std::size_t c) {
        const std::size_t begin = c * kReductionChunk;
        const std::size_t end = begin + kReductionChunk < n ? begin + kReductionChunk : n;
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

// Concrete kernels shared by the tensor, solver and metrics modules.

double dot(const double* a, const double* b, std::size_t n);
double sum_squares(const double* a, std::size_t n);
double sum_squared_diff(const double* a, const double* b, std::size_t n);

/// out[i] = t[i] where observed, 0 elsewhere.
void mask_project(const double* t, const std::uint8_t* observed, std::size_t n, double* out);

/// out[i] = f[i] on the observed set; (acc[i] + rho*y_prev[i]) / (1+rho) elsewhere.
void blend_completion(const double* acc, const double* y_prev, const double* f,
                      const std::uint8_t* observed, double rho, std::size_t n, double* out);

/// acc[i] += alpha * m[i].
void axpy(double alpha, const double* m, std::size_t n, double* acc);

/// Gather the mode-`mode` unfolding of a tensor stored first-index-fastest
/// into a column-major rows x cols matrix (rows = shape[mode]).
void unfold_gather(const double* tensor, const std::vector<std::size_t>& shape,
                   std::size_t mode, double* matrix);

/// Scatter a column-major mode-`mode` matrix back into tensor layout.
void fold_scatter(const double* matrix, const std::vector<std::size_t>& shape,
                  std::size_t mode, double* tensor);

}  // namespace lratm::kernels
