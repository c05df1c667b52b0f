#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace graphalg::kernels {

/// Arithmetic backends for the dense complex kernels.
enum class Backend {
    scalar,  ///< portable reference implementation
    avx2,    ///< AVX2+FMA vectorized implementation (x86-64 only)
};

/// Backend chosen at startup: avx2 when the CPU supports it, scalar otherwise.
Backend active_backend();

/// Force a backend. Throws std::invalid_argument if this CPU cannot run it.
/// Intended for equivalence tests and benchmarking.
void set_backend(Backend b);

/// True when the running CPU supports the AVX2+FMA code path.
bool avx2_supported();

std::string backend_name(Backend b);

/// y[i] += a * x[i] for n complex doubles.
void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n);

/// C += A * B with row-major dense storage.
/// A is m x k, B is k x n, C is m x n. Aliasing between C and A/B is not allowed.
void cgemm_acc(const std::complex<double>* a, const std::complex<double>* b,
               std::complex<double>* c, std::size_t m, std::size_t k,
               std::size_t n);

namespace detail {
// Per-backend entry points, exposed for the equivalence tests.
void caxpy_scalar(std::complex<double> a, const std::complex<double>* x,
                  std::complex<double>* y, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void caxpy_avx2(std::complex<double> a, const std::complex<double>* x,
                std::complex<double>* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace graphalg::kernels
