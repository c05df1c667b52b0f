#include "graphalg/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace graphalg::kernels {

namespace detail {

void caxpy_scalar(std::complex<double> a, const std::complex<double>* x,
                  std::complex<double>* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    const double* xs = reinterpret_cast<const double*>(x);
    double* ys = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = xs[2 * i], xi = xs[2 * i + 1];
        ys[2 * i] += ar * xr - ai * xi;
        ys[2 * i + 1] += ar * xi + ai * xr;
    }
}

}  // namespace detail

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

using CaxpyFn = void (*)(std::complex<double>, const std::complex<double>*,
                         std::complex<double>*, std::size_t);

CaxpyFn pick(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2) return detail::caxpy_avx2;
#endif
    (void)b;
    return detail::caxpy_scalar;
}

std::atomic<Backend> g_backend{avx2_supported() ? Backend::avx2 : Backend::scalar};
std::atomic<CaxpyFn> g_caxpy{pick(g_backend.load())};

}  // namespace

Backend active_backend() { return g_backend.load(); }

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported())
        throw std::invalid_argument("kernels: avx2 backend not supported on this CPU");
    g_backend.store(b);
    g_caxpy.store(pick(b));
}

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void caxpy(std::complex<double> a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
    g_caxpy.load()(a, x, y, n);
}

void cgemm_acc(const std::complex<double>* a, const std::complex<double>* b,
               std::complex<double>* c, std::size_t m, std::size_t k,
               std::size_t n) {
    // i-k-j loop: the inner update is a caxpy over contiguous rows of B and C,
    // which is where the backend kernel runs.
    const CaxpyFn axpy = g_caxpy.load();
    for (std::size_t i = 0; i < m; ++i) {
        const std::complex<double>* arow = a + i * k;
        std::complex<double>* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const std::complex<double> aip = arow[p];
            if (aip.real() == 0.0 && aip.imag() == 0.0) continue;
            axpy(aip, b + p * n, crow, n);
        }
    }
}

}  // namespace graphalg::kernels
