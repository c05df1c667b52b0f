// AVX2+FMA variant of the complex kernels. Compiled with -mavx2 -mfma and
// reached only through the runtime dispatch in kernels.cpp, which checks CPU
// support first.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <complex>
#include <cstddef>

namespace graphalg::kernels::detail {

void caxpy_avx2(std::complex<double> a, const std::complex<double>* x,
                std::complex<double>* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    const double* xs = reinterpret_cast<const double*>(x);
    double* ys = reinterpret_cast<double*>(y);

    std::size_t i = 0;
    // Two complex doubles per 256-bit lane, interleaved [re0 im0 re1 im1].
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xs + 2 * i);
        const __m256d vy = _mm256_loadu_pd(ys + 2 * i);
        const __m256d vswap = _mm256_permute_pd(vx, 0b0101);  // [im0 re0 im1 re1]
        // even lanes: ar*re - ai*im, odd lanes: ar*im + ai*re
        const __m256d prod = _mm256_fmaddsub_pd(var, vx, _mm256_mul_pd(vai, vswap));
        _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(vy, prod));
    }
    for (; i < n; ++i) {
        const double xr = xs[2 * i], xi = xs[2 * i + 1];
        ys[2 * i] += ar * xr - ai * xi;
        ys[2 * i + 1] += ar * xi + ai * xr;
    }
}

}  // namespace graphalg::kernels::detail

#endif  // x86-64
