#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace graphalg {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Products run through the kernels module,
/// which dispatches between the scalar and SIMD backends at runtime.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const cplx* data() const { return a_.data(); }
    cplx* data() { return a_.data(); }

    CMatrix operator*(const CMatrix& rhs) const;  // throws on shape mismatch
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix operator*(cplx s) const;

    CMatrix adjoint() const;

    double max_abs() const;
    double frobenius() const;
    bool is_hermitian(double tol) const;

    bool same_shape(const CMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

}  // namespace graphalg
