#include "graphalg/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include "graphalg/kernels.hpp"

namespace graphalg {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("CMatrix: product shape mismatch");
    CMatrix c(rows_, rhs.cols_);
    kernels::cgemm_acc(a_.data(), rhs.a_.data(), c.a_.data(), rows_, cols_,
                       rhs.cols_);
    return c;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    CMatrix c(*this);
    c += rhs;
    return c;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    CMatrix c(*this);
    c -= rhs;
    return c;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    if (!same_shape(rhs)) throw std::invalid_argument("CMatrix: sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    if (!same_shape(rhs)) throw std::invalid_argument("CMatrix: sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix c(*this);
    for (auto& v : c.a_) v *= s;
    return c;
}

CMatrix CMatrix::adjoint() const {
    CMatrix c(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols_; ++j)
            c.at(j, r) = std::conj(at(r, j));
    return c;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

}  // namespace graphalg
