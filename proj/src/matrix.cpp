// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/matrix.hpp"

namespace ctxlogic {

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int k = 0; k < dim; ++k) m.at(k, k) = GaussianRational(Rational(1));
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_hermitian() const {
    for (int r = 0; r < dim_; ++r) {
        for (int c = r; c < dim_; ++c) {
            if (at(r, c) != at(c, r).conj()) return false;
        }
    }
    return true;
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c).conj();
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const int n = a.dim_;
    Matrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            GaussianRational acc;
            for (int k = 0; k < n; ++k) acc += a.at(r, k) * b.at(k, c);
            m.at(r, c) = acc;
        }
    }
    return m;
}

int compare(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_ ? -1 : 1;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
        int c = compare(a.e_[k], b.e_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Matrix::encode() const {
    std::string s;
    s.reserve(e_.size() * 4);
    for (const auto& v : e_) {
        s += v.to_string();
        s += ';';
    }
    return s;
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError(a.dim(), b.dim());
}

} // namespace ctxlogic
