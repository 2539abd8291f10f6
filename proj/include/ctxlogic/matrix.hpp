// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_MATRIX_HPP
#define CTXLOGIC_MATRIX_HPP

#include <string>
#include <vector>

#include "ctxlogic/gaussian.hpp"

namespace ctxlogic {

/// Dense square matrix of Gaussian rationals, row-major. All arithmetic is
/// exact; equality is entrywise structural equality.
class Matrix {
public:
    Matrix(int dim, GaussianRational fill = GaussianRational())
        : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, fill) {
        if (dim <= 0) throw InvalidInputError("matrix dimension must be positive");
    }

    static Matrix identity(int dim);

    int dim() const { return dim_; }

    GaussianRational& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
    const GaussianRational& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * dim_ + c];
    }

    bool is_zero() const;
    bool is_hermitian() const;

    Matrix adjoint() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Fixed total order for canonical sorting; entries compared in row-major
    /// order. Returns <0, 0 or >0.
    friend int compare(const Matrix& a, const Matrix& b);

    /// Injective compact serialization, usable as a dictionary key.
    std::string encode() const;

private:
    int dim_;
    std::vector<GaussianRational> e_;
};

/// Throws DimensionMismatchError unless both dims are equal.
void require_same_dim(const Matrix& a, const Matrix& b);

} // namespace ctxlogic

#endif
