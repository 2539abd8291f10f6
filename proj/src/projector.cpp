// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/projector.hpp"

namespace ctxlogic {

Ray::Ray(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInputError("ray must have at least one entry");
    bool nonzero = false;
    for (const auto& v : entries_) {
        if (!v.is_zero()) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) throw InvalidInputError("zero ray has no direction");
}

Projector Projector::from_matrix(Matrix m) {
    if (!m.is_hermitian()) throw InvalidInputError("projector matrix is not self-adjoint");
    if (m * m != m) throw InvalidInputError("projector matrix is not idempotent");
    return Projector(std::move(m));
}

Projector Projector::from_ray(const Ray& v) {
    const int n = v.dim();
    Rational norm;
    for (const auto& x : v.entries()) norm += x.norm_sq();
    // norm > 0 is guaranteed by the Ray invariant
    Matrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            GaussianRational num = v.entries()[r] * v.entries()[c].conj();
            m.at(r, c) = GaussianRational(num.re() / norm, num.im() / norm);
        }
    }
    return Projector(std::move(m)); // v v*/(v*v) is hermitian idempotent by construction
}

Projector Projector::zero(int dim) {
    return Projector(Matrix(dim));
}

Projector Projector::identity(int dim) {
    return Projector(Matrix::identity(dim));
}

int Projector::rank() const {
    Rational tr;
    for (int k = 0; k < dim(); ++k) tr += m_.at(k, k).re();
    return static_cast<int>(tr.numerator()); // trace of a projector is integral
}

bool are_orthogonal(const Projector& p, const Projector& q) {
    require_same_dim(p.matrix(), q.matrix());
    return (p.matrix() * q.matrix()).is_zero();
}

bool sum_is_identity(const std::vector<Projector>& ps) {
    if (ps.empty()) throw InvalidInputError("empty projector family");
    Matrix sum(ps.front().dim());
    for (const auto& p : ps) {
        require_same_dim(sum, p.matrix());
        sum += p.matrix();
    }
    return sum == Matrix::identity(sum.dim());
}

bool is_subprojector(const Projector& p, const Projector& q) {
    require_same_dim(p.matrix(), q.matrix());
    return q.matrix() * p.matrix() == p.matrix();
}

Projector sum_projectors(const std::vector<Projector>& ps) {
    if (ps.empty()) throw InvalidInputError("empty projector sum");
    Matrix sum(ps.front().dim());
    for (const auto& p : ps) {
        require_same_dim(sum, p.matrix());
        sum += p.matrix();
    }
    return Projector::from_matrix(std::move(sum));
}

} // namespace ctxlogic
