// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_PROJECTOR_HPP
#define CTXLOGIC_PROJECTOR_HPP

#include <vector>

#include "ctxlogic/matrix.hpp"

namespace ctxlogic {

/// Nonzero vector of Gaussian rationals; generates a rank-1 projector.
/// Two rays are the same direction iff one is a nonzero scalar multiple
/// of the other, which holds iff their projectors coincide.
class Ray {
public:
    explicit Ray(std::vector<GaussianRational> entries);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<GaussianRational>& entries() const { return entries_; }

private:
    std::vector<GaussianRational> entries_;
};

/// Orthogonal projector: a self-adjoint idempotent matrix. The matrix is the
/// canonical form of the closed subspace it projects onto, so subspace
/// equality is matrix equality. Construction validates both invariants.
class Projector {
public:
    static Projector from_matrix(Matrix m);
    /// v v* / (v* v); rank 1; invariant under nonzero rescaling of v.
    static Projector from_ray(const Ray& v);
    static Projector zero(int dim);
    static Projector identity(int dim);

    int dim() const { return m_.dim(); }
    const Matrix& matrix() const { return m_; }
    /// Rank = trace, always a nonnegative integer for a projector.
    int rank() const;
    bool is_zero() const { return m_.is_zero(); }

    /// Injective serialization; also the sort key for the canonical order.
    const std::string& key() const { return key_; }

    friend bool operator==(const Projector& a, const Projector& b) {
        return a.key_ == b.key_;
    }
    friend bool operator!=(const Projector& a, const Projector& b) { return !(a == b); }
    /// Canonical total order (key comparison).
    friend bool operator<(const Projector& a, const Projector& b) {
        return a.key_ < b.key_;
    }

private:
    explicit Projector(Matrix m) : m_(std::move(m)), key_(m_.encode()) {}

    Matrix m_;
    std::string key_;
};

/// True iff p q = 0 (ranges orthogonal). Throws on dimension mismatch.
bool are_orthogonal(const Projector& p, const Projector& q);

/// True iff the family sums to the identity. Throws on dimension mismatch
/// or an empty family.
bool sum_is_identity(const std::vector<Projector>& ps);

/// True iff p <= q as subspaces, i.e. q p = p.
bool is_subprojector(const Projector& p, const Projector& q);

/// Sum of pairwise-orthogonal projectors (validated as a projector).
Projector sum_projectors(const std::vector<Projector>& ps);

} // namespace ctxlogic

#endif
