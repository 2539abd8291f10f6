// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_OPERATOR_HPP
#define CTXLOGIC_OPERATOR_HPP

#include <functional>
#include <utility>
#include <vector>

#include "ctxlogic/projector.hpp"

namespace ctxlogic {

/// Self-adjoint operator given by its spectral data: pairwise distinct
/// rational eigenvalues with pairwise orthogonal spectral projectors that
/// sum to the identity. Operators are never ingested as raw matrices; the
/// spectral form is the primitive.
class Operator {
public:
    struct EigenPair {
        Rational value;
        Projector projector;
    };

    static Operator from_spectrum(std::vector<EigenPair> spectrum);

    int dim() const { return spectrum_.front().projector.dim(); }
    /// Sorted by eigenvalue ascending.
    const std::vector<EigenPair>& spectrum() const { return spectrum_; }

private:
    explicit Operator(std::vector<EigenPair> s) : spectrum_(std::move(s)) {}

    std::vector<EigenPair> spectrum_;
};

/// f(A): applies f to each eigenvalue and merges the spectral projectors of
/// eigenvalues with equal images. The result's spectral algebra is a
/// coarsening of A's.
Operator apply_function(const Operator& a,
                        const std::function<Rational(const Rational&)>& f);

} // namespace ctxlogic

#endif
