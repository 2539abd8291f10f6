// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_CONTEXT_HPP
#define CTXLOGIC_CONTEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctxlogic/operator.hpp"

namespace ctxlogic {

/// A context: a finite Boolean algebra of commuting projectors, given by its
/// atoms — an orthogonal decomposition of the identity. The algebra's
/// elements are exactly the sums of atom subsets, represented as bitmasks
/// over the (canonically sorted) atom list. Two contexts are equal iff their
/// atom sets coincide; the id plays no part in equality.
class Context {
public:
    /// Validates pairwise orthogonality and completeness; sorts the atoms
    /// into the canonical order. Throws ValidationError naming the offending
    /// pair or sum.
    static Context from_decomposition(std::vector<Projector> atoms, std::string id = "");

    const std::string& id() const { return id_; }
    Context with_id(std::string id) const;

    int dim() const { return atoms_.front().dim(); }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const std::vector<Projector>& atoms() const { return atoms_; }
    const Projector& atom(int k) const { return atoms_[static_cast<std::size_t>(k)]; }
    bool is_trivial() const { return atoms_.size() == 1; }

    /// Element of the algebra: sum of the atoms selected by `mask`
    /// (mask 0 = zero projector, full mask = identity).
    Projector element(std::uint32_t mask) const;

    /// The atom subset summing to p, if p belongs to the algebra.
    std::optional<std::uint32_t> mask_of(const Projector& p) const;
    bool contains(const Projector& p) const { return mask_of(p).has_value(); }

    /// Identity of the underlying algebra (concatenated atom keys).
    const std::string& key() const { return key_; }

    friend bool operator==(const Context& a, const Context& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

private:
    Context() = default;

    std::string id_;
    std::vector<Projector> atoms_;
    std::string key_;
};

/// The spectral algebra W_A of an operator: the context generated by its
/// spectral projectors.
Context spectral_algebra(const Operator& a);

/// w1 <= w2: w1 is a coarsening of w2, i.e. every atom of w1 is a sum of
/// atoms of w2 (subalgebra inclusion). Throws on dimension mismatch.
bool context_leq(const Context& w1, const Context& w2);

/// All Boolean subalgebras of w: one context per set partition of w's atoms,
/// each block summed into one atom. Includes w itself and the trivial
/// context; the count is Bell(#atoms). Results carry empty ids.
std::vector<Context> coarsenings(const Context& w);

/// Largest common subalgebra of w1 and w2 (intersection of element sets).
/// Always defined; the result is <= both inputs. Carries an empty id.
Context intersect_contexts(const Context& w1, const Context& w2);

/// True iff all atoms of w1 commute with all atoms of w2, so a common
/// refinement exists.
bool contexts_compatible(const Context& w1, const Context& w2);

/// Common refinement of two compatible contexts: atoms are the nonzero
/// products of atom pairs. Returns nullopt when the contexts do not commute.
std::optional<Context> join_refinement(const Context& w1, const Context& w2);

} // namespace ctxlogic

#endif
