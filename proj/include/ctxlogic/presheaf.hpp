// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_PRESHEAF_HPP
#define CTXLOGIC_PRESHEAF_HPP

#include "ctxlogic/section.hpp"

namespace ctxlogic {

/// Contravariant functor sending each context to its set of valuations, with
/// restriction as the action on inclusions. Fibers are enumerated in atom
/// order, so the valuation with selected_atom == k sits at position k.
class DualPresheaf {
public:
    explicit DualPresheaf(const ContextPoset& p);

    const ContextPoset& poset() const { return *poset_; }

    /// All valuations on the context at idx; size == atom count.
    const std::vector<Valuation>& fiber(int idx) const;

    /// Action on the arrow child <= parent: maps a valuation of the parent
    /// (by its fiber position) to the fiber position of its restriction.
    std::vector<int> restriction_map(int child, int parent) const;

private:
    const ContextPoset* poset_;
    std::vector<std::vector<Valuation>> fibers_;
};

DualPresheaf build_dual_presheaf(const ContextPoset& p);

/// Natural transformation from a subfunctor of the terminal presheaf into
/// the dual presheaf: one component (a fiber element) per context of the
/// subfunctor's domain. Sections of the dual presheaf take this form.
struct NaturalTransformationSection {
    Downset subfunctor_domain;
    /// Fiber position per node, -1 outside the domain.
    std::vector<int> component_by_node;
};

/// Repackages a valid local section of the spectral sheaf as a section of
/// the dual presheaf. Throws when s is not a section.
NaturalTransformationSection section_to_transformation(const LocalSection& s);

/// Inverse direction: validates naturality (each component restricts to the
/// component below) and rebuilds the sheaf section. Throws InvalidInputError
/// on a naturality violation.
LocalSection transformation_to_section(const NaturalTransformationSection& t);

} // namespace ctxlogic

#endif
