// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/presheaf.hpp"

namespace ctxlogic {

DualPresheaf::DualPresheaf(const ContextPoset& p) : poset_(&p) {
    fibers_.reserve(static_cast<std::size_t>(p.size()));
    for (int w = 0; w < p.size(); ++w) {
        std::vector<Valuation> fiber;
        fiber.reserve(static_cast<std::size_t>(p.context_at(w).atom_count()));
        for (int a = 0; a < p.context_at(w).atom_count(); ++a) {
            fiber.push_back({p.id_at(w), a});
        }
        fibers_.push_back(std::move(fiber));
    }
}

const std::vector<Valuation>& DualPresheaf::fiber(int idx) const {
    return fibers_[static_cast<std::size_t>(idx)];
}

std::vector<int> DualPresheaf::restriction_map(int child, int parent) const {
    std::vector<int> out;
    const auto& parent_fiber = fibers_[static_cast<std::size_t>(parent)];
    out.reserve(parent_fiber.size());
    for (const auto& g : parent_fiber) {
        out.push_back(restrict_atom(*poset_, parent, g.selected_atom, child));
    }
    return out;
}

DualPresheaf build_dual_presheaf(const ContextPoset& p) {
    return DualPresheaf(p);
}

NaturalTransformationSection section_to_transformation(const LocalSection& s) {
    SectionCheck check = is_local_section(s);
    if (!check.ok) {
        throw InvalidInputError("not a local section: " + check.message);
    }
    return {s.domain(), s.assignment()};
}

LocalSection transformation_to_section(const NaturalTransformationSection& t) {
    const ContextPoset& p = t.subfunctor_domain.poset();
    if (static_cast<int>(t.component_by_node.size()) != p.size()) {
        throw InvalidInputError("transformation component list has the wrong length");
    }
    for (int w = 0; w < p.size(); ++w) {
        bool in_domain = t.subfunctor_domain.contains(w);
        int comp = t.component_by_node[static_cast<std::size_t>(w)];
        if (in_domain != (comp >= 0)) {
            throw InvalidInputError("transformation components do not match the subfunctor "
                                    "domain at '" + p.id_at(w) + "'");
        }
        if (in_domain && comp >= p.context_at(w).atom_count()) {
            throw InvalidInputError("transformation component out of the fiber at '" +
                                    p.id_at(w) + "'");
        }
    }
    // Naturality: components commute with the presheaf's restriction maps.
    for (int v = 0; v < p.size(); ++v) {
        if (!t.subfunctor_domain.contains(v)) continue;
        for (int w = 0; w < p.size(); ++w) {
            if (v == w || !t.subfunctor_domain.contains(w) || !p.leq(v, w)) continue;
            int restricted = restrict_atom(p, w, t.component_by_node[static_cast<std::size_t>(w)], v);
            if (restricted != t.component_by_node[static_cast<std::size_t>(v)]) {
                throw InvalidInputError("naturality violated between '" + p.id_at(w) +
                                        "' and '" + p.id_at(v) + "'");
            }
        }
    }
    return {p, t.component_by_node};
}

} // namespace ctxlogic
