// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/context.hpp"

#include <algorithm>
#include <map>

#include "ctxlogic/partitions.hpp"

namespace ctxlogic {

Context Context::from_decomposition(std::vector<Projector> atoms, std::string id) {
    if (atoms.empty()) throw ValidationError("context needs at least one atom");
    if (atoms.size() > 30) {
        throw ValidationError("context has more than 30 atoms; element masks are 32-bit");
    }
    const int n = atoms.front().dim();
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (atoms[k].dim() != n) throw DimensionMismatchError(n, atoms[k].dim());
        if (atoms[k].is_zero()) {
            throw ValidationError("atom " + std::to_string(k) + " of context '" + id +
                                  "' is the zero projector");
        }
    }
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (std::size_t b = a + 1; b < atoms.size(); ++b) {
            if (!are_orthogonal(atoms[a], atoms[b])) {
                throw ValidationError("atoms " + std::to_string(a) + " and " +
                                      std::to_string(b) + " of context '" + id +
                                      "' are not orthogonal");
            }
        }
    }
    if (!sum_is_identity(atoms)) {
        throw ValidationError("atoms of context '" + id + "' do not sum to the identity");
    }
    std::sort(atoms.begin(), atoms.end());

    Context w;
    w.id_ = std::move(id);
    w.atoms_ = std::move(atoms);
    for (const auto& p : w.atoms_) w.key_ += p.key();
    return w;
}

Context Context::with_id(std::string id) const {
    Context w(*this);
    w.id_ = std::move(id);
    return w;
}

Projector Context::element(std::uint32_t mask) const {
    Matrix sum(dim());
    for (int k = 0; k < atom_count(); ++k) {
        if (mask & (1u << k)) sum += atoms_[k].matrix();
    }
    return Projector::from_matrix(std::move(sum));
}

std::optional<std::uint32_t> Context::mask_of(const Projector& p) const {
    if (p.dim() != dim()) throw DimensionMismatchError(dim(), p.dim());
    std::uint32_t mask = 0;
    Matrix sum(dim());
    for (int k = 0; k < atom_count(); ++k) {
        if (is_subprojector(atoms_[k], p)) {
            mask |= 1u << k;
            sum += atoms_[k].matrix();
        }
    }
    if (sum == p.matrix()) return mask;
    return std::nullopt;
}

Context spectral_algebra(const Operator& a) {
    std::vector<Projector> atoms;
    atoms.reserve(a.spectrum().size());
    for (const auto& pair : a.spectrum()) atoms.push_back(pair.projector);
    return Context::from_decomposition(std::move(atoms));
}

bool context_leq(const Context& w1, const Context& w2) {
    if (w1.dim() != w2.dim()) throw DimensionMismatchError(w1.dim(), w2.dim());
    for (const auto& a : w1.atoms()) {
        if (!w2.contains(a)) return false;
    }
    return true;
}

std::vector<Context> coarsenings(const Context& w) {
    const int k = w.atom_count();
    std::vector<Context> out;
    for_each_set_partition(k, [&](const std::vector<int>& block_of) {
        int blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
        std::vector<Projector> atoms;
        atoms.reserve(blocks);
        for (int b = 0; b < blocks; ++b) {
            std::vector<Projector> members;
            for (int i = 0; i < k; ++i) {
                if (block_of[i] == b) members.push_back(w.atom(i));
            }
            atoms.push_back(sum_projectors(members));
        }
        out.push_back(Context::from_decomposition(std::move(atoms)));
    });
    return out;
}

Context intersect_contexts(const Context& w1, const Context& w2) {
    if (w1.dim() != w2.dim()) throw DimensionMismatchError(w1.dim(), w2.dim());
    const int k = w1.atom_count();
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);

    // Common elements of the two algebras, as masks over w1's atoms. The set
    // is closed under complement and meet, so the minimal common element
    // containing atom i is the AND of all common masks with bit i set; the
    // distinct minima are the atoms of the intersection algebra.
    std::vector<std::uint32_t> common;
    for (std::uint32_t m = 1; m <= full; ++m) {
        if (w2.contains(w1.element(m))) common.push_back(m);
    }
    std::vector<std::uint32_t> block_of(k, full);
    for (int i = 0; i < k; ++i) {
        for (std::uint32_t m : common) {
            if (m & (1u << i)) block_of[i] &= m;
        }
    }
    std::vector<std::uint32_t> blocks(block_of);
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());

    std::vector<Projector> atoms;
    atoms.reserve(blocks.size());
    for (std::uint32_t b : blocks) atoms.push_back(w1.element(b));
    return Context::from_decomposition(std::move(atoms));
}

bool contexts_compatible(const Context& w1, const Context& w2) {
    if (w1.dim() != w2.dim()) throw DimensionMismatchError(w1.dim(), w2.dim());
    for (const auto& p : w1.atoms()) {
        for (const auto& q : w2.atoms()) {
            if (p.matrix() * q.matrix() != q.matrix() * p.matrix()) return false;
        }
    }
    return true;
}

std::optional<Context> join_refinement(const Context& w1, const Context& w2) {
    if (!contexts_compatible(w1, w2)) return std::nullopt;
    std::vector<Projector> atoms;
    for (const auto& p : w1.atoms()) {
        for (const auto& q : w2.atoms()) {
            Matrix prod = p.matrix() * q.matrix(); // a projector: p, q commute
            if (!prod.is_zero()) atoms.push_back(Projector::from_matrix(std::move(prod)));
        }
    }
    return Context::from_decomposition(std::move(atoms));
}

} // namespace ctxlogic
