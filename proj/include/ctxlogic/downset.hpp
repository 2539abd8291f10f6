// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_DOWNSET_HPP
#define CTXLOGIC_DOWNSET_HPP

#include <string>
#include <vector>

#include "ctxlogic/poset.hpp"

namespace ctxlogic {

/// Down-closed subset of a context poset — an open set of the downset
/// topology, and a truth value of the contextual logic. Construction
/// enforces down-closure.
class Downset {
public:
    static Downset empty(const ContextPoset& p);
    static Downset full(const ContextPoset& p);
    /// (w] = everything below node `idx`.
    static Downset principal(const ContextPoset& p, int idx);
    /// Validates down-closure; throws InvalidInputError when violated.
    static Downset from_members(const ContextPoset& p, std::vector<bool> bits);
    /// Smallest downset containing the seed nodes.
    static Downset down_closure(const ContextPoset& p, const std::vector<bool>& seeds);

    const ContextPoset& poset() const { return *poset_; }
    const std::vector<bool>& bits() const { return bits_; }

    bool contains(int idx) const { return bits_[static_cast<std::size_t>(idx)]; }
    int count() const;
    bool is_empty() const { return count() == 0; }
    bool is_full() const { return count() == poset_->size(); }

    /// Member node indices, ascending.
    std::vector<int> members() const;
    /// Member context ids, sorted lexicographically.
    std::vector<std::string> member_ids() const;

    bool subset_of(const Downset& o) const;

    friend bool operator==(const Downset& a, const Downset& b) {
        return a.poset_ == b.poset_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Downset& a, const Downset& b) { return !(a == b); }

private:
    Downset(const ContextPoset& p, std::vector<bool> bits)
        : poset_(&p), bits_(std::move(bits)) {}

    const ContextPoset* poset_;
    std::vector<bool> bits_;
};

/// True iff `bits` marks a down-closed set of p's nodes.
bool is_downset(const ContextPoset& p, const std::vector<bool>& bits);
/// Id-based variant; unknown ids throw NotFoundError.
bool is_downset(const ContextPoset& p, const std::vector<std::string>& ids);

/// Principal downset of the node with the given id.
Downset principal_downset(const ContextPoset& p, int idx);
Downset principal_downset(const ContextPoset& p, const Context& w);

/// Throws unless both downsets live on the same poset.
void require_same_poset(const Downset& a, const Downset& b);

} // namespace ctxlogic

#endif
