// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_POSET_HPP
#define CTXLOGIC_POSET_HPP

#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "ctxlogic/context.hpp"

namespace ctxlogic {

/// Finite, coarsening-closed family of contexts ordered by subalgebra
/// inclusion. Immutable after build; node indices follow the canonical
/// storage order (atom count ascending, then atom-key order), so index 0 is
/// always the trivial context {0, I}.
///
/// Input contexts keep their user-supplied ids and are recorded as the
/// poset's maximal elements; closure-generated contexts are named
/// "W#1", "W#2", ... in canonical order, which makes ids reproducible
/// across runs.
class ContextPoset {
public:
    /// Deduplicated coarsening closure of the inputs. With `close_joins`,
    /// additionally closes under common refinements of compatible pairs.
    /// Inputs must be nonempty, share one dimension and carry distinct,
    /// nonempty ids.
    static ContextPoset build(std::vector<Context> inputs, bool close_joins = false);

    int size() const { return static_cast<int>(nodes_.size()); }
    int dim() const { return nodes_.front().dim(); }

    const Context& context_at(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }
    const std::string& id_at(int idx) const { return context_at(idx).id(); }

    std::optional<int> index_of_id(std::string_view id) const;
    /// Node with the same atom set as `w`, if present.
    std::optional<int> index_of(const Context& w) const;
    /// Like index_of_id but throws NotFoundError.
    int require_id(std::string_view id) const;

    /// context_at(a) <= context_at(b) in the subalgebra order.
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][b]; }

    /// Index of the trivial context {0, I} — the poset's bottom.
    int bottom() const { return 0; }

    /// Indices of the (deduplicated) input contexts, in input order.
    const std::vector<int>& maximal() const { return maximal_; }

    /// For child <= parent: table mapping each parent atom index to the
    /// child atom containing it.
    const std::vector<int>& restriction(int child, int parent) const;

    /// Covering relation, as (child, parent) pairs in canonical order.
    const std::vector<std::pair<int, int>>& covering_edges() const { return covers_; }

private:
    ContextPoset() = default;

    std::vector<Context> nodes_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<std::vector<int>>> restr_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> maximal_;
    std::unordered_map<std::string, int> by_id_;
    std::unordered_map<std::string, int> by_key_;
};

} // namespace ctxlogic

#endif
