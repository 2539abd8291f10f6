// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctxlogic {

namespace {

bool canonical_before(const Context& a, const Context& b) {
    if (a.atom_count() != b.atom_count()) return a.atom_count() < b.atom_count();
    return a.key() < b.key();
}

// Interning cache for the order computation: the same atom projectors recur
// across many nodes, so subprojector tests and algebra-membership masks are
// memoized on small integer ids instead of recomputed from matrices.
class OrderCache {
public:
    explicit OrderCache(const std::vector<Context>& nodes) : nodes_(nodes) {
        atom_ids_.resize(nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (const auto& a : nodes[k].atoms()) atom_ids_[k].push_back(intern(a));
        }
    }

    // Mask of node `w`'s atoms summing to projector `pid`, or -1.
    std::int64_t mask_in(int pid, int w) {
        std::uint64_t key = (static_cast<std::uint64_t>(pid) << 32) |
                            static_cast<std::uint32_t>(w);
        auto it = mask_memo_.find(key);
        if (it != mask_memo_.end()) return it->second;

        const Context& ctx = nodes_[static_cast<std::size_t>(w)];
        const Projector& p = *pool_[static_cast<std::size_t>(pid)];
        std::uint32_t mask = 0;
        Matrix sum(ctx.dim());
        for (int k = 0; k < ctx.atom_count(); ++k) {
            if (sub(atom_ids_[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)], pid)) {
                mask |= 1u << k;
                sum += ctx.atom(k).matrix();
            }
        }
        std::int64_t result = (sum == p.matrix()) ? static_cast<std::int64_t>(mask) : -1;
        mask_memo_.emplace(key, result);
        return result;
    }

    bool leq(int a, int b) {
        for (int pid : atom_ids_[static_cast<std::size_t>(a)]) {
            if (mask_in(pid, b) < 0) return false;
        }
        return true;
    }

    const std::vector<int>& atom_ids(int node) const {
        return atom_ids_[static_cast<std::size_t>(node)];
    }

private:
    int intern(const Projector& p) {
        auto it = by_key_.find(p.key());
        if (it != by_key_.end()) return it->second;
        int id = static_cast<int>(pool_.size());
        pool_.push_back(&p);
        by_key_.emplace(p.key(), id);
        return id;
    }

    // a <= b as subspaces.
    bool sub(int a, int b) {
        if (a == b) return true;
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) |
                            static_cast<std::uint32_t>(b);
        auto it = sub_memo_.find(key);
        if (it != sub_memo_.end()) return it->second;
        bool r = is_subprojector(*pool_[static_cast<std::size_t>(a)],
                                 *pool_[static_cast<std::size_t>(b)]);
        sub_memo_.emplace(key, r);
        return r;
    }

    const std::vector<Context>& nodes_;
    std::vector<const Projector*> pool_;
    std::unordered_map<std::string, int> by_key_;
    std::vector<std::vector<int>> atom_ids_;
    std::unordered_map<std::uint64_t, bool> sub_memo_;
    std::unordered_map<std::uint64_t, std::int64_t> mask_memo_;
};

} // namespace

ContextPoset ContextPoset::build(std::vector<Context> inputs, bool close_joins) {
    if (inputs.empty()) throw ValidationError("poset needs at least one input context");
    const int dim = inputs.front().dim();
    std::set<std::string> seen_ids;
    for (auto& w : inputs) {
        if (w.dim() != dim) throw DimensionMismatchError(dim, w.dim());
        if (w.id().empty()) throw ValidationError("input context without an id");
        if (!seen_ids.insert(w.id()).second) {
            throw ValidationError("duplicate context id '" + w.id() + "'");
        }
    }

    // Dedupe inputs by atom set, keeping the first name.
    std::vector<Context> gens;
    std::set<std::string> gen_keys;
    for (auto& w : inputs) {
        if (gen_keys.insert(w.key()).second) gens.push_back(std::move(w));
    }

    // Coarsening closure. Generated members carry empty ids until numbering.
    std::map<std::string, Context> members; // key -> context
    for (const auto& w : gens) {
        for (auto& c : coarsenings(w)) members.emplace(c.key(), std::move(c));
        members.insert_or_assign(w.key(), w); // keep the input's name
    }
    if (close_joins) {
        // Also close under common refinements of compatible pairs, then
        // re-close under coarsenings, until a fixpoint.
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Context> snapshot;
            snapshot.reserve(members.size());
            for (const auto& [key, w] : members) snapshot.push_back(w);
            for (std::size_t a = 0; a < snapshot.size(); ++a) {
                for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                    auto j = join_refinement(snapshot[a], snapshot[b]);
                    if (!j || members.count(j->key())) continue;
                    for (auto& c : coarsenings(*j)) {
                        if (members.emplace(c.key(), std::move(c)).second) grew = true;
                    }
                }
            }
        }
        for (const auto& g : gens) members.insert_or_assign(g.key(), g);
    }

    ContextPoset p;
    p.nodes_.reserve(members.size());
    for (auto& [key, w] : members) p.nodes_.push_back(std::move(w));
    std::sort(p.nodes_.begin(), p.nodes_.end(), canonical_before);

    // Number the generated contexts in canonical order, skipping taken names.
    std::set<std::string> taken;
    for (const auto& w : p.nodes_) {
        if (!w.id().empty()) taken.insert(w.id());
    }
    int counter = 0;
    for (auto& w : p.nodes_) {
        if (w.id().empty()) {
            std::string name;
            do {
                name = "W#" + std::to_string(++counter);
            } while (taken.count(name));
            w = w.with_id(std::move(name));
        }
    }

    const int count = p.size();
    for (int k = 0; k < count; ++k) {
        p.by_key_.emplace(p.nodes_[k].key(), k);
        p.by_id_.emplace(p.nodes_[k].id(), k);
    }
    for (const auto& g : gens) p.maximal_.push_back(p.by_key_.at(g.key()));

    OrderCache cache(p.nodes_);
    p.leq_.assign(count, std::vector<bool>(count, false));
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            p.leq_[a][b] = (a == b) || cache.leq(a, b);
        }
    }

    // Poset axioms, checked outright. Reflexivity holds by construction.
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a != b && p.leq_[a][b] && p.leq_[b][a]) {
                throw Error("poset order is not antisymmetric (duplicate contexts?)");
            }
            if (!p.leq_[a][b]) continue;
            for (int c = 0; c < count; ++c) {
                if (p.leq_[b][c] && !p.leq_[a][c]) {
                    throw Error("poset order is not transitive");
                }
            }
        }
    }

    // Restriction tables for every comparable pair: child atoms are sums of
    // parent atoms, so each parent atom lies in exactly one child atom.
    p.restr_.assign(count, std::vector<std::vector<int>>(count));
    for (int child = 0; child < count; ++child) {
        for (int parent = 0; parent < count; ++parent) {
            if (!p.leq_[child][parent]) continue;
            const Context& v = p.nodes_[child];
            const Context& w = p.nodes_[parent];
            std::vector<int> table(w.atom_count(), -1);
            for (int j = 0; j < v.atom_count(); ++j) {
                std::int64_t mask = cache.mask_in(cache.atom_ids(child)[j], parent);
                for (int i = 0; i < w.atom_count(); ++i) {
                    if (mask & (1 << i)) table[i] = j;
                }
            }
            p.restr_[child][parent] = std::move(table);
        }
    }

    // Covering edges: a < b with nothing strictly between.
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a == b || !p.leq_[a][b]) continue;
            bool covering = true;
            for (int c = 0; c < count && covering; ++c) {
                if (c != a && c != b && p.leq_[a][c] && p.leq_[c][b]) covering = false;
            }
            if (covering) p.covers_.emplace_back(a, b);
        }
    }
    return p;
}

std::optional<int> ContextPoset::index_of_id(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ContextPoset::index_of(const Context& w) const {
    auto it = by_key_.find(w.key());
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

int ContextPoset::require_id(std::string_view id) const {
    auto idx = index_of_id(id);
    if (!idx) throw NotFoundError("unknown context id '" + std::string(id) + "'");
    return *idx;
}

const std::vector<int>& ContextPoset::restriction(int child, int parent) const {
    if (!leq(child, parent)) {
        throw InvalidInputError("restriction requires '" + id_at(child) + "' <= '" +
                                id_at(parent) + "'");
    }
    return restr_[static_cast<std::size_t>(child)][parent];
}

} // namespace ctxlogic
