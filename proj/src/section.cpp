// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/section.hpp"

#include <algorithm>
#include <numeric>

namespace ctxlogic {

LocalSection::LocalSection(const ContextPoset& p, std::vector<int> atom_by_node)
    : poset_(&p), atom_by_node_(std::move(atom_by_node)) {
    if (static_cast<int>(atom_by_node_.size()) != p.size()) {
        throw InvalidInputError("section assignment has the wrong length");
    }
}

LocalSection LocalSection::empty(const ContextPoset& p) {
    return {p, std::vector<int>(static_cast<std::size_t>(p.size()), -1)};
}

std::vector<bool> LocalSection::domain_bits() const {
    std::vector<bool> bits(atom_by_node_.size());
    for (std::size_t k = 0; k < atom_by_node_.size(); ++k) bits[k] = atom_by_node_[k] >= 0;
    return bits;
}

Downset LocalSection::domain() const {
    return Downset::from_members(*poset_, domain_bits());
}

int LocalSection::domain_size() const {
    return static_cast<int>(std::count_if(atom_by_node_.begin(), atom_by_node_.end(),
                                          [](int a) { return a >= 0; }));
}

int LocalSection::atom_at(int idx) const {
    int a = atom_by_node_[static_cast<std::size_t>(idx)];
    if (a < 0) {
        throw InvalidInputError("section is undefined at context '" + poset_->id_at(idx) + "'");
    }
    return a;
}

Valuation LocalSection::valuation_at(int idx) const {
    return {poset_->id_at(idx), atom_at(idx)};
}

int restrict_atom(const ContextPoset& p, int parent, int selected_atom, int child) {
    const auto& table = p.restriction(child, parent);
    if (selected_atom < 0 || selected_atom >= static_cast<int>(table.size())) {
        throw InvalidInputError("selected atom out of range");
    }
    return table[static_cast<std::size_t>(selected_atom)];
}

int restrict_selected_atom(const Context& w, int selected_atom, const Context& v) {
    if (selected_atom < 0 || selected_atom >= w.atom_count()) {
        throw InvalidInputError("selected atom out of range");
    }
    if (!context_leq(v, w)) {
        throw InvalidInputError("context '" + v.id() + "' is not a coarsening of '" +
                                w.id() + "'");
    }
    for (int j = 0; j < v.atom_count(); ++j) {
        if (is_subprojector(w.atom(selected_atom), v.atom(j))) return j;
    }
    throw Error("no atom of a coarsening contains the selected atom"); // unreachable
}

Valuation restrict_valuation(const ContextPoset& p, const Valuation& f,
                             const std::string& child_id) {
    int parent = p.require_id(f.context_id);
    int child = p.require_id(child_id);
    return {p.id_at(child), restrict_atom(p, parent, f.selected_atom, child)};
}

SectionCheck is_local_section(const LocalSection& s) {
    const ContextPoset& p = s.poset();
    SectionCheck out;
    auto fail = [&](SectionCheck::Violation kind, int a, int b, std::string msg) {
        out.ok = false;
        out.violation = kind;
        out.node_a = a;
        out.node_b = b;
        out.message = std::move(msg);
    };

    for (int w = 0; w < p.size(); ++w) {
        if (!s.defined_at(w)) continue;
        for (int v = 0; v < p.size(); ++v) {
            if (p.leq(v, w) && !s.defined_at(v)) {
                fail(SectionCheck::Violation::DomainNotDownClosed, v, w,
                     "domain contains '" + p.id_at(w) + "' but not its coarsening '" +
                         p.id_at(v) + "'");
                return out;
            }
        }
    }
    for (int w = 0; w < p.size(); ++w) {
        if (!s.defined_at(w)) continue;
        int a = s.atom_at(w);
        if (a >= p.context_at(w).atom_count()) {
            fail(SectionCheck::Violation::AtomOutOfRange, w, -1,
                 "atom index " + std::to_string(a) + " out of range at '" + p.id_at(w) + "'");
            return out;
        }
    }
    for (int v = 0; v < p.size(); ++v) {
        if (!s.defined_at(v)) continue;
        for (int w = 0; w < p.size(); ++w) {
            if (v == w || !s.defined_at(w) || !p.leq(v, w)) continue;
            int expected = restrict_atom(p, w, s.atom_at(w), v);
            if (expected != s.atom_at(v)) {
                fail(SectionCheck::Violation::IncompatiblePair, v, w,
                     "valuation at '" + p.id_at(v) + "' is not the restriction of '" +
                         p.id_at(w) + "'");
                return out;
            }
        }
    }
    return out;
}

LocalSection principal_section(const ContextPoset& p, int w_idx, int selected_atom) {
    if (w_idx < 0 || w_idx >= p.size()) throw InvalidInputError("node index out of range");
    if (selected_atom < 0 || selected_atom >= p.context_at(w_idx).atom_count()) {
        throw InvalidInputError("selected atom out of range for context '" +
                                p.id_at(w_idx) + "'");
    }
    std::vector<int> atoms(static_cast<std::size_t>(p.size()), -1);
    for (int v = 0; v < p.size(); ++v) {
        if (p.leq(v, w_idx)) {
            atoms[static_cast<std::size_t>(v)] = restrict_atom(p, w_idx, selected_atom, v);
        }
    }
    return {p, std::move(atoms)};
}

std::vector<LocalSection> extend_section(const LocalSection& s, int w_idx) {
    const ContextPoset& p = s.poset();
    if (s.defined_at(w_idx)) {
        throw InvalidInputError("context '" + p.id_at(w_idx) + "' is already in the domain");
    }
    std::vector<LocalSection> out;
    for (int a = 0; a < p.context_at(w_idx).atom_count(); ++a) {
        std::vector<int> atoms = s.assignment();
        bool consistent = true;
        for (int v = 0; v < p.size() && consistent; ++v) {
            if (!p.leq(v, w_idx)) continue;
            int derived = restrict_atom(p, w_idx, a, v);
            int& slot = atoms[static_cast<std::size_t>(v)];
            if (slot < 0) {
                slot = derived;
            } else if (slot != derived) {
                consistent = false;
            }
        }
        if (!consistent) continue;
        LocalSection candidate(p, std::move(atoms));
        if (is_local_section(candidate).ok) out.push_back(std::move(candidate));
    }
    return out;
}

namespace {

std::vector<int> true_maximal_nodes(const ContextPoset& p) {
    std::vector<int> out;
    for (int k = 0; k < p.size(); ++k) {
        bool maximal = true;
        for (int j = 0; j < p.size() && maximal; ++j) {
            if (j != k && p.leq(k, j)) maximal = false;
        }
        if (maximal) out.push_back(k);
    }
    return out;
}

// Assignments tried most-constrained-first: branch on the maximal element
// sharing the most nontrivial algebra elements with the other maxima.
std::vector<int> search_order(const ContextPoset& p, const std::vector<int>& maxima) {
    std::vector<long long> score(maxima.size(), 0);
    for (std::size_t a = 0; a < maxima.size(); ++a) {
        for (std::size_t b = 0; b < maxima.size(); ++b) {
            if (a == b) continue;
            Context common =
                intersect_contexts(p.context_at(maxima[a]), p.context_at(maxima[b]));
            score[a] += (1LL << common.atom_count()) - 2; // nontrivial shared elements
        }
    }
    std::vector<int> order(maxima.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (score[x] != score[y]) return score[x] > score[y];
        return maxima[x] < maxima[y];
    });
    std::vector<int> out;
    out.reserve(order.size());
    for (int k : order) out.push_back(maxima[static_cast<std::size_t>(k)]);
    return out;
}

struct Searcher {
    const ContextPoset& p;
    std::vector<int> order;
    std::vector<int> value;
    std::uint64_t explored = 0;

    explicit Searcher(const ContextPoset& poset)
        : p(poset), value(static_cast<std::size_t>(poset.size()), -1) {
        order = search_order(p, true_maximal_nodes(p));
    }

    bool assign(int m, int atom, std::vector<int>& trail) {
        for (int v = 0; v < p.size(); ++v) {
            if (!p.leq(v, m)) continue;
            int derived = restrict_atom(p, m, atom, v);
            int& slot = value[static_cast<std::size_t>(v)];
            if (slot < 0) {
                slot = derived;
                trail.push_back(v);
            } else if (slot != derived) {
                return false;
            }
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        int m = order[depth];
        for (int atom = 0; atom < p.context_at(m).atom_count(); ++atom) {
            ++explored;
            std::vector<int> trail;
            if (assign(m, atom, trail) && search(depth + 1)) return true;
            for (int v : trail) value[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

GlobalSearchResult find_global_section(const ContextPoset& p) {
    Searcher s(p);
    GlobalSearchResult result;
    if (s.search(0)) {
        result.section = LocalSection(p, std::move(s.value));
    }
    result.explored = s.explored;
    return result;
}

ParityVerdict parity_oracle(const ContextPoset& p) {
    std::vector<int> maxima = true_maximal_nodes(p);
    std::unordered_map<std::string, int> multiplicity;
    for (int m : maxima) {
        for (const auto& atom : p.context_at(m).atoms()) ++multiplicity[atom.key()];
    }
    for (const auto& [key, count] : multiplicity) {
        if (count % 2 != 0) return ParityVerdict::NotApplicable;
    }
    return (maxima.size() % 2 != 0) ? ParityVerdict::Unsat : ParityVerdict::NotApplicable;
}

Downset extended_valuation(const LocalSection& s, int wa_idx) {
    const ContextPoset& p = s.poset();
    if (wa_idx < 0 || wa_idx >= p.size()) throw InvalidInputError("node index out of range");
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int v = 0; v < p.size(); ++v) {
        bits[static_cast<std::size_t>(v)] = s.defined_at(v) && p.leq(v, wa_idx);
    }
    return Downset::from_members(p, std::move(bits));
}

std::optional<Valuation> boolean_information(const LocalSection& s, int wb_idx, int wa_idx) {
    const ContextPoset& p = s.poset();
    if (!s.defined_at(wb_idx)) {
        throw InvalidInputError("context '" + p.id_at(wb_idx) +
                                "' is outside the section's domain");
    }
    Context common = intersect_contexts(p.context_at(wb_idx), p.context_at(wa_idx));
    auto idx = p.index_of(common);
    if (!idx) return std::nullopt;
    return Valuation{p.id_at(*idx), restrict_atom(p, wb_idx, s.atom_at(wb_idx), *idx)};
}

std::vector<LocalSection> enumerate_local_sections(const ContextPoset& p) {
    if (p.size() > 16) {
        throw InvalidInputError("section enumeration is limited to posets with <= 16 nodes");
    }
    std::vector<LocalSection> out;
    const std::uint32_t limit = 1u << p.size();
    for (std::uint32_t set = 0; set < limit; ++set) {
        std::vector<bool> bits(static_cast<std::size_t>(p.size()));
        for (int k = 0; k < p.size(); ++k) bits[static_cast<std::size_t>(k)] = set & (1u << k);
        if (!is_downset(p, bits)) continue;

        // Branch over the subset's maximal members; the rest is forced.
        std::vector<int> tops;
        for (int w = 0; w < p.size(); ++w) {
            if (!bits[static_cast<std::size_t>(w)]) continue;
            bool top = true;
            for (int u = 0; u < p.size() && top; ++u) {
                if (u != w && bits[static_cast<std::size_t>(u)] && p.leq(w, u)) top = false;
            }
            if (top) tops.push_back(w);
        }

        std::vector<int> value(static_cast<std::size_t>(p.size()), -1);
        auto rec = [&](auto&& self, std::size_t depth) -> void {
            if (depth == tops.size()) {
                out.emplace_back(p, value);
                return;
            }
            int m = tops[depth];
            for (int atom = 0; atom < p.context_at(m).atom_count(); ++atom) {
                std::vector<int> trail;
                bool ok = true;
                for (int v = 0; v < p.size() && ok; ++v) {
                    if (!p.leq(v, m)) continue;
                    int derived = restrict_atom(p, m, atom, v);
                    int& slot = value[static_cast<std::size_t>(v)];
                    if (slot < 0) {
                        slot = derived;
                        trail.push_back(v);
                    } else if (slot != derived) {
                        ok = false;
                    }
                }
                if (ok) self(self, depth + 1);
                for (int v : trail) value[static_cast<std::size_t>(v)] = -1;
            }
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace ctxlogic
