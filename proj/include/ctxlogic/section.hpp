// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_SECTION_HPP
#define CTXLOGIC_SECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctxlogic/downset.hpp"

namespace ctxlogic {

/// Boolean valuation on a context, in ultrafilter form: a homomorphism
/// W -> 2 on a finite Boolean algebra is exactly the choice of one atom
/// (the elements mapped to 1 are those whose atom mask contains it).
struct Valuation {
    std::string context_id;
    int selected_atom = 0;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.context_id == b.context_id && a.selected_atom == b.selected_atom;
    }
};

/// A choice of one valuation per context over some subset of the poset,
/// stored as an atom index per node (-1 where undefined). A *valid* local
/// section additionally has a down-closed domain and compatible values —
/// that is exactly what is_local_section checks, so candidates violating
/// either condition can be represented and diagnosed.
class LocalSection {
public:
    LocalSection(const ContextPoset& p, std::vector<int> atom_by_node);
    /// Section with empty domain.
    static LocalSection empty(const ContextPoset& p);

    const ContextPoset& poset() const { return *poset_; }
    /// Atom index per node, -1 outside the domain.
    const std::vector<int>& assignment() const { return atom_by_node_; }
    std::vector<bool> domain_bits() const;
    /// Domain as a Downset; throws when the domain is not down-closed.
    Downset domain() const;
    int domain_size() const;

    bool defined_at(int idx) const { return atom_by_node_[static_cast<std::size_t>(idx)] >= 0; }
    int atom_at(int idx) const;
    Valuation valuation_at(int idx) const;

    friend bool operator==(const LocalSection& a, const LocalSection& b) {
        return a.poset_ == b.poset_ && a.atom_by_node_ == b.atom_by_node_;
    }
    friend bool operator!=(const LocalSection& a, const LocalSection& b) { return !(a == b); }

private:
    const ContextPoset* poset_;
    std::vector<int> atom_by_node_;
};

/// Restriction of a valuation to a coarser context: the unique atom of the
/// child containing the parent's selected atom.
int restrict_atom(const ContextPoset& p, int parent, int selected_atom, int child);
/// Context-level variant, independent of any poset. Throws unless v <= w.
int restrict_selected_atom(const Context& w, int selected_atom, const Context& v);
Valuation restrict_valuation(const ContextPoset& p, const Valuation& f,
                             const std::string& child_id);

/// Verdict of the section check, naming the first violation found.
struct SectionCheck {
    enum class Violation {
        None,
        DomainNotDownClosed,
        AtomOutOfRange,
        IncompatiblePair,
    };

    bool ok = true;
    Violation violation = Violation::None;
    int node_a = -1; // offending node (the lower one for pair violations)
    int node_b = -1;
    std::string message;
};

/// True iff the domain is open (down-closed) and every comparable pair in it
/// satisfies the restriction condition.
SectionCheck is_local_section(const LocalSection& s);

/// Section over (w] induced by a single valuation on w.
LocalSection principal_section(const ContextPoset& p, int w_idx, int selected_atom);

/// All extensions of s whose domain is the down-closure of dom(s) plus node
/// w_idx: one candidate per atom of w, kept when compatible. May be empty.
/// Throws if w is already in the domain.
std::vector<LocalSection> extend_section(const LocalSection& s, int w_idx);

/// Outcome of the exhaustive global-section search. `explored` counts the
/// (context, atom) assignments tried — a search certificate, not a proof
/// object.
struct GlobalSearchResult {
    std::optional<LocalSection> section;
    std::uint64_t explored = 0;
};

/// Backtracking search for a global section — a compatible valuation family
/// on the whole poset. Branches only on the poset's maximal elements, most
/// shared structure first; everything below is forced by restriction. The
/// verdict is deterministic and, when a section exists, the first one in
/// canonical order is returned.
GlobalSearchResult find_global_section(const ContextPoset& p);

/// Parity obstruction: a global section selects exactly one atom per maximal
/// element, so if every atom occurs in an even number of maximal elements the
/// selected occurrences sum to an even number — impossible when the count of
/// maximal elements is odd. Applicable only when all multiplicities are even.
enum class ParityVerdict { Unsat, NotApplicable };
ParityVerdict parity_oracle(const ContextPoset& p);

/// Extended valuation of s over the context at wa_idx: the members of dom(s)
/// lying below it. Always a downset; equals (wa] when wa is in the domain.
Downset extended_valuation(const LocalSection& s, int wa_idx);

/// What the context at wb_idx (inside the domain) tells about the one at
/// wa_idx: s restricted to their intersection. Empty only if the
/// intersection is not a poset member, which cannot happen under coarsening
/// closure.
std::optional<Valuation> boolean_information(const LocalSection& s, int wb_idx, int wa_idx);

/// Every local section of p: all open domains, all compatible assignments.
/// Exhaustive; guarded against posets with more than 20 nodes.
std::vector<LocalSection> enumerate_local_sections(const ContextPoset& p);

} // namespace ctxlogic

#endif
