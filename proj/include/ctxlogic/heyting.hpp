// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_HEYTING_HPP
#define CTXLOGIC_HEYTING_HPP

#include "ctxlogic/downset.hpp"

namespace ctxlogic {

/// The downsets of a context poset form a Heyting algebra: meet and join are
/// intersection and union, implication is the relative pseudo-complement and
/// negation the pseudo-complement. These are the truth-value operations of
/// the contextual logic.

Downset heyting_and(const Downset& s, const Downset& t);
Downset heyting_or(const Downset& s, const Downset& t);

/// s -> t = { P : for all X <= P, X in s implies X in t }.
Downset heyting_implies(const Downset& s, const Downset& t);

/// ~s = (s -> empty). Equals the interior of the complement of s.
Downset heyting_not(const Downset& s);

/// Same value computed as the union of the principal downsets contained in
/// the complement of s — the topological route, kept separate from
/// heyting_not for cross-checking.
Downset interior_of_complement(const Downset& s);

/// Same value once more, by the direct comprehension
/// { P : for all X <= P, X not in s }.
Downset complement_comprehension(const Downset& s);

/// Nodes in neither s nor ~s — the contexts where s is undecided. Not a
/// downset in general, hence returned as raw bits. s, ~s and the border
/// partition the poset.
std::vector<bool> border(const Downset& s);

/// Context ids of the border, sorted.
std::vector<std::string> border_ids(const Downset& s);

} // namespace ctxlogic

#endif
