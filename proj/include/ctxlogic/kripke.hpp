// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_KRIPKE_HPP
#define CTXLOGIC_KRIPKE_HPP

#include <functional>
#include <map>

#include "ctxlogic/formula.hpp"
#include "ctxlogic/heyting.hpp"
#include "ctxlogic/section.hpp"

namespace ctxlogic {

/// Kripke model for the contextual language: the context poset as the frame,
/// a local section supplying the valuations, and a binding of each atomic
/// formula to the context (spectral algebra) it speaks about.
class KripkeModel {
public:
    /// Validates that the section is a local section of p and every bound
    /// context id is a poset member; fails loudly otherwise.
    KripkeModel(const ContextPoset& p, LocalSection section,
                std::map<std::string, std::string> bindings);

    const ContextPoset& poset() const { return *poset_; }
    const LocalSection& section() const { return section_; }
    /// atom name -> node index of its bound context.
    const std::map<std::string, int>& bindings() const { return bindings_; }

    int bound_context(const std::string& atom) const;

private:
    const ContextPoset* poset_;
    LocalSection section_;
    std::map<std::string, int> bindings_;
};

/// World-indexed satisfaction at the context with index w:
///   atom  — w lies in the extended valuation of its bound context,
///   or/and — pointwise,
///   ->    — for every B <= w, forcing the antecedent forces the consequent,
///   ~     — no B <= w forces the operand.
/// Implemented by recursion over subformulas memoized per (context, node),
/// so a full evaluation is O(|poset|^2 * |formula|).
bool forces(const KripkeModel& m, int w, const Formula& phi);

/// Truth value of phi: the downset of all forcing contexts.
Downset eval_formula(const KripkeModel& m, const Formula& phi);

/// Checks that eval_formula distributes over the four connectives, pairwise
/// over the given formulas (and per-formula for negation), against the
/// Heyting operations computed independently. `eval_override` substitutes the
/// evaluation route being audited; the default is eval_formula itself.
struct HomomorphismViolation {
    std::string law; // "or", "and", "implies", "not"
    std::string formula;
    std::string context_id;
};
struct HomomorphismReport {
    bool ok = true;
    std::vector<HomomorphismViolation> violations;
    int pairs_checked = 0;
};
HomomorphismReport check_heyting_homomorphism(
    const KripkeModel& m, const std::vector<FormulaPtr>& phis,
    const std::function<Downset(const Formula&)>& eval_override = {});

/// An atom A and context W forcing neither A nor ~A (so W |- A v ~A fails),
/// if any binding has a nonempty border. Returns (atom, context id).
std::optional<std::pair<std::string, std::string>> excluded_middle_witness(
    const KripkeModel& m);

} // namespace ctxlogic

#endif
