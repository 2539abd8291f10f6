// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/kripke.hpp"

#include <unordered_map>

namespace ctxlogic {

KripkeModel::KripkeModel(const ContextPoset& p, LocalSection section,
                         std::map<std::string, std::string> bindings)
    : poset_(&p), section_(std::move(section)) {
    if (&section_.poset() != &p) {
        throw InvalidInputError("section belongs to a different poset");
    }
    SectionCheck check = is_local_section(section_);
    if (!check.ok) {
        throw InvalidInputError("model section is not a local section: " + check.message);
    }
    for (auto& [atom, ctx_id] : bindings) {
        auto idx = p.index_of_id(ctx_id);
        if (!idx) {
            throw NotFoundError("atom '" + atom + "' is bound to '" + ctx_id +
                                "', which is not a poset member; rebuild the poset");
        }
        bindings_.emplace(atom, *idx);
    }
}

int KripkeModel::bound_context(const std::string& atom) const {
    auto it = bindings_.find(atom);
    if (it == bindings_.end()) throw NotFoundError("unbound atom '" + atom + "'");
    return it->second;
}

namespace {

// Forcing with a per-evaluation memo over (subformula, context). The -> and
// ~ clauses recurse over principal downsets, so without memoization the cost
// would be exponential in formula depth.
class ForcingEvaluator {
public:
    explicit ForcingEvaluator(const KripkeModel& m) : m_(m) {}

    bool force(int w, const Formula& f) {
        auto& states = memo_[&f];
        if (states.empty()) states.assign(static_cast<std::size_t>(m_.poset().size()), -1);
        signed char& st = states[static_cast<std::size_t>(w)];
        if (st >= 0) return st != 0;
        bool r = compute(w, f);
        st = r ? 1 : 0;
        return r;
    }

private:
    bool compute(int w, const Formula& f) {
        const ContextPoset& p = m_.poset();
        switch (f.kind) {
        case Formula::Kind::Atom: {
            int wa = m_.bound_context(f.name);
            return m_.section().defined_at(w) && p.leq(w, wa);
        }
        case Formula::Kind::Or:
            return force(w, *f.lhs) || force(w, *f.rhs);
        case Formula::Kind::And:
            return force(w, *f.lhs) && force(w, *f.rhs);
        case Formula::Kind::Implies:
            for (int b = 0; b < p.size(); ++b) {
                if (p.leq(b, w) && force(b, *f.lhs) && !force(b, *f.rhs)) return false;
            }
            return true;
        case Formula::Kind::Not:
            for (int b = 0; b < p.size(); ++b) {
                if (p.leq(b, w) && force(b, *f.lhs)) return false;
            }
            return true;
        }
        throw Error("unreachable formula kind");
    }

    const KripkeModel& m_;
    std::unordered_map<const Formula*, std::vector<signed char>> memo_;
};

} // namespace

bool forces(const KripkeModel& m, int w, const Formula& phi) {
    if (w < 0 || w >= m.poset().size()) throw InvalidInputError("node index out of range");
    return ForcingEvaluator(m).force(w, phi);
}

Downset eval_formula(const KripkeModel& m, const Formula& phi) {
    const ContextPoset& p = m.poset();
    ForcingEvaluator ev(m);
    std::vector<bool> bits(static_cast<std::size_t>(p.size()));
    for (int w = 0; w < p.size(); ++w) bits[static_cast<std::size_t>(w)] = ev.force(w, phi);
    // Persistence makes this a downset for every formula; from_members
    // re-checks and would reject a broken evaluation.
    return Downset::from_members(p, std::move(bits));
}

HomomorphismReport check_heyting_homomorphism(
    const KripkeModel& m, const std::vector<FormulaPtr>& phis,
    const std::function<Downset(const Formula&)>& eval_override) {
    auto eval = eval_override ? eval_override : [&m](const Formula& f) {
        return eval_formula(m, f);
    };
    HomomorphismReport report;

    auto first_mismatch = [&](const Downset& a, const Downset& b) -> std::string {
        for (int k = 0; k < m.poset().size(); ++k) {
            if (a.contains(k) != b.contains(k)) return m.poset().id_at(k);
        }
        return "";
    };
    auto check_law = [&](const char* law, const FormulaPtr& combined, const Downset& expected) {
        Downset actual = eval(*combined);
        if (actual != expected) {
            report.ok = false;
            report.violations.push_back({law, to_string(*combined),
                                         first_mismatch(actual, expected)});
        }
    };

    for (std::size_t i = 0; i < phis.size(); ++i) {
        Downset vi = eval(*phis[i]);
        check_law("not", Formula::make(Formula::Kind::Not, phis[i]), heyting_not(vi));
        for (std::size_t j = i; j < phis.size(); ++j) {
            Downset vj = eval(*phis[j]);
            ++report.pairs_checked;
            check_law("or", Formula::make(Formula::Kind::Or, phis[i], phis[j]),
                      heyting_or(vi, vj));
            check_law("and", Formula::make(Formula::Kind::And, phis[i], phis[j]),
                      heyting_and(vi, vj));
            check_law("implies", Formula::make(Formula::Kind::Implies, phis[i], phis[j]),
                      heyting_implies(vi, vj));
            if (i != j) {
                check_law("implies", Formula::make(Formula::Kind::Implies, phis[j], phis[i]),
                          heyting_implies(vj, vi));
            }
        }
    }
    return report;
}

std::optional<std::pair<std::string, std::string>> excluded_middle_witness(
    const KripkeModel& m) {
    for (const auto& [atom, wa] : m.bindings()) {
        Downset value = eval_formula(m, *Formula::atom(atom));
        std::vector<bool> undecided = border(value);
        for (int w = 0; w < m.poset().size(); ++w) {
            if (undecided[static_cast<std::size_t>(w)]) {
                return std::make_pair(atom, m.poset().id_at(w));
            }
        }
    }
    return std::nullopt;
}

} // namespace ctxlogic
