// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/heyting.hpp"

#include <algorithm>

namespace ctxlogic {

Downset heyting_and(const Downset& s, const Downset& t) {
    require_same_poset(s, t);
    std::vector<bool> bits(s.bits());
    for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = bits[k] && t.bits()[k];
    return Downset::from_members(s.poset(), std::move(bits));
}

Downset heyting_or(const Downset& s, const Downset& t) {
    require_same_poset(s, t);
    std::vector<bool> bits(s.bits());
    for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = bits[k] || t.bits()[k];
    return Downset::from_members(s.poset(), std::move(bits));
}

Downset heyting_implies(const Downset& s, const Downset& t) {
    require_same_poset(s, t);
    const ContextPoset& p = s.poset();
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int w = 0; w < p.size(); ++w) {
        bool holds = true;
        for (int x = 0; x < p.size() && holds; ++x) {
            if (p.leq(x, w) && s.contains(x) && !t.contains(x)) holds = false;
        }
        bits[static_cast<std::size_t>(w)] = holds;
    }
    return Downset::from_members(p, std::move(bits));
}

Downset heyting_not(const Downset& s) {
    return heyting_implies(s, Downset::empty(s.poset()));
}

Downset interior_of_complement(const Downset& s) {
    const ContextPoset& p = s.poset();
    std::vector<bool> complement(static_cast<std::size_t>(p.size()));
    for (int w = 0; w < p.size(); ++w) complement[static_cast<std::size_t>(w)] = !s.contains(w);

    // Interior = union of the basic opens (principal downsets) inside the set.
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int w = 0; w < p.size(); ++w) {
        bool inside = true;
        for (int x = 0; x < p.size() && inside; ++x) {
            if (p.leq(x, w) && !complement[static_cast<std::size_t>(x)]) inside = false;
        }
        if (!inside) continue;
        for (int x = 0; x < p.size(); ++x) {
            if (p.leq(x, w)) bits[static_cast<std::size_t>(x)] = true;
        }
    }
    return Downset::from_members(p, std::move(bits));
}

Downset complement_comprehension(const Downset& s) {
    const ContextPoset& p = s.poset();
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int w = 0; w < p.size(); ++w) {
        bool all_out = true;
        for (int x = 0; x < p.size() && all_out; ++x) {
            if (p.leq(x, w) && s.contains(x)) all_out = false;
        }
        bits[static_cast<std::size_t>(w)] = all_out;
    }
    return Downset::from_members(p, std::move(bits));
}

std::vector<bool> border(const Downset& s) {
    Downset negation = heyting_not(s);
    std::vector<bool> bits(s.bits().size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        bits[k] = !s.bits()[k] && !negation.bits()[k];
    }
    return bits;
}

std::vector<std::string> border_ids(const Downset& s) {
    const ContextPoset& p = s.poset();
    std::vector<bool> bits = border(s);
    std::vector<std::string> out;
    for (int k = 0; k < p.size(); ++k) {
        if (bits[static_cast<std::size_t>(k)]) out.push_back(p.id_at(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ctxlogic
