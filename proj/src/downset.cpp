// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/downset.hpp"

#include <algorithm>

namespace ctxlogic {

Downset Downset::empty(const ContextPoset& p) {
    return {p, std::vector<bool>(static_cast<std::size_t>(p.size()), false)};
}

Downset Downset::full(const ContextPoset& p) {
    return {p, std::vector<bool>(static_cast<std::size_t>(p.size()), true)};
}

Downset Downset::principal(const ContextPoset& p, int idx) {
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int k = 0; k < p.size(); ++k) bits[static_cast<std::size_t>(k)] = p.leq(k, idx);
    return {p, std::move(bits)};
}

Downset Downset::from_members(const ContextPoset& p, std::vector<bool> bits) {
    if (static_cast<int>(bits.size()) != p.size()) {
        throw InvalidInputError("downset bit vector has the wrong length");
    }
    if (!is_downset(p, bits)) throw InvalidInputError("set is not down-closed");
    return {p, std::move(bits)};
}

Downset Downset::down_closure(const ContextPoset& p, const std::vector<bool>& seeds) {
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (int w = 0; w < p.size(); ++w) {
        if (!seeds[static_cast<std::size_t>(w)]) continue;
        for (int v = 0; v < p.size(); ++v) {
            if (p.leq(v, w)) bits[static_cast<std::size_t>(v)] = true;
        }
    }
    return {p, std::move(bits)};
}

int Downset::count() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<int> Downset::members() const {
    std::vector<int> out;
    for (int k = 0; k < poset_->size(); ++k) {
        if (bits_[static_cast<std::size_t>(k)]) out.push_back(k);
    }
    return out;
}

std::vector<std::string> Downset::member_ids() const {
    std::vector<std::string> out;
    for (int k : members()) out.push_back(poset_->id_at(k));
    std::sort(out.begin(), out.end());
    return out;
}

bool Downset::subset_of(const Downset& o) const {
    require_same_poset(*this, o);
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] && !o.bits_[k]) return false;
    }
    return true;
}

bool is_downset(const ContextPoset& p, const std::vector<bool>& bits) {
    for (int w = 0; w < p.size(); ++w) {
        if (!bits[static_cast<std::size_t>(w)]) continue;
        for (int v = 0; v < p.size(); ++v) {
            if (p.leq(v, w) && !bits[static_cast<std::size_t>(v)]) return false;
        }
    }
    return true;
}

bool is_downset(const ContextPoset& p, const std::vector<std::string>& ids) {
    std::vector<bool> bits(static_cast<std::size_t>(p.size()), false);
    for (const auto& id : ids) bits[static_cast<std::size_t>(p.require_id(id))] = true;
    return is_downset(p, bits);
}

Downset principal_downset(const ContextPoset& p, int idx) {
    if (idx < 0 || idx >= p.size()) throw InvalidInputError("node index out of range");
    return Downset::principal(p, idx);
}

Downset principal_downset(const ContextPoset& p, const Context& w) {
    auto idx = p.index_of(w);
    if (!idx) throw NotFoundError("context '" + w.id() + "' is not a poset member");
    return Downset::principal(p, *idx);
}

void require_same_poset(const Downset& a, const Downset& b) {
    if (&a.poset() != &b.poset()) {
        throw InvalidInputError("downsets belong to different posets");
    }
}

} // namespace ctxlogic
