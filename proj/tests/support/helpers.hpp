// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_TESTS_HELPERS_HPP
#define CTXLOGIC_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "ctxlogic/formula.hpp"
#include "ctxlogic/io.hpp"
#include "ctxlogic/poset.hpp"
#include "ctxlogic/projector.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
    return std::string(CTXLOGIC_FIXTURES_DIR) + "/" + name;
}

inline ctxlogic::io::LoadedRayset load_fixture(const std::string& name) {
    return ctxlogic::io::load_rayset_file(fixture_path(name));
}

inline ctxlogic::ContextPoset fixture_poset(const std::string& name) {
    return ctxlogic::ContextPoset::build(load_fixture(name).contexts);
}

/// Projector onto the coordinate subspace spanned by the given 0-based axes.
inline ctxlogic::Projector diag_projector(int dim, const std::vector<int>& axes) {
    ctxlogic::Matrix m(dim);
    for (int a : axes) m.at(a, a) = ctxlogic::GaussianRational(ctxlogic::Rational(1));
    return ctxlogic::Projector::from_matrix(std::move(m));
}

/// Standard orthonormal basis as rank-1 projectors.
inline std::vector<ctxlogic::Projector> standard_basis(int dim) {
    std::vector<ctxlogic::Projector> out;
    for (int k = 0; k < dim; ++k) out.push_back(diag_projector(dim, {k}));
    return out;
}

/// The 15-node poset of all coarsenings of the standard dim-4 basis.
inline ctxlogic::ContextPoset dim4_bell_poset() {
    return ctxlogic::ContextPoset::build(
        {ctxlogic::Context::from_decomposition(standard_basis(4), "B4")});
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
    bool coin() { return below(2) == 1; }

    ctxlogic::Rational rational(int max_abs = 3, int max_den = 3) {
        std::int64_t num = below(2 * max_abs + 1) - max_abs;
        std::int64_t den = 1 + below(max_den);
        return {num, den};
    }

    ctxlogic::GaussianRational gaussian(int max_abs = 3, int max_den = 3) {
        return {rational(max_abs, max_den), rational(max_abs, max_den)};
    }

    ctxlogic::GaussianRational nonzero_gaussian(int max_abs = 3, int max_den = 3) {
        for (;;) {
            auto g = gaussian(max_abs, max_den);
            if (!g.is_zero()) return g;
        }
    }

    ctxlogic::Matrix matrix(int dim, int max_abs = 2, int max_den = 2) {
        ctxlogic::Matrix m(dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) m.at(r, c) = gaussian(max_abs, max_den);
        }
        return m;
    }

    /// Random dim-2 orthogonal basis: a nonzero ray and its perpendicular.
    std::vector<ctxlogic::Projector> dim2_basis() {
        ctxlogic::GaussianRational a = gaussian(2, 2);
        ctxlogic::GaussianRational b = gaussian(2, 2);
        if (a.is_zero() && b.is_zero()) a = ctxlogic::GaussianRational(ctxlogic::Rational(1));
        ctxlogic::Ray v({a, b});
        ctxlogic::Ray w({-b.conj(), a.conj()});
        return {ctxlogic::Projector::from_ray(v), ctxlogic::Projector::from_ray(w)};
    }

    /// Random formula over the given atom names.
    ctxlogic::FormulaPtr formula(const std::vector<std::string>& atoms, int max_depth) {
        using ctxlogic::Formula;
        if (max_depth == 0 || below(4) == 0) {
            return Formula::atom(atoms[static_cast<std::size_t>(below(
                static_cast<int>(atoms.size())))]);
        }
        switch (below(4)) {
        case 0:
            return Formula::make(Formula::Kind::And, formula(atoms, max_depth - 1),
                                 formula(atoms, max_depth - 1));
        case 1:
            return Formula::make(Formula::Kind::Or, formula(atoms, max_depth - 1),
                                 formula(atoms, max_depth - 1));
        case 2:
            return Formula::make(Formula::Kind::Implies, formula(atoms, max_depth - 1),
                                 formula(atoms, max_depth - 1));
        default:
            return Formula::make(Formula::Kind::Not, formula(atoms, max_depth - 1));
        }
    }

    /// Random downset: the down-closure of a random subset.
    ctxlogic::Downset downset(const ctxlogic::ContextPoset& p) {
        std::vector<bool> seeds(static_cast<std::size_t>(p.size()));
        for (int k = 0; k < p.size(); ++k) seeds[static_cast<std::size_t>(k)] = coin();
        return ctxlogic::Downset::down_closure(p, seeds);
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// All downsets of a poset, by filtering subsets (poset must be small).
inline std::vector<ctxlogic::Downset> all_downsets(const ctxlogic::ContextPoset& p) {
    if (p.size() > 20) throw std::runtime_error("poset too large to enumerate downsets");
    std::vector<ctxlogic::Downset> out;
    for (std::uint32_t set = 0; set < (1u << p.size()); ++set) {
        std::vector<bool> bits(static_cast<std::size_t>(p.size()));
        for (int k = 0; k < p.size(); ++k) bits[static_cast<std::size_t>(k)] = set & (1u << k);
        if (ctxlogic::is_downset(p, bits)) {
            out.push_back(ctxlogic::Downset::from_members(p, std::move(bits)));
        }
    }
    return out;
}

} // namespace testing_support

#endif
