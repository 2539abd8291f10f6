// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "ctxlogic/downset.hpp"
#include "support/helpers.hpp"

using namespace ctxlogic;
using testing_support::diag_projector;
using testing_support::fixture_poset;
using testing_support::standard_basis;

namespace {

Context std_basis_context(int dim, std::string id) {
    return Context::from_decomposition(standard_basis(dim), std::move(id));
}

} // namespace

TEST_CASE("closure of a single 2-atom context is a 2-chain") {
    auto p = ContextPoset::build({std_basis_context(2, "Z")});
    CHECK(p.size() == 2);
    CHECK(p.covering_edges().size() == 1);
    CHECK(p.context_at(p.bottom()).is_trivial());
    CHECK(p.id_at(p.bottom()) == "W#1");
    CHECK(p.require_id("Z") == 1);
}

TEST_CASE("closure of a 4-atom context has Bell(4) nodes") {
    auto p = testing_support::dim4_bell_poset();
    CHECK(p.size() == 15);
    // one maximal element, which dominates everything
    REQUIRE(p.maximal().size() == 1);
    int top = p.maximal()[0];
    for (int k = 0; k < p.size(); ++k) CHECK(p.leq(k, top));
}

TEST_CASE("two distinct dim-2 bases close to 3 nodes") {
    auto p = fixture_poset("dim2_two_bases.json");
    CHECK(p.size() == 3);
    CHECK(p.maximal().size() == 2);
    CHECK(p.index_of_id("Z").has_value());
    CHECK(p.index_of_id("X").has_value());
    CHECK(p.covering_edges().size() == 2);
}

TEST_CASE("three dim-3 bases sharing rays close to 11 nodes") {
    auto p = fixture_poset("dim3_three_bases.json");
    CHECK(p.size() == 11);
    CHECK(p.maximal().size() == 3);
}

TEST_CASE("generated ids are stable across rebuilds") {
    auto ids_of = [](const ContextPoset& p) {
        std::vector<std::string> ids;
        for (int k = 0; k < p.size(); ++k) ids.push_back(p.id_at(k));
        return ids;
    };
    auto a = fixture_poset("dim3_three_bases.json");
    auto b = fixture_poset("dim3_three_bases.json");
    CHECK(ids_of(a) == ids_of(b));
}

TEST_CASE("poset order agrees with the context-level subalgebra order") {
    auto p = fixture_poset("dim3_three_bases.json");
    for (int a = 0; a < p.size(); ++a) {
        for (int b = 0; b < p.size(); ++b) {
            CHECK(p.leq(a, b) == context_leq(p.context_at(a), p.context_at(b)));
        }
    }
}

TEST_CASE("closure contains every coarsening of every member") {
    auto p = fixture_poset("dim2_two_bases.json");
    for (int k = 0; k < p.size(); ++k) {
        for (const auto& c : coarsenings(p.context_at(k))) {
            CHECK(p.index_of(c).has_value());
        }
    }
}

TEST_CASE("intersections are greatest lower bounds in the poset") {
    auto p = fixture_poset("dim3_three_bases.json");
    for (int a = 0; a < p.size(); ++a) {
        for (int b = 0; b < p.size(); ++b) {
            Context meet = intersect_contexts(p.context_at(a), p.context_at(b));
            auto idx = p.index_of(meet);
            REQUIRE(idx.has_value());
            CHECK(p.leq(*idx, a));
            CHECK(p.leq(*idx, b));
            for (int l = 0; l < p.size(); ++l) {
                if (p.leq(l, a) && p.leq(l, b)) CHECK(p.leq(l, *idx));
            }
        }
    }
}

TEST_CASE("restriction tables agree with context-level restriction") {
    auto p = fixture_poset("dim3_three_bases.json");
    for (int child = 0; child < p.size(); ++child) {
        for (int parent = 0; parent < p.size(); ++parent) {
            if (!p.leq(child, parent)) continue;
            for (int atom = 0; atom < p.context_at(parent).atom_count(); ++atom) {
                CHECK(restrict_atom(p, parent, atom, child) ==
                      restrict_selected_atom(p.context_at(parent), atom,
                                             p.context_at(child)));
            }
        }
    }
}

TEST_CASE("principal downsets") {
    auto p = testing_support::dim4_bell_poset();
    CHECK(Downset::principal(p, p.bottom()).count() == 1);
    CHECK(Downset::principal(p, p.maximal()[0]).count() == 15);

    auto chain = ContextPoset::build({std_basis_context(2, "Z")});
    CHECK(Downset::principal(chain, chain.require_id("Z")).count() == 2);

    // (a] subset of (b] iff a <= b
    for (int a = 0; a < p.size(); ++a) {
        for (int b = 0; b < p.size(); ++b) {
            CHECK(Downset::principal(p, a).subset_of(Downset::principal(p, b)) ==
                  p.leq(a, b));
        }
    }
}

TEST_CASE("downset recognition") {
    auto chain = ContextPoset::build({std_basis_context(2, "Z")});
    CHECK(is_downset(chain, std::vector<bool>{false, false}));
    CHECK(is_downset(chain, std::vector<bool>{true, true}));
    CHECK(is_downset(chain, std::vector<bool>{true, false}));
    CHECK_FALSE(is_downset(chain, std::vector<bool>{false, true})); // top without bottom

    CHECK(is_downset(chain, std::vector<std::string>{}));
    CHECK_FALSE(is_downset(chain, std::vector<std::string>{"Z"}));
    CHECK_THROWS_AS(is_downset(chain, std::vector<std::string>{"nope"}), NotFoundError);

    CHECK_THROWS_AS(Downset::from_members(chain, {false, true}), InvalidInputError);
    CHECK(Downset::down_closure(chain, {false, true}).count() == 2);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(ContextPoset::build({}), ValidationError);
    CHECK_THROWS_AS(ContextPoset::build({std_basis_context(2, "A"),
                                         std_basis_context(3, "B")}),
                    DimensionMismatchError);
    CHECK_THROWS_AS(ContextPoset::build({std_basis_context(2, "A"),
                                         std_basis_context(2, "A")}),
                    ValidationError); // duplicate id
    CHECK_THROWS_AS(ContextPoset::build({std_basis_context(2, "")}), ValidationError);
    CHECK_THROWS_AS(fixture_poset("dim2_two_bases.json").require_id("nope"), NotFoundError);
}

TEST_CASE("duplicate inputs collapse to one maximal element") {
    Context a = std_basis_context(2, "A");
    Context b = a.with_id("B"); // same atoms, different name
    auto p = ContextPoset::build({a, b});
    CHECK(p.size() == 2);
    CHECK(p.maximal() == std::vector<int>{p.require_id("A")});
    CHECK_FALSE(p.index_of_id("B").has_value());
}

TEST_CASE("join closure is off by default and explicit when requested") {
    Context left = Context::from_decomposition(
        {diag_projector(3, {0, 1}), diag_projector(3, {2})}, "L");
    Context right = Context::from_decomposition(
        {diag_projector(3, {0}), diag_projector(3, {1, 2})}, "R");
    Context fine = Context::from_decomposition(standard_basis(3));

    auto plain = ContextPoset::build({left, right});
    CHECK_FALSE(plain.index_of(fine).has_value());
    CHECK(plain.size() == 3);

    auto joined = ContextPoset::build({left, right}, true);
    REQUIRE(joined.index_of(fine).has_value());
    // trivial, L, R, the join {0}{1}{2}, and its third 2-block coarsening {0,2}{1}
    CHECK(joined.size() == 5);
    for (int k = 0; k < joined.size(); ++k) {
        for (const auto& c : coarsenings(joined.context_at(k))) {
            CHECK(joined.index_of(c).has_value());
        }
    }
}
