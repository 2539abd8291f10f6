// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ctxlogic/presheaf.hpp"
#include "support/helpers.hpp"

using namespace ctxlogic;
using testing_support::fixture_poset;

TEST_CASE("fibers enumerate all valuations per context") {
    auto p = testing_support::dim4_bell_poset();
    DualPresheaf d = build_dual_presheaf(p);
    for (int w = 0; w < p.size(); ++w) {
        CHECK(d.fiber(w).size() ==
              static_cast<std::size_t>(p.context_at(w).atom_count()));
        for (int k = 0; k < p.context_at(w).atom_count(); ++k) {
            CHECK(d.fiber(w)[static_cast<std::size_t>(k)].selected_atom == k);
        }
    }
    CHECK(d.fiber(p.bottom()).size() == 1);
}

TEST_CASE("restriction maps are functorial") {
    auto p = fixture_poset("dim3_three_bases.json");
    DualPresheaf d = build_dual_presheaf(p);
    for (int w = 0; w < p.size(); ++w) {
        // identity on each object
        auto self = d.restriction_map(w, w);
        for (std::size_t k = 0; k < self.size(); ++k) {
            CHECK(self[k] == static_cast<int>(k));
        }
    }
    for (int u = 0; u < p.size(); ++u) {
        for (int v = 0; v < p.size(); ++v) {
            if (!p.leq(u, v)) continue;
            for (int w = 0; w < p.size(); ++w) {
                if (!p.leq(v, w)) continue;
                auto uv = d.restriction_map(u, v);
                auto vw = d.restriction_map(v, w);
                auto uw = d.restriction_map(u, w);
                for (std::size_t g = 0; g < vw.size(); ++g) {
                    CHECK(uv[static_cast<std::size_t>(vw[g])] == uw[g]);
                }
            }
        }
    }
}

TEST_CASE("empty section round-trips through the presheaf form") {
    auto p = fixture_poset("dim2_two_bases.json");
    LocalSection empty = LocalSection::empty(p);
    auto t = section_to_transformation(empty);
    CHECK(t.subfunctor_domain.is_empty());
    CHECK(transformation_to_section(t) == empty);
}

TEST_CASE("principal sections round-trip through the presheaf form") {
    auto p = testing_support::dim4_bell_poset();
    for (int w = 0; w < p.size(); ++w) {
        for (int atom = 0; atom < p.context_at(w).atom_count(); ++atom) {
            LocalSection s = principal_section(p, w, atom);
            auto t = section_to_transformation(s);
            CHECK(t.subfunctor_domain == s.domain());
            CHECK(transformation_to_section(t) == s);
        }
    }
}

TEST_CASE("both round trips are identities on every local section") {
    for (const char* fixture : {"dim2_two_bases.json", "dim3_single_basis.json"}) {
        auto p = fixture_poset(fixture);
        auto sections = enumerate_local_sections(p);
        CHECK(!sections.empty());
        for (const auto& s : sections) {
            auto t = section_to_transformation(s);
            LocalSection back = transformation_to_section(t);
            CHECK(back == s);
            auto t2 = section_to_transformation(back);
            CHECK(t2.subfunctor_domain == t.subfunctor_domain);
            CHECK(t2.component_by_node == t.component_by_node);
        }
    }
}

TEST_CASE("section enumeration counts sections of simple posets") {
    // 2-chain {trivial <= Z}: domains {} (1 section), {trivial} (1),
    // {trivial, Z} (2 atoms) -> 4 sections in total
    auto chain = ContextPoset::build({Context::from_decomposition(
        testing_support::standard_basis(2), "Z")});
    CHECK(enumerate_local_sections(chain).size() == 4);

    // dim-2 two bases: domains {}, {t}, {t,Z} x2, {t,X} x2, {t,Z,X} x4
    auto p = fixture_poset("dim2_two_bases.json");
    CHECK(enumerate_local_sections(p).size() == 10);
}

TEST_CASE("naturality violations are rejected") {
    auto p = testing_support::dim4_bell_poset();
    LocalSection s = principal_section(p, p.maximal()[0], 0);
    auto t = section_to_transformation(s);

    // corrupt one non-trivial component
    for (int w = 0; w < p.size(); ++w) {
        if (w != p.maximal()[0] && p.context_at(w).atom_count() > 1) {
            auto broken = t;
            broken.component_by_node[static_cast<std::size_t>(w)] =
                (broken.component_by_node[static_cast<std::size_t>(w)] + 1) %
                p.context_at(w).atom_count();
            CHECK_THROWS_AS(transformation_to_section(broken), InvalidInputError);
            break;
        }
    }

    // component outside the fiber
    auto out_of_fiber = t;
    out_of_fiber.component_by_node[static_cast<std::size_t>(p.bottom())] = 5;
    CHECK_THROWS_AS(transformation_to_section(out_of_fiber), InvalidInputError);

    // domain/component mismatch
    auto mismatched = t;
    mismatched.component_by_node[static_cast<std::size_t>(p.bottom())] = -1;
    CHECK_THROWS_AS(transformation_to_section(mismatched), InvalidInputError);
}
