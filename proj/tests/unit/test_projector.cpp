// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ctxlogic/projector.hpp"
#include "support/helpers.hpp"

using namespace ctxlogic;
using testing_support::diag_projector;
using testing_support::standard_basis;

namespace {

GaussianRational g(std::int64_t num, std::int64_t den = 1) {
    return {Rational(num, den)};
}

} // namespace

TEST_CASE("projector from a standard basis ray") {
    Projector p = Projector::from_ray(Ray({g(1), g(0)}));
    CHECK(p == diag_projector(2, {0}));
    CHECK(p.rank() == 1);
}

TEST_CASE("projector from the diagonal ray (1,1)") {
    Projector p = Projector::from_ray(Ray({g(1), g(1)}));
    Matrix expect(2);
    expect.at(0, 0) = g(1, 2);
    expect.at(0, 1) = g(1, 2);
    expect.at(1, 0) = g(1, 2);
    expect.at(1, 1) = g(1, 2);
    CHECK(p.matrix() == expect);
}

TEST_CASE("projector from the circular ray (1,i)") {
    Projector p = Projector::from_ray(Ray({g(1), GaussianRational::i()}));
    Matrix expect(2);
    expect.at(0, 0) = g(1, 2);
    expect.at(0, 1) = GaussianRational(Rational(0), Rational(-1, 2)); // -i/2
    expect.at(1, 0) = GaussianRational(Rational(0), Rational(1, 2));  // i/2
    expect.at(1, 1) = g(1, 2);
    CHECK(p.matrix() == expect);
    CHECK(p.matrix().is_hermitian());
}

TEST_CASE("zero ray is rejected") {
    CHECK_THROWS_AS(Ray({g(0), g(0)}), InvalidInputError);
    CHECK_THROWS_AS(Ray(std::vector<GaussianRational>{}), InvalidInputError);
}

TEST_CASE("projector_from_ray is scale-invariant") {
    testing_support::Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        int dim = 2 + rng.below(3);
        std::vector<GaussianRational> entries;
        for (int k = 0; k < dim; ++k) entries.push_back(rng.gaussian());
        bool zero = true;
        for (const auto& e : entries) zero = zero && e.is_zero();
        if (zero) entries[0] = g(1);

        GaussianRational c = rng.nonzero_gaussian();
        std::vector<GaussianRational> scaled;
        for (const auto& e : entries) scaled.push_back(e * c);

        CHECK(Projector::from_ray(Ray(entries)) == Projector::from_ray(Ray(scaled)));
    }
}

TEST_CASE("orthogonality checks") {
    Projector p0 = diag_projector(2, {0});
    Projector p1 = diag_projector(2, {1});
    CHECK(are_orthogonal(p0, p1));
    CHECK_FALSE(are_orthogonal(p0, p0));

    Projector plus = Projector::from_ray(Ray({g(1), g(1)}));
    Projector minus = Projector::from_ray(Ray({g(1), g(-1)}));
    CHECK(are_orthogonal(plus, minus));

    CHECK_THROWS_AS(are_orthogonal(p0, diag_projector(3, {0})), DimensionMismatchError);
}

TEST_CASE("completeness of decompositions") {
    CHECK(sum_is_identity({diag_projector(2, {0}), diag_projector(2, {1})}));
    CHECK_FALSE(sum_is_identity({diag_projector(2, {0})}));
    CHECK(sum_is_identity(standard_basis(4)));
    CHECK_THROWS_AS(sum_is_identity({}), InvalidInputError);
    CHECK_THROWS_AS(sum_is_identity({diag_projector(2, {0}), diag_projector(3, {0})}),
                    DimensionMismatchError);
}

TEST_CASE("subprojector order") {
    Projector p01 = diag_projector(3, {0, 1});
    CHECK(is_subprojector(diag_projector(3, {0}), p01));
    CHECK(is_subprojector(p01, p01));
    CHECK_FALSE(is_subprojector(p01, diag_projector(3, {0})));
    CHECK_FALSE(is_subprojector(diag_projector(3, {2}), p01));
    CHECK(is_subprojector(Projector::zero(3), p01));
    CHECK(is_subprojector(p01, Projector::identity(3)));
}

TEST_CASE("projector validation rejects non-projectors") {
    Matrix not_idempotent(2);
    not_idempotent.at(0, 0) = g(2);
    CHECK_THROWS_AS(Projector::from_matrix(not_idempotent), InvalidInputError);

    Matrix not_hermitian(2);
    not_hermitian.at(0, 1) = g(1);
    CHECK_THROWS_AS(Projector::from_matrix(not_hermitian), InvalidInputError);
}

TEST_CASE("matrix products associate bit-exactly on random rational matrices") {
    testing_support::Rng rng(22);
    for (int t = 0; t < 60; ++t) {
        int dim = 2 + rng.below(3);
        Matrix p = rng.matrix(dim), q = rng.matrix(dim), r = rng.matrix(dim);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q).adjoint() == q.adjoint() * p.adjoint());
    }
}

TEST_CASE("sum_projectors validates the result") {
    auto basis = standard_basis(3);
    Projector s = sum_projectors({basis[0], basis[2]});
    CHECK(s == diag_projector(3, {0, 2}));
    CHECK(s.rank() == 2);
    // overlapping summands do not form a projector
    CHECK_THROWS_AS(sum_projectors({basis[0], basis[0]}), InvalidInputError);
}
