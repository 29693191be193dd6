#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lrw/lie_presentation.hpp"

using namespace lrw;

namespace {

LElement random_element(const Presentation& pres, std::mt19937_64& rng) {
    LElement v = pres->zero_element();
    for (int i = 0; i < pres->rank(); ++i)
        v[i] = random_poly(pres->context(), rng);
    return v;
}

}  // namespace

TEST_CASE("torus anchor action") {
    Presentation torus = LiePresentation::torus(2);
    Context ctx = torus->context();
    // theta_x applied to x^3 y: direct differentiation gives x * 3x^2 y
    LaurentPoly a(ctx, {3, 1}, Rational(1));
    LaurentPoly expected = LaurentPoly::variable(ctx, 0) * a.partial(0);
    CHECK(torus->anchor_apply(torus->basis_element(0), a) == expected);
    CHECK(expected.str() == "3*x^3*y");

    CHECK(torus->anchor_apply(torus->zero_element(), a).is_zero());
}

TEST_CASE("affine anchor action") {
    Presentation aff = LiePresentation::affine(1);
    LaurentPoly x2(aff->context(), {2}, Rational(1));
    CHECK(aff->anchor_apply(aff->basis_element(0), x2).str() == "2*x");
}

TEST_CASE("brackets") {
    Presentation torus = LiePresentation::torus(2);
    CHECK(torus->is_zero(torus->bracket(torus->basis_element(0), torus->basis_element(1))));

    // affine(1): [d, x d] = d, checked against the commutator of derivations
    Presentation aff = LiePresentation::affine(1);
    Context ctx = aff->context();
    LElement d = aff->basis_element(0);
    LElement xd = aff->scale(LaurentPoly::variable(ctx, 0), d);
    LElement br = aff->bracket(d, xd);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly a = random_poly(ctx, rng);
        LaurentPoly commutator = aff->anchor_apply(d, aff->anchor_apply(xd, a)) -
                                 aff->anchor_apply(xd, aff->anchor_apply(d, a));
        CHECK(aff->anchor_apply(br, a) == commutator);
    }
    CHECK(br == d);

    // antisymmetry on random elements
    for (int trial = 0; trial < 20; ++trial) {
        LElement xi = random_element(aff, rng);
        CHECK(aff->is_zero(aff->bracket(xi, xi)));
    }
}

TEST_CASE("bracket properties on builtins") {
    std::mt19937_64 rng(13);
    for (const Presentation& pres :
         {LiePresentation::torus(2), LiePresentation::affine(2), LiePresentation::point_abelian(3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            LElement xi = random_element(pres, rng);
            LElement eta = random_element(pres, rng);
            LElement zeta = random_element(pres, rng);
            LaurentPoly a = random_poly(pres->context(), rng);

            // anchor is a Lie map
            LaurentPoly lhs = pres->anchor_apply(pres->bracket(xi, eta), a);
            LaurentPoly rhs = pres->anchor_apply(xi, pres->anchor_apply(eta, a)) -
                              pres->anchor_apply(eta, pres->anchor_apply(xi, a));
            CHECK(lhs == rhs);

            // Leibniz in the second slot
            LElement left = pres->bracket(xi, pres->scale(a, eta));
            LElement right = pres->add(pres->scale(a, pres->bracket(xi, eta)),
                                       pres->scale(pres->anchor_apply(xi, a), eta));
            CHECK(pres->is_zero(pres->sub(left, right)));

            // Jacobi
            LElement j = pres->bracket(pres->bracket(xi, eta), zeta);
            j = pres->add(j, pres->bracket(pres->bracket(eta, zeta), xi));
            j = pres->add(j, pres->bracket(pres->bracket(zeta, xi), eta));
            CHECK(pres->is_zero(j));
        }
    }
}

TEST_CASE("axiom reports") {
    CHECK(LiePresentation::torus(2)->check_axioms(42).all_passed());
    CHECK(LiePresentation::affine(2)->check_axioms(42).all_passed());
    CHECK(LiePresentation::point_abelian(2)->check_axioms(42).all_passed());

    // corrupt the torus bracket to [t_x, t_y] = t_x
    Presentation torus = LiePresentation::torus(2);
    Context ctx = torus->context();
    std::vector<std::vector<LaurentPoly>> anchor(2, std::vector<LaurentPoly>(2, LaurentPoly(ctx)));
    anchor[0][0] = LaurentPoly::variable(ctx, 0);
    anchor[1][1] = LaurentPoly::variable(ctx, 1);
    std::map<std::pair<int, int>, LElement> brackets;
    LElement bad(2, LaurentPoly(ctx));
    bad[0] = LaurentPoly::constant(ctx, Rational(1));
    brackets.emplace(std::make_pair(0, 1), bad);
    auto corrupted = std::make_shared<const LiePresentation>(ctx, 2, anchor, brackets);
    AxiomReport report = corrupted->check_axioms(42);
    CHECK(!report.all_passed());
    bool anchor_failed = false;
    for (const auto& c : report.checks)
        if (c.name == "anchor_lie_map" && !c.passed)
            anchor_failed = true;
    CHECK(anchor_failed);
    CHECK(report.seed == 42);
}

TEST_CASE("standard algebras") {
    Presentation torus = LiePresentation::torus(2);
    CHECK(torus->rank() == 2);
    CHECK(torus->context()->num_vars() == 2);
    CHECK(torus->anchor_coeff(0, 0).str() == "x");
    CHECK(torus->anchor_coeff(0, 1).is_zero());

    Presentation pt = LiePresentation::point_abelian(2);
    CHECK(pt->rank() == 2);
    CHECK(pt->context()->num_vars() == 0);

    CHECK(make_standard_algebra("affine", 1)->rank() == 1);
    CHECK_THROWS_AS(make_standard_algebra("nope", 1), InputError);
    CHECK_THROWS_AS(make_standard_algebra("torus", 0), InputError);
}

TEST_CASE("vector fields on the line: nonzero brackets") {
    // L free of rank 3 over Q[x] with anchor (d, x d, x^2 d) and the induced
    // brackets [e1,e2] = e1, [e1,e3] = 2 e2, [e2,e3] = e3
    Presentation fields = testing::line_fields();
    Context ctx = fields->context();

    CHECK(fields->check_axioms(7).all_passed());
    REQUIRE(fields->generator_degrees().has_value());
    auto degs = *fields->generator_degrees();
    CHECK(degs[0] == Exponents{-1});
    CHECK(degs[1] == Exponents{0});
    CHECK(degs[2] == Exponents{1});

    // randomized bracket properties exercise the Leibniz correction terms
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 15; ++trial) {
        LElement xi = random_element(fields, rng);
        LElement eta = random_element(fields, rng);
        LElement zeta = random_element(fields, rng);
        LElement j = fields->bracket(fields->bracket(xi, eta), zeta);
        j = fields->add(j, fields->bracket(fields->bracket(eta, zeta), xi));
        j = fields->add(j, fields->bracket(fields->bracket(zeta, xi), eta));
        CHECK(fields->is_zero(j));

        LaurentPoly a = random_poly(ctx, rng);
        LaurentPoly lhs = fields->anchor_apply(fields->bracket(xi, eta), a);
        LaurentPoly rhs = fields->anchor_apply(xi, fields->anchor_apply(eta, a)) -
                          fields->anchor_apply(eta, fields->anchor_apply(xi, a));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("grading detection") {
    CHECK(LiePresentation::torus(2)->generator_degrees().has_value());
    CHECK(LiePresentation::affine(1)->generator_degrees().has_value());
    CHECK(LiePresentation::point_abelian(3)->generator_degrees().has_value());

    auto degs = *LiePresentation::affine(2)->generator_degrees();
    CHECK(degs[0] == Exponents{-1, 0});
    CHECK(degs[1] == Exponents{0, -1});

    // x d/dx + x^2 d/dx is not homogeneous
    Context ctx = RingContext::make({{"x", false}});
    std::vector<std::vector<LaurentPoly>> anchor(1);
    anchor[0].push_back(LaurentPoly::variable(ctx, 0) + LaurentPoly(ctx, {2}, Rational(1)));
    auto bad = std::make_shared<const LiePresentation>(ctx, 1, anchor,
                                                       std::map<std::pair<int, int>, LElement>{});
    CHECK(!bad->generator_degrees().has_value());
    CHECK_THROWS_AS(bad->require_graded(), GradingError);
}
