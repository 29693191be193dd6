#include <doctest.h>

#include <map>
#include <random>

#include "lrw/laurent.hpp"

using namespace lrw;

namespace {

Context torus_ctx() {
    return RingContext::make({{"x", true}, {"y", true}});
}

Context affine_ctx() {
    return RingContext::make({{"x", false}});
}

// Independent dense convolution oracle for products over a small exponent box.
LaurentPoly dense_mul_oracle(const LaurentPoly& p, const LaurentPoly& q) {
    std::map<Exponents, Rational> acc;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            Exponents e(ep);
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += eq[i];
            auto [it, fresh] = acc.emplace(e, cp * cq);
            if (!fresh)
                it->second += cp * cq;
        }
    LaurentPoly out(p.context());
    for (const auto& [e, c] : acc)
        out.add_term(e, c);
    return out;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational::parse("7/21").str() == "1/3");
    CHECK(Rational(5, 7).inverse().str() == "7/5");
    CHECK_THROWS(Rational(1, 0));
    CHECK(rational_binomial(6, 3).str() == "20");
    CHECK(rational_factorial(5).str() == "120");
}

TEST_CASE("laurent arithmetic examples") {
    Context ctx = torus_ctx();
    LaurentPoly x = LaurentPoly::variable(ctx, 0);
    LaurentPoly y = LaurentPoly::variable(ctx, 1);
    LaurentPoly one = LaurentPoly::constant(ctx, Rational(1));

    CHECK((x + y) - x == y);
    CHECK(LaurentPoly::variable(ctx, 0, -1) * x == one);
    // schoolbook expansion oracle
    LaurentPoly p = one + x;
    LaurentPoly q = one - x;
    CHECK(p * q == dense_mul_oracle(p, q));
    CHECK((p * q).str() == "1 - x^2");
}

TEST_CASE("laurent partial derivatives") {
    Context ctx = torus_ctx();
    LaurentPoly x2y(ctx, {2, 1}, Rational(1));
    CHECK(x2y.partial(0).str() == "2*x*y");
    CHECK(LaurentPoly::variable(ctx, 0, -1).partial(0).str() == "-x^-2");
    CHECK(LaurentPoly(ctx, {3, 0}, Rational(1)).partial(1).is_zero());
    CHECK_THROWS_AS(x2y.partial(2), InputError);
    CHECK_THROWS_AS(x2y.partial(-1), InputError);
}

TEST_CASE("grade split") {
    Context ctx = torus_ctx();
    LaurentPoly x = LaurentPoly::variable(ctx, 0);
    LaurentPoly p = x + x.scaled(Rational(2));
    auto parts = p.grade_split();
    CHECK(parts.size() == 1);
    CHECK(parts.begin()->second.str() == "3*x");

    auto two = (x + LaurentPoly::variable(ctx, 1)).grade_split();
    CHECK(two.size() == 2);
    CHECK(LaurentPoly(ctx).grade_split().empty());
}

TEST_CASE("units") {
    Context ctx = torus_ctx();
    LaurentPoly u(ctx, {-1, -1}, Rational(3));
    REQUIRE(u.is_unit());
    CHECK(u.unit_inverse().str() == "1/3*x*y");
    CHECK(u * u.unit_inverse() == LaurentPoly::constant(ctx, Rational(1)));

    LaurentPoly one_plus_x = LaurentPoly::constant(ctx, Rational(1)) + LaurentPoly::variable(ctx, 0);
    CHECK(!one_plus_x.is_unit());

    Context actx = affine_ctx();
    CHECK(!LaurentPoly::variable(actx, 0).is_unit());
    CHECK(LaurentPoly::constant(actx, Rational(5)).is_unit());
}

TEST_CASE("context and exponent guards") {
    Context ctx = torus_ctx();
    Context actx = affine_ctx();
    LaurentPoly x(ctx, {1, 0}, Rational(1));
    LaurentPoly z(actx, {1}, Rational(1));
    CHECK_THROWS_AS(x + z, InputError);
    CHECK_THROWS_AS(LaurentPoly(actx, {-1}, Rational(1)), InputError);
}

TEST_CASE("ring axioms on random triples") {
    Context ctx = torus_ctx();
    std::mt19937_64 rng(20240801);
    auto rnd = [&]() {
        LaurentPoly p(ctx);
        int terms = static_cast<int>(rng() % 4);
        for (int t = 0; t < terms; ++t) {
            Exponents e = {static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
            p.add_term(e, Rational(static_cast<long>(rng() % 11) - 5,
                                   static_cast<long>(rng() % 3) + 1));
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        // Leibniz rule for d/dx
        CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
        // canonical text form round-trips
        CHECK(LaurentPoly::parse(ctx, a.str()) == a);
    }
}

TEST_CASE("parse canonical forms") {
    Context ctx = torus_ctx();
    CHECK(LaurentPoly::parse(ctx, "3/2*x^-1*y^2 + 1").str() == "3/2*x^-1*y^2 + 1");
    CHECK(LaurentPoly::parse(ctx, "0").is_zero());
    CHECK(LaurentPoly::parse(ctx, "-x").str() == "-x");
    CHECK(LaurentPoly::parse(ctx, "x*y - y*x").is_zero());
    CHECK_THROWS_AS(LaurentPoly::parse(ctx, "q + 1"), InputError);
}
