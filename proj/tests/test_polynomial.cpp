#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grcert/polynomial.hpp"

using namespace grcert;

TEST_CASE("degree of the zero polynomial is absent, not -1") {
    auto tw = make_tower(2, 1);
    Poly z(tw);
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    Poly also_zero(tw, {0, 0, 0});
    CHECK(also_zero.is_zero());
    CHECK(Poly::constant(tw, 1).degree() == 0u);
}

TEST_CASE("evaluation examples") {
    auto f9 = make_tower(3, 1);
    // alpha = 2Y is a fourth root of unity, alpha^2 = -1, so X^2+1 vanishes
    Poly p(f9, {1, 0, 1});
    CHECK(p.eval(f9->alpha()) == 0);
    Poly r(f9, {5, 7, 2});
    CHECK(r.eval(0) == 5);
}

TEST_CASE("char-2 squaring") {
    auto f2 = make_tower(2, 1);
    Poly xp1(f2, {1, 1});
    CHECK(xp1.mul(xp1).coefficients() == std::vector<Fel>{1, 0, 1}); // X^2 + 1
}

TEST_CASE("product of linear factors") {
    auto f2 = make_tower(2, 1);
    CHECK(product_of_linear_factors(f2, {1}).coefficients() == std::vector<Fel>{1, 1}); // X - 1
    // roots {alpha, alpha^2} in F_4 give X^2 + X + 1
    const Fel a = f2->alpha();
    CHECK(product_of_linear_factors(f2, {a, f2->mul(a, a)}).coefficients() ==
          std::vector<Fel>{1, 1, 1});

    auto f9 = make_tower(3, 1);
    // roots {alpha^{-1}, 1, alpha} = {Y, 1, 2Y}: (X-1)(X^2+1) = X^3+2X^2+X+2
    const Fel al = f9->alpha();
    Poly g = product_of_linear_factors(f9, {f9->inv(al), 1, al});
    CHECK(g.coefficients() == std::vector<Fel>{2, 1, 2, 1});
    CHECK(coefficients_in_subfield(g));
}

TEST_CASE("product vanishes exactly on its roots") {
    auto f9 = make_tower(3, 1);
    const std::vector<Fel> roots = {2, 5, 7};
    Poly g = product_of_linear_factors(f9, roots);
    CHECK(g.leading_coefficient() == 1);
    for (Fel x = 0; x < f9->q2(); ++x) {
        const bool is_root = std::find(roots.begin(), roots.end(), x) != roots.end();
        CHECK((g.eval(x) == 0) == is_root);
    }
}

TEST_CASE("divisibility") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto tw = make_tower(p, h);
        Poly xm1(tw, {tw->neg(1), 1});
        CHECK(divides(xm1, Poly::x_pow_minus(tw, tw->q() + 1, 1)));
    }
    auto f3 = make_tower(3, 1);
    Poly g(f3, {2, 1, 2, 1});
    Poly f = Poly::x_pow_minus(f3, 4, 1);
    CHECK(divides(g, f));
    auto [quot, rem] = divmod(f, g);
    CHECK(rem.is_zero());
    CHECK(quot.coefficients() == std::vector<Fel>{1, 1}); // X + 1
    CHECK(quot.mul(g) == f);

    auto f2 = make_tower(2, 1);
    CHECK(divides(Poly(f2, {1, 1, 1}), Poly::x_pow_minus(f2, 3, 1)));
    CHECK(!divides(Poly(f2, {1, 1, 1}), Poly::x_pow_minus(f2, 4, 1)));
    CHECK_THROWS_AS(divides(Poly(f2), Poly(f2, {1})), std::domain_error);
}

TEST_CASE("divides implies degree bound and exact reconstruction") {
    auto tw = make_tower(5, 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(tw->q2() - 1));
    for (int it = 0; it < 50; ++it) {
        std::vector<Fel> gc(1 + rng() % 4), qc(1 + rng() % 4);
        for (auto& c : gc) c = coef(rng);
        for (auto& c : qc) c = coef(rng);
        Poly g(tw, gc), quo(tw, qc);
        if (g.is_zero()) continue;
        Poly f = g.mul(quo);
        CHECK(divides(g, f));
        if (!f.is_zero()) CHECK(*g.degree() <= *f.degree());
        auto [d, r] = divmod(f, g);
        CHECK(r.is_zero());
        CHECK(d.mul(g) == f);
    }
}

TEST_CASE("scaling") {
    auto f9 = make_tower(3, 1);
    Poly p(f9, {1, 2, 1});
    CHECK(p.scale(2).coefficients() == std::vector<Fel>{2, 1, 2});
    CHECK(p.scale(0).is_zero());
    CHECK(p.scale(1) == p);
}

TEST_CASE("subfield coefficient test") {
    auto f9 = make_tower(3, 1);
    CHECK(coefficients_in_subfield(Poly::constant(f9, 1)));
    Poly x_minus_omega(f9, {f9->neg(f9->omega()), 1});
    CHECK(!coefficients_in_subfield(x_minus_omega));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}}) {
        auto tw = make_tower(p, h);
        std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(tw->q2() - 1));
        for (int it = 0; it < 40; ++it) {
            std::vector<Fel> ac(1 + rng() % 5), bc(1 + rng() % 5);
            for (auto& c : ac) c = coef(rng);
            for (auto& c : bc) c = coef(rng);
            Poly a(tw, ac), b(tw, bc);
            const Fel x = coef(rng);
            CHECK(a.mul(b).eval(x) == tw->mul(a.eval(x), b.eval(x)));
            CHECK(a.add(b).eval(x) == tw->add(a.eval(x), b.eval(x)));
        }
    }
}

TEST_CASE("mixed towers are rejected") {
    auto f2 = make_tower(2, 1);
    auto f3 = make_tower(3, 1);
    Poly a(f2, {1, 1});
    Poly b(f3, {1, 1});
    CHECK_THROWS_AS(a.add(b), std::invalid_argument);
    CHECK_THROWS_AS(a.mul(b), std::invalid_argument);
}
