#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/errors.hpp"
#include "ca/json_io.hpp"
#include "ca/param_poly.hpp"
#include "ca/rational.hpp"

using namespace ca;

namespace {

ParamPoly hb() { return ParamPoly::var(Var::hbar()); }
ParamPoly sg() { return ParamPoly::var(Var::sigma()); }

ParamPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(0, 3), pick(0, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Var> vars{Var::hbar(), Var::sigma(), Var::lambda(1), Var::lambda(2)};
    ParamPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ParamPoly term = ParamPoly::constant(num(rng));
        term *= ParamPoly::var(vars[static_cast<std::size_t>(pick(rng))], 1 + exp(rng) % 3);
        if (exp(rng) > 1) term *= ParamPoly::var(vars[static_cast<std::size_t>(pick(rng))]);
        p += term;
    }
    return p;
}

std::map<Var, Rational> assign_all(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);
    std::map<Var, Rational> a;
    for (Var v : {Var::hbar(), Var::sigma(), Var::lambda(1), Var::lambda(2)})
        a.emplace(v, Rational(num(rng), den(rng)));
    return a;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(8).str() == "8");
    CHECK(Rational::from_string("-22/7") == Rational(-22, 7));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), BadParameter);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), BadParameter);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("polynomial products") {
    ParamPoly one = ParamPoly::constant(1);
    CHECK((hb() + one) * (hb() - one) == ParamPoly::var(Var::hbar(), 2) - one);
    std::mt19937 rng(1);
    CHECK(ParamPoly() * random_poly(rng) == ParamPoly());
    ParamPoly hs = hb() * sg();
    CHECK(hs * hs == ParamPoly::var(Var::hbar(), 2) * ParamPoly::var(Var::sigma(), 2));
}

TEST_CASE("exact evaluation") {
    ParamPoly p = ParamPoly::var(Var::hbar(), 2) - ParamPoly::constant(1);
    CHECK(p.eval({{Var::hbar(), Rational(2)}}) == Rational(3));
    CHECK(ParamPoly::constant(Rational(5, 7)).eval({}) == Rational(5, 7));
    ParamPoly h2_12 = ParamPoly::var(Var::hbar(), 2);
    h2_12.scale(Rational(1, 12));
    CHECK(h2_12.eval({{Var::hbar(), Rational(1, 2)}}) == Rational(1, 48));
    CHECK_THROWS_AS(p.eval({}), MissingVariable);
}

TEST_CASE("substitution and coefficient extraction") {
    // (hbar + 1)^2 with hbar replaced by sigma - 1 collapses to sigma^2
    ParamPoly p = (hb() + ParamPoly::constant(1)).pow(2);
    CHECK(p.substitute(Var::hbar(), sg() - ParamPoly::constant(1)) ==
          ParamPoly::var(Var::sigma(), 2));
    CHECK(p.coeff_of(Var::hbar(), 1) == ParamPoly::constant(2));
    CHECK(p.degree_in(Var::hbar()) == 2);
    CHECK(p.degree_in(Var::sigma()) == 0);
}

TEST_CASE("variable order is canonical") {
    CHECK(Var::hbar() < Var::sigma());
    CHECK(Var::sigma() < Var::lambda(1));
    CHECK(Var::lambda(1) < Var::lambda(2));
    CHECK(Var::lambda(9) < Var::t(1, 1, 1, 1));
    CHECK(Var::t(2, 1, 1, 1) < Var::t(2, 1, 1, 2));
    CHECK(Var::t(3, 1, 4, 4) < Var::mu(1, 1));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 120; ++i) {
        ParamPoly p = random_poly(rng), q = random_poly(rng);
        auto a = assign_all(rng);
        CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
        CHECK((p + q).eval(a) == p.eval(a) + q.eval(a));
        CHECK((p - q).eval(a) == p.eval(a) - q.eval(a));
    }
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 120; ++i) {
        ParamPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("json round trips") {
    CHECK(rational_from_json(rational_to_json(Rational(-22, 7))) == Rational(-22, 7));
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        ParamPoly p = random_poly(rng);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    // every variable shape survives the name round trip
    ParamPoly q = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma()) *
                  ParamPoly::var(Var::lambda(3)) * ParamPoly::var(Var::t(3, 1, 2, 2)) *
                  ParamPoly::var(Var::mu(2, 1));
    CHECK(poly_from_json(poly_to_json(q)) == q);
    CHECK_THROWS_AS(var_from_name("nu(1)"), ParseError);
    CHECK_THROWS_AS(parse_json("{"), ParseError);
}
