#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/errors.hpp"
#include "ca/freealg.hpp"
#include "ca/linalg.hpp"

using namespace ca;

namespace {

NCPoly e(int i) { return NCPoly::generator(i); }

NCPoly random_nc(std::mt19937& rng, int k, int maxlen) {
    std::uniform_int_distribution<int> nterms(0, 3), len(0, maxlen), gen(1, k);
    std::uniform_int_distribution<long> num(-5, 5);
    NCPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(gen(rng));
        p += NCPoly::word(w, ParamPoly::constant(num(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("bracket basics") {
    CHECK(bracket(e(1), e(1)).is_zero());
    NCPoly expected = NCPoly::word({2, 1}) - NCPoly::word({1, 2});
    CHECK(bracket(e(2), e(1)) == expected);
    CHECK(bracket(e(1), e(2)) == -expected);
}

TEST_CASE("jacobi identity on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 110; ++i) {
        NCPoly x = random_nc(rng, 3, 3), y = random_nc(rng, 3, 3), z = random_nc(rng, 3, 3);
        NCPoly jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("g_expand small cases") {
    CHECK(g_expand({2, 1}, {0, 0}) == bracket(e(2), e(1)));
    CHECK(g_expand({2, 1}, {1, 0}) == bracket(e(1), bracket(e(2), e(1))));
    CHECK(g_expand({2, 1}, {0, 1}) == bracket(e(2), bracket(e(2), e(1))));
    CHECK(g_expand({3, 2}, {0, 1, 0}).abelianize().is_zero());
    CHECK_THROWS_AS(g_expand({2, 1}, {0, 0, 0}), BadShape);
}

TEST_CASE("phi_expand") {
    CHECK(phi_expand({2, 1}, {}) == NCPoly::word({1, 1, 2}));
    CHECK(phi_expand({0, 0}, {{{2, 1}, {0, 0}}}) == g_expand({2, 1}, {0, 0}));
    CHECK(phi_expand({0, 0}, {{{2, 1}, {0, 1}}}) == bracket(e(2), bracket(e(2), e(1))));
}

TEST_CASE("phi_expand is multiplicative in the factor list") {
    std::vector<std::pair<DeltaIndex, std::vector<int>>> f1{{{2, 1}, {1, 0}}};
    std::vector<std::pair<DeltaIndex, std::vector<int>>> f2{{{2, 1}, {0, 1}}, {{2, 1}, {0, 0}}};
    auto both = f1;
    both.insert(both.end(), f2.begin(), f2.end());
    CHECK(phi_expand({1, 2}, both) == phi_expand({1, 2}, f1) * phi_expand({0, 0}, f2));
}

TEST_CASE("delta_set enumeration") {
    CHECK(delta_set(1).empty());
    CHECK(delta_set(2) == std::vector<DeltaIndex>{{2, 1}});
    CHECK(delta_set(3) == std::vector<DeltaIndex>{{2, 1}, {3, 1}, {3, 2}});
    CHECK(delta_set(4).size() == 6);
}

TEST_CASE("free generator independence at small degree") {
    // k = 2: all g with word length <= 5, as vectors over words, are
    // linearly independent.
    std::vector<NCPoly> gs;
    for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b2 + b1 <= 3; ++b2) gs.push_back(g_expand({2, 1}, {b1, b2}));

    std::map<Word, std::size_t> cols;
    for (const auto& g : gs)
        for (const auto& [w, c] : g.terms()) cols.emplace(w, cols.size());
    RatMatrix m(gs.size(), cols.size());
    std::mt19937 rng(5);
    std::map<Var, Rational> empty;
    for (std::size_t r = 0; r < gs.size(); ++r)
        for (const auto& [w, c] : gs[r].terms()) m(r, cols.at(w)) = c.eval(empty);
    CHECK(rank(m) == gs.size());
}

TEST_CASE("generator shift is an injective algebra map") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        NCPoly x = random_nc(rng, 2, 3), y = random_nc(rng, 2, 3);
        CHECK((x * y).shift_generators(3) == x.shift_generators(3) * y.shift_generators(3));
        CHECK((x.shift_generators(3).shift_generators(-3)) == x);
    }
}

TEST_CASE("word algebra laws") {
    std::mt19937 rng(17);
    for (int i = 0; i < 110; ++i) {
        NCPoly x = random_nc(rng, 2, 3), y = random_nc(rng, 2, 3), z = random_nc(rng, 2, 3);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * NCPoly::unit() == x);
        CHECK(NCPoly::unit() * x == x);
        CHECK((x + y) * z == x * z + y * z);
    }
}
