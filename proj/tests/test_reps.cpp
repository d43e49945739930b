#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/errors.hpp"
#include "ca/reps.hpp"
#include "ca/suites.hpp"

using namespace ca;

namespace {

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

TEST_CASE("generator images") {
    ThetaFamily theta(2, 1, false);
    const QmQuiver& qm = theta.qm();
    DeltaIndex d{2, 1};
    PathElem expect(qm.quiver);
    expect.add_term(Path{qm.vertex_index(d, 1), {}}, ParamPoly::var(Var::t(2, 1, 1, 1)));
    expect.add_term(Path{qm.vertex_index(d, 2), {}}, ParamPoly::var(Var::t(2, 1, 2, 1)));
    expect.add_term(Path{qm.vertex_index(d, 1), {qm.arrow_index(d, d, 1)}},
                    ParamPoly::constant(1));
    CHECK(theta.generator_image(1) == expect);

    CHECK(theta.eval(NCPoly::unit()) == PathElem::unit(qm.quiver));
    CHECK_THROWS_AS(theta.eval(NCPoly::generator(3)), GeneratorMismatch);

    // m = 0 with lambda degenerates to e_i -> lambda_i
    ThetaFamily flat(2, 0, true);
    PathElem l1(flat.qm().quiver);
    l1.add_term(Path{0, {}}, ParamPoly::var(Var::lambda(1)));
    CHECK(flat.generator_image(1) == l1);
}

TEST_CASE("theta of g is the s-difference times the arrow") {
    ThetaFamily theta(2, 1, false);
    const QmQuiver& qm = theta.qm();
    DeltaIndex d{2, 1};
    PathElem img = theta.eval(g_expand(d, {0, 0}));
    ParamPoly c = s_poly(d, d, 1, 2) - s_poly(d, d, 1, 1);
    PathElem expect =
        PathElem::path(qm.quiver, Path{qm.vertex_index(d, 1), {qm.arrow_index(d, d, 1)}}, c);
    CHECK(img == expect);
}

TEST_CASE("verify_teofg cases") {
    CHECK(verify_teofg(2, 1, {2, 1}, {0, 0}).pass);
    CHECK(verify_teofg(2, 2, {2, 1}, {1, 0}).pass);
    CHECK(verify_teofg(3, 1, {3, 1}, {0, 1, 0}).pass);
    CHECK(verify_teofg(3, 2, {3, 2}, {1, 0, 1}).pass);

    // membership part holds for every |beta| <= 3 at k = 2
    ThetaFamily theta(2, 2, false);
    for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b1 + b2 <= 3; ++b2)
            CHECK(ideal_power_membership(theta.eval(g_expand({2, 1}, {b1, b2})), 1));
}

TEST_CASE("verify_wtelawn cases") {
    CHECK(verify_wtelawn(2, 1, {{{2, 1}, {0, 0}}}).pass);
    CHECK(verify_wtelawn(2, 2, {{{2, 1}, {0, 0}}, {{2, 1}, {0, 0}}}).pass);
    CHECK(verify_wtelawn(2, 2, {{{2, 1}, {1, 0}}, {{2, 1}, {0, 1}}}).pass);
    CHECK(verify_wtelawn(3, 2, {{{3, 1}, {0, 0, 1}}, {{2, 1}, {1, 0}}}).pass);
    CHECK_THROWS_AS(verify_wtelawn(2, 2, {{{2, 1}, {0, 0}}}), BadShape);
}

TEST_CASE("annihilation with more factors than layers") {
    CHECK(verify_annihilation(2, 1, {{{2, 1}, {0, 0}}, {{2, 1}, {0, 0}}}).pass);
    CHECK(verify_annihilation(2, 0, {{{2, 1}, {1, 1}}}).pass);
    CHECK(verify_annihilation(3, 1, {{{3, 2}, {0, 0, 0}}, {{2, 1}, {0, 0}}}).pass);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> b(0, 1);
        std::vector<std::pair<DeltaIndex, std::vector<int>>> factors;
        for (int i = 0; i < 3; ++i) factors.push_back({{2, 1}, {b(rng), b(rng)}});
        CHECK(verify_annihilation(2, 2, factors).pass);
    }
}

TEST_CASE("verify_phim cases") {
    ParamPoly l1 = ParamPoly::var(Var::lambda(1));
    ParamPoly l2 = ParamPoly::var(Var::lambda(2));
    CHECK(verify_phim(2, 0, {}, l1 * l1 * l2).pass);
    CHECK(verify_phim(2, 1, {{2, 1}}, l1 * ParamPoly::var(Var::mu(1, 2))).pass);

    // k = 3, m = 1: a mixed monomial across all label choices
    for (const auto& bd : delta_set(3)) {
        ParamPoly h = l1 * ParamPoly::var(Var::mu(1, 1), 2);
        CHECK(verify_phim(3, 1, {bd}, h).pass);
    }
    CHECK(verify_phim(2, 2, {{2, 1}, {2, 1}},
                      ParamPoly::var(Var::mu(1, 1)) * ParamPoly::var(Var::mu(2, 2)))
              .pass);
}

TEST_CASE("f matrix") {
    FMatrix f = f_matrix(2, 1);
    REQUIRE(f.square());
    REQUIRE(f.entries.size() == 1);
    DeltaIndex d{2, 1};
    CHECK(f.entries[0][0] == s_poly(d, d, 1, 2) - s_poly(d, d, 1, 1));

    // evaluating at t = 0 kills every s, hence the determinant
    std::map<Var, Rational> zero;
    for (const auto& v : f.entries[0][0].variables()) zero.emplace(v, Rational(0));
    CHECK(det(f.eval_at(zero)) == Rational(0));

    std::mt19937 rng(43);
    for (int m = 1; m <= 3; ++m) {
        FMatrix fm = f_matrix(2, m);
        REQUIRE(fm.square());
        std::set<Var> vars;
        for (const auto& row : fm.entries)
            for (const auto& e : row)
                for (const auto& v : e.variables()) vars.insert(v);
        bool witness = false;
        for (int attempt = 0; attempt < 16 && !witness; ++attempt)
            witness = !det(fm.eval_at(random_rational_assignment(vars, rng))).is_zero();
        CHECK(witness);
    }
    CHECK_THROWS_AS(f_matrix(1, 1), BadParameter);
}

TEST_CASE("reparametrization is surjective") {
    CHECK(reparam_rank(2, 1).pass);
    CHECK(reparam_rank(2, 2).pass);
    CHECK(reparam_rank(3, 1).pass);
    CHECK(reparam_rank(3, 2).pass);
    CHECK(reparam_rank(3, 0).pass);
}

TEST_CASE("theta is an algebra and Lie homomorphism") {
    std::mt19937 rng(47);
    ThetaFamily theta(2, 1, false);
    ThetaFamily wide(3, 1, true);
    for (int i = 0; i < 110; ++i) {
        NCPoly x = random_nc(rng, 2, 3), y = random_nc(rng, 2, 3);
        CHECK(theta.eval(x * y) == path_mul(theta.eval(x), theta.eval(y)));
        PathElem bx = theta.eval(bracket(x, y));
        PathElem by = path_mul(theta.eval(x), theta.eval(y)) -
                      path_mul(theta.eval(y), theta.eval(x));
        CHECK(bx == by);
        NCPoly u = random_nc(rng, 3, 2), v = random_nc(rng, 3, 2);
        CHECK(wide.eval(u * v) == path_mul(wide.eval(u), wide.eval(v)));
    }
}

TEST_CASE("appendix suite aggregates to all pass") {
    Report r = appendix_suite(2, 1, 2);
    CHECK(r.failed() == 0);
    CHECK(r.passed() > 10);
    Report vac = appendix_suite(1, 0, 0);
    CHECK(vac.failed() == 0);
    CHECK(vac.passed() >= 1);
}
