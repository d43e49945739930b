#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/af1.hpp"
#include "ca/errors.hpp"
#include "ca/json_io.hpp"

using namespace ca;

namespace {

ParamPoly hpow(int n) { return ParamPoly::var(Var::hbar(), n); }

ParamPoly random_lambda_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<long> num(-6, 6);
    ParamPoly f;
    for (int i = 0; i <= degree; ++i)
        f += ParamPoly::var(Var::lambda(1), 1).pow(i) * ParamPoly::constant(num(rng));
    return f;
}

PPolyMatrix sinh_of(const PPolyMatrix& n) { return apply_series(FormalSeries::sinh_hbar(), n); }

// f applied to a square matrix by substituting powers for lambda_1
PPolyMatrix poly_of_matrix(const ParamPoly& f, const PPolyMatrix& m) {
    PPolyMatrix r(m.rows(), m.cols());
    PPolyMatrix p = PPolyMatrix::identity(m.rows());
    int deg = f.degree_in(Var::lambda(1));
    for (int i = 0; i <= deg; ++i) {
        ParamPoly c = f.coeff_of(Var::lambda(1), i);
        r = r + p.scaled(c);
        p = p * m;
    }
    return r;
}

}  // namespace

TEST_CASE("functional calculus on nilpotents") {
    PPolyMatrix e2 = nilpotent_jordan(2);
    PPolyMatrix sh = sinh_of(e2.scaled(ParamPoly::constant(1)));
    CHECK(sh == e2.scaled(hpow(1)));

    PPolyMatrix zero(3, 3);
    CHECK(apply_series(FormalSeries::exp_plain(), zero) == PPolyMatrix::identity(3));

    // arcsinh(sinh(hbar E)) recovers hbar E on the 4x4 cell
    PPolyMatrix e4 = nilpotent_jordan(4);
    PPolyMatrix back = apply_series(FormalSeries::arcsinh_plain(), sinh_of(e4));
    CHECK(back == e4.scaled(hpow(1)));

    CHECK_THROWS_AS(apply_series(FormalSeries::exp_plain(), PPolyMatrix::identity(2)),
                    NotNilpotent);
}

TEST_CASE("alpha coefficients") {
    AlphaTable t = solve_alphas(9);
    ParamPoly a3 = hpow(2);
    a3.scale(Rational(1, 12));
    CHECK(t.at(2).is_zero());
    CHECK(t.at(3) == a3);
    CHECK(t.at(4).is_zero());

    // frozen from the series oracle: alpha_{2n+1} = hbar^{2n}/(4^n (2n+1))
    ParamPoly a5 = hpow(4);
    a5.scale(Rational(1, 80));
    ParamPoly a7 = hpow(6);
    a7.scale(Rational(1, 448));
    ParamPoly a9 = hpow(8);
    a9.scale(Rational(1, 2304));
    CHECK(t.at(5) == a5);
    CHECK(t.at(7) == a7);
    CHECK(t.at(9) == a9);

    CHECK(t.at(1) == ParamPoly::constant(1));
    CHECK_THROWS_AS(t.at(10), BadParameter);
}

TEST_CASE("alpha values are stable in p and nonzero") {
    AlphaTable a = solve_alphas(9);
    AlphaTable b = solve_alphas(12);
    for (int j = 3; j <= 9; j += 2) {
        CHECK(a.at(j) == b.at(j));
        CHECK_FALSE(a.at(j).is_zero());
    }
    for (int j = 2; j <= 9; j += 2) CHECK(a.at(j).is_zero());
}

TEST_CASE("alpha golden file") {
    Json g = load_json_file(std::string(CA_GOLDEN_DIR) + "/alphas.json");
    AlphaTable t = solve_alphas(g.at("p").get<int>());
    for (const auto& [key, val] : g.at("alpha").items())
        CHECK(t.at(std::stoi(key)) == poly_from_json(val));
}

TEST_CASE("pi towers") {
    PiRep p0 = build_pi(0, false);
    CHECK(p0.e1.is_zero());
    CHECK(p0.e2.is_zero());

    PiRep p1 = build_pi(1, false);
    ParamPoly kappa = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    CHECK(p1.e1(0, 0) == kappa);
    CHECK(p1.e1(1, 1).is_zero());
    CHECK(p1.e2 == nilpotent_jordan(2));

    PiRep p3 = build_pi(3, false);
    ParamPoly corner = hpow(2);
    corner.scale(Rational(1, 12));
    CHECK(p3.e2(0, 3) == corner);
    CHECK(p3.e2(0, 1) == ParamPoly::constant(1));

    PiRep pl = build_pi(2, true);
    CHECK(pl.e1(2, 2) == ParamPoly::var(Var::lambda(1)));
}

TEST_CASE("defining relation holds identically") {
    for (int p = 0; p <= 8; ++p) {
        PiRep pi = build_pi(p, p % 2 == 1);
        PPolyMatrix lhs = pi.e1 * pi.e2 - pi.e2 * pi.e1;
        PPolyMatrix rhs = sinh_of(pi.e2).scaled(ParamPoly::var(Var::sigma()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pi golden files") {
    for (int p = 0; p <= 3; ++p)
        for (bool wl : {false, true}) {
            std::string name = std::string(wl ? "/pi_lambda_" : "/pi_") + std::to_string(p);
            Json g = load_json_file(std::string(CA_GOLDEN_DIR) + name + ".json");
            PiRep pi = build_pi(p, wl);
            CHECK(pi.e1 == matrix_from_json(g.at("e1")));
            CHECK(pi.e2 == matrix_from_json(g.at("e2")));
        }
}

TEST_CASE("upper right entries") {
    ParamPoly zero;
    ParamPoly lam = ParamPoly::var(Var::lambda(1));
    ParamPoly kappa = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());

    std::mt19937 rng(53);
    ParamPoly f1 = random_lambda_poly(rng, 3);
    CHECK(rho_pp(0, {f1}) == f1);
    CHECK(rho_pp(1, {zero, f1}) == f1.substitute(Var::lambda(1), lam + kappa));

    ParamPoly f3 = random_lambda_poly(rng, 2);
    ParamPoly shift3 = lam + kappa * ParamPoly::constant(3);
    ParamPoly h2_12 = hpow(2);
    h2_12.scale(Rational(1, 12));
    CHECK(rho_pp(3, {zero, f1, zero, f3}) ==
          h2_12 * f1.substitute(Var::lambda(1), shift3) + f3.substitute(Var::lambda(1), shift3));

    CHECK_THROWS_AS(rho_pp(2, {zero, f1}), BadShape);
}

TEST_CASE("matrix route equals shift route") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        int p = 1 + trial % 4;
        std::vector<ParamPoly> f;
        for (int j = 0; j <= p; ++j) f.push_back(random_lambda_poly(rng, 4));
        CHECK(rho_pp(p, f) == rho_pp_shift(p, f));
    }
}

TEST_CASE("triangularity report") {
    Report r = verify_rho_triangular(4, 3);
    CHECK(r.failed() == 0);
    CHECK(r.passed() >= 12);
}

TEST_CASE("composite matrices match the displayed pattern") {
    // Sum_j f_j(pi(e_1)) pi(e_2)^j with generic quadratic f_j against the
    // golden files produced by the substitution route.
    for (int p = 0; p <= 3; ++p) {
        Json g = load_json_file(std::string(CA_GOLDEN_DIR) + "/wtpi_" + std::to_string(p) +
                                ".json");
        PiRep pi = build_pi(p, true);
        std::size_t n = pi.e1.rows();
        PPolyMatrix total(n, n);
        PPolyMatrix e2pow = PPolyMatrix::identity(n);
        for (int j = 0; j <= p; ++j) {
            ParamPoly fj;
            for (int i = 0; i <= 2; ++i)
                fj += ParamPoly::var(Var::mu(j, i)) * ParamPoly::var(Var::lambda(1)).pow(i);
            total = total + poly_of_matrix(fj, pi.e1) * e2pow;
            e2pow = e2pow * pi.e2;
        }
        CHECK(total == matrix_from_json(g.at("matrix")));
    }
}
