#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/errors.hpp"
#include "ca/pgrowth.hpp"

using namespace ca;

namespace {

Quiver random_acyclic(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 6), coin(0, 2);
    Quiver q;
    int n = nv(rng);
    for (int v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
    for (int s = 0; s < n; ++s)
        for (int d = s + 1; d < n; ++d)
            if (coin(rng) == 0) q.add_arrow(s, d, "a" + std::to_string(s) + std::to_string(d));
    return q;
}

RatVector random_vec(std::size_t dim, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    RatVector v(dim);
    for (auto& c : v) c = Rational(num(rng));
    return v;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
    if (basis.empty()) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }
    std::size_t dim = basis[0].size();
    RatMatrix with(basis.size() + 1, dim), without(basis.size(), dim);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            with(r, c) = basis[r][c];
            without(r, c) = basis[r][c];
        }
    for (std::size_t c = 0; c < dim; ++c) with(basis.size(), c) = v[c];
    return rank(with) == rank(without);
}

// re-verify a positive certificate from scratch: triangular, faithful, and
// compatible with the structure constants
void check_embedding(const FDAlgebra& a, const GrowthCertificate& cert) {
    REQUIRE(cert.poly());
    REQUIRE(cert.images.size() == a.dim);
    std::size_t n = cert.images[0].rows();
    for (const auto& m : cert.images) CHECK(m.is_upper_triangular());

    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            RatMatrix lhs = cert.images[i] * cert.images[j];
            RatMatrix rhs(n, n);
            for (std::size_t k = 0; k < a.dim; ++k)
                rhs = rhs + cert.images[k].scaled(a.table[i][j][k]);
            CHECK(lhs == rhs);
        }

    RatMatrix flat(a.dim, n * n);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) flat(i, r * n + c) = cert.images[i](r, c);
    CHECK(rank(flat) == a.dim);

    RatMatrix unit_img(n, n);
    for (std::size_t k = 0; k < a.dim; ++k) unit_img = unit_img + cert.images[k].scaled(a.unit[k]);
    CHECK(unit_img == RatMatrix::identity(n));
}

}  // namespace

TEST_CASE("structure constant validation") {
    FDAlgebra t2 = fd_t_algebra(2);
    t2.validate();
    CHECK(t2.dim == 3);
    FDAlgebra bad = t2;
    bad.table[0][1][2] = Rational(7);
    CHECK_THROWS_AS(bad.validate(), InvalidTable);
    bad = t2;
    bad.unit[0] = Rational(0);
    CHECK_THROWS_AS(bad.validate(), InvalidTable);
}

TEST_CASE("radical of the standard examples") {
    // T_2 on the basis (E11, E12, E22): the radical is the arrow part
    FDAlgebra t2 = fd_t_algebra(2);
    std::vector<RatVector> r = radical(t2);
    REQUIRE(r.size() == 1);
    CHECK(in_span(r, RatVector{Rational(0), Rational(1), Rational(0)}));

    CHECK(radical(fd_qq()).empty());
    CHECK(radical(fd_matrix_algebra(2)).empty());

    FDAlgebra qx2 = fd_quotient_poly({Rational(0), Rational(0), Rational(1)});
    std::vector<RatVector> rx = radical(qx2);
    REQUIRE(rx.size() == 1);
    CHECK(in_span(rx, RatVector{Rational(0), Rational(1)}));
}

TEST_CASE("growth decisions") {
    for (int p = 1; p <= 4; ++p) {
        FDAlgebra tp = fd_t_algebra(p);
        GrowthCertificate c = decide_growth(tp);
        CHECK(c.poly());
        CHECK(c.violation == GrowthCertificate::Violation::None);
        CHECK(c.radical_basis.size() == tp.dim - static_cast<std::size_t>(p));
        check_embedding(tp, c);
    }

    GrowthCertificate m2 = decide_growth(fd_matrix_algebra(2));
    CHECK_FALSE(m2.poly());
    CHECK(m2.violation == GrowthCertificate::Violation::QuotientNoncommutative);

    GrowthCertificate gauss = decide_growth(fd_quotient_poly({Rational(1), Rational(0), Rational(1)}));
    CHECK_FALSE(gauss.poly());
    CHECK(gauss.violation == GrowthCertificate::Violation::SpectrumNotReal);

    FDAlgebra qx2 = fd_quotient_poly({Rational(0), Rational(0), Rational(1)});
    GrowthCertificate dual = decide_growth(qx2);
    CHECK(dual.poly());
    check_embedding(qx2, dual);

    GrowthCertificate qq = decide_growth(fd_qq());
    CHECK(qq.poly());
    CHECK(qq.radical_basis.empty());
}

TEST_CASE("random acyclic path algebras have polynomial growth") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        FDAlgebra a = fd_path_algebra(random_acyclic(rng));
        a.validate();
        GrowthCertificate c = decide_growth(a);
        CHECK(c.poly());
        check_embedding(a, c);
    }
}

TEST_CASE("tensor products") {
    FDAlgebra t2 = fd_t_algebra(2);
    FDAlgebra tt = tensor_fd(t2, t2);
    tt.validate();
    CHECK(tt.dim == 9);
    GrowthCertificate c = decide_growth(tt);
    CHECK(c.poly());
    check_embedding(tt, c);

    // tensoring with the ground field changes nothing
    FDAlgebra ground = fd_quotient_poly({Rational(0), Rational(1)});
    FDAlgebra same = tensor_fd(t2, ground);
    CHECK(same.dim == t2.dim);
    CHECK(same.table == t2.table);

    FDAlgebra gauss = fd_quotient_poly({Rational(1), Rational(0), Rational(1)});
    CHECK_FALSE(decide_growth(tensor_fd(gauss, gauss)).poly());
}

TEST_CASE("wedderburn splitting") {
    CHECK(split_extension_check(fd_t_algebra(3)).failed() == 0);
    CHECK(split_extension_check(fd_quotient_poly({Rational(0), Rational(0), Rational(1)}))
              .failed() == 0);
    std::mt19937 rng(73);
    Quiver q = random_acyclic(rng);
    CHECK(split_extension_check(fd_path_algebra(q)).failed() == 0);
}

TEST_CASE("radical is a nilpotent ideal and the quotient is semisimple") {
    std::mt19937 rng(79);
    int done = 0;
    while (done < 100) {
        FDAlgebra a;
        switch (done % 3) {
            case 0: a = fd_path_algebra(random_acyclic(rng)); break;
            case 1: a = fd_t_algebra(1 + done % 4); break;
            default: {
                // (x - r)(x - s): split spectrum with a possible double root
                std::uniform_int_distribution<long> num(-3, 3);
                Rational r(num(rng)), s(num(rng));
                a = fd_quotient_poly({r * s, -(r + s), Rational(1)});
            }
        }
        std::vector<RatVector> rad = radical(a);
        for (const auto& rb : rad) {
            RatVector x = random_vec(a.dim, rng);
            CHECK(in_span(rad, a.mul(x, rb)));
            CHECK(in_span(rad, a.mul(rb, x)));
        }
        FDAlgebra q = quotient_by_subspace(a, rad);
        q.validate();
        CHECK(radical(q).empty());

        GrowthCertificate c = decide_growth(a);
        if (c.poly()) {
            // commutators land in the radical
            RatVector x = random_vec(a.dim, rng), y = random_vec(a.dim, rng);
            RatVector comm = a.mul(x, y);
            RatVector yx = a.mul(y, x);
            for (std::size_t i = 0; i < a.dim; ++i) comm[i] -= yx[i];
            CHECK(in_span(c.radical_basis, comm));
            check_embedding(a, c);
        }
        ++done;
    }
}
