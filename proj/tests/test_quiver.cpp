#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ca/errors.hpp"
#include "ca/quiver.hpp"

using namespace ca;

namespace {

Quiver random_acyclic(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 6), coin(0, 2);
    Quiver q;
    int n = nv(rng);
    for (int v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
    // arrows only from lower to higher index, so there is never a cycle
    for (int s = 0; s < n; ++s)
        for (int d = s + 1; d < n; ++d)
            if (coin(rng) == 0) q.add_arrow(s, d, "a" + std::to_string(s) + std::to_string(d));
    return q;
}

PathElem random_elem(QuiverPtr q, const std::vector<Path>& paths, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::uniform_int_distribution<long> num(-4, 4);
    PathElem e(q);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        e += PathElem::path(q, paths[pick(rng)], ParamPoly::constant(num(rng)));
    return e;
}

}  // namespace

TEST_CASE("build_qm shapes") {
    QmQuiver a = build_qm(2, 1);
    CHECK(a.quiver->num_vertices() == 2);
    CHECK(a.quiver->num_arrows() == 1);
    QmQuiver b = build_qm(3, 1);
    CHECK(b.quiver->num_vertices() == 6);
    CHECK(b.quiver->num_arrows() == 9);
    QmQuiver c = build_qm(2, 0);
    CHECK(c.quiver->num_vertices() == 1);
    CHECK(c.quiver->num_arrows() == 0);
    CHECK(c.trivial());
    QmQuiver d = build_qm(1, 3);
    CHECK(d.quiver->num_vertices() == 1);
    CHECK(d.trivial());
    QmQuiver e = build_qm(3, 2);
    CHECK(e.quiver->num_vertices() == 9);
    CHECK(e.quiver->num_arrows() == 18);
    CHECK(e.quiver->is_acyclic());
}

TEST_CASE("path multiplication relations in Q_m") {
    QmQuiver qm = build_qm(2, 1);
    QuiverPtr q = qm.quiver;
    DeltaIndex d{2, 1};
    PathElem q1 = PathElem::idempotent(q, qm.vertex_index(d, 1));
    PathElem q2 = PathElem::idempotent(q, qm.vertex_index(d, 2));
    PathElem v = PathElem::arrow_elem(q, qm.arrow_index(d, d, 1));

    CHECK(path_mul(q1, v) == v);
    CHECK(path_mul(v, q2) == v);
    CHECK(path_mul(v, q1).is_zero());
    CHECK(path_mul(q2, v).is_zero());
    PathElem u = q1 + q2;
    CHECK(path_mul(u, u) == u);
    CHECK(u == PathElem::unit(q));

    QmQuiver other = build_qm(2, 1);
    CHECK_THROWS_AS(path_mul(q1, PathElem::unit(other.quiver)), QuiverMismatch);
}

TEST_CASE("arrow ideal powers") {
    QmQuiver qm = build_qm(3, 2);
    QuiverPtr q = qm.quiver;
    DeltaIndex d{2, 1};
    PathElem v = PathElem::arrow_elem(q, qm.arrow_index(d, d, 1));
    CHECK(ideal_power_membership(v, 1));
    CHECK_FALSE(ideal_power_membership(v, 2));
    CHECK_FALSE(ideal_power_membership(PathElem::idempotent(q, 0), 1));

    // paths have at most m arrows, so I^{m+1} = 0
    for (const auto& p : all_paths(*q)) CHECK(p.length() <= 2);
    PathElem v2 = path_mul(v, PathElem::arrow_elem(q, qm.arrow_index(d, d, 2)));
    CHECK(ideal_power_membership(v2, 2));
    CHECK(path_mul(v2, v).is_zero());
}

TEST_CASE("triangular embedding of Q_m(2,1)") {
    QmQuiver qm = build_qm(2, 1);
    TriangularEmbedding emb = acyclic_to_triangular(*qm.quiver);
    CHECK(emb.basis.size() == 3);
    CHECK(emb.dim == 2);
    // the arrow goes to E_12
    Path arrow{0, {0}};
    RatMatrix e12(2, 2);
    e12(0, 1) = Rational(1);
    CHECK(emb.image_of(arrow) == e12);
}

TEST_CASE("one vertex quiver and cycles") {
    Quiver one;
    one.add_vertex("*");
    TriangularEmbedding emb = acyclic_to_triangular(one);
    CHECK(emb.dim == 1);
    CHECK(emb.image_of(Path{0, {}}) == RatMatrix::identity(1));

    Quiver cyc;
    cyc.add_vertex("a");
    cyc.add_vertex("b");
    cyc.add_arrow(0, 1, "f");
    cyc.add_arrow(1, 0, "g");
    CHECK_FALSE(cyc.is_acyclic());
    CHECK_THROWS_AS(acyclic_to_triangular(cyc), CyclicQuiver);
}

TEST_CASE("embedding is multiplicative injective and triangular") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Quiver q = random_acyclic(rng);
        TriangularEmbedding emb = acyclic_to_triangular(q);
        std::vector<Path> paths = all_paths(q);
        CHECK(paths.size() == emb.basis.size());

        for (const auto& p : paths) CHECK(emb.image_of(p).is_upper_triangular());
        for (const auto& p : paths)
            if (p.length() >= 1) {
                const RatMatrix& m = emb.image_of(p);
                CHECK(m.is_strictly_upper_triangular());
            }

        // multiplicative: image(p)*image(r) = image(p.r) or 0
        for (const auto& p : paths)
            for (const auto& r : paths) {
                RatMatrix prod = emb.image_of(p) * emb.image_of(r);
                if (p.end(q) == r.start) {
                    Path pr = p;
                    pr.arrows.insert(pr.arrows.end(), r.arrows.begin(), r.arrows.end());
                    CHECK(prod == emb.image_of(pr));
                } else {
                    CHECK(prod.is_zero());
                }
            }

        // injective on the path basis: flatten images and take the rank
        RatMatrix flat(paths.size(), emb.dim * emb.dim);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const RatMatrix& m = emb.image_of(paths[i]);
            for (std::size_t r = 0; r < emb.dim; ++r)
                for (std::size_t c = 0; c < emb.dim; ++c) flat(i, r * emb.dim + c) = m(r, c);
        }
        CHECK(rank(flat) == paths.size());
    }
}

TEST_CASE("path algebra laws on random triples") {
    std::mt19937 rng(29);
    int checked = 0;
    while (checked < 120) {
        QmQuiver qm = build_qm(2 + checked % 2, 1 + checked % 2);
        QuiverPtr q = qm.quiver;
        std::vector<Path> paths = all_paths(*q);
        PathElem x = random_elem(q, paths, rng);
        PathElem y = random_elem(q, paths, rng);
        PathElem z = random_elem(q, paths, rng);
        CHECK(path_mul(path_mul(x, y), z) == path_mul(x, path_mul(y, z)));
        PathElem u = PathElem::unit(q);
        CHECK(path_mul(u, x) == x);
        CHECK(path_mul(x, u) == x);
        CHECK(path_mul(x + y, z) == path_mul(x, z) + path_mul(y, z));
        ++checked;
    }
}

TEST_CASE("idempotents split off the nilpotent arrow ideal") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Quiver qq = random_acyclic(rng);
        auto q = std::make_shared<Quiver>(qq);
        std::vector<Path> paths = all_paths(*q);

        // the idempotent span is a subalgebra
        for (int v = 0; v < static_cast<int>(q->num_vertices()); ++v)
            for (int w = 0; w < static_cast<int>(q->num_vertices()); ++w) {
                PathElem prod = path_mul(PathElem::idempotent(q, v), PathElem::idempotent(q, w));
                if (v == w)
                    CHECK(prod == PathElem::idempotent(q, v));
                else
                    CHECK(prod.is_zero());
            }

        // the arrow ideal is nilpotent: multiply all arrows long enough
        std::size_t longest = 0;
        for (const auto& p : paths) longest = std::max(longest, p.length());
        PathElem ideal_sum(q);
        for (int a = 0; a < static_cast<int>(q->num_arrows()); ++a)
            ideal_sum += PathElem::arrow_elem(q, a);
        PathElem power = ideal_sum;
        for (std::size_t i = 0; i < longest; ++i) power = path_mul(power, ideal_sum);
        CHECK(power.is_zero());
    }
}
