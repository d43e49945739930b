#include "ca/taft.hpp"

#include <functional>
#include <sstream>

#include "ca/errors.hpp"
#include "ca/pgrowth.hpp"

namespace ca {

TaftElem TaftElem::make(const Mono& m, const Scalar& c) const {
    TaftElem e;
    e.add_term(m, c);
    return e;
}

TaftElem TaftElem::monomial(int i, int j, Rational c) {
    if (i < 0 || i > 1 || j < 0 || j > 1) throw BadParameter("TaftElem: exponents must be 0 or 1");
    TaftElem e;
    e.add_term({i, j}, c);
    return e;
}

void TaftElem::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TaftElem TaftElem::operator-() const {
    TaftElem r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TaftElem& TaftElem::operator+=(const TaftElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TaftElem& TaftElem::operator-=(const TaftElem& o) {
    return *this += -o;
}

TaftElem operator*(const TaftElem& a, const TaftElem& b) {
    TaftElem r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.second + mb.second > 1) continue;  // x^2 = 0
            // x a = -a x gives a sign per transposition.
            Rational c = ca * cb;
            if (ma.second == 1 && mb.first == 1) c = -c;
            r.add_term({(ma.first + mb.first) % 2, ma.second + mb.second}, c);
        }
    return r;
}

std::string TaftElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.first) os << "*a";
        if (m.second) os << "*x";
    }
    return os.str();
}

Tensor2<TaftElem> taft_delta(const TaftElem& t) {
    // Delta(a) = a(x)a, Delta(x) = x(x)a + 1(x)x.
    Tensor2<TaftElem> da;
    da.add_term({1, 0}, {1, 0}, Rational(1));
    Tensor2<TaftElem> dx;
    dx.add_term({0, 1}, {1, 0}, Rational(1));
    dx.add_term({0, 0}, {0, 1}, Rational(1));

    Tensor2<TaftElem> r;
    for (const auto& [m, c] : t.terms()) {
        Tensor2<TaftElem> acc;
        acc.add_term({0, 0}, {0, 0}, c);
        if (m.first) acc = acc * da;
        if (m.second) acc = acc * dx;
        r += acc;
    }
    return r;
}

Rational taft_counit(const TaftElem& t) {
    Rational r;
    for (const auto& [m, c] : t.terms())
        if (m.second == 0) r += c;  // eps(a) = 1, eps(x) = 0
    return r;
}

TaftElem taft_antipode(const TaftElem& t) {
    // S(a) = a, S(x) = ax, extended anti-multiplicatively.
    TaftElem r;
    for (const auto& [m, c] : t.terms()) {
        TaftElem acc = TaftElem::monomial(0, 0, c);
        if (m.second) acc = acc * TaftElem::monomial(1, 1);
        if (m.first) acc = acc * TaftElem::gen_a();
        r += acc;
    }
    return r;
}

std::vector<RatMatrix> taft_pi(const Rational& lambda, bool twisted) {
    if (lambda.is_zero()) throw BadParameter("taft_pi: lambda must be nonzero");
    RatMatrix d(2, 2), x(2, 2);
    d(0, 0) = twisted ? Rational(-1) : Rational(1);
    d(1, 1) = twisted ? Rational(1) : Rational(-1);
    x(0, 1) = lambda;
    // Images of the basis 1, a, x, ax.
    return {RatMatrix::identity(2), d, x, d * x};
}

std::size_t taft_pair_rank(const std::vector<RatMatrix>& first,
                           const std::vector<RatMatrix>& second) {
    RatMatrix m(4, 8);
    for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m(b, 2 * i + j) = first[b](i, j);
                m(b, 4 + 2 * i + j) = second[b](i, j);
            }
    return rank(m);
}

Report taft_check() {
    Report rep;
    rep.suite = "taft";

    std::vector<std::pair<std::string, TaftElem>> basis{{"1", TaftElem::one()},
                                                        {"a", TaftElem::gen_a()},
                                                        {"x", TaftElem::gen_x()},
                                                        {"ax", TaftElem::monomial(1, 1)}};

    TaftElem a = TaftElem::gen_a(), x = TaftElem::gen_x();
    rep.add("relation a^2=1", a * a == TaftElem::one());
    rep.add("relation x^2=0", (x * x).is_zero());
    rep.add("relation xa=-ax", x * a == -(a * x));

    std::function<Tensor2<TaftElem>(const TaftElem&)> delta = [](const TaftElem& e) {
        return taft_delta(e);
    };
    std::function<Rational(const TaftElem&)> eps = [](const TaftElem& e) {
        return taft_counit(e);
    };
    std::function<TaftElem(const TaftElem&)> S = [](const TaftElem& e) {
        return taft_antipode(e);
    };
    std::function<TaftElem(const TaftElem&)> id = [](const TaftElem& e) { return e; };

    for (const auto& [gu, u] : basis)
        for (const auto& [gv, v] : basis) {
            rep.add("delta_multiplicative " + gu + "," + gv,
                    taft_delta(u * v) == taft_delta(u) * taft_delta(v));
            rep.add("counit_multiplicative " + gu + "," + gv,
                    taft_counit(u * v) == taft_counit(u) * taft_counit(v));
            rep.add("antipode_antihom " + gu + "," + gv,
                    taft_antipode(u * v) == taft_antipode(v) * taft_antipode(u));
        }
    for (const auto& [g, u] : basis) {
        Tensor2<TaftElem> du = taft_delta(u);
        rep.add("coassociativity " + g, coproduct_left(du, delta) == coproduct_right(du, delta));
        rep.add("counit_left " + g, counit_left(du, eps) == u);
        rep.add("counit_right " + g, counit_right(du, eps) == u);
        TaftElem target = TaftElem::monomial(0, 0, taft_counit(u));
        rep.add("antipode_left " + g, collapse(du, S, id) == target);
        rep.add("antipode_right " + g, collapse(du, id, S) == target);
    }

    // Representation facts. The displayed family sends both x and ax to
    // lambda E_12, so the direct sum of two of its members has rank 3 with
    // x - ax in the kernel, whatever the two parameters are; pairing with the
    // sign-twisted companion family reaches rank 4.
    auto pi1 = taft_pi(Rational(1));
    auto pi2 = taft_pi(Rational(2));
    auto pit = taft_pi(Rational(2), /*twisted=*/true);

    for (const auto& [label, fam] : {std::make_pair(std::string("pi_1"), pi1),
                                     std::make_pair(std::string("pi_twisted_2"), pit)}) {
        bool rel = fam[1] * fam[1] == RatMatrix::identity(2) && (fam[2] * fam[2]).is_zero() &&
                   fam[2] * fam[1] == (fam[1] * fam[2]).scaled(Rational(-1));
        rep.add("matrix_relations " + label, rel);
    }
    rep.add("pi_x_squared_zero", (pi1[2] * pi1[2]).is_zero());

    std::size_t displayed = taft_pair_rank(pi1, pi2);
    rep.add("displayed_pair_rank", displayed == 3,
            "rank " + std::to_string(displayed) +
                "; kernel spanned by x - ax for every parameter pair");
    std::size_t twisted_rank = taft_pair_rank(pi1, pit);
    rep.add("twisted_pair_rank", twisted_rank == 4,
            "rank " + std::to_string(twisted_rank) + "; faithful, block upper triangular in T_4");

    // Growth decision on the faithful triangular image.
    std::vector<RatMatrix> t4_images;
    for (std::size_t b = 0; b < 4; ++b) {
        RatMatrix m(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m(i, j) = pi1[b](i, j);
                m(2 + i, 2 + j) = pit[b](i, j);
            }
        t4_images.push_back(std::move(m));
    }
    bool triangular = true;
    for (const auto& m : t4_images)
        if (!m.is_upper_triangular()) triangular = false;
    rep.add("image_upper_triangular", triangular);

    FDAlgebra image = fd_from_matrix_span(t4_images);
    GrowthCertificate cert = decide_growth(image);
    rep.add("image_poly_growth", cert.poly(),
            cert.poly() ? "radical dimension " + std::to_string(cert.radical_basis.size())
                        : cert.detail);
    return rep;
}

}  // namespace ca
