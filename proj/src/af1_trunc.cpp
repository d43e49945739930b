#include "ca/af1_trunc.hpp"

#include <sstream>

#include "ca/errors.hpp"

namespace ca {

Af1TruncElem::Af1TruncElem(int trunc) : trunc_(trunc) {
    if (trunc < 1) throw BadParameter("Af1TruncElem: need truncation >= 1");
}

Af1TruncElem Af1TruncElem::make(const Mono& m, const Scalar& c) const {
    Af1TruncElem e(*this);
    e.terms_.clear();
    e.add_term(m, c);
    return e;
}

Af1TruncElem Af1TruncElem::monomial(int a, int b, ParamPoly c) const {
    if (a < 0 || b < 0) throw BadParameter("negative exponent");
    return make({a, b}, c);
}

void Af1TruncElem::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (m.second >= trunc_) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Af1TruncElem Af1TruncElem::sinh_he2() const {
    Af1TruncElem r(*this);
    r.terms_.clear();
    for (int i = 1; i < trunc_; i += 2) {
        ParamPoly c = ParamPoly::var(Var::hbar(), i);
        c.scale(factorial(i).inverse());
        r.add_term({0, i}, c);
    }
    return r;
}

Af1TruncElem Af1TruncElem::exp_he2(int sign) const {
    Af1TruncElem r(*this);
    r.terms_.clear();
    for (int i = 0; i < trunc_; ++i) {
        ParamPoly c = i == 0 ? ParamPoly::constant(1) : ParamPoly::var(Var::hbar(), i);
        Rational s = factorial(i).inverse();
        if (sign < 0 && i % 2 == 1) s = -s;
        c.scale(s);
        r.add_term({0, i}, c);
    }
    return r;
}

Af1TruncElem Af1TruncElem::operator-() const {
    Af1TruncElem r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Af1TruncElem& Af1TruncElem::operator+=(const Af1TruncElem& o) {
    if (trunc_ == 0) return *this = o;
    if (o.trunc_ != 0 && trunc_ != o.trunc_)
        throw ParameterMismatch("adding elements with different truncations");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Af1TruncElem& Af1TruncElem::operator-=(const Af1TruncElem& o) {
    return *this += -o;
}

Af1TruncElem Af1TruncElem::times_e1() const {
    // e_1^a e_2^b e_1 = e_1^{a+1} e_2^b - b e_1^a sigma sinh(hbar e_2) e_2^{b-1}
    Af1TruncElem r(*this);
    r.terms_.clear();
    Af1TruncElem sh = sinh_he2();
    for (const auto& [m, c] : terms_) {
        r.add_term({m.first + 1, m.second}, c);
        if (m.second == 0) continue;
        ParamPoly f = c * ParamPoly::var(Var::sigma());
        f.scale(Rational(-m.second));
        for (const auto& [ms, cs] : sh.terms_)
            r.add_term({m.first, m.second - 1 + ms.second}, f * cs);
    }
    return r;
}

Af1TruncElem operator*(const Af1TruncElem& a, const Af1TruncElem& b) {
    if (a.trunc_ == 0) return a;
    if (b.trunc_ != 0 && a.trunc_ != b.trunc_)
        throw ParameterMismatch("multiplying elements with different truncations");
    Af1TruncElem total(a);
    total.terms_.clear();
    for (const auto& [mb, cb] : b.terms_) {
        Af1TruncElem acc(a);
        for (auto& [m, c] : acc.terms_) c *= cb;
        for (int t = 0; t < mb.first; ++t) acc = acc.times_e1();
        if (mb.second > 0) {
            Af1TruncElem shifted(a);
            shifted.terms_.clear();
            for (const auto& [m, c] : acc.terms_)
                shifted.add_term({m.first, m.second + mb.second}, c);
            acc = std::move(shifted);
        }
        total += acc;
    }
    return total;
}

Af1TruncElem Af1TruncElem::retruncate(int np) const {
    Af1TruncElem r(np);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

std::string Af1TruncElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.first) os << "*e1^" << m.first;
        if (m.second) os << "*e2^" << m.second;
    }
    return os.str();
}

namespace {

// The per-leg ideal (e_2^N (x) 1, 1 (x) e_2^N) is not a coideal: expanding
// (Delta e_2)^N leaves cross terms e_2^i (x) e_2^{N-i}. The coproduct and the
// product do respect the filtration by total e_2-degree, so tensor squares
// and cubes are taken modulo total degree >= N across all legs.
void truncate_total(Tensor2<Af1TruncElem>& t) {
    int n = t.proto.trunc();
    for (auto it = t.terms.begin(); it != t.terms.end();) {
        if (it->first.first.second + it->first.second.second >= n)
            it = t.terms.erase(it);
        else
            ++it;
    }
}

void truncate_total(Tensor3<Af1TruncElem>& t) {
    int n = t.proto.trunc();
    for (auto it = t.terms.begin(); it != t.terms.end();) {
        const auto& [a, b, c] = it->first;
        if (a.second + b.second + c.second >= n)
            it = t.terms.erase(it);
        else
            ++it;
    }
}

Tensor2<Af1TruncElem> tensor_pow(const Tensor2<Af1TruncElem>& t, int e) {
    Tensor2<Af1TruncElem> r(t.proto);
    r.add_term({0, 0}, {0, 0}, ParamPoly::constant(1));
    for (int i = 0; i < e; ++i) {
        r = r * t;
        truncate_total(r);
    }
    return r;
}

Af1TruncElem epow(const Af1TruncElem& x, int e) {
    Af1TruncElem r = x.make({0, 0}, ParamPoly::constant(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/// sinh(hbar t) for a tensor t with nilpotent legs.
Tensor2<Af1TruncElem> tensor_sinh(const Tensor2<Af1TruncElem>& t) {
    int bound = 2 * t.proto.trunc();  // (1(x)e_2 + e_2(x)1)^{2N-1} = 0
    Tensor2<Af1TruncElem> r(t.proto);
    Tensor2<Af1TruncElem> p = tensor_pow(t, 0);
    for (int i = 1; i < bound; ++i) {
        p = p * t;
        truncate_total(p);
        if (p.terms.empty()) break;
        if (i % 2 == 0) continue;
        ParamPoly c = ParamPoly::var(Var::hbar(), i);
        c.scale(factorial(i).inverse());
        for (const auto& [k, s] : p.terms) r.add_term(k.first, k.second, s * c);
    }
    return r;
}

}  // namespace

Tensor2<Af1TruncElem> af1_delta(const Af1TruncElem& x) {
    Af1TruncElem proto(x.trunc());
    Tensor2<Af1TruncElem> de1 = tensor2(proto.gen_e1(), proto.exp_he2(-1)) +
                                tensor2(proto.exp_he2(+1), proto.gen_e1());
    Tensor2<Af1TruncElem> de2 = tensor2(proto.one(), proto.gen_e2()) +
                                tensor2(proto.gen_e2(), proto.one());
    Tensor2<Af1TruncElem> r(proto);
    for (const auto& [m, c] : x.terms()) {
        Tensor2<Af1TruncElem> acc = tensor_pow(de1, m.first) * tensor_pow(de2, m.second);
        truncate_total(acc);
        for (const auto& [k, s] : acc.terms) r.add_term(k.first, k.second, s * c);
    }
    return r;
}

ParamPoly af1_counit(const Af1TruncElem& x) {
    ParamPoly r;
    for (const auto& [m, c] : x.terms())
        if (m.first == 0 && m.second == 0) r += c;
    return r;
}

namespace {

Af1TruncElem antihom_extend(const Af1TruncElem& x, const Af1TruncElem& se1,
                            const Af1TruncElem& se2) {
    Af1TruncElem r(x.trunc());
    for (const auto& [m, c] : x.terms()) {
        Af1TruncElem acc = epow(se2, m.second) * epow(se1, m.first);
        for (const auto& [ma, ca] : acc.terms()) r += r.make(ma, ca * c);
    }
    return r;
}

}  // namespace

Af1TruncElem af1_antipode(const Af1TruncElem& x) {
    Af1TruncElem proto(x.trunc());
    ParamPoly hs = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    Af1TruncElem se1 = -proto.gen_e1();
    Af1TruncElem sh = proto.sinh_he2();
    for (const auto& [m, c] : sh.terms()) se1 += proto.make(m, -(c * hs));
    return antihom_extend(x, se1, -proto.gen_e2());
}

Af1TruncElem af1_antipode_inverse(const Af1TruncElem& x) {
    Af1TruncElem proto(x.trunc());
    ParamPoly hs = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    Af1TruncElem te1 = -proto.gen_e1();
    Af1TruncElem sh = proto.sinh_he2();
    for (const auto& [m, c] : sh.terms()) te1 += proto.make(m, c * hs);
    return antihom_extend(x, te1, -proto.gen_e2());
}

Report af1_hopf_check(int n) {
    if (n < 2) throw BadParameter("af1_hopf_check: need N >= 2");
    Report rep;
    rep.suite = "af1_hopf";

    Af1TruncElem proto(n);
    Af1TruncElem e1 = proto.gen_e1(), e2 = proto.gen_e2(), one = proto.one();

    // Relation in the algebra itself.
    Af1TruncElem rel = e1 * e2 - e2 * e1;
    Af1TruncElem sh = proto.sinh_he2();
    for (const auto& [m, c] : sh.terms()) rel -= proto.make(m, c * ParamPoly::var(Var::sigma()));
    rep.add("algebra_relation", rel.is_zero(), rel.is_zero() ? "" : rel.str());

    Tensor2<Af1TruncElem> de1 = af1_delta(e1), de2 = af1_delta(e2);

    Tensor2<Af1TruncElem> trel = de1 * de2 - de2 * de1;
    truncate_total(trel);
    Tensor2<Af1TruncElem> tsh = tensor_sinh(de2);
    for (auto& [k, c] : tsh.terms) c *= ParamPoly::var(Var::sigma());
    rep.add("delta_preserves_relation", trel == tsh);

    std::function<Tensor2<Af1TruncElem>(const Af1TruncElem&)> delta = [](const Af1TruncElem& e) {
        return af1_delta(e);
    };
    std::function<ParamPoly(const Af1TruncElem&)> eps = [](const Af1TruncElem& e) {
        return af1_counit(e);
    };
    std::function<Af1TruncElem(const Af1TruncElem&)> S = [](const Af1TruncElem& e) {
        return af1_antipode(e);
    };
    std::function<Af1TruncElem(const Af1TruncElem&)> id = [](const Af1TruncElem& e) { return e; };

    std::vector<std::pair<std::string, Af1TruncElem>> gens{{"e1", e1}, {"e2", e2}};
    for (const auto& [g, u] : gens) {
        Tensor2<Af1TruncElem> du = af1_delta(u);
        Tensor3<Af1TruncElem> cl = coproduct_left(du, delta);
        Tensor3<Af1TruncElem> cr = coproduct_right(du, delta);
        truncate_total(cl);
        truncate_total(cr);
        rep.add("coassociativity " + g, cl == cr);
        rep.add("counit_left " + g, counit_left(du, eps) == u);
        rep.add("counit_right " + g, counit_right(du, eps) == u);
        Af1TruncElem target = one.make({0, 0}, af1_counit(u));
        rep.add("antipode_left " + g, collapse(du, S, id) == target);
        rep.add("antipode_right " + g, collapse(du, id, S) == target);
        rep.add("antipode_inverse " + g, af1_antipode_inverse(af1_antipode(u)) == u &&
                                             af1_antipode(af1_antipode_inverse(u)) == u);
    }

    for (const auto& [gu, u] : gens)
        for (const auto& [gv, v] : gens)
            rep.add("antipode_antihom " + gu + gv,
                    af1_antipode(u * v) == af1_antipode(v) * af1_antipode(u));

    return rep;
}

}  // namespace ca
