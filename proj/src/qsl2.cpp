#include "ca/qsl2.hpp"

#include <sstream>

#include "ca/errors.hpp"

namespace ca {

namespace {

void check_q(const Rational& q) {
    if (q == Rational(0) || q == Rational(1) || q == Rational(-1))
        throw BadParameter("quantum parameter must avoid 0, 1, -1");
}

}  // namespace

QSL2Elem::QSL2Elem(Rational q, int trunc) : q_(std::move(q)), trunc_(trunc) {
    check_q(q_);
    if (trunc < 0) throw BadParameter("negative truncation");
}

QSL2Elem QSL2Elem::make(const Mono& m, const Scalar& c) const {
    QSL2Elem e(*this);
    e.terms_.clear();
    e.add_term(m, c);
    return e;
}

QSL2Elem QSL2Elem::monomial(int n, int j, int k, Rational c) const {
    if (j < 0 || k < 0) throw BadParameter("negative b or c exponent");
    return make({n, j, k}, c);
}

void QSL2Elem::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (trunc_ > 0 && (m[1] >= trunc_ || m[2] >= trunc_)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSL2Elem QSL2Elem::operator-() const {
    QSL2Elem r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

QSL2Elem& QSL2Elem::operator+=(const QSL2Elem& o) {
    if (q_ == Rational(0)) return *this = o;
    if (o.q_ != Rational(0)) {
        if (q_ != o.q_) throw ParameterMismatch("adding elements with different quantum parameters");
        if (trunc_ != o.trunc_) throw ParameterMismatch("adding elements with different truncations");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QSL2Elem& QSL2Elem::operator-=(const QSL2Elem& o) {
    return *this += -o;
}

QSL2Elem operator*(const QSL2Elem& a, const QSL2Elem& b) {
    if (a.q_ == Rational(0)) return a;  // context-free zero
    if (b.q_ != Rational(0)) {
        if (a.q_ != b.q_)
            throw ParameterMismatch("multiplying elements with different quantum parameters");
        if (a.trunc_ != b.trunc_)
            throw ParameterMismatch("multiplying elements with different truncations");
    }
    QSL2Elem r(a);
    r.terms_.clear();
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            // b^j c^k a^{n'} = q^{-n'(j+k)} a^{n'} b^j c^k
            Rational coeff = ca * cb * a.q_.pow(-static_cast<long>(mb[0]) * (ma[1] + ma[2]));
            r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, coeff);
        }
    return r;
}

QSL2Elem qsl2_mul(const QSL2Elem& x, const QSL2Elem& y) {
    return x * y;
}

std::string QSL2Elem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m[0]) os << "*a^" << m[0];
        if (m[1]) os << "*b^" << m[1];
        if (m[2]) os << "*c^" << m[2];
    }
    return os.str();
}

QSL2Classical::QSL2Classical(Rational q) : q_(std::move(q)) {
    check_q(q_);
}

QSL2Classical QSL2Classical::make(const Mono& m, const Scalar& c) const {
    QSL2Classical e(*this);
    e.terms_.clear();
    e.add_term(m, c);
    return e;
}

QSL2Classical QSL2Classical::monomial(int i, int l, int j, int k, Rational c) const {
    if (i < 0 || l < 0 || j < 0 || k < 0) throw BadParameter("negative exponent");
    if (i > 0 && l > 0) throw BadParameter("mixed a and d exponents are not in normal form");
    return make({i, l, j, k}, c);
}

void QSL2Classical::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSL2Classical QSL2Classical::operator-() const {
    QSL2Classical r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

QSL2Classical& QSL2Classical::operator+=(const QSL2Classical& o) {
    if (q_ == Rational(0)) return *this = o;
    if (o.q_ != Rational(0) && q_ != o.q_)
        throw ParameterMismatch("adding elements with different quantum parameters");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QSL2Classical& QSL2Classical::operator-=(const QSL2Classical& o) {
    return *this += -o;
}

void QSL2Classical::mul_letter(const Mono& m, const Scalar& c, char letter,
                               QSL2Classical& out) const {
    int i = m[0], l = m[1], j = m[2], k = m[3];
    switch (letter) {
        case 'b':
            out.add_term({i, l, j + 1, k}, c);
            return;
        case 'c':
            out.add_term({i, l, j, k + 1}, c);
            return;
        case 'a': {
            Rational f = c * q_.pow(-(j + k));
            if (l > 0) {
                // d^l a = d^{l-1}(1 + q^{-1} b c)
                out.add_term({i, l - 1, j, k}, f);
                out.add_term({i, l - 1, j + 1, k + 1}, f * q_.inverse());
            } else {
                out.add_term({i + 1, l, j, k}, f);
            }
            return;
        }
        case 'd': {
            Rational f = c * q_.pow(j + k);
            if (i > 0) {
                // a^i d = a^{i-1}(1 + q b c)
                out.add_term({i - 1, 0, j, k}, f);
                out.add_term({i - 1, 0, j + 1, k + 1}, f * q_);
            } else {
                out.add_term({i, l + 1, j, k}, f);
            }
            return;
        }
        default:
            throw BadParameter("unknown generator letter");
    }
}

QSL2Classical operator*(const QSL2Classical& a, const QSL2Classical& b) {
    if (a.q_ == Rational(0)) return a;
    if (b.q_ != Rational(0) && a.q_ != b.q_)
        throw ParameterMismatch("multiplying elements with different quantum parameters");
    QSL2Classical total(a);
    total.terms_.clear();
    for (const auto& [mb, cb] : b.terms_) {
        QSL2Classical acc(a);
        for (auto& [m, c] : acc.terms_) c *= cb;
        auto apply = [&](char letter, int count) {
            for (int t = 0; t < count; ++t) {
                QSL2Classical next(a);
                next.terms_.clear();
                for (const auto& [m, c] : acc.terms_) a.mul_letter(m, c, letter, next);
                acc = std::move(next);
            }
        };
        apply('a', mb[0]);
        apply('d', mb[1]);
        apply('b', mb[2]);
        apply('c', mb[3]);
        total += acc;
    }
    return total;
}

std::string QSL2Classical::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m[0]) os << "*a^" << m[0];
        if (m[1]) os << "*d^" << m[1];
        if (m[2]) os << "*b^" << m[2];
        if (m[3]) os << "*c^" << m[3];
    }
    return os.str();
}

QSL2Elem to_localized(const QSL2Classical& x, int trunc) {
    QSL2Elem r(x.q(), trunc);
    QSL2Elem dimg = r.monomial(-1, 0, 0) + r.monomial(-1, 1, 1, x.q());
    for (const auto& [m, c] : x.terms()) {
        QSL2Elem acc = r.monomial(m[0], 0, 0, c);
        for (int t = 0; t < m[1]; ++t) acc = acc * dimg;
        r += acc * r.monomial(0, m[2], m[3]);
    }
    return r;
}

namespace {

Tensor2<QSL2Classical> tensor_pow(const Tensor2<QSL2Classical>& t, int e) {
    Tensor2<QSL2Classical> r(t.proto);
    r.add_term({0, 0, 0, 0}, {0, 0, 0, 0}, Rational(1));
    for (int i = 0; i < e; ++i) r = r * t;
    return r;
}

QSL2Classical cpow(const QSL2Classical& x, int e) {
    QSL2Classical r = x.make({0, 0, 0, 0}, Rational(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

Tensor2<QSL2Classical> qsl2_delta(const QSL2Classical& x) {
    QSL2Classical proto(x.q());
    auto gen_delta = [&](char g) {
        Tensor2<QSL2Classical> t(proto);
        switch (g) {
            case 'a':
                t.add_term({1, 0, 0, 0}, {1, 0, 0, 0}, Rational(1));
                t.add_term({0, 0, 1, 0}, {0, 0, 0, 1}, Rational(1));
                break;
            case 'b':
                t.add_term({1, 0, 0, 0}, {0, 0, 1, 0}, Rational(1));
                t.add_term({0, 0, 1, 0}, {0, 1, 0, 0}, Rational(1));
                break;
            case 'c':
                t.add_term({0, 0, 0, 1}, {1, 0, 0, 0}, Rational(1));
                t.add_term({0, 1, 0, 0}, {0, 0, 0, 1}, Rational(1));
                break;
            case 'd':
                t.add_term({0, 0, 0, 1}, {0, 0, 1, 0}, Rational(1));
                t.add_term({0, 1, 0, 0}, {0, 1, 0, 0}, Rational(1));
                break;
        }
        return t;
    };
    Tensor2<QSL2Classical> r(proto);
    for (const auto& [m, c] : x.terms()) {
        Tensor2<QSL2Classical> acc = tensor_pow(gen_delta('a'), m[0]);
        acc = acc * tensor_pow(gen_delta('d'), m[1]);
        acc = acc * tensor_pow(gen_delta('b'), m[2]);
        acc = acc * tensor_pow(gen_delta('c'), m[3]);
        for (const auto& [k, s] : acc.terms) r.add_term(k.first, k.second, s * c);
    }
    return r;
}

Rational qsl2_counit(const QSL2Classical& x) {
    Rational r;
    for (const auto& [m, c] : x.terms())
        if (m[2] == 0 && m[3] == 0) r += c;
    return r;
}

QSL2Classical qsl2_antipode(const QSL2Classical& x) {
    QSL2Classical r(x.q());
    const Rational& q = x.q();
    for (const auto& [m, c] : x.terms()) {
        // Reversed product of antipodes: S(c)^k S(b)^j S(d)^l S(a)^i.
        Rational coeff = c * (-q).pow(m[3]) * (-q.inverse()).pow(m[2]);
        QSL2Classical acc = cpow(r.gen_c(), m[3]) * cpow(r.gen_b(), m[2]) *
                            cpow(r.gen_a(), m[1]) * cpow(r.gen_d(), m[0]);
        for (const auto& [ma, ca] : acc.terms()) r += r.make(ma, ca * coeff);
    }
    return r;
}

Report qsl2_hopf_check(const Rational& q) {
    check_q(q);
    Report rep;
    rep.suite = "qsl2";

    QSL2Classical proto(q);
    QSL2Classical one = proto.one();
    QSL2Classical A = proto.gen_a(), B = proto.gen_b(), C = proto.gen_c(), D = proto.gen_d();
    std::vector<std::pair<std::string, QSL2Classical>> gens{
        {"a", A}, {"b", B}, {"c", C}, {"d", D}};

    std::vector<std::pair<std::string, QSL2Classical>> relations{
        {"ab=qba", A * B - (B * A).make({0, 0, 0, 0}, q) * (B * A)},
        {"ac=qca", A * C - one.make({0, 0, 0, 0}, q) * (C * A)},
        {"bc=cb", B * C - C * B},
        {"bd=qdb", B * D - one.make({0, 0, 0, 0}, q) * (D * B)},
        {"cd=qdc", C * D - one.make({0, 0, 0, 0}, q) * (D * C)},
        {"da=ad-(q-1/q)bc", D * A - A * D + one.make({0, 0, 1, 1}, q - q.inverse())},
        {"ad=1+qbc", A * D - one - one.make({0, 0, 1, 1}, q)}};
    for (const auto& [id, r] : relations)
        rep.add("relation " + id, r.is_zero(), r.is_zero() ? "" : r.str());

    std::function<Tensor2<QSL2Classical>(const QSL2Classical&)> delta = [](const QSL2Classical& e) {
        return qsl2_delta(e);
    };
    std::function<Rational(const QSL2Classical&)> eps = [](const QSL2Classical& e) {
        return qsl2_counit(e);
    };
    std::function<QSL2Classical(const QSL2Classical&)> S = [](const QSL2Classical& e) {
        return qsl2_antipode(e);
    };
    std::function<QSL2Classical(const QSL2Classical&)> id = [](const QSL2Classical& e) { return e; };

    for (const auto& [gu, u] : gens)
        for (const auto& [gv, v] : gens) {
            bool dm = qsl2_delta(u * v) == qsl2_delta(u) * qsl2_delta(v);
            rep.add("delta_multiplicative " + gu + gv, dm);
            bool em = qsl2_counit(u * v) == qsl2_counit(u) * qsl2_counit(v);
            rep.add("counit_multiplicative " + gu + gv, em);
            bool sa = qsl2_antipode(u * v) == qsl2_antipode(v) * qsl2_antipode(u);
            rep.add("antipode_antihom " + gu + gv, sa);
        }

    for (const auto& [g, u] : gens) {
        rep.add("coassociativity " + g, coproduct_left(qsl2_delta(u), delta) ==
                                            coproduct_right(qsl2_delta(u), delta));
        rep.add("counit_left " + g, counit_left(qsl2_delta(u), eps) == u);
        rep.add("counit_right " + g, counit_right(qsl2_delta(u), eps) == u);
        QSL2Classical target = one.make({0, 0, 0, 0}, qsl2_counit(u));
        rep.add("antipode_left " + g, collapse(qsl2_delta(u), S, id) == target);
        rep.add("antipode_right " + g, collapse(qsl2_delta(u), id, S) == target);
    }

    // Normal-ordering route of m(S(x)1)Delta(a) in the localized algebra:
    // d a + (-1/q) b c with d expanded as a^{-1}(1+qbc).
    QSL2Elem l(q);
    QSL2Elem dloc = l.monomial(-1, 0, 0) + l.monomial(-1, 1, 1, q);
    QSL2Elem ident = dloc * l.monomial(1, 0, 0) +
                     l.monomial(0, 1, 0, -q.inverse()) * l.monomial(0, 0, 1);
    rep.add("localized m(S,1)Delta(a)=1", ident == l.one(), ident.str());

    return rep;
}

TruncInvertResult qsl2_trunc_invert(const Rational& q, int n) {
    check_q(q);
    if (n < 1) throw BadParameter("qsl2_trunc_invert: need N >= 1");
    QSL2Elem proto(q, n);
    QSL2Elem ab = proto.monomial(-1, 1, 0);  // a^{-1} b
    QSL2Elem ac = proto.monomial(-1, 0, 1);  // a^{-1} c

    Tensor2<QSL2Elem> u(proto);
    u.add_term({0, 0, 0}, {0, 0, 0}, Rational(1));
    u += tensor2(ab, ac);

    Tensor2<QSL2Elem> v(proto);
    QSL2Elem pb = proto.one(), pc = proto.one();
    for (int i = 0; i < n; ++i) {
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        Tensor2<QSL2Elem> term = tensor2(pb, pc);
        for (auto& [k, c] : term.terms) c *= sign;
        v += term;
        pb = pb * ab;
        pc = pc * ac;
    }

    Tensor2<QSL2Elem> unit(proto);
    unit.add_term({0, 0, 0}, {0, 0, 0}, Rational(1));

    TruncInvertResult res;
    res.inverse = v;
    res.report.suite = "qsl2_trunc_invert";
    res.report.add("left_inverse", v * u == unit);
    res.report.add("right_inverse", u * v == unit);

    // Delta(a) = a(x)a + b(x)c factors as (a(x)a)(1(x)1 + a^{-1}b(x)a^{-1}c).
    Tensor2<QSL2Elem> da = tensor2(proto.monomial(1, 0, 0), proto.monomial(1, 0, 0)) +
                           tensor2(proto.monomial(0, 1, 0), proto.monomial(0, 0, 1));
    Tensor2<QSL2Elem> w = v * tensor2(proto.monomial(-1, 0, 0), proto.monomial(-1, 0, 0));
    res.report.add("delta_a_left_inverse", w * da == unit);
    res.report.add("delta_a_right_inverse", da * w == unit);
    return res;
}

}  // namespace ca
