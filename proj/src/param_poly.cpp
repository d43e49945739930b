#include "ca/param_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

std::string Var::name() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::Hbar:
            return "hbar";
        case Tag::Sigma:
            return "sigma";
        case Tag::Lambda:
            os << "lambda(" << idx[0] << ")";
            break;
        case Tag::T:
            os << "t(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << ")";
            break;
        case Tag::Mu:
            os << "mu(" << idx[0] << "," << idx[1] << ")";
            break;
    }
    return os.str();
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

int Monomial::exponent_of(const Var& v) const {
    for (const auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first)
            r.factors.push_back(*a++);
        else if (b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

ParamPoly ParamPoly::constant(Rational c) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

ParamPoly ParamPoly::var(Var v, int exp) {
    ParamPoly p;
    if (exp == 0) return constant(1);
    Monomial m;
    m.factors.emplace_back(v, exp);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ParamPoly& ParamPoly::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Rational ParamPoly::eval(const std::map<Var, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw MissingVariable("unassigned variable " + v.name());
            t *= it->second.pow(e);
        }
        total += t;
    }
    return total;
}

ParamPoly ParamPoly::substitute(const Var& v, const ParamPoly& replacement) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int e = 0;
        for (const auto& [w, we] : m.factors) {
            if (w == v)
                e = we;
            else
                rest.factors.emplace_back(w, we);
        }
        ParamPoly t;
        t.add_term(rest, c);
        if (e > 0) t *= replacement.pow(e);
        r += t;
    }
    return r;
}

ParamPoly ParamPoly::coeff_of(const Var& v, int k) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent_of(v) != k) continue;
        Monomial rest;
        for (const auto& [w, we] : m.factors)
            if (!(w == v)) rest.factors.emplace_back(w, we);
        r.add_term(rest, c);
    }
    return r;
}

int ParamPoly::degree_in(const Var& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

std::set<Var> ParamPoly::variables() const {
    std::set<Var> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) s.insert(v);
    return s;
}

ParamPoly ParamPoly::pow(int e) const {
    ParamPoly r = constant(1);
    ParamPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const auto& [v, e] : m.factors) {
            os << "*" << v.name();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) {
    return os << p.str();
}

}  // namespace ca
