#include "ca/freealg.hpp"

#include <algorithm>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

std::string DeltaIndex::str() const {
    std::ostringstream os;
    os << "(" << l << "," << j << ")";
    return os.str();
}

std::vector<DeltaIndex> delta_set(int k) {
    std::vector<DeltaIndex> d;
    for (int l = 2; l <= k; ++l)
        for (int j = 1; j < l; ++j) d.push_back({l, j});
    std::sort(d.begin(), d.end());
    return d;
}

NCPoly NCPoly::scalar(ParamPoly c) {
    NCPoly p;
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::generator(int i) {
    return word(Word{i});
}

NCPoly NCPoly::word(const Word& w, ParamPoly c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

int NCPoly::max_generator() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
        for (int i : w) m = std::max(m, i);
    return m;
}

int NCPoly::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return static_cast<int>(m);
}

NCPoly NCPoly::abelianize() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Word s = w;
        std::sort(s.begin(), s.end());
        r.add_term(s, c);
    }
    return r;
}

NCPoly NCPoly::shift_generators(int shift) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Word s = w;
        for (int& i : s) i += shift;
        r.add_term(s, c);
    }
    return r;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i : w) os << "*e" << i;
        if (w.empty()) os << "*1";
    }
    return os.str();
}

NCPoly bracket(const NCPoly& x, const NCPoly& y) {
    return x * y - y * x;
}

NCPoly g_expand(const DeltaIndex& delta, const std::vector<int>& beta) {
    if (static_cast<int>(beta.size()) != delta.l)
        throw BadShape("g_expand: beta has length " + std::to_string(beta.size()) +
                       ", expected " + std::to_string(delta.l));
    NCPoly x = NCPoly::generator(delta.j);
    for (int i = delta.l; i >= 1; --i) {
        int count = beta[static_cast<std::size_t>(i) - 1] + (i == delta.l ? 1 : 0);
        NCPoly ei = NCPoly::generator(i);
        for (int c = 0; c < count; ++c) x = bracket(ei, x);
    }
    return x;
}

NCPoly phi_expand(const std::vector<int>& alpha,
                  const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors) {
    Word w;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (int c = 0; c < alpha[i]; ++c) w.push_back(static_cast<int>(i) + 1);
    NCPoly r = NCPoly::word(w);
    for (const auto& [delta, beta] : factors) r *= g_expand(delta, beta);
    return r;
}

}  // namespace ca
