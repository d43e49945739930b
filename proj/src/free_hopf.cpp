#include "ca/free_hopf.hpp"

#include <functional>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

Tensor2<NCPoly> free_delta(const NCPoly& x) {
    Tensor2<NCPoly> r;
    for (const auto& [w, c] : x.terms()) {
        Tensor2<NCPoly> acc;
        acc.add_term(Word{}, Word{}, c);
        for (int i : w) {
            Tensor2<NCPoly> gen;
            gen.add_term(Word{i}, Word{}, ParamPoly::constant(1));
            gen.add_term(Word{}, Word{i}, ParamPoly::constant(1));
            acc = acc * gen;
        }
        r += acc;
    }
    return r;
}

ParamPoly free_counit(const NCPoly& x) {
    ParamPoly r;
    for (const auto& [w, c] : x.terms())
        if (w.empty()) r += c;
    return r;
}

NCPoly free_antipode(const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        Word rev(w.rbegin(), w.rend());
        ParamPoly coeff = c;
        if (w.size() % 2 == 1) coeff = -coeff;
        r.add_term(rev, coeff);
    }
    return r;
}

Report free_primitive_check(int k, int len) {
    if (k < 1 || len < 1) throw BadParameter("free_primitive_check: need k >= 1 and L >= 1");
    Report rep;
    rep.suite = "free_primitive";

    std::function<Tensor2<NCPoly>(const NCPoly&)> delta = [](const NCPoly& e) {
        return free_delta(e);
    };
    std::function<ParamPoly(const NCPoly&)> eps = [](const NCPoly& e) { return free_counit(e); };
    std::function<NCPoly(const NCPoly&)> S = [](const NCPoly& e) { return free_antipode(e); };
    std::function<NCPoly(const NCPoly&)> id = [](const NCPoly& e) { return e; };

    std::vector<Word> words{{}};
    std::size_t start = 0;
    for (int l = 1; l <= len; ++l) {
        std::size_t end = words.size();
        for (std::size_t t = start; t < end; ++t)
            for (int i = 1; i <= k; ++i) {
                Word w = words[t];
                w.push_back(i);
                words.push_back(std::move(w));
            }
        start = end;
    }

    for (const auto& w : words) {
        std::ostringstream tag;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) tag << ".";
            tag << "e" << w[i];
        }
        std::string name = w.empty() ? "1" : tag.str();
        NCPoly u = NCPoly::word(w);
        Tensor2<NCPoly> du = free_delta(u);
        rep.add("coassociativity " + name,
                coproduct_left(du, delta) == coproduct_right(du, delta));
        rep.add("counit_left " + name, counit_left(du, eps) == u);
        rep.add("counit_right " + name, counit_right(du, eps) == u);
        NCPoly target = NCPoly::scalar(free_counit(u));
        rep.add("antipode_left " + name, collapse(du, S, id) == target);
        rep.add("antipode_right " + name, collapse(du, id, S) == target);
    }
    return rep;
}

}  // namespace ca
