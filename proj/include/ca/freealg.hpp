#pragma once

#include <map>
#include <string>
#include <vector>

#include "ca/param_poly.hpp"

namespace ca {

/// Generator word in the free associative algebra on e_1..e_k.
/// The empty word is the unit monomial.
using Word = std::vector<int>;

/// Pair (l, j) with l > j >= 1, indexing the family g_{delta,beta}.
struct DeltaIndex {
    int l = 0;
    int j = 0;
    auto operator<=>(const DeltaIndex&) const = default;
    std::string str() const;
};

/// All (l, j) with k >= l > j >= 1 in canonical order; empty for k = 1.
std::vector<DeltaIndex> delta_set(int k);

/// Noncommutative polynomial: finite map from words to ParamPoly coefficients.
class NCPoly {
  public:
    using Mono = Word;
    using Scalar = ParamPoly;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly unit() { return scalar(ParamPoly::constant(1)); }
    static NCPoly scalar(ParamPoly c);
    static NCPoly generator(int i);
    static NCPoly word(const Word& w, ParamPoly c = ParamPoly::constant(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, ParamPoly>& terms() const { return terms_; }

    NCPoly make(const Word& w, const ParamPoly& c) const { return word(w, c); }
    static ParamPoly one_scalar() { return ParamPoly::constant(1); }

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Largest generator index occurring.
    int max_generator() const;
    int max_word_length() const;

    /// Image under the quotient by all commutators: words are sorted.
    NCPoly abelianize() const;

    /// Relabels generator i as i + shift (the canonical inclusion of the
    /// algebra on {1..k} into the one on {1..k+k'} is shift = 0).
    NCPoly shift_generators(int shift) const;

    void add_term(const Word& w, const ParamPoly& c);

    std::string str() const;

  private:
    std::map<Word, ParamPoly> terms_;
};

/// Commutator xy - yx.
NCPoly bracket(const NCPoly& x, const NCPoly& y);

/// (ad e_1)^{b_1} ... (ad e_{l-1})^{b_{l-1}} (ad e_l)^{b_l + 1} (e_j)
/// expanded into words. Throws BadShape unless beta has length delta.l.
NCPoly g_expand(const DeltaIndex& delta, const std::vector<int>& beta);

/// e_1^{a_1} ... e_k^{a_k} * g_{beta^1 delta_1} * ... * g_{beta^m delta_m}.
NCPoly phi_expand(const std::vector<int>& alpha,
                  const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors);

}  // namespace ca
