#pragma once

#include <map>
#include <utility>

#include "ca/hopf_tensor.hpp"
#include "ca/param_poly.hpp"
#include "ca/report.hpp"

namespace ca {

/// Element of the deformed two-generator algebra truncated at e_2^N = 0,
/// written in the ordered basis e_1^a e_2^b (b < N) with coefficients in
/// Q[hbar, sigma]. The product rewrites via
/// e_2^b e_1 = e_1 e_2^b - b * sigma * sinh(hbar e_2) e_2^{b-1}.
class Af1TruncElem {
  public:
    using Mono = std::pair<int, int>;  // (exponent of e_1, exponent of e_2)
    using Scalar = ParamPoly;

    Af1TruncElem() = default;
    explicit Af1TruncElem(int trunc);

    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    Af1TruncElem make(const Mono& m, const Scalar& c) const;
    static Scalar one_scalar() { return ParamPoly::constant(1); }

    Af1TruncElem monomial(int a, int b, ParamPoly c = ParamPoly::constant(1)) const;
    Af1TruncElem one() const { return monomial(0, 0); }
    Af1TruncElem gen_e1() const { return monomial(1, 0); }
    Af1TruncElem gen_e2() const { return monomial(0, 1); }
    /// Truncated sinh(hbar e_2) or exp(sign * hbar e_2).
    Af1TruncElem sinh_he2() const;
    Af1TruncElem exp_he2(int sign) const;

    Af1TruncElem operator-() const;
    Af1TruncElem& operator+=(const Af1TruncElem& o);
    Af1TruncElem& operator-=(const Af1TruncElem& o);
    friend Af1TruncElem operator+(Af1TruncElem a, const Af1TruncElem& b) { return a += b; }
    friend Af1TruncElem operator-(Af1TruncElem a, const Af1TruncElem& b) { return a -= b; }
    friend Af1TruncElem operator*(const Af1TruncElem& a, const Af1TruncElem& b);

    friend bool operator==(const Af1TruncElem& a, const Af1TruncElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Af1TruncElem& a, const Af1TruncElem& b) { return !(a == b); }

    /// Re-truncates to a coarser order; identity when np >= trunc.
    Af1TruncElem retruncate(int np) const;

    std::string str() const;

  private:
    void add_term(const Mono& m, const Scalar& c);
    /// Right-multiplies by e_1, applying the rewriting rule once per term.
    Af1TruncElem times_e1() const;

    int trunc_ = 0;
    std::map<Mono, Scalar> terms_;
};

/// Coproduct with values in the tensor square modulo total e_2-degree >= N
/// (summed over both legs). The leg-by-leg ideal is not a coideal, but the
/// total-degree filtration is respected by both product and coproduct.
Tensor2<Af1TruncElem> af1_delta(const Af1TruncElem& x);
ParamPoly af1_counit(const Af1TruncElem& x);
Af1TruncElem af1_antipode(const Af1TruncElem& x);
/// The compositional inverse of the antipode (the antipode is not an
/// involution here: S^2(e_1) = e_1 + 2 hbar sigma sinh(hbar e_2)).
Af1TruncElem af1_antipode_inverse(const Af1TruncElem& x);

Report af1_hopf_check(int n);

}  // namespace ca
