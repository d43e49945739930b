#pragma once

#include <map>
#include <utility>

#include "ca/hopf_tensor.hpp"
#include "ca/linalg.hpp"
#include "ca/rational.hpp"
#include "ca/report.hpp"

namespace ca {

/// The 4-dimensional algebra on 1, a, x, ax with a^2 = 1, x^2 = 0, xa = -ax,
/// in the normal form a^i x^j (i, j in {0, 1}).
class TaftElem {
  public:
    using Mono = std::pair<int, int>;  // (exponent of a, exponent of x)
    using Scalar = Rational;

    TaftElem() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    TaftElem make(const Mono& m, const Scalar& c) const;
    static Scalar one_scalar() { return Rational(1); }

    static TaftElem monomial(int i, int j, Rational c = Rational(1));
    static TaftElem one() { return monomial(0, 0); }
    static TaftElem gen_a() { return monomial(1, 0); }
    static TaftElem gen_x() { return monomial(0, 1); }

    TaftElem operator-() const;
    TaftElem& operator+=(const TaftElem& o);
    TaftElem& operator-=(const TaftElem& o);
    friend TaftElem operator+(TaftElem a, const TaftElem& b) { return a += b; }
    friend TaftElem operator-(TaftElem a, const TaftElem& b) { return a -= b; }
    friend TaftElem operator*(const TaftElem& a, const TaftElem& b);

    friend bool operator==(const TaftElem& a, const TaftElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TaftElem& a, const TaftElem& b) { return !(a == b); }

    std::string str() const;

  private:
    void add_term(const Mono& m, const Scalar& c);
    std::map<Mono, Scalar> terms_;
};

Tensor2<TaftElem> taft_delta(const TaftElem& t);
Rational taft_counit(const TaftElem& t);
TaftElem taft_antipode(const TaftElem& t);

/// The 2-dimensional representation a -> diag(1,-1), x -> lambda E_12, and
/// its sign-twisted companion a -> diag(-1,1), x -> mu E_12.
std::vector<RatMatrix> taft_pi(const Rational& lambda, bool twisted = false);

/// Exact rank of the direct sum of two basis-image families as a linear map
/// out of the 4-dimensional algebra.
std::size_t taft_pair_rank(const std::vector<RatMatrix>& first,
                           const std::vector<RatMatrix>& second);

/// Hopf-axiom verification on the full basis, the representation facts, and
/// the polynomial-growth decision on the certified triangular image.
Report taft_check();

}  // namespace ca
