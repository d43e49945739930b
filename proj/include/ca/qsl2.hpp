#pragma once

#include <array>
#include <map>

#include "ca/hopf_tensor.hpp"
#include "ca/rational.hpp"
#include "ca/report.hpp"

namespace ca {

/// Element of quantum SL_2 with a inverted and d eliminated: a finite sum of
/// normal-form monomials a^n b^j c^k (n in Z, j,k >= 0) with rational
/// coefficients. Relations ab=qba, ac=qca, bc=cb. An optional truncation
/// b^N = c^N = 0 is carried by the element (trunc = 0 means none).
class QSL2Elem {
  public:
    using Mono = std::array<int, 3>;  // (n, j, k)
    using Scalar = Rational;

    QSL2Elem() = default;
    explicit QSL2Elem(Rational q, int trunc = 0);

    const Rational& q() const { return q_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    QSL2Elem make(const Mono& m, const Scalar& c) const;
    static Scalar one_scalar() { return Rational(1); }

    /// Monomial a^n b^j c^k with the context of this element.
    QSL2Elem monomial(int n, int j, int k, Rational c = Rational(1)) const;
    QSL2Elem one() const { return monomial(0, 0, 0); }

    QSL2Elem operator-() const;
    QSL2Elem& operator+=(const QSL2Elem& o);
    QSL2Elem& operator-=(const QSL2Elem& o);
    friend QSL2Elem operator+(QSL2Elem a, const QSL2Elem& b) { return a += b; }
    friend QSL2Elem operator-(QSL2Elem a, const QSL2Elem& b) { return a -= b; }
    friend QSL2Elem operator*(const QSL2Elem& a, const QSL2Elem& b);

    friend bool operator==(const QSL2Elem& a, const QSL2Elem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QSL2Elem& a, const QSL2Elem& b) { return !(a == b); }

    std::string str() const;

  private:
    void add_term(const Mono& m, const Scalar& c);

    Rational q_;
    int trunc_ = 0;
    std::map<Mono, Scalar> terms_;
};

QSL2Elem qsl2_mul(const QSL2Elem& x, const QSL2Elem& y);

/// Element of quantum SL_2 on the four classical generators, in the normal
/// form a^i d^l b^j c^k with i*l = 0 (mixed ad pairs reduce via ad = 1+qbc).
/// All exponents nonnegative; this is where the coproduct is polynomial.
class QSL2Classical {
  public:
    using Mono = std::array<int, 4>;  // (i, l, j, k)
    using Scalar = Rational;

    QSL2Classical() = default;
    explicit QSL2Classical(Rational q);

    const Rational& q() const { return q_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    QSL2Classical make(const Mono& m, const Scalar& c) const;
    static Scalar one_scalar() { return Rational(1); }

    QSL2Classical monomial(int i, int l, int j, int k, Rational c = Rational(1)) const;
    QSL2Classical one() const { return monomial(0, 0, 0, 0); }
    QSL2Classical gen_a() const { return monomial(1, 0, 0, 0); }
    QSL2Classical gen_d() const { return monomial(0, 1, 0, 0); }
    QSL2Classical gen_b() const { return monomial(0, 0, 1, 0); }
    QSL2Classical gen_c() const { return monomial(0, 0, 0, 1); }

    QSL2Classical operator-() const;
    QSL2Classical& operator+=(const QSL2Classical& o);
    QSL2Classical& operator-=(const QSL2Classical& o);
    friend QSL2Classical operator+(QSL2Classical a, const QSL2Classical& b) { return a += b; }
    friend QSL2Classical operator-(QSL2Classical a, const QSL2Classical& b) { return a -= b; }
    friend QSL2Classical operator*(const QSL2Classical& a, const QSL2Classical& b);

    friend bool operator==(const QSL2Classical& a, const QSL2Classical& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QSL2Classical& a, const QSL2Classical& b) { return !(a == b); }

    std::string str() const;

  private:
    void add_term(const Mono& m, const Scalar& c);
    /// Right-multiplies a single term by one generator, appending to out.
    void mul_letter(const Mono& m, const Scalar& c, char letter, QSL2Classical& out) const;

    Rational q_;
    std::map<Mono, Scalar> terms_;
};

/// Image of a classical element under d -> a^{-1}(1 + q b c), in normal form.
QSL2Elem to_localized(const QSL2Classical& x, int trunc = 0);

Tensor2<QSL2Classical> qsl2_delta(const QSL2Classical& x);
Rational qsl2_counit(const QSL2Classical& x);
QSL2Classical qsl2_antipode(const QSL2Classical& x);

Report qsl2_hopf_check(const Rational& q);

struct TruncInvertResult {
    Tensor2<QSL2Elem> inverse;
    Report report;
};

/// In the truncation b^N = c^N = 0, certifies the geometric-series two-sided
/// inverse of 1(x)1 + a^{-1}b (x) a^{-1}c.
TruncInvertResult qsl2_trunc_invert(const Rational& q, int n);

}  // namespace ca
