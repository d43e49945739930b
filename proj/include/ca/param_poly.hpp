#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ca/rational.hpp"

namespace ca {

/// Formal parameter. The fixed namespace is: hbar, sigma (the formal stand-in
/// for 1/sinh hbar), lambda_i, t_{(l,j),p,i} and mu_{p,i}.
struct Var {
    enum class Tag : int { Hbar = 0, Sigma = 1, Lambda = 2, T = 3, Mu = 4 };

    Tag tag;
    std::array<int, 4> idx{0, 0, 0, 0};

    static Var hbar() { return {Tag::Hbar}; }
    static Var sigma() { return {Tag::Sigma}; }
    static Var lambda(int i) { return {Tag::Lambda, {i, 0, 0, 0}}; }
    /// t-variable for delta = (l, j), layer p, generator i.
    static Var t(int l, int j, int p, int i) { return {Tag::T, {l, j, p, i}}; }
    static Var mu(int p, int i) { return {Tag::Mu, {p, i, 0, 0}}; }

    auto operator<=>(const Var&) const = default;

    std::string name() const;
};

/// Power product with sorted variable list and strictly positive exponents.
struct Monomial {
    std::vector<std::pair<Var, int>> factors;

    static Monomial one() { return {}; }
    bool is_one() const { return factors.empty(); }
    int total_degree() const;
    int exponent_of(const Var& v) const;

    Monomial operator*(const Monomial& o) const;

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial over the rationals in the Var namespace.
/// No zero coefficients are stored; equal term maps iff equal polynomials.
class ParamPoly {
  public:
    ParamPoly() = default;
    explicit ParamPoly(long c) {
        if (c != 0) terms_.emplace(Monomial::one(), Rational(c));
    }

    static ParamPoly constant(Rational c);
    static ParamPoly constant(long c) { return constant(Rational(c)); }
    static ParamPoly var(Var v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value if is_constant()).
    Rational constant_term() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly& scale(const Rational& c);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Exact evaluation. Throws MissingVariable when a variable of the
    /// polynomial is absent from the assignment.
    Rational eval(const std::map<Var, Rational>& assignment) const;

    /// Substitutes `v` by `replacement` (ring homomorphism on that variable).
    ParamPoly substitute(const Var& v, const ParamPoly& replacement) const;

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    ParamPoly coeff_of(const Var& v, int k) const;

    /// Highest exponent of `v`.
    int degree_in(const Var& v) const;

    std::set<Var> variables() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    ParamPoly pow(int e) const;

    std::string str() const;

    void add_term(const Monomial& m, const Rational& c);

  private:
    std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace ca
