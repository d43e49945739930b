#include "ca/af1.hpp"

#include <sstream>

#include "ca/errors.hpp"

namespace ca {

FormalSeries FormalSeries::sinh_hbar() {
    return {[](int i) {
        if (i % 2 == 0) return ParamPoly();
        ParamPoly c = ParamPoly::var(Var::hbar(), i);
        c.scale(factorial(i).inverse());
        return c;
    }};
}

FormalSeries FormalSeries::exp_plain() {
    return {[](int i) { return ParamPoly::constant(factorial(i).inverse()); }};
}

FormalSeries FormalSeries::exp_hbar(int sign) {
    return {[sign](int i) {
        ParamPoly c = ParamPoly::var(Var::hbar(), i);
        Rational s = factorial(i).inverse();
        if (sign < 0 && i % 2 == 1) s = -s;
        c.scale(s);
        return c;
    }};
}

FormalSeries FormalSeries::arcsinh_plain() {
    return {[](int i) {
        if (i % 2 == 0) return ParamPoly();
        long n = (i - 1) / 2;
        Rational c = factorial(2 * n) /
                     (Rational(4).pow(n) * factorial(n) * factorial(n) * Rational(i));
        if (n % 2 == 1) c = -c;
        return ParamPoly::constant(c);
    }};
}

PPolyMatrix apply_series(const FormalSeries& s, const PPolyMatrix& n) {
    if (!n.is_strictly_upper_triangular())
        throw NotNilpotent("apply_series: matrix is not strictly upper triangular");
    std::size_t dim = n.rows();
    PPolyMatrix result(dim, dim);
    ParamPoly c0 = s.coeff(0);
    for (std::size_t i = 0; i < dim; ++i) result(i, i) = c0;
    PPolyMatrix power = PPolyMatrix::identity(dim);
    for (std::size_t i = 1; i < dim; ++i) {
        power = power * n;
        if (power.is_zero()) break;
        result = result + power.scaled(s.coeff(static_cast<int>(i)));
    }
    return result;
}

PPolyMatrix nilpotent_jordan(int size) {
    if (size < 1) throw BadParameter("nilpotent_jordan: need size >= 1");
    PPolyMatrix e(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (std::size_t r = 0; r + 1 < e.rows(); ++r) e(r, r + 1) = ParamPoly::constant(1);
    return e;
}

ParamPoly AlphaTable::at(int j) const {
    if (j < 1 || j > p) throw BadParameter("AlphaTable::at: index out of range");
    if (j == 1) return ParamPoly::constant(1);
    auto it = coeffs.find(j);
    return it == coeffs.end() ? ParamPoly() : it->second;
}

namespace {

// Coefficient vectors indexed by powers of E, truncated above maxdeg.
std::vector<ParamPoly> trunc_mul(const std::vector<ParamPoly>& a, const std::vector<ParamPoly>& b,
                                 int maxdeg) {
    std::vector<ParamPoly> r(static_cast<std::size_t>(maxdeg) + 1);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= maxdeg; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= maxdeg; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace

AlphaTable solve_alphas(int p) {
    if (p < 1) throw BadParameter("solve_alphas: need p >= 1");
    AlphaTable table;
    table.p = p;
    std::vector<ParamPoly> z(static_cast<std::size_t>(p) + 1);
    z[1] = ParamPoly::constant(1);
    for (int j = 2; j <= p; ++j) {
        // [X, Z] - Z = sum over j of (j-1) alpha_j E^j; the right side
        // sinh(hbar Z)/hbar - Z only consults alpha_i with i < j at order E^j.
        std::vector<ParamPoly> rhs(static_cast<std::size_t>(j) + 1);
        std::vector<ParamPoly> zpow = trunc_mul(trunc_mul(z, z, j), z, j);
        for (int n = 3; n <= j; n += 2) {
            ParamPoly c = ParamPoly::var(Var::hbar(), n - 1);
            c.scale(factorial(n).inverse());
            for (std::size_t d = 0; d <= static_cast<std::size_t>(j); ++d)
                rhs[d] += zpow[d] * c;
            zpow = trunc_mul(trunc_mul(zpow, z, j), z, j);
        }
        ParamPoly alpha = rhs[static_cast<std::size_t>(j)];
        alpha.scale(Rational(1, j - 1));
        z[static_cast<std::size_t>(j)] = alpha;
        table.coeffs.emplace(j, std::move(alpha));
    }
    return table;
}

PiRep build_pi(int p, bool with_lambda) {
    if (p < 0) throw BadParameter("build_pi: need p >= 0");
    std::size_t dim = static_cast<std::size_t>(p) + 1;
    PiRep rep;
    rep.p = p;
    rep.with_lambda = with_lambda;
    rep.e1 = PPolyMatrix(dim, dim);
    rep.e2 = PPolyMatrix(dim, dim);

    ParamPoly kappa = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    for (std::size_t r = 0; r < dim; ++r) {
        ParamPoly d = kappa * ParamPoly::constant(static_cast<long>(dim - 1 - r));
        if (with_lambda) d += ParamPoly::var(Var::lambda(1));
        rep.e1(r, r) = d;
    }
    if (p >= 1) {
        AlphaTable alphas = solve_alphas(p);
        for (std::size_t r = 0; r + 1 < dim; ++r) rep.e2(r, r + 1) = ParamPoly::constant(1);
        for (int j = 2; j <= p; ++j) {
            ParamPoly a = alphas.at(j);
            if (a.is_zero()) continue;
            for (std::size_t r = 0; r + static_cast<std::size_t>(j) < dim; ++r)
                rep.e2(r, r + static_cast<std::size_t>(j)) = a;
        }
    }
    return rep;
}

namespace {

ParamPoly shift_lambda(const ParamPoly& f, long steps) {
    ParamPoly kappa = ParamPoly::var(Var::hbar()) * ParamPoly::var(Var::sigma());
    kappa.scale(Rational(steps));
    return f.substitute(Var::lambda(1), ParamPoly::var(Var::lambda(1)) + kappa);
}

// (Z^j)_{0,p} for j = 0..p.
std::vector<ParamPoly> top_right_weights(const PiRep& rep) {
    std::size_t dim = rep.e2.rows();
    std::vector<ParamPoly> w;
    PPolyMatrix zpow = PPolyMatrix::identity(dim);
    for (int j = 0; j <= rep.p; ++j) {
        w.push_back(zpow(0, dim - 1));
        if (j < rep.p) zpow = zpow * rep.e2;
    }
    return w;
}

}  // namespace

ParamPoly rho_pp(int p, const std::vector<ParamPoly>& f) {
    if (static_cast<int>(f.size()) != p + 1) throw BadShape("rho_pp: need f_0..f_p");
    PiRep rep = build_pi(p, /*with_lambda=*/true);
    std::size_t dim = static_cast<std::size_t>(p) + 1;
    PPolyMatrix total(dim, dim);
    PPolyMatrix zpow = PPolyMatrix::identity(dim);
    for (int j = 0; j <= p; ++j) {
        // f_j(e_1) is diagonal with entries f_j(lambda + (p-r)*kappa).
        PPolyMatrix fj(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            fj(r, r) = shift_lambda(f[static_cast<std::size_t>(j)], static_cast<long>(dim - 1 - r));
        total = total + fj * zpow;
        if (j < p) zpow = zpow * rep.e2;
    }
    return total(0, dim - 1);
}

ParamPoly rho_pp_shift(int p, const std::vector<ParamPoly>& f) {
    if (static_cast<int>(f.size()) != p + 1) throw BadShape("rho_pp_shift: need f_0..f_p");
    PiRep rep = build_pi(p, /*with_lambda=*/true);
    std::vector<ParamPoly> w = top_right_weights(rep);
    ParamPoly r;
    for (int j = 0; j <= p; ++j)
        r += w[static_cast<std::size_t>(j)] * shift_lambda(f[static_cast<std::size_t>(j)], p);
    return r;
}

Report verify_rho_triangular(int p_max, int degree) {
    if (p_max < 1) throw BadParameter("verify_rho_triangular: need p_max >= 1");
    Report rep;
    rep.suite = "rho_triangular";
    for (int p = 0; p <= p_max; ++p) {
        PiRep pi = build_pi(p, /*with_lambda=*/true);
        std::vector<ParamPoly> w = top_right_weights(pi);

        std::ostringstream tag;
        tag << "p=" << p;

        rep.add("leading_coefficient " + tag.str(),
                w[static_cast<std::size_t>(p)] == ParamPoly::constant(1),
                "coefficient of f_p is " + w[static_cast<std::size_t>(p)].str());

        // Generic f_j with indeterminate coefficients mu(j, i).
        std::vector<ParamPoly> f;
        for (int j = 0; j <= p; ++j) {
            ParamPoly fj;
            for (int i = 0; i <= degree; ++i)
                fj += ParamPoly::var(Var::mu(j, i)) * ParamPoly::var(Var::lambda(1), i);
            f.push_back(std::move(fj));
        }
        ParamPoly direct = rho_pp(p, f);
        ParamPoly combo;
        for (int j = 0; j <= p; ++j)
            combo += w[static_cast<std::size_t>(j)] * shift_lambda(f[static_cast<std::size_t>(j)], p);
        rep.add("shift_combination " + tag.str(), direct == combo);

        // Induction step: with f_j = 0 for j < p-1 the value reduces to
        // f_p(lambda + p*kappa), so vanishing forces f_p = 0.
        std::vector<ParamPoly> tail(static_cast<std::size_t>(p) + 1);
        if (p >= 1) tail[static_cast<std::size_t>(p) - 1] = f[static_cast<std::size_t>(p) - 1];
        tail[static_cast<std::size_t>(p)] = f[static_cast<std::size_t>(p)];
        ParamPoly reduced = rho_pp(p, tail);
        bool ok = reduced == shift_lambda(f[static_cast<std::size_t>(p)], p) &&
                  shift_lambda(reduced, -p) == f[static_cast<std::size_t>(p)];
        rep.add("induction_step " + tag.str(), ok);
    }
    return rep;
}

}  // namespace ca
