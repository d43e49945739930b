#include "ca/linalg.hpp"

#include <algorithm>
#include <set>

namespace ca {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Rational inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) {
    return rref(m).size();
}

Rational det(RatMatrix m) {
    if (m.rows() != m.cols()) throw BadParameter("det: matrix not square");
    Rational d(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t sel = col;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        Rational inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

std::vector<RatVector> kernel(const RatMatrix& m) {
    RatMatrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        RatVector v(m.cols(), Rational(0));
        v[freec] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(RatMatrix m, RatVector b) {
    std::size_t n = m.rows(), c = m.cols();
    RatMatrix aug(n, c + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c) = b[i];
    }
    auto pivots = rref(aug);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == c) return std::nullopt;  // inconsistent
    RatVector x(c, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, c);
    return x;
}

std::vector<Rational> char_poly(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw BadParameter("char_poly: matrix not square");
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        Rational ck = -tr / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

namespace {

std::vector<mpz_class> divisors_of(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> divs{1};
    if (n <= 1) return divs;
    mpz_class rest = n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= rest && p < 1000000; ++p) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (rest > 1) fac.emplace_back(rest, 1);
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        mpz_class pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

Rational poly_eval(const std::vector<Rational>& c, const Rational& x) {
    Rational r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::set<Rational> roots;
    if (c.size() <= 1) return {};
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) roots.insert(Rational(0));
    std::vector<Rational> p(c.begin() + static_cast<long>(low), c.end());
    if (p.size() <= 1) return {roots.begin(), roots.end()};
    // Scale to integer coefficients.
    mpz_class den_lcm = 1;
    for (const auto& r : p) {
        mpz_class d = r.raw().get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class a0 = (p.front() * Rational(mpq_class(den_lcm))).raw().get_num();
    mpz_class an = (p.back() * Rational(mpq_class(den_lcm))).raw().get_num();
    for (const auto& num : divisors_of(a0)) {
        for (const auto& den : divisors_of(an)) {
            for (int sign : {1, -1}) {
                Rational cand(mpq_class(sign * num, den));
                if (poly_eval(p, cand).is_zero()) roots.insert(cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector r(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r[i] += m(i, j) * v[j];
    return r;
}

}  // namespace ca
