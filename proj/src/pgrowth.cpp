#include "ca/pgrowth.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

void FDAlgebra::validate() const {
    if (table.size() != dim || unit.size() != dim)
        throw InvalidTable("structure table has wrong shape");
    for (const auto& row : table) {
        if (row.size() != dim) throw InvalidTable("structure table has wrong shape");
        for (const auto& entry : row)
            if (entry.size() != dim) throw InvalidTable("structure table has wrong shape");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector ei = basis_vector(i);
        if (mul(unit, ei) != ei || mul(ei, unit) != ei)
            throw InvalidTable("unit is not a two-sided identity");
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                RatVector lhs = mul(mul(basis_vector(i), basis_vector(j)), basis_vector(k));
                RatVector rhs = mul(basis_vector(i), mul(basis_vector(j), basis_vector(k)));
                if (lhs != rhs) throw InvalidTable("structure table is not associative");
            }
}

RatVector FDAlgebra::mul(const RatVector& x, const RatVector& y) const {
    RatVector r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) r[k] += c * table[i][j][k];
        }
    }
    return r;
}

RatMatrix FDAlgebra::left_mult(const RatVector& x) const {
    RatMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVector col = mul(x, basis_vector(j));
        for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
    }
    return m;
}

RatVector FDAlgebra::basis_vector(std::size_t i) const {
    RatVector v(dim);
    v[i] = Rational(1);
    return v;
}

namespace {

FDAlgebra empty_algebra(std::size_t dim) {
    FDAlgebra a;
    a.dim = dim;
    a.table.assign(dim, std::vector<RatVector>(dim, RatVector(dim)));
    a.unit = RatVector(dim);
    return a;
}

RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

RatMatrix from_cols(const std::vector<RatVector>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

bool in_span(const std::vector<RatVector>& span, const RatVector& v) {
    if (span.empty()) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }
    RatMatrix m = from_cols(span, v.size());
    return solve(m, v).has_value();
}

/// Solves M X = B columnwise; nullopt if any column is inconsistent.
std::optional<RatMatrix> solve_matrix(const RatMatrix& m, const RatMatrix& b) {
    RatMatrix x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        RatVector col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        auto s = solve(m, col);
        if (!s) return std::nullopt;
        for (std::size_t i = 0; i < x.rows(); ++i) x(i, j) = (*s)[i];
    }
    return x;
}

RatMatrix mat_inverse(const RatMatrix& m) {
    auto inv = solve_matrix(m, RatMatrix::identity(m.rows()));
    if (!inv) throw BadParameter("matrix is singular");
    return *inv;
}

/// Trace of the left regular representation, as a bilinear form matrix
/// G(i,j) = tr(L_{x_i x_j}).
RatMatrix trace_form(const FDAlgebra& a) {
    RatVector traces(a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) {
        RatMatrix l = a.left_mult(a.basis_vector(k));
        for (std::size_t t = 0; t < a.dim; ++t) traces[k] += l(t, t);
    }
    RatMatrix g(a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) g(i, j) += a.table[i][j][k] * traces[k];
    return g;
}

/// Sylvester criterion on an exactly symmetric matrix.
bool positive_definite(const RatMatrix& g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (g(i, j) != g(j, i)) return false;
    for (std::size_t n = 1; n <= g.rows(); ++n) {
        RatMatrix minor(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) minor(i, j) = g(i, j);
        if (det(minor).sign() <= 0) return false;
    }
    return true;
}

std::vector<RatVector> span_of_products(const FDAlgebra& a, const std::vector<RatVector>& u,
                                        const std::vector<RatVector>& v) {
    std::vector<RatVector> prods;
    for (const auto& x : u)
        for (const auto& y : v) prods.push_back(a.mul(x, y));
    if (prods.empty()) return {};
    RatMatrix m = from_rows(prods, a.dim);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<RatVector> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        RatVector row(a.dim);
        for (std::size_t j = 0; j < a.dim; ++j) row[j] = m(r, j);
        basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace

std::vector<RatVector> radical(const FDAlgebra& a) {
    RatMatrix g = trace_form(a);
    std::vector<RatVector> rad = kernel(g);

    // Dickson's theorem gives the radical in characteristic zero; the ideal
    // and nilpotency properties are re-verified as a guard.
    for (std::size_t i = 0; i < a.dim; ++i)
        for (const auto& r : rad) {
            if (!in_span(rad, a.mul(a.basis_vector(i), r)) ||
                !in_span(rad, a.mul(r, a.basis_vector(i))))
                throw Error("radical candidate is not an ideal");
        }
    std::vector<RatVector> power = rad;
    for (std::size_t t = 0; t < a.dim && !power.empty(); ++t)
        power = span_of_products(a, power, rad);
    if (!power.empty()) throw Error("radical candidate is not nilpotent");
    return rad;
}

FDAlgebra quotient_by_subspace(const FDAlgebra& a, const std::vector<RatVector>& rad,
                               std::vector<RatVector>* lift) {
    // Complement: standard basis vectors away from the pivot columns of rad.
    std::vector<bool> is_pivot(a.dim, false);
    if (!rad.empty()) {
        RatMatrix m = from_rows(rad, a.dim);
        for (std::size_t p : rref(m)) is_pivot[p] = true;
    }
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < a.dim; ++j)
        if (!is_pivot[j]) comp.push_back(j);
    std::size_t r = comp.size();

    // Columns: radical vectors then complement vectors; the tail coordinates
    // of a solve give the projection onto the quotient.
    std::vector<RatVector> cols = rad;
    for (std::size_t j : comp) cols.push_back(a.basis_vector(j));
    RatMatrix basis = from_cols(cols, a.dim);
    auto project = [&](const RatVector& v) {
        auto s = solve(basis, v);
        if (!s) throw Error("quotient projection failed");
        RatVector out(r);
        for (std::size_t i = 0; i < r; ++i) out[i] = (*s)[rad.size() + i];
        return out;
    };

    FDAlgebra q = empty_algebra(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            q.table[i][j] = project(a.mul(a.basis_vector(comp[i]), a.basis_vector(comp[j])));
    q.unit = project(a.unit);
    if (lift) {
        lift->clear();
        for (std::size_t j : comp) lift->push_back(a.basis_vector(j));
    }
    return q;
}

namespace {

/// Ascending invariant flag for the left regular module, built by repeated
/// common-eigenvector extraction. Returns nothing when a characteristic
/// polynomial fails to split over Q.
std::optional<std::vector<RatVector>> build_flag(const FDAlgebra& a,
                                                 const std::vector<RatVector>& rad) {
    std::size_t n = a.dim;
    std::vector<RatMatrix> gen_ops, rad_ops;
    for (std::size_t i = 0; i < n; ++i) gen_ops.push_back(a.left_mult(a.basis_vector(i)));
    for (const auto& r : rad) rad_ops.push_back(a.left_mult(r));

    std::vector<RatVector> flag;
    while (flag.size() < n) {
        // Complement of the flag span inside the ambient space.
        std::vector<bool> is_pivot(n, false);
        if (!flag.empty()) {
            RatMatrix fm = from_rows(flag, n);
            for (std::size_t p : rref(fm)) is_pivot[p] = true;
        }
        std::vector<std::size_t> comp;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) comp.push_back(j);
        std::size_t m = comp.size();

        std::vector<RatVector> cols = flag;
        for (std::size_t j : comp) {
            RatVector e(n);
            e[j] = Rational(1);
            cols.push_back(std::move(e));
        }
        RatMatrix basis = from_cols(cols, n);
        RatMatrix basis_inv = mat_inverse(basis);

        auto induced = [&](const RatMatrix& op) {
            // Quotient action on the complement coordinates.
            RatMatrix full = basis_inv * op * basis;
            RatMatrix sub(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    sub(i, j) = full(flag.size() + i, flag.size() + j);
            return sub;
        };

        // W = common kernel of the induced radical action (all of the module
        // when the radical acts trivially); A acts commutatively on W.
        std::vector<RatVector> w_basis;
        if (rad_ops.empty()) {
            for (std::size_t i = 0; i < m; ++i) {
                RatVector e(m);
                e[i] = Rational(1);
                w_basis.push_back(std::move(e));
            }
        } else {
            RatMatrix stacked(rad_ops.size() * m, m);
            for (std::size_t s = 0; s < rad_ops.size(); ++s) {
                RatMatrix ind = induced(rad_ops[s]);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) stacked(s * m + i, j) = ind(i, j);
            }
            w_basis = kernel(stacked);
        }
        if (w_basis.empty()) return std::nullopt;

        // Cut W down by one rational eigenspace per generator.
        for (const auto& op : gen_ops) {
            RatMatrix ind = induced(op);
            RatMatrix wb = from_cols(w_basis, m);
            auto restricted = solve_matrix(wb, ind * wb);
            if (!restricted) return std::nullopt;
            std::vector<Rational> roots = rational_roots(char_poly(*restricted));
            if (roots.empty()) return std::nullopt;
            RatMatrix shifted = *restricted;
            for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= roots.front();
            std::vector<RatVector> eig = kernel(shifted);
            if (eig.empty()) return std::nullopt;
            std::vector<RatVector> next;
            for (const auto& v : eig) {
                RatVector amb(m);
                for (std::size_t i = 0; i < w_basis.size(); ++i)
                    for (std::size_t t = 0; t < m; ++t) amb[t] += v[i] * w_basis[i][t];
                next.push_back(std::move(amb));
            }
            w_basis = std::move(next);
        }

        // Lift the common eigenvector back to ambient coordinates.
        RatVector u(n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t t = 0; t < n; ++t) u[t] += w_basis.front()[i] * cols[flag.size() + i][t];
        flag.push_back(std::move(u));
    }
    return flag;
}

}  // namespace

GrowthCertificate decide_growth(const FDAlgebra& a) {
    a.validate();
    GrowthCertificate cert;
    cert.radical_basis = radical(a);

    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j) {
            RatVector comm = a.mul(a.basis_vector(i), a.basis_vector(j));
            RatVector rev = a.mul(a.basis_vector(j), a.basis_vector(i));
            for (std::size_t k = 0; k < a.dim; ++k) comm[k] -= rev[k];
            if (!in_span(cert.radical_basis, comm)) {
                cert.verdict = GrowthCertificate::Verdict::NotPolyGrowth;
                cert.violation = GrowthCertificate::Violation::QuotientNoncommutative;
                std::ostringstream os;
                os << "commutator of basis elements " << i << " and " << j
                   << " is not in the radical";
                cert.detail = os.str();
                return cert;
            }
        }

    FDAlgebra q = quotient_by_subspace(a, cert.radical_basis, nullptr);
    if (!positive_definite(trace_form(q))) {
        cert.verdict = GrowthCertificate::Verdict::NotPolyGrowth;
        cert.violation = GrowthCertificate::Violation::SpectrumNotReal;
        cert.detail = "trace form of the semisimple quotient is not positive definite";
        return cert;
    }

    cert.verdict = GrowthCertificate::Verdict::PolyGrowth;
    auto flag = build_flag(a, cert.radical_basis);
    if (!flag) {
        cert.detail = "no rational triangularizing basis (spectrum does not split over Q)";
        return cert;
    }
    RatMatrix p = from_cols(*flag, a.dim);
    RatMatrix pinv = mat_inverse(p);
    for (std::size_t i = 0; i < a.dim; ++i)
        cert.images.push_back(pinv * a.left_mult(a.basis_vector(i)) * p);

    // The embedding is re-verified; failures indicate an internal error.
    for (const auto& m : cert.images)
        if (!m.is_upper_triangular()) throw Error("triangularizing basis is not triangular");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            RatMatrix prod = cert.images[i] * cert.images[j];
            RatMatrix expect(a.dim, a.dim);
            for (std::size_t k = 0; k < a.dim; ++k)
                expect = expect + cert.images[k].scaled(a.table[i][j][k]);
            if (!(prod == expect)) throw Error("embedding does not satisfy the structure constants");
        }
    return cert;
}

FDAlgebra tensor_fd(const FDAlgebra& a, const FDAlgebra& b) {
    a.validate();
    b.validate();
    std::size_t n = a.dim * b.dim;
    FDAlgebra t = empty_algebra(n);
    auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim + j; };
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                for (std::size_t l = 0; l < b.dim; ++l) {
                    RatVector& out = t.table[idx(i, j)][idx(k, l)];
                    for (std::size_t m = 0; m < a.dim; ++m) {
                        if (a.table[i][k][m].is_zero()) continue;
                        for (std::size_t p = 0; p < b.dim; ++p)
                            out[idx(m, p)] += a.table[i][k][m] * b.table[j][l][p];
                    }
                }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) t.unit[idx(i, j)] = a.unit[i] * b.unit[j];
    return t;
}

namespace {

/// Minimal polynomial (monic coefficient list c_0..c_d) of x in A.
std::vector<Rational> min_poly(const FDAlgebra& a, const RatVector& x) {
    std::vector<RatVector> powers{a.unit};
    while (true) {
        RatMatrix m = from_cols(powers, a.dim);
        RatVector next = a.mul(powers.back(), x);
        auto dep = solve(m, next);
        if (dep) {
            std::vector<Rational> c;
            for (const auto& v : *dep) c.push_back(-v);
            c.push_back(Rational(1));
            return c;
        }
        powers.push_back(next);
        if (powers.size() > a.dim + 1) throw Error("minimal polynomial search overflow");
    }
}

RatVector eval_poly(const FDAlgebra& a, const std::vector<Rational>& c, const RatVector& x) {
    RatVector r(a.dim);
    RatVector p = a.unit;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) r[k] += c[i] * p[k];
        if (i + 1 < c.size()) p = a.mul(p, x);
    }
    return r;
}

std::vector<Rational> derivative(const std::vector<Rational>& c) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rational(static_cast<long>(i)));
    return d;
}

bool is_zero_vec(const RatVector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

Report split_extension_check(const FDAlgebra& a) {
    a.validate();
    Report rep;
    rep.suite = "split_extension";
    std::vector<RatVector> rad = radical(a);

    std::vector<RatVector> power = rad;
    std::size_t index = 1;
    while (!power.empty()) {
        power = span_of_products(a, power, rad);
        ++index;
    }
    {
        std::ostringstream os;
        os << "radical dimension " << rad.size() << ", nilpotency index <= " << index;
        rep.add("radical_nilpotent", true, os.str());
    }

    if (rad.empty()) {
        rep.add("splitting", true, "radical is zero; A itself is the Wedderburn factor");
        return rep;
    }

    std::vector<RatVector> lift;
    FDAlgebra q = quotient_by_subspace(a, rad, &lift);

    bool commutative = true;
    for (std::size_t i = 0; i < q.dim && commutative; ++i)
        for (std::size_t j = 0; j < q.dim; ++j)
            if (q.mul(q.basis_vector(i), q.basis_vector(j)) !=
                q.mul(q.basis_vector(j), q.basis_vector(i))) {
                commutative = false;
                break;
            }
    if (!commutative) {
        rep.add("splitting", false,
                "NOT_SPLIT_OVER_Q: quotient is noncommutative, no splitting was searched");
        return rep;
    }

    // Primitive element of the quotient: small deterministic search.
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::optional<RatVector> zq;
    for (int attempt = 0; attempt < 400 && !zq; ++attempt) {
        RatVector cand(q.dim);
        if (attempt < static_cast<int>(q.dim)) {
            cand[static_cast<std::size_t>(attempt)] = Rational(1);
        } else {
            for (auto& c : cand) c = Rational(coeff(rng));
        }
        if (min_poly(q, cand).size() == q.dim + 1) zq = cand;
    }
    if (!zq) {
        rep.add("splitting", false, "NOT_SPLIT_OVER_Q: no primitive element found");
        return rep;
    }
    std::vector<Rational> g = min_poly(q, *zq);
    std::vector<Rational> gp = derivative(g);

    // Lift and correct by Newton iteration; g(z) stays in the radical and
    // g'(z) is invertible modulo the nilpotent radical, hence in A.
    RatVector z(a.dim);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k) z[k] += (*zq)[i] * lift[i][k];
    bool lifted = false;
    for (int it = 0; it < 64; ++it) {
        RatVector err = eval_poly(a, g, z);
        if (is_zero_vec(err)) {
            lifted = true;
            break;
        }
        RatVector gpz = eval_poly(a, gp, z);
        auto inv = solve(a.left_mult(gpz), a.unit);
        if (!inv) break;
        RatVector step = a.mul(err, *inv);
        for (std::size_t k = 0; k < a.dim; ++k) z[k] -= step[k];
    }
    if (!lifted) {
        rep.add("splitting", false, "NOT_SPLIT_OVER_Q: Newton lifting failed");
        return rep;
    }

    std::vector<RatVector> s_basis;
    RatVector p = a.unit;
    for (std::size_t i = 0; i < q.dim; ++i) {
        s_basis.push_back(p);
        p = a.mul(p, z);
    }
    RatMatrix sm = from_rows(s_basis, a.dim);
    bool independent = rank(sm) == q.dim;
    std::vector<RatVector> both = s_basis;
    both.insert(both.end(), rad.begin(), rad.end());
    bool direct = rank(from_rows(both, a.dim)) == a.dim;
    rep.add("complement_dimension", independent && direct);

    bool closed = true;
    for (const auto& x : s_basis)
        for (const auto& y : s_basis)
            if (!in_span(s_basis, a.mul(x, y))) closed = false;
    rep.add("complement_subalgebra", closed);
    rep.add("splitting", independent && direct && closed,
            "Wedderburn factor generated by a lifted primitive element");
    return rep;
}

FDAlgebra fd_t_algebra(int p) {
    if (p < 1) throw BadParameter("fd_t_algebra: need p >= 1");
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) basis.emplace_back(i, j);
    std::size_t n = basis.size();
    FDAlgebra a = empty_algebra(n);
    auto find = [&](int i, int j) {
        for (std::size_t t = 0; t < n; ++t)
            if (basis[t] == std::make_pair(i, j)) return t;
        throw BadParameter("fd_t_algebra: bad index");
    };
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (basis[s].second == basis[t].first)
                a.table[s][t][find(basis[s].first, basis[t].second)] = Rational(1);
    for (int i = 0; i < p; ++i) a.unit[find(i, i)] = Rational(1);
    return a;
}

FDAlgebra fd_matrix_algebra(int n) {
    if (n < 1) throw BadParameter("fd_matrix_algebra: need n >= 1");
    std::size_t d = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    FDAlgebra a = empty_algebra(d);
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) a.table[idx(i, j)][idx(k, l)][idx(i, l)] = Rational(1);
    for (int i = 0; i < n; ++i) a.unit[idx(i, i)] = Rational(1);
    return a;
}

FDAlgebra fd_quotient_poly(const std::vector<Rational>& monic) {
    if (monic.size() < 2 || monic.back() != Rational(1))
        throw BadParameter("fd_quotient_poly: need a monic polynomial of degree >= 1");
    std::size_t n = monic.size() - 1;
    // Reductions of x^k for k up to 2n-2.
    std::vector<RatVector> red;
    for (std::size_t k = 0; k < n; ++k) {
        RatVector v(n);
        v[k] = Rational(1);
        red.push_back(std::move(v));
    }
    for (std::size_t k = n; k <= 2 * (n - 1); ++k) {
        RatVector v(n);
        const RatVector& prev = red[k - 1];
        // x * prev, with x^n = -sum c_i x^i.
        for (std::size_t i = 0; i + 1 < n; ++i) v[i + 1] += prev[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= prev[n - 1] * monic[i];
        red.push_back(std::move(v));
    }
    FDAlgebra a = empty_algebra(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.table[i][j] = red[i + j];
    a.unit[0] = Rational(1);
    return a;
}

FDAlgebra fd_qq() {
    FDAlgebra a = empty_algebra(2);
    a.table[0][0][0] = Rational(1);
    a.table[1][1][1] = Rational(1);
    a.unit = {Rational(1), Rational(1)};
    return a;
}

FDAlgebra fd_path_algebra(const Quiver& q) {
    std::vector<Path> paths = all_paths(q);
    std::size_t n = paths.size();
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(paths[i], i);
    FDAlgebra a = empty_algebra(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (paths[i].end(q) != paths[j].start) continue;
            Path prod = paths[i];
            prod.arrows.insert(prod.arrows.end(), paths[j].arrows.begin(), paths[j].arrows.end());
            a.table[i][j][index.at(prod)] = Rational(1);
        }
    for (std::size_t i = 0; i < n; ++i)
        if (paths[i].arrows.empty()) a.unit[i] = Rational(1);
    return a;
}

FDAlgebra fd_from_matrix_span(const std::vector<RatMatrix>& basis) {
    if (basis.empty()) throw BadParameter("fd_from_matrix_span: empty basis");
    std::size_t rows = basis.front().rows(), cols = basis.front().cols();
    auto flatten = [&](const RatMatrix& m) {
        RatVector v(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) v[i * cols + j] = m(i, j);
        return v;
    };
    std::vector<RatVector> flat;
    for (const auto& m : basis) flat.push_back(flatten(m));
    RatMatrix span = from_cols(flat, rows * cols);
    if (rank(span) != basis.size())
        throw InvalidTable("fd_from_matrix_span: matrices are linearly dependent");

    FDAlgebra a = empty_algebra(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto coeffs = solve(span, flatten(basis[i] * basis[j]));
            if (!coeffs) throw InvalidTable("fd_from_matrix_span: span is not closed under product");
            a.table[i][j] = *coeffs;
        }
    auto unit = solve(span, flatten(RatMatrix::identity(rows)));
    if (!unit) throw InvalidTable("fd_from_matrix_span: identity is not in the span");
    a.unit = *unit;
    return a;
}

}  // namespace ca
