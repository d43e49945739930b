#include "ca/reps.hpp"

#include <sstream>

#include "ca/errors.hpp"

namespace ca {

ParamPoly s_poly(const DeltaIndex& d, const DeltaIndex& dp, int p, int i) {
    return ParamPoly::var(Var::t(d.l, d.j, p, i)) - ParamPoly::var(Var::t(dp.l, dp.j, p + 1, i));
}

ParamPoly y_poly(const DeltaIndex& d0, const DeltaIndex& d, const DeltaIndex& dp, int p) {
    return s_poly(d, dp, p, d0.l) - s_poly(d, dp, p, d0.j);
}

ThetaFamily::ThetaFamily(int k, int m, bool with_lambda)
    : qm_(build_qm(k, m)), with_lambda_(with_lambda) {}

PathElem ThetaFamily::generator_image(int i) const {
    if (i < 1 || i > qm_.k) throw GeneratorMismatch("generator index out of range");
    PathElem img(qm_.quiver);
    if (qm_.trivial()) {
        if (with_lambda_)
            img.add_term(Path{0, {}}, ParamPoly::var(Var::lambda(i)));
        return img;
    }
    for (const auto& d : qm_.delta)
        for (int p = 1; p <= qm_.m + 1; ++p)
            img.add_term(Path{qm_.vertex_index(d, p), {}}, ParamPoly::var(Var::t(d.l, d.j, p, i)));
    for (const auto& d : qm_.delta)
        for (const auto& dp : qm_.delta)
            for (int p = 1; p <= qm_.m; ++p) {
                int a = qm_.arrow_index(d, dp, p);
                img.add_term(Path{qm_.vertex_index(d, p), {a}}, ParamPoly::constant(1));
            }
    if (with_lambda_) {
        ParamPoly li = ParamPoly::var(Var::lambda(i));
        for (int v = 0; v < static_cast<int>(qm_.quiver->num_vertices()); ++v)
            img.add_term(Path{v, {}}, li);
    }
    return img;
}

PathElem ThetaFamily::eval(const NCPoly& x) const {
    if (x.max_generator() > qm_.k)
        throw GeneratorMismatch("element uses more generators than the family");
    PathElem total(qm_.quiver);
    for (const auto& [w, c] : x.terms()) {
        PathElem acc = PathElem::unit(qm_.quiver);
        for (int i : w) acc = path_mul(acc, generator_image(i));
        acc.scale(c);
        total += acc;
    }
    return total;
}

namespace {

Path arrow_path(const QmQuiver& qm, const DeltaIndex& d, const DeltaIndex& dp, int p) {
    return Path{qm.vertex_index(d, p), {qm.arrow_index(d, dp, p)}};
}

Path tuple_path(const QmQuiver& qm, const std::vector<DeltaIndex>& tuple) {
    // tuple has length m+1; the path visits layers 1..m+1.
    Path p{qm.vertex_index(tuple[0], 1), {}};
    for (int layer = 1; layer <= qm.m; ++layer)
        p.arrows.push_back(qm.arrow_index(tuple[static_cast<std::size_t>(layer) - 1],
                                          tuple[static_cast<std::size_t>(layer)], layer));
    return p;
}

std::string mismatch_detail(const PathElem& lhs, const PathElem& rhs) {
    std::ostringstream os;
    os << "lhs = " << lhs.str() << " ; rhs = " << rhs.str();
    return os.str();
}

}  // namespace

std::vector<std::vector<DeltaIndex>> delta_tuples(const std::vector<DeltaIndex>& values, int len) {
    std::vector<std::vector<DeltaIndex>> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<std::vector<DeltaIndex>> next;
        for (const auto& t : out)
            for (const auto& v : values) {
                auto e = t;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

VerifyResult verify_teofg(int k, int m, const DeltaIndex& delta0, const std::vector<int>& beta) {
    ThetaFamily theta(k, m, /*with_lambda=*/false);
    PathElem img = theta.eval(g_expand(delta0, beta));
    if (!ideal_power_membership(img, 1))
        return {false, "theta_t(g) not in the arrow ideal: " + img.str()};

    PathElem first_order(theta.qm().quiver);
    if (!theta.qm().trivial()) {
        for (const auto& d : theta.qm().delta)
            for (const auto& dp : theta.qm().delta)
                for (int p = 1; p <= m; ++p) {
                    ParamPoly c = y_poly(delta0, d, dp, p);
                    for (int i = 1; i <= delta0.l; ++i)
                        c *= s_poly(d, dp, p, i).pow(beta[static_cast<std::size_t>(i) - 1]);
                    first_order += PathElem::path(theta.qm().quiver,
                                                  arrow_path(theta.qm(), d, dp, p), c);
                }
    }
    PathElem residual = img - first_order;
    if (!ideal_power_membership(residual, 2))
        return {false, "residual not in I^2: " + residual.str()};
    return {true, ""};
}

VerifyResult verify_wtelawn(int k, int m,
                            const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors) {
    if (static_cast<int>(factors.size()) != m)
        throw BadShape("verify_wtelawn: need exactly m factors");
    ThetaFamily theta(k, m, /*with_lambda=*/false);
    NCPoly prod = NCPoly::unit();
    for (const auto& [d, beta] : factors) prod *= g_expand(d, beta);
    PathElem lhs = theta.eval(prod);

    PathElem rhs(theta.qm().quiver);
    if (!theta.qm().trivial()) {
        for (const auto& tuple : delta_tuples(theta.qm().delta, m + 1)) {
            ParamPoly c = ParamPoly::constant(1);
            for (int p = 1; p <= m; ++p) {
                const auto& [d, beta] = factors[static_cast<std::size_t>(p) - 1];
                const DeltaIndex& dp = tuple[static_cast<std::size_t>(p) - 1];
                const DeltaIndex& dn = tuple[static_cast<std::size_t>(p)];
                c *= y_poly(d, dp, dn, p);
                for (int i = 1; i <= d.l; ++i)
                    c *= s_poly(dp, dn, p, i).pow(beta[static_cast<std::size_t>(i) - 1]);
            }
            rhs += PathElem::path(theta.qm().quiver, tuple_path(theta.qm(), tuple), c);
        }
    }
    if (lhs != rhs) return {false, mismatch_detail(lhs, rhs)};
    return {true, ""};
}

VerifyResult verify_annihilation(int k, int m,
                                 const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors) {
    if (static_cast<int>(factors.size()) <= m)
        throw BadShape("verify_annihilation: need more factors than layers");
    ThetaFamily theta(k, m, /*with_lambda=*/true);
    NCPoly prod = NCPoly::unit();
    for (const auto& [d, beta] : factors) prod *= g_expand(d, beta);
    PathElem img = theta.eval(prod);
    if (!img.is_zero()) return {false, "expected 0, got " + img.str()};
    return {true, ""};
}

VerifyResult verify_phim(int k, int m, const std::vector<DeltaIndex>& bdelta, const ParamPoly& h) {
    if (static_cast<int>(bdelta.size()) != m) throw BadShape("verify_phim: |bdelta| != m");
    ThetaFamily theta(k, m, /*with_lambda=*/true);

    // Phi_bdelta(h): expand h monomial by monomial.
    NCPoly phi;
    for (const auto& [mono, coeff] : h.terms()) {
        std::vector<int> alpha(static_cast<std::size_t>(k), 0);
        std::vector<std::pair<DeltaIndex, std::vector<int>>> factors;
        for (int p = 1; p <= m; ++p)
            factors.emplace_back(bdelta[static_cast<std::size_t>(p) - 1],
                                 std::vector<int>(static_cast<std::size_t>(
                                                      bdelta[static_cast<std::size_t>(p) - 1].l),
                                                  0));
        for (const auto& [v, e] : mono.factors) {
            if (v.tag == Var::Tag::Lambda) {
                if (v.idx[0] < 1 || v.idx[0] > k) throw BadShape("verify_phim: lambda index");
                alpha[static_cast<std::size_t>(v.idx[0]) - 1] = e;
            } else if (v.tag == Var::Tag::Mu) {
                int p = v.idx[0], i = v.idx[1];
                if (p < 1 || p > m) throw BadShape("verify_phim: mu layer out of range");
                auto& beta = factors[static_cast<std::size_t>(p) - 1].second;
                if (i < 1 || i > static_cast<int>(beta.size()))
                    throw BadShape("verify_phim: mu index exceeds factor shape");
                beta[static_cast<std::size_t>(i) - 1] = e;
            } else {
                throw BadShape("verify_phim: h must be a polynomial in lambda and mu");
            }
        }
        NCPoly term = phi_expand(alpha, factors);
        phi += NCPoly::scalar(ParamPoly::constant(coeff)) * term;
    }
    PathElem lhs = theta.eval(phi);

    PathElem rhs(theta.qm().quiver);
    if (m == 0) {
        rhs.add_term(Path{0, {}}, h);
    } else if (!theta.qm().trivial()) {
        for (const auto& tuple : delta_tuples(theta.qm().delta, m + 1)) {
            ParamPoly weight = ParamPoly::constant(1);
            for (int p = 1; p <= m; ++p)
                weight *= y_poly(bdelta[static_cast<std::size_t>(p) - 1],
                                 tuple[static_cast<std::size_t>(p) - 1],
                                 tuple[static_cast<std::size_t>(p)], p);
            ParamPoly hs = h;
            for (int i = 1; i <= k; ++i)
                hs = hs.substitute(Var::lambda(i),
                                   ParamPoly::var(Var::lambda(i)) +
                                       ParamPoly::var(Var::t(tuple[0].l, tuple[0].j, 1, i)));
            for (int p = 1; p <= m; ++p) {
                const DeltaIndex& d = bdelta[static_cast<std::size_t>(p) - 1];
                for (int i = 1; i <= d.l; ++i)
                    hs = hs.substitute(Var::mu(p, i),
                                       s_poly(tuple[static_cast<std::size_t>(p) - 1],
                                              tuple[static_cast<std::size_t>(p)], p, i));
            }
            rhs += PathElem::path(theta.qm().quiver, tuple_path(theta.qm(), tuple), weight * hs);
        }
    }
    if (lhs != rhs) return {false, mismatch_detail(lhs, rhs)};
    return {true, ""};
}

RatMatrix FMatrix::eval_at(const std::map<Var, Rational>& assignment) const {
    RatMatrix m(row_tuples.size(), col_tuples.size());
    for (std::size_t r = 0; r < row_tuples.size(); ++r)
        for (std::size_t c = 0; c < col_tuples.size(); ++c)
            m(r, c) = entries[r][c].eval(assignment);
    return m;
}

FMatrix f_matrix(int k, int m) {
    if (k < 2 || m < 1) throw BadParameter("f_matrix: need k >= 2 and m >= 1");
    auto delta = delta_set(k);
    FMatrix f;
    f.row_tuples = delta_tuples(delta, m + 1);
    f.col_tuples = delta_tuples(delta, m);
    for (const auto& row : f.row_tuples) {
        std::vector<ParamPoly> line;
        for (const auto& col : f.col_tuples) {
            ParamPoly e = ParamPoly::constant(1);
            for (int p = 1; p <= m; ++p)
                e *= y_poly(col[static_cast<std::size_t>(p) - 1],
                            row[static_cast<std::size_t>(p) - 1],
                            row[static_cast<std::size_t>(p)], p);
            line.push_back(std::move(e));
        }
        f.entries.push_back(std::move(line));
    }
    return f;
}

VerifyResult reparam_rank(int k, int m) {
    if (m == 0) return {true, "identity on lambda"};
    auto delta = delta_set(k);
    if (delta.empty()) return {true, "Delta empty"};

    // Input coordinates: lambda_1..lambda_k, then t_{delta p i}.
    std::map<Var, std::size_t> col;
    for (int i = 1; i <= k; ++i) col.emplace(Var::lambda(i), col.size());
    for (const auto& d : delta)
        for (int p = 1; p <= m + 1; ++p)
            for (int i = 1; i <= k; ++i) col.emplace(Var::t(d.l, d.j, p, i), col.size());

    for (const auto& row_tuple : delta_tuples(delta, m + 1)) {
        for (const auto& col_tuple : delta_tuples(delta, m)) {
            std::size_t out_dim = static_cast<std::size_t>(k);
            for (const auto& d : col_tuple) out_dim += static_cast<std::size_t>(d.l);
            RatMatrix op(out_dim, col.size());
            std::size_t r = 0;
            for (int i = 1; i <= k; ++i, ++r) {
                op(r, col.at(Var::lambda(i))) = Rational(1);
                op(r, col.at(Var::t(row_tuple[0].l, row_tuple[0].j, 1, i))) += Rational(1);
            }
            for (int p = 1; p <= m; ++p) {
                const DeltaIndex& d = col_tuple[static_cast<std::size_t>(p) - 1];
                const DeltaIndex& a = row_tuple[static_cast<std::size_t>(p) - 1];
                const DeltaIndex& b = row_tuple[static_cast<std::size_t>(p)];
                for (int i = 1; i <= d.l; ++i, ++r) {
                    op(r, col.at(Var::t(a.l, a.j, p, i))) += Rational(1);
                    op(r, col.at(Var::t(b.l, b.j, p + 1, i))) -= Rational(1);
                }
            }
            if (rank(op) != out_dim) {
                std::ostringstream os;
                os << "not surjective for a label tuple pair (k=" << k << ", m=" << m << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

std::map<Var, Rational> random_rational_assignment(const std::set<Var>& vars, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 5);
    std::map<Var, Rational> a;
    for (const auto& v : vars) a.emplace(v, Rational(num(rng), den(rng)));
    return a;
}

}  // namespace ca
