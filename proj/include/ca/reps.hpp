#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "ca/freealg.hpp"
#include "ca/quiver.hpp"

namespace ca {

/// s_{delta delta' p i} = t_{delta p i} - t_{delta', p+1, i}.
ParamPoly s_poly(const DeltaIndex& d, const DeltaIndex& dp, int p, int i);

/// y_{delta0 delta delta' p} = s_{delta delta' p, l0} - s_{delta delta' p, j0}.
ParamPoly y_poly(const DeltaIndex& d0, const DeltaIndex& d, const DeltaIndex& dp, int p);

/// The parametrized homomorphism family theta_t (and theta~_{lambda,t} when
/// with_lambda) from the free algebra on e_1..e_k into the path algebra of
/// Q_m, with symbolic t (and lambda) coefficients.
class ThetaFamily {
  public:
    ThetaFamily(int k, int m, bool with_lambda);

    int k() const { return qm_.k; }
    int m() const { return qm_.m; }
    bool with_lambda() const { return with_lambda_; }
    const QmQuiver& qm() const { return qm_; }

    /// Image of generator e_i.
    PathElem generator_image(int i) const;

    /// Image of an arbitrary element; algebra homomorphism.
    /// Throws GeneratorMismatch when x uses a generator index > k.
    PathElem eval(const NCPoly& x) const;

  private:
    QmQuiver qm_;
    bool with_lambda_;
};

struct VerifyResult {
    bool pass = false;
    std::string detail;
};

/// Checks theta_t(g_{delta0,beta}) in I and that subtracting the closed-form
/// first-order term leaves a residual in I^2, as exact ParamPoly identities.
VerifyResult verify_teofg(int k, int m, const DeltaIndex& delta0, const std::vector<int>& beta);

/// Compares theta_t(g_{beta^1 delta_1} ... g_{beta^m delta_m}) against the
/// closed form summed over label tuples of length m+1; exact equality.
VerifyResult verify_wtelawn(int k, int m,
                            const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors);

/// With more factors than layers the image must vanish identically.
VerifyResult verify_annihilation(int k, int m,
                                 const std::vector<std::pair<DeltaIndex, std::vector<int>>>& factors);

/// Verifies the substitution formula for theta~_{lambda,t}(Phi_bdelta(h)),
/// where h is a ParamPoly in lambda_i and mu_{p,i} and bdelta fixes the shape
/// of the mu block. For m = 0 verifies theta~_lambda(Phi_empty(h)) = h(lambda).
VerifyResult verify_phim(int k, int m, const std::vector<DeltaIndex>& bdelta, const ParamPoly& h);

/// The matrix F = (prod_p y_{delta_p delta'_p delta'_{p+1} p}) with rows
/// indexed by label tuples of length m+1 and columns by tuples of length m.
/// Square exactly when |Delta| = 1.
struct FMatrix {
    std::vector<std::vector<DeltaIndex>> row_tuples;
    std::vector<std::vector<DeltaIndex>> col_tuples;
    std::vector<std::vector<ParamPoly>> entries;

    bool square() const { return row_tuples.size() == col_tuples.size(); }
    RatMatrix eval_at(const std::map<Var, Rational>& assignment) const;
};

FMatrix f_matrix(int k, int m);

/// Verifies surjectivity of the reparametrization operator
/// ((lambda), (t)) -> ((lambda_i + t_{delta'_1,1,i}), (s-variables)) for every
/// pair of label tuples, by exact rank.
VerifyResult reparam_rank(int k, int m);

/// All tuples over `values` of the given length, in lexicographic order.
std::vector<std::vector<DeltaIndex>> delta_tuples(const std::vector<DeltaIndex>& values, int len);

/// Small random rationals for every variable in `vars`.
std::map<Var, Rational> random_rational_assignment(const std::set<Var>& vars, std::mt19937& rng);

}  // namespace ca
