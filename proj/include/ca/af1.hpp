#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ca/linalg.hpp"
#include "ca/param_poly.hpp"
#include "ca/report.hpp"

namespace ca {

using PPolyMatrix = DenseMatrix<ParamPoly>;

/// Formal power series with exact ParamPoly coefficients; only finitely many
/// are consulted per call.
struct FormalSeries {
    std::function<ParamPoly(int)> coeff;

    /// sinh(hbar x): c_{2n+1} = hbar^{2n+1}/(2n+1)!, even coefficients zero.
    static FormalSeries sinh_hbar();
    /// exp(x): c_n = 1/n!.
    static FormalSeries exp_plain();
    /// exp(hbar x) or exp(-hbar x) depending on sign.
    static FormalSeries exp_hbar(int sign);
    /// arcsinh(x): c_{2n+1} = (-1)^n (2n)! / (4^n (n!)^2 (2n+1)).
    static FormalSeries arcsinh_plain();
};

/// Sum c_i N^i, terminated by nilpotency. Throws NotNilpotent unless N is
/// strictly upper triangular.
PPolyMatrix apply_series(const FormalSeries& s, const PPolyMatrix& n);

/// The (p+1)x(p+1) Jordan nilpotent cell with ones on the superdiagonal.
PPolyMatrix nilpotent_jordan(int size);

/// Coefficients alpha_j of Z = E + alpha_2 E^2 + ... + alpha_p E^p.
/// alpha_1 = 1 implicitly; even coefficients vanish.
struct AlphaTable {
    int p = 0;
    std::map<int, ParamPoly> coeffs;  // j = 2..p

    ParamPoly at(int j) const;
};

/// Solves [X, Z] = sinh(hbar Z)/hbar order by order in powers of E.
AlphaTable solve_alphas(int p);

/// The representation e_1 -> kappa X (+ lambda), e_2 -> Z with kappa = hbar*sigma,
/// on matrices of size (p+1)x(p+1).
struct PiRep {
    int p = 0;
    bool with_lambda = false;
    PPolyMatrix e1;
    PPolyMatrix e2;
};

PiRep build_pi(int p, bool with_lambda);

/// Upper-right entry of the matrix Sum_j f_j(e_1) e_2^j in the lambda family,
/// computed by direct matrix evaluation. f holds f_0..f_p as polynomials in
/// lambda_1; throws BadShape unless |f| = p+1.
ParamPoly rho_pp(int p, const std::vector<ParamPoly>& f);

/// Same value through the closed form Sum_j (Z^j)_{0,p} * f_j(lambda + p*kappa).
ParamPoly rho_pp_shift(int p, const std::vector<ParamPoly>& f);

/// Checks that rho_pp(p, .) is a combination of shifted f_j with f_p-coefficient
/// the constant 1, and replays the zero-propagation induction on symbolic
/// inputs of the given degree.
Report verify_rho_triangular(int p_max, int degree);

}  // namespace ca
