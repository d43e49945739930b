#pragma once

#include <string>
#include <vector>

#include "ca/linalg.hpp"
#include "ca/quiver.hpp"
#include "ca/report.hpp"

namespace ca {

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants: x_i * x_j = sum_k table[i][j][k] x_k.
struct FDAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<RatVector>> table;
    RatVector unit;

    /// Throws InvalidTable on associativity or unit failures.
    void validate() const;

    RatVector mul(const RatVector& x, const RatVector& y) const;
    RatMatrix left_mult(const RatVector& x) const;
    RatVector basis_vector(std::size_t i) const;
};

/// Upper triangular (p x p)-matrix algebra T_p.
FDAlgebra fd_t_algebra(int p);
/// Full (n x n)-matrix algebra.
FDAlgebra fd_matrix_algebra(int n);
/// Q[x]/(f) for a monic f given by coefficients c_0..c_{n} with c_n = 1.
FDAlgebra fd_quotient_poly(const std::vector<Rational>& monic);
/// Q x Q with coordinatewise product.
FDAlgebra fd_qq();
/// Path algebra of an acyclic quiver on the path basis.
FDAlgebra fd_path_algebra(const Quiver& q);
/// Algebra spanned by the given matrices (must be independent and closed
/// under product, containing the identity); derives structure constants.
FDAlgebra fd_from_matrix_span(const std::vector<RatMatrix>& basis);

/// Jacobson radical as the kernel of the regular trace form; the result is
/// verified to be a nilpotent ideal.
std::vector<RatVector> radical(const FDAlgebra& a);

/// Quotient A / span(rad); `lift` receives the ambient representatives of the
/// quotient basis when non-null.
FDAlgebra quotient_by_subspace(const FDAlgebra& a, const std::vector<RatVector>& rad,
                               std::vector<RatVector>* lift = nullptr);

struct GrowthCertificate {
    enum class Verdict { PolyGrowth, NotPolyGrowth };
    enum class Violation { None, QuotientNoncommutative, SpectrumNotReal };

    Verdict verdict = Verdict::NotPolyGrowth;
    Violation violation = Violation::None;
    std::vector<RatVector> radical_basis;
    /// When nonempty: upper triangular images of the basis elements realizing
    /// a faithful embedding, verified by re-multiplication.
    std::vector<RatMatrix> images;
    std::string detail;

    bool poly() const { return verdict == Verdict::PolyGrowth; }
};

/// Polynomial growth decision: positive iff A/Rad is commutative and its
/// trace form is positive definite. When the relevant characteristic
/// polynomials split over Q, also constructs a triangularizing basis.
GrowthCertificate decide_growth(const FDAlgebra& a);

FDAlgebra tensor_fd(const FDAlgebra& a, const FDAlgebra& b);

/// Attempts a Wedderburn splitting A = S (+) Rad A over Q and reports the
/// findings; S is built from a lifted primitive element of A/Rad.
Report split_extension_check(const FDAlgebra& a);

}  // namespace ca
