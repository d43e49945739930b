#pragma once

#include "ca/freealg.hpp"
#include "ca/hopf_tensor.hpp"
#include "ca/report.hpp"

namespace ca {

/// Primitive coproduct on the free algebra: Delta(e_i) = e_i(x)1 + 1(x)e_i,
/// eps(e_i) = 0, S(e_i) = -e_i (sign-reversal of words).
Tensor2<NCPoly> free_delta(const NCPoly& x);
ParamPoly free_counit(const NCPoly& x);
NCPoly free_antipode(const NCPoly& x);

/// Verifies coassociativity, counit and antipode laws on every word of
/// length at most L in k generators. Word lengths never grow during these
/// checks, so the result holds verbatim in any length truncation >= L.
Report free_primitive_check(int k, int len);

}  // namespace ca
