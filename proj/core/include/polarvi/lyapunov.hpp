#pragma once

#include "polarvi/polar.hpp"
#include "polarvi/skew.hpp"

namespace polarvi {

/// Solves p x + x p + c = 0 for skew x, given SPD p and skew c, working in
/// the eigenbasis of p where the equation decouples entrywise.
SkewMat lyap_spd(const SpdMat& p, const SkewMat& c);

/// Same solve reusing an existing eigendecomposition of the coefficient.
SkewMat lyap_spd_eig(const SymEigen& eig, const SkewMat& c);

/// Solves m x + x m^T = r for skew x, with m a rotation near the identity
/// (||m - I||_2 < 1 keeps all eigenvalue pair sums away from zero). Solved by
/// dense vectorization of the n^2 x n^2 system; guarded to n <= 16.
SkewMat sylvester_rot(const RotMat& m, const SkewMat& r);

}  // namespace polarvi
