#pragma once

#include <vector>

#include "nleib/subspace.hpp"

namespace nleib {

struct OperatorFitting {
  Subspace null_component;  // ker A^d
  Subspace one_component;   // im A^d
};

/// Fitting decomposition of a single operator A on Q^d: V = V0 ⊕ V1 with
/// A nilpotent on V0 and invertible on V1. The exponent is fixed at
/// d = dimension. Direct sum, invariance, nilpotency and invertibility of
/// the restrictions are all checked on every call.
OperatorFitting fitting_single(const Matrix& a);

/// True iff the Lie algebra of matrices generated by `generators` (span
/// closed under commutators) has a vanishing lower central series.
bool matrix_lie_nilpotent(const std::vector<Matrix>& generators);

}  // namespace nleib
