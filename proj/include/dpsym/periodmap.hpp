// The period map: root variables a_i = chi(alpha_i) as linear functions of
// the point-configuration parameters b, and their evolution under words.

#ifndef DPSYM_PERIODMAP_HPP_
#define DPSYM_PERIODMAP_HPP_

#include <span>

#include "dpsym/weylgroup.hpp"

namespace dpsym {

template <typename Scalar>
using Params = Vec<Scalar, 8>;

template <typename Scalar>
using RootVariables = Vec<Scalar, kNumSimpleRoots>;

/// Rows give a_0..a_6 in terms of b_1..b_8.
using PeriodMatrix = Eigen::Matrix<Integer, kNumSimpleRoots, 8>;
const PeriodMatrix& period_matrix();

template <typename Scalar>
RootVariables<Scalar> root_variables(const Params<Scalar>& b) {
  return period_matrix().cast<Scalar>() * b;
}

/// chi(delta) = a_0 + 2a_1 + 3a_2 + 2a_3 + a_4 + 2a_5 + a_6.
template <typename Scalar>
Scalar chi_of_null_root(const RootVariables<Scalar>& a) {
  return null_root().cast<Scalar>().dot(a);
}

/// Right inverse of root_variables with the gauge b_4 fixed.
template <typename Scalar>
Params<Scalar> params_from_root_variables(const RootVariables<Scalar>& a, const Scalar& b4) {
  const Scalar a0 = a(0);
  const Scalar a01 = a0 + a(1);
  const Scalar a012 = a01 + a(2);
  const Scalar a0123 = a012 + a(3);
  const Scalar a01234 = a0123 + a(4);
  const Scalar a0125 = a012 + a(5);
  const Scalar a01256 = a0125 + a(6);
  Params<Scalar> b;
  b << b4 - a012, b4 - a01, b4 - a0, b4, a0125 - b4, a01256 - b4, a0123 - b4, a01234 - b4;
  return b;
}

/// Row i holds the alpha coordinates of w^{-1}(alpha_i), so that
/// a-bar = E a.
RootImageMatrix evolution_matrix(std::span<const Generator> w);

template <typename Scalar>
RootVariables<Scalar> root_variable_evolution(std::span<const Generator> w,
                                              const RootVariables<Scalar>& a) {
  return evolution_matrix(w).cast<Scalar>() * a;
}

}  // namespace dpsym

#endif  // DPSYM_PERIODMAP_HPP_
