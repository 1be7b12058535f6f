// Picard lattice of the eight-point blowup of P1 x P1.
//
// Classes are integer column vectors in the fixed basis
//   (H_f, H_g, E_1, ..., E_8)
// with H_f . H_g = 1, E_i . E_j = -delta_ij and all other products zero.
// Root coordinates are with respect to the simple roots alpha_0..alpha_6 of
// the symmetry sublattice Q(E6^(1)); the Cartan matrix uses the geometric
// sign convention (diagonal -2).

#ifndef DPSYM_PICLATTICE_HPP_
#define DPSYM_PICLATTICE_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "dpsym/rational.hpp"

namespace dpsym {

using Integer = std::int64_t;

inline constexpr int kPicRank = 10;
inline constexpr int kNumSimpleRoots = 7;
inline constexpr int kNumSurfaceRoots = 3;

using DivisorClass = Vec<Integer, kPicRank>;
using RootVector = Vec<Integer, kNumSimpleRoots>;
using RationalRootVector = Vec<Rational, kNumSimpleRoots>;

template <typename Scalar>
using RootCoords = Vec<Scalar, kNumSimpleRoots>;

using GramMatrix = Eigen::Matrix<Integer, kPicRank, kPicRank>;
using CartanMatrix = Eigen::Matrix<Integer, kNumSimpleRoots, kNumSimpleRoots>;
using RootBasis = Eigen::Matrix<Integer, kPicRank, kNumSimpleRoots>;

class NotInSymmetryLattice : public Error {
 public:
  using Error::Error;
};

// Basis elements.
DivisorClass H_f();
DivisorClass H_g();
DivisorClass E(int i);  // 1 <= i <= 8

const GramMatrix& intersection_form();

inline Integer intersection(const DivisorClass& a, const DivisorClass& b) {
  return a.dot(intersection_form() * b);
}

/// -K_X = 2H_f + 2H_g - E_1 - ... - E_8.
DivisorClass anticanonical();

/// alpha_i, 0 <= i <= 6. Throws std::out_of_range otherwise.
DivisorClass symmetry_root(int i);

/// delta_i, 0 <= i <= 2. Throws std::out_of_range otherwise.
DivisorClass surface_root(int i);

/// Columns are alpha_0..alpha_6 as divisor classes.
const RootBasis& symmetry_root_basis();

/// [alpha_i . alpha_j].
const CartanMatrix& cartan_matrix();

/// Coordinates (1,2,3,2,1,2,1) of delta = -K_X in the alpha basis.
const RootVector& null_root();

/// Nodes i, j joined by an edge of the E6^(1) diagram.
bool adjacent(int i, int j);

template <typename Scalar>
Vec<Scalar, kPicRank> from_alpha_coords(const RootCoords<Scalar>& v) {
  return symmetry_root_basis().cast<Scalar>() * v;
}

/// Inverse of from_alpha_coords; throws NotInSymmetryLattice outside the
/// integer span of the simple roots.
RootVector to_alpha_coords(const DivisorClass& c);

/// Intersection pairing evaluated in alpha coordinates.
template <typename Scalar>
Scalar root_pairing(const RootCoords<Scalar>& a, const RootCoords<Scalar>& b) {
  return a.dot(cartan_matrix().cast<Scalar>() * b);
}

/// w_i(v) = v + (v . alpha_i) alpha_i, in alpha coordinates.
template <typename Scalar>
RootCoords<Scalar> reflect(int i, const RootCoords<Scalar>& v) {
  RootCoords<Scalar> out = v;
  out(i) += v.dot(cartan_matrix().col(i).cast<Scalar>());
  return out;
}

enum class RootSign { Positive, Negative, Zero, Mixed };

template <typename Scalar>
RootSign root_sign(const RootCoords<Scalar>& v) {
  bool pos = false;
  bool neg = false;
  for (int i = 0; i < kNumSimpleRoots; ++i) {
    if (v(i) > 0) pos = true;
    if (v(i) < 0) neg = true;
  }
  if (pos && neg) return RootSign::Mixed;
  if (pos) return RootSign::Positive;
  if (neg) return RootSign::Negative;
  return RootSign::Zero;
}

const char* to_string(RootSign s);

/// Sum of alpha coordinates.
template <typename Scalar>
Scalar height(const RootCoords<Scalar>& v) {
  return v.sum();
}

}  // namespace dpsym

#endif  // DPSYM_PICLATTICE_HPP_
