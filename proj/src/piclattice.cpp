#include "dpsym/piclattice.hpp"

#include <stdexcept>
#include <string>

namespace dpsym {

DivisorClass H_f() {
  return DivisorClass::Unit(0);
}

DivisorClass H_g() {
  return DivisorClass::Unit(1);
}

DivisorClass E(int i) {
  if (i < 1 || i > 8) throw std::out_of_range("E_i needs 1 <= i <= 8, got " + std::to_string(i));
  return DivisorClass::Unit(1 + i);
}

const GramMatrix& intersection_form() {
  static const GramMatrix form = [] {
    GramMatrix j = GramMatrix::Zero();
    j(0, 1) = j(1, 0) = 1;
    for (int i = 2; i < kPicRank; ++i) j(i, i) = -1;
    return j;
  }();
  return form;
}

DivisorClass anticanonical() {
  DivisorClass k = DivisorClass::Constant(-1);
  k(0) = k(1) = 2;
  return k;
}

const RootBasis& symmetry_root_basis() {
  static const RootBasis basis = [] {
    RootBasis b;
    b.col(0) = E(3) - E(4);
    b.col(1) = E(2) - E(3);
    b.col(2) = E(1) - E(2);
    b.col(3) = H_f() - E(1) - E(7);
    b.col(4) = E(7) - E(8);
    b.col(5) = H_g() - E(1) - E(5);
    b.col(6) = E(5) - E(6);
    return b;
  }();
  return basis;
}

DivisorClass symmetry_root(int i) {
  if (i < 0 || i >= kNumSimpleRoots)
    throw std::out_of_range("symmetry root index must be in 0..6, got " + std::to_string(i));
  return symmetry_root_basis().col(i);
}

DivisorClass surface_root(int i) {
  switch (i) {
    case 0: return H_f() + H_g() - E(1) - E(2) - E(3) - E(4);
    case 1: return H_f() - E(5) - E(6);
    case 2: return H_g() - E(7) - E(8);
    default:
      throw std::out_of_range("surface root index must be in 0..2, got " + std::to_string(i));
  }
}

const CartanMatrix& cartan_matrix() {
  static const CartanMatrix c = [] {
    const RootBasis& a = symmetry_root_basis();
    return CartanMatrix(a.transpose() * intersection_form() * a);
  }();
  return c;
}

const RootVector& null_root() {
  static const RootVector delta = (RootVector() << 1, 2, 3, 2, 1, 2, 1).finished();
  return delta;
}

bool adjacent(int i, int j) {
  return i != j && cartan_matrix()(i, j) == 1;
}

RootVector to_alpha_coords(const DivisorClass& c) {
  const auto sol = solve_exact(symmetry_root_basis(), c);
  if (!sol) throw NotInSymmetryLattice("class is not in the span of alpha_0..alpha_6");
  RootVector out;
  for (int i = 0; i < kNumSimpleRoots; ++i) {
    if (!is_integer((*sol)(i)))
      throw NotInSymmetryLattice("class has non-integral alpha coordinates");
    out(i) = numerator((*sol)(i)).convert_to<Integer>();
  }
  return out;
}

const char* to_string(RootSign s) {
  switch (s) {
    case RootSign::Positive: return "positive";
    case RootSign::Negative: return "negative";
    case RootSign::Zero: return "zero";
    case RootSign::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace dpsym
