#include "dpsym/periodmap.hpp"

namespace dpsym {

const PeriodMatrix& period_matrix() {
  // b_1 ... b_8
  static const PeriodMatrix p = (PeriodMatrix() <<
      0, 0, -1, 1, 0, 0, 0, 0,
      0, -1, 1, 0, 0, 0, 0, 0,
      -1, 1, 0, 0, 0, 0, 0, 0,
      1, 0, 0, 0, 0, 0, 1, 0,
      0, 0, 0, 0, 0, 0, -1, 1,
      1, 0, 0, 0, 1, 0, 0, 0,
      0, 0, 0, 0, -1, 1, 0, 0).finished();
  return p;
}

RootImageMatrix evolution_matrix(std::span<const Generator> w) {
  const Word inv = invert_word(w);
  return root_images(word_to_picmap(inv)).transpose();
}

}  // namespace dpsym
