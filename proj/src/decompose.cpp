#include "dpsym/decompose.hpp"

#include <string>

namespace dpsym {

std::optional<Generator> match_automorphism(const RootImageMatrix& images) {
  if (images == RootImageMatrix::Identity()) return std::nullopt;
  for (Generator g : kAutomorphisms) {
    const auto perm = alpha_permutation(g);
    RootImageMatrix p = RootImageMatrix::Zero();
    for (int i = 0; i < kNumSimpleRoots; ++i) p(perm[i], i) = 1;
    if (p == images) return g;
  }
  throw NoAutomorphismMatch("residual root permutation is not a diagram automorphism");
}

const DivisorClass& height_covector() {
  static const DivisorClass rho = (DivisorClass() << 1, 1, 0, 1, 2, 3, 0, 1, 0, 1).finished();
  return rho;
}

Integer reduction_potential(const PicMap& m) {
  return intersection(height_covector(), m * height_covector());
}

namespace {

int first_negative(const RootImageMatrix& images) {
  for (int i = 0; i < kNumSimpleRoots; ++i)
    if (root_sign<Integer>(images.col(i)) == RootSign::Negative) return i;
  return -1;
}

}  // namespace

Decomposition decompose(const PicMap& m, bool keep_trace) {
  if (!is_cremona_isometry(m)) throw NotInGroup("matrix is not a Cremona isometry");
  RootImageMatrix images;
  try {
    images = root_images(m);
  } catch (const NotInSymmetryLattice& e) {
    throw NotInGroup(std::string("map does not preserve the symmetry lattice: ") + e.what());
  }

  const CartanMatrix& c = cartan_matrix();
  Decomposition out;
  PicMap current = m;
  Integer potential = reduction_potential(m);
  for (int step = 0;; ++step) {
    const int i = first_negative(images);
    if (i < 0) break;
    if (step >= kMaxReductionSteps) throw NotInGroup("reduction did not terminate");
    if (keep_trace) out.trace.push_back({i, images, potential});
    const Integer drop = height<Integer>(images.col(i));
    RootImageMatrix next = images;
    for (int j = 0; j < kNumSimpleRoots; ++j) next.col(j) += c(i, j) * images.col(i);
    images = next;
    current = current * generator_picmap(reflection(i));
    const Integer updated = reduction_potential(current);
    if (updated != potential + drop || drop >= 0)
      throw std::logic_error("reduction potential failed to decrease");
    potential = updated;
    out.reductions.push_back(i);
  }

  out.automorphism = match_automorphism(images);
  const PicMap residual = out.automorphism ? generator_picmap(*out.automorphism) : PicMap::Identity();
  if (current != residual)
    throw NotInGroup("map agrees with a group element on the roots but not on Pic");

  if (out.automorphism) out.word.push_back(*out.automorphism);
  for (auto it = out.reductions.rbegin(); it != out.reductions.rend(); ++it)
    out.word.push_back(reflection(*it));
  return out;
}

}  // namespace dpsym
