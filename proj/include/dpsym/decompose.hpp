// Reduction of a Picard-lattice map to a word in the generators.
//
// Starting from the images of the simple roots, the map is right-multiplied
// by the reflection of the first simple root that is sent to a negative
// root until every image is positive. What is left must be a diagram
// automorphism.

#ifndef DPSYM_DECOMPOSE_HPP_
#define DPSYM_DECOMPOSE_HPP_

#include <optional>
#include <vector>

#include "dpsym/weylgroup.hpp"

namespace dpsym {

class NotInGroup : public Error {
 public:
  using Error::Error;
};

class NoAutomorphismMatch : public NotInGroup {
 public:
  using NotInGroup::NotInGroup;
};

/// The diagram automorphism whose permutation matrix is `images`, or
/// nullopt for the identity. Throws NoAutomorphismMatch otherwise.
std::optional<Generator> match_automorphism(const RootImageMatrix& images);

/// A vector rho of Pic with rho . alpha_j = 1 for every j.
const DivisorClass& height_covector();

/// rho . M rho. Right-multiplying M by w_i changes it by height(M alpha_i),
/// so it strictly drops on every reduction step.
Integer reduction_potential(const PicMap& m);

struct ReductionStep {
  int index = 0;             // reflection applied
  RootImageMatrix images;    // root images before the step
  Integer potential = 0;     // potential before the step
};

struct Decomposition {
  Word word;  // [sigma, w_ik, ..., w_i1] or just the reflections
  std::optional<Generator> automorphism;
  std::vector<int> reductions;  // i1, ..., ik in the order applied
  std::vector<ReductionStep> trace;
};

inline constexpr int kMaxReductionSteps = 100000;

/// Throws NotInGroup when m is not a Cremona isometry preserving the
/// symmetry lattice, or when the residual is not a generator automorphism.
Decomposition decompose(const PicMap& m, bool keep_trace = false);

}  // namespace dpsym

#endif  // DPSYM_DECOMPOSE_HPP_
