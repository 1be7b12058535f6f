// The extended affine Weyl group of type E6^(1) acting on the Picard lattice.
//
// Elements are 10x10 integer matrices acting on column vectors in the
// (H_f, H_g, E_1..E_8) basis. A Word [g1, ..., gk] denotes g1 o ... o gk, so
// gk acts first and word_to_picmap returns M(g1) * ... * M(gk).

#ifndef DPSYM_WEYLGROUP_HPP_
#define DPSYM_WEYLGROUP_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpsym/piclattice.hpp"

namespace dpsym {

enum class Generator { w0, w1, w2, w3, w4, w5, w6, m0, m1, m2, r, r2 };

inline constexpr std::array<Generator, 12> kAllGenerators = {
    Generator::w0, Generator::w1, Generator::w2, Generator::w3, Generator::w4, Generator::w5,
    Generator::w6, Generator::m0, Generator::m1, Generator::m2, Generator::r,  Generator::r2};

inline constexpr std::array<Generator, 7> kReflections = {
    Generator::w0, Generator::w1, Generator::w2, Generator::w3,
    Generator::w4, Generator::w5, Generator::w6};

inline constexpr std::array<Generator, 5> kAutomorphisms = {
    Generator::m0, Generator::m1, Generator::m2, Generator::r, Generator::r2};

using Word = std::vector<Generator>;
using PicMap = Eigen::Matrix<Integer, kPicRank, kPicRank>;
/// Column i holds the alpha coordinates of the image of alpha_i.
using RootImageMatrix = Eigen::Matrix<Integer, kNumSimpleRoots, kNumSimpleRoots>;

class NotTranslation : public Error {
 public:
  using Error::Error;
};

class NormMismatch : public Error {
 public:
  using Error::Error;
};

std::string_view to_string(Generator g);
/// Accepts "w0".."w6", "m0".."m2", "r", "r2". Throws ParseError.
Generator parse_generator(std::string_view s);
/// Comma or whitespace separated list, e.g. "w3,w5". Empty input is the empty word.
Word parse_word(std::string_view s);
std::string to_string(const Word& w);

inline bool is_reflection(Generator g) {
  return static_cast<int>(g) <= static_cast<int>(Generator::w6);
}
/// Index i of the reflection w_i.
inline int reflection_index(Generator g) {
  return static_cast<int>(g);
}
inline Generator reflection(int i) {
  return static_cast<Generator>(i);
}
Generator inverse(Generator g);

/// sigma(alpha_i) = alpha_{perm[i]} for a diagram automorphism. Throws
/// std::invalid_argument for reflections.
std::array<int, kNumSimpleRoots> alpha_permutation(Generator automorphism);
/// sigma(delta_i) = delta_{perm[i]}; reflections fix every delta_i.
std::array<int, kNumSurfaceRoots> delta_permutation(Generator g);

const PicMap& generator_picmap(Generator g);
PicMap word_to_picmap(std::span<const Generator> w);
Word invert_word(std::span<const Generator> w);

/// M^T J M = J and M K = K.
bool is_cremona_isometry(const PicMap& m);

/// Images of the simple roots in alpha coordinates. Throws
/// NotInSymmetryLattice if some image leaves Q.
RootImageMatrix root_images(const PicMap& m);

/// perm[i] = j when m(delta_i) = delta_j, or nullopt if m does not permute them.
std::optional<std::array<int, kNumSurfaceRoots>> surface_root_permutation(const PicMap& m);

/// (n_0..n_6) with m(alpha_i) = alpha_i + n_i delta, or nullopt.
std::optional<RootVector> translation_delta_vector(const PicMap& m);

/// Representative of v + Q delta with vanishing alpha_0 coefficient.
RationalRootVector canonical_mod_delta(const RationalRootVector& v);

/// The alpha with (alpha . alpha_i) = n_i, canonicalized modulo delta.
RationalRootVector kac_vector(const RootVector& delta_vector);
/// Throws NotTranslation.
RationalRootVector kac_vector(const PicMap& m);

/// |t_alpha|^2 = -(alpha . alpha).
Rational translation_norm(const RationalRootVector& alpha);
/// Throws NotTranslation.
Rational translation_norm(const PicMap& m);

/// Applies a word to root coordinates. Reflections use the reflection
/// formula; automorphisms permute the simple-root coordinates.
template <typename Scalar>
RootCoords<Scalar> apply_word(std::span<const Generator> w, RootCoords<Scalar> v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (is_reflection(*it)) {
      v = reflect(reflection_index(*it), v);
    } else {
      const auto perm = alpha_permutation(*it);
      RootCoords<Scalar> moved = RootCoords<Scalar>::Zero();
      for (int i = 0; i < kNumSimpleRoots; ++i) moved(perm[i]) = v(i);
      v = moved;
    }
  }
  return v;
}

struct ConjugatorOptions {
  int max_len = 2;
  bool include_automorphisms = false;
};

/// Breadth-first search for the lexicographically first shortest word w
/// with w(src) == dst modulo delta. Throws NormMismatch when the norms
/// differ; returns nullopt when nothing of length <= max_len works.
std::optional<Word> find_conjugator(const RationalRootVector& src, const RationalRootVector& dst,
                                    const ConjugatorOptions& opts = {});

}  // namespace dpsym

#endif  // DPSYM_WEYLGROUP_HPP_
