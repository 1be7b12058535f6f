// Birational realization of the generators on the family X_b.
//
// A state is the parameter vector b = (b_1..b_8) together with a point (f, g)
// of P1 x P1. Coordinates are projective so that images at infinity are
// representable; a 0/0 during evaluation means the point hit a base point of
// the map and raises Indeterminate.

#ifndef DPSYM_BIRATIONAL_HPP_
#define DPSYM_BIRATIONAL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "dpsym/rational.hpp"
#include "dpsym/weylgroup.hpp"

namespace dpsym {

inline constexpr int kNumParams = 8;

using ParamVector = Vec<Rational, kNumParams>;
using ParamMatrix = Eigen::Matrix<Rational, kNumParams, kNumParams>;

class Indeterminate : public Error {
 public:
  explicit Indeterminate(const std::string& what, std::optional<std::size_t> step = std::nullopt)
      : Error(what), step_(step) {}
  /// Position in the word of the generator whose evaluation failed, if any.
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::optional<std::size_t> step_;
};

class TooManyDegenerateSamples : public Error {
 public:
  using Error::Error;
};

/// A point (num : den) of P1, stored with den in {0, 1}.
class ProjectiveCoord {
 public:
  ProjectiveCoord() = default;
  ProjectiveCoord(Rational value) : num_(std::move(value)), den_(1) {}  // NOLINT
  ProjectiveCoord(int value) : num_(value), den_(1) {}                 // NOLINT
  /// Throws Indeterminate when both are zero.
  static ProjectiveCoord from_pair(const Rational& num, const Rational& den);
  static ProjectiveCoord infinity() { return from_pair(1, 0); }

  bool is_infinite() const { return den_ == 0; }
  const Rational& num() const { return num_; }
  const Rational& den() const { return den_; }
  /// Affine value; throws std::domain_error at infinity.
  const Rational& value() const;

  friend bool operator==(const ProjectiveCoord&, const ProjectiveCoord&) = default;

  friend ProjectiveCoord operator+(const ProjectiveCoord& a, const ProjectiveCoord& b);
  friend ProjectiveCoord operator-(const ProjectiveCoord& a, const ProjectiveCoord& b);
  friend ProjectiveCoord operator*(const ProjectiveCoord& a, const ProjectiveCoord& b);
  friend ProjectiveCoord operator/(const ProjectiveCoord& a, const ProjectiveCoord& b);
  friend ProjectiveCoord operator-(const ProjectiveCoord& a);

 private:
  Rational num_{0};
  Rational den_{1};
};

std::string to_string(const ProjectiveCoord& c);

struct SurfacePoint {
  ProjectiveCoord f;
  ProjectiveCoord g;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

struct SurfaceState {
  ParamVector b = ParamVector::Zero();
  SurfacePoint p;
  friend bool operator==(const SurfaceState& x, const SurfaceState& y) {
    return x.b == y.b && x.p == y.p;
  }
};

inline bool is_finite(const SurfaceState& s) {
  return !s.p.f.is_infinite() && !s.p.g.is_infinite();
}

/// chi(delta) = b_1 + ... + b_8.
inline Rational chi_delta(const ParamVector& b) {
  return b.sum();
}

// Immutable rational expression over numbered variable slots.
class Expr {
 public:
  Expr(Rational c);  // NOLINT
  Expr(int c);       // NOLINT
  static Expr var(int slot, std::string name);

  /// Evaluates with projective semantics: x/0 is infinity for x != 0 and
  /// any 0/0 raises Indeterminate.
  ProjectiveCoord eval(std::span<const ProjectiveCoord> env) const;
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Slots used by expressions in the canonical chart.
inline constexpr int kSlotF = 0;
inline constexpr int kSlotG = 1;
inline constexpr int kSlotB1 = 2;  // b_i lives in slot kSlotB1 + i - 1
inline constexpr int kCanonicalSlots = 10;

Expr var_f();
Expr var_g();
Expr var_b(int i);  // 1 <= i <= 8

/// Linear form in b_1..b_8, as a coefficient vector.
using LinearForm = Vec<Rational, kNumParams>;
LinearForm lin_b(int i);
Expr to_expr(const LinearForm& form);

/// b |-> M b + c together with coordinate formulas evaluated at the old
/// parameters and the induced push-forward on Pic.
struct BirationalStep {
  std::string name;
  ParamMatrix param_matrix = ParamMatrix::Identity();
  ParamVector param_offset = ParamVector::Zero();
  Expr coord_f = var_f();
  Expr coord_g = var_g();
  PicMap picmap = PicMap::Identity();

  ParamVector map_params(const ParamVector& b) const { return param_matrix * b + param_offset; }
};

/// The elementary map realizing a generator; fixes b_4 and chi(delta).
const BirationalStep& generator_step(Generator g);

SurfaceState eval_step(const BirationalStep& s, const SurfaceState& in);

/// Applies the rightmost symbol first. Indeterminate carries the position
/// of the failing symbol in w.
SurfaceState eval_word(std::span<const Generator> w, const SurfaceState& in);

// ---------------------------------------------------------------------------
// Randomized exact identity testing.

inline constexpr std::int64_t kDefaultSampleBound = 10000;
inline constexpr int kDefaultTrials = 25;

/// Generator for sample `index` of a run seeded with `seed`; streams are
/// independent of evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// n/d with |n| <= bound, 1 <= d <= bound.
Rational random_rational(std::mt19937_64& rng, std::int64_t bound = kDefaultSampleBound);

/// Generic finite state for identity testing.
SurfaceState random_surface_state(std::mt19937_64& rng, std::int64_t bound = kDefaultSampleBound);

enum class Verdict { Equal, Counterexample, NoSamples };
const char* to_string(Verdict v);

template <typename In, typename Out = In>
struct MapsEqualResult {
  Verdict verdict = Verdict::NoSamples;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::optional<In> counterexample;
  std::optional<Out> lhs;
  std::optional<Out> rhs;

  bool equal() const { return verdict != Verdict::Counterexample; }
};

/// Compares two maps on `trials` generic inputs drawn by `draw`. Inputs on
/// which either side is indeterminate or leaves the affine chart are
/// redrawn; more than 90% rejections raise TooManyDegenerateSamples.
template <typename In, typename Out = In, typename MapA, typename MapB, typename Sampler>
MapsEqualResult<In, Out> maps_equal(MapA&& a, MapB&& b, Sampler&& draw, int trials,
                                    std::uint64_t seed) {
  MapsEqualResult<In, Out> result;
  if (trials <= 0) return result;
  const std::uint64_t max_draws = 10 * static_cast<std::uint64_t>(trials);
  for (std::uint64_t index = 0; result.accepted < static_cast<std::size_t>(trials); ++index) {
    if (index >= max_draws)
      throw TooManyDegenerateSamples("rejected " + std::to_string(result.rejected) + " of " +
                                     std::to_string(index) + " samples");
    std::mt19937_64 rng = sample_rng(seed, index);
    const In input = draw(rng);
    std::optional<Out> lhs, rhs;
    try {
      lhs = a(input);
      rhs = b(input);
    } catch (const Indeterminate&) {
      ++result.rejected;
      continue;
    }
    if (!is_finite(*lhs) || !is_finite(*rhs)) {
      ++result.rejected;
      continue;
    }
    ++result.accepted;
    if (!(*lhs == *rhs)) {
      result.verdict = Verdict::Counterexample;
      result.counterexample = input;
      result.lhs = std::move(lhs);
      result.rhs = std::move(rhs);
      return result;
    }
  }
  result.verdict = Verdict::Equal;
  return result;
}

/// maps_equal on canonical-chart states with the default generic sampler.
MapsEqualResult<SurfaceState> maps_equal(const std::function<SurfaceState(const SurfaceState&)>& a,
                                         const std::function<SurfaceState(const SurfaceState&)>& b,
                                         int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Convenience wrapper for words.
MapsEqualResult<SurfaceState> words_equal(const Word& a, const Word& b, int trials = kDefaultTrials,
                                          std::uint64_t seed = 0);

}  // namespace dpsym

#endif  // DPSYM_BIRATIONAL_HPP_
