// The two concrete dynamics on the family: the deautonomized QRT map phi in
// the canonical chart (f, g) and the Schlesinger map psi in its own chart
// (x, y), together with the parameter dictionaries and the change of
// variables that conjugates one to the other.

#ifndef DPSYM_MODELS_HPP_
#define DPSYM_MODELS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpsym/birational.hpp"
#include "dpsym/periodmap.hpp"

namespace dpsym {

struct SchlesingerParams {
  Rational theta01, theta02, theta11, theta12, kappa1, kappa2, kappa3;

  /// Fuchs relation: this is zero for an admissible scheme.
  Rational fuchs_sum() const {
    return theta01 + theta02 + theta11 + theta12 + kappa1 + kappa2 + kappa3;
  }
  friend bool operator==(const SchlesingerParams&, const SchlesingerParams&) = default;
};

inline constexpr std::array<const char*, 7> kSchlesingerNames = {
    "theta01", "theta02", "theta11", "theta12", "kappa1", "kappa2", "kappa3"};

struct SchlesingerState {
  SchlesingerParams t;
  ProjectiveCoord x;
  ProjectiveCoord y;
  friend bool operator==(const SchlesingerState&, const SchlesingerState&) = default;
};

inline bool is_finite(const SchlesingerState& s) {
  return !s.x.is_infinite() && !s.y.is_infinite();
}

/// Admissible parameters: six free entries, kappa3 fixed by Fuchs.
SchlesingerParams random_schlesinger_params(std::mt19937_64& rng,
                                            std::int64_t bound = kDefaultSampleBound);
SchlesingerState random_schlesinger_state(std::mt19937_64& rng,
                                          std::int64_t bound = kDefaultSampleBound);

// ---------------------------------------------------------------------------
// phi

/// One step of phi as formula data; its picmap is phi_pushforward().
const BirationalStep& phi_step_map();
SurfaceState phi_step(const SurfaceState& s);

/// r w5 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w5
const Word& phi_word();
/// Images of (H_f, H_g, E_1..E_8) under phi, as columns.
const PicMap& phi_pushforward();

// ---------------------------------------------------------------------------
// psi

SchlesingerParams psi_params(const SchlesingerParams& t);
SchlesingerState psi_step(const SchlesingerState& s);

/// r w1 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w3
const Word& psi_word();
const PicMap& psi_pushforward();

// ---------------------------------------------------------------------------
// Dictionaries and the change of variables

using Dictionary = std::function<ParamVector(const SchlesingerParams&)>;

/// Parameters for the chart in which psi acts with (f, g) = (x, y).
ParamVector b_from_schlesinger_psi_chart(const SchlesingerParams& t);
/// Parameters in which the transported map is phi.
ParamVector b_from_schlesinger_phi_chart(const SchlesingerParams& t);

/// [w5, w3]: carries the psi chart to the phi chart.
const Word& conjugator_word();

SurfacePoint change_of_variables(const SchlesingerParams& t, const ProjectiveCoord& x,
                                 const ProjectiveCoord& y);
/// (x, y) from (f, g); the inverse is the action of w3 o w5.
std::pair<ProjectiveCoord, ProjectiveCoord> change_of_variables_inverse(
    const SchlesingerParams& t, const ProjectiveCoord& f, const ProjectiveCoord& g);

/// Canonical-chart state (dict(t), x, y): the psi chart seen directly.
SurfaceState embed_psi_chart(const SchlesingerState& s, const Dictionary& dict = b_from_schlesinger_psi_chart);
/// (dict(t), change_of_variables(t, x, y)).
SurfaceState transport(const SchlesingerState& s,
                       const Dictionary& dict = b_from_schlesinger_phi_chart);

// ---------------------------------------------------------------------------
// Verification

using CheckState = std::variant<SurfaceState, SchlesingerState>;

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::NoSamples;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::optional<CheckState> counterexample;
  std::optional<CheckState> lhs;
  std::optional<CheckState> rhs;
  bool passed() const { return verdict != Verdict::Counterexample; }
};

struct EquivalenceReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  /// True when some check ran on zero samples and passed vacuously.
  bool no_samples() const;
};

struct EquivalenceOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  Dictionary psi_chart = b_from_schlesinger_psi_chart;
  Dictionary phi_chart = b_from_schlesinger_phi_chart;
};

CheckResult check_phi_formula_vs_word(int trials, std::uint64_t seed);
CheckResult check_psi_formula_vs_word(int trials, std::uint64_t seed,
                                      const Dictionary& psi_chart = b_from_schlesinger_psi_chart);
CheckResult check_conjugation(int trials, std::uint64_t seed);
CheckResult check_change_of_variables(int trials, std::uint64_t seed,
                                      const Dictionary& psi_chart = b_from_schlesinger_psi_chart,
                                      const Dictionary& phi_chart = b_from_schlesinger_phi_chart);
CheckResult check_transported_dynamics(int trials, std::uint64_t seed,
                                       const Dictionary& phi_chart = b_from_schlesinger_phi_chart);
CheckResult check_parameter_evolution(int trials, std::uint64_t seed,
                                      const Dictionary& psi_chart = b_from_schlesinger_psi_chart,
                                      const Dictionary& phi_chart = b_from_schlesinger_phi_chart);

EquivalenceReport verify_equivalence(const EquivalenceOptions& opts = {});

// ---------------------------------------------------------------------------
// Orbits

template <typename State>
struct OrbitTrace {
  std::vector<State> states;  // states[k] is the state after k steps
  std::optional<std::string> error;
  std::optional<std::size_t> failed_step;
};

OrbitTrace<SurfaceState> orbit_phi(const SurfaceState& initial, int steps);
OrbitTrace<SchlesingerState> orbit_psi(const SchlesingerState& initial, int steps);

}  // namespace dpsym

#endif  // DPSYM_MODELS_HPP_
