#include "dpsym/models.hpp"

#include <algorithm>

namespace dpsym {

SchlesingerParams random_schlesinger_params(std::mt19937_64& rng, std::int64_t bound) {
  SchlesingerParams t;
  t.theta01 = random_rational(rng, bound);
  t.theta02 = random_rational(rng, bound);
  t.theta11 = random_rational(rng, bound);
  t.theta12 = random_rational(rng, bound);
  t.kappa1 = random_rational(rng, bound);
  t.kappa2 = random_rational(rng, bound);
  t.kappa3 = -(t.theta01 + t.theta02 + t.theta11 + t.theta12 + t.kappa1 + t.kappa2);
  return t;
}

SchlesingerState random_schlesinger_state(std::mt19937_64& rng, std::int64_t bound) {
  SchlesingerState s;
  s.t = random_schlesinger_params(rng, bound);
  s.x = random_rational(rng, bound);
  s.y = random_rational(rng, bound);
  return s;
}

// ---------------------------------------------------------------------------
// phi

namespace {

BirationalStep make_phi_step() {
  BirationalStep s;
  s.name = "phi";
  const ParamVector ones = ParamVector::Ones();
  for (int i = 4; i < 6; ++i) s.param_matrix.row(i) += ones.transpose();
  for (int i = 6; i < 8; ++i) s.param_matrix.row(i) -= ones.transpose();

  std::array<Expr, kNumParams> bb{0, 0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < kNumParams; ++i) bb[i] = to_expr(s.param_matrix.row(i).transpose());

  const Expr f = var_f(), g = var_g();
  const Expr rhs1 = (g + var_b(1)) * (g + var_b(2)) * (g + var_b(3)) * (g + var_b(4)) /
                    ((g - var_b(5)) * (g - var_b(6)));
  const Expr fb = rhs1 / (f + g) - g;
  const Expr rhs2 = (fb - bb[0]) * (fb - bb[1]) * (fb - bb[2]) * (fb - bb[3]) /
                    ((fb + bb[6]) * (fb + bb[7]));
  s.coord_f = fb;
  s.coord_g = rhs2 / (fb + g) - fb;
  s.picmap = phi_pushforward();
  return s;
}

PicMap columns(std::initializer_list<DivisorClass> images) {
  PicMap m;
  int j = 0;
  for (const DivisorClass& c : images) m.col(j++) = c;
  return m;
}

}  // namespace

const BirationalStep& phi_step_map() {
  static const BirationalStep step = make_phi_step();
  return step;
}

SurfaceState phi_step(const SurfaceState& s) {
  return eval_step(phi_step_map(), s);
}

const Word& phi_word() {
  static const Word w = parse_word("r w5 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w5");
  return w;
}

const PicMap& phi_pushforward() {
  static const PicMap m = [] {
    const DivisorClass hf = H_f(), hg = H_g();
    const DivisorClass e1234 = E(1) + E(2) + E(3) + E(4);
    return columns({6 * hf + 3 * hg - 2 * e1234 - E(5) - E(6) - 3 * E(7) - 3 * E(8),
                    3 * hf + hg - e1234 - E(7) - E(8),
                    2 * hf + hg - E(2) - E(3) - E(4) - E(7) - E(8),
                    2 * hf + hg - E(1) - E(3) - E(4) - E(7) - E(8),
                    2 * hf + hg - E(1) - E(2) - E(4) - E(7) - E(8),
                    2 * hf + hg - E(1) - E(2) - E(3) - E(7) - E(8),
                    3 * hf + hg - e1234 - E(6) - E(7) - E(8),
                    3 * hf + hg - e1234 - E(5) - E(7) - E(8),
                    hf - E(8),
                    hf - E(7)});
  }();
  return m;
}

// ---------------------------------------------------------------------------
// psi

namespace {

constexpr int kSlotX = 0;
constexpr int kSlotY = 1;
constexpr int kSlotTheta = 2;  // theta01, theta02, theta11, theta12, kappa1, kappa2, kappa3
constexpr int kPsiSlots = 9;

struct PsiExprs {
  Expr x_bar{0};
  Expr y_bar{0};
};

PsiExprs make_psi() {
  const Expr x = Expr::var(kSlotX, "x"), y = Expr::var(kSlotY, "y");
  std::array<Expr, 7> v{0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 7; ++i) v[i] = Expr::var(kSlotTheta + i, kSchlesingerNames[i]);
  const Expr &t01 = v[0], &t02 = v[1], &t11 = v[2], &t12 = v[3], &k1 = v[4], &k2 = v[5], &k3 = v[6];

  const Expr r1 = k1 * k2 + k2 * k3 + k3 * k1 - (y - t12) * (x - t02) - t01 * (y + t02) -
                  t11 * (t01 + t02 + t12);
  const Expr r2 = k1 * k2 * k3 + t11 * ((y - t12) * (x - t02) + t01 * (y + t02));
  const Expr alpha =
      (y * r1 + x * (t01 * r1 + r2) / (x + t01 - t02)) / ((x + y) * (t11 - t12));
  const Expr beta = ((y + t02) * r1 + r2) / ((x + y) * (t11 - t12));

  PsiExprs e;
  e.x_bar = (alpha - beta) * (alpha * x * (t11 - t12) + (1 + t02) * (x * (y - t12) + y * (t01 - t02))) /
            ((alpha - beta) * (x * (y - t12) + (t01 - t02) * y) - alpha * (t11 + 1) * (t01 - t02));
  e.y_bar = (alpha - beta) * (y * (x + t01 - t02) - t12 * x) / (alpha * (t01 - t02));
  return e;
}

const PsiExprs& psi_exprs() {
  static const PsiExprs e = make_psi();
  return e;
}

}  // namespace

SchlesingerParams psi_params(const SchlesingerParams& t) {
  SchlesingerParams out = t;
  out.theta01 -= 1;
  out.theta11 += 1;
  return out;
}

SchlesingerState psi_step(const SchlesingerState& s) {
  const SchlesingerParams& t = s.t;
  const std::array<ProjectiveCoord, kPsiSlots> env{s.x,       s.y,       t.theta01, t.theta02, t.theta11,
                                                   t.theta12, t.kappa1,  t.kappa2,  t.kappa3};
  SchlesingerState out;
  out.t = psi_params(t);
  out.x = psi_exprs().x_bar.eval(env);
  out.y = psi_exprs().y_bar.eval(env);
  return out;
}

const Word& psi_word() {
  static const Word w = parse_word("r w1 w2 w6 w5 w3 w2 w4 w3 w1 w2 w5 w0 w1 w2 w6 w3");
  return w;
}

const PicMap& psi_pushforward() {
  static const PicMap m = [] {
    const DivisorClass hf = H_f(), hg = H_g();
    const DivisorClass e1234 = E(1) + E(2) + E(3) + E(4);
    return columns({2 * hf + 3 * hg - e1234 - 2 * E(5) - 2 * E(8),
                    3 * hf + 5 * hg - 2 * e1234 - 3 * E(5) - E(6) - 2 * E(8),
                    hf + 2 * hg - E(2) - E(3) - E(4) - E(5) - E(8),
                    hf + 2 * hg - E(1) - E(3) - E(4) - E(5) - E(8),
                    hf + 2 * hg - E(1) - E(2) - E(4) - E(5) - E(8),
                    hf + 2 * hg - E(1) - E(2) - E(3) - E(5) - E(8),
                    E(7),
                    2 * hf + 2 * hg - e1234 - 2 * E(5) - E(8),
                    2 * hf + 3 * hg - e1234 - 2 * E(5) - E(6) - 2 * E(8),
                    hg - E(5)});
  }();
  return m;
}

// ---------------------------------------------------------------------------
// Dictionaries

ParamVector b_from_schlesinger_psi_chart(const SchlesingerParams& t) {
  ParamVector b;
  b << t.theta02 + t.kappa1, t.theta02 + t.kappa2, t.theta02 + t.kappa3, 0, t.theta11, t.theta12,
      t.theta01 - t.theta02, -t.theta02 - 1;
  return b;
}

ParamVector b_from_schlesinger_phi_chart(const SchlesingerParams& t) {
  ParamVector b;
  b << -t.kappa1 - t.theta01 - t.theta11, t.kappa2 + t.theta02, t.kappa3 + t.theta02, 0,
      t.theta01 - t.theta02, t.kappa1 + t.theta01 + t.theta12, t.theta11, t.kappa1 + t.theta11 - 1;
  return b;
}

const Word& conjugator_word() {
  static const Word w{Generator::w5, Generator::w3};
  return w;
}

SurfacePoint change_of_variables(const SchlesingerParams& t, const ProjectiveCoord& x,
                                 const ProjectiveCoord& y) {
  const ProjectiveCoord k = t.kappa1 + t.theta02;
  SurfacePoint p;
  p.f = (x * (y - t.theta11) - (k + t.theta11) * y) / (y + k);
  p.g = (x * (y + t.kappa1 + t.theta01) + (t.theta01 - t.theta02) * y) / (x - k);
  return p;
}

std::pair<ProjectiveCoord, ProjectiveCoord> change_of_variables_inverse(
    const SchlesingerParams& t, const ProjectiveCoord& f, const ProjectiveCoord& g) {
  const Rational shift = t.theta01 - t.theta02;
  const Rational k = t.kappa1 + t.theta01 + t.theta11;
  const ProjectiveCoord x = (f + k) * (g - shift) / (g - k) - shift;
  const ProjectiveCoord y =
      (x - t.kappa1 - t.theta02) * (g - shift) / (x + shift) - t.kappa1 - t.theta02;
  return {x, y};
}

SurfaceState embed_psi_chart(const SchlesingerState& s, const Dictionary& dict) {
  return SurfaceState{dict(s.t), {s.x, s.y}};
}

SurfaceState transport(const SchlesingerState& s, const Dictionary& dict) {
  return SurfaceState{dict(s.t), change_of_variables(s.t, s.x, s.y)};
}

// ---------------------------------------------------------------------------
// Verification

namespace {

template <typename In, typename Out>
CheckResult to_check(std::string name, MapsEqualResult<In, Out> r) {
  CheckResult c;
  c.name = std::move(name);
  c.verdict = r.verdict;
  c.accepted = r.accepted;
  c.rejected = r.rejected;
  if (r.counterexample) c.counterexample = CheckState(*r.counterexample);
  if (r.lhs) c.lhs = CheckState(*r.lhs);
  if (r.rhs) c.rhs = CheckState(*r.rhs);
  return c;
}

SurfaceState draw_surface(std::mt19937_64& rng) {
  return random_surface_state(rng);
}

SchlesingerState draw_schlesinger(std::mt19937_64& rng) {
  return random_schlesinger_state(rng);
}

}  // namespace

CheckResult check_phi_formula_vs_word(int trials, std::uint64_t seed) {
  return to_check("phi formula = phi word",
                  maps_equal<SurfaceState>(phi_step, [](const SurfaceState& s) { return eval_word(phi_word(), s); },
                                           draw_surface, trials, seed));
}

CheckResult check_psi_formula_vs_word(int trials, std::uint64_t seed, const Dictionary& psi_chart) {
  return to_check(
      "psi formula = psi word in the psi chart",
      maps_equal<SchlesingerState, SurfaceState>(
          [&](const SchlesingerState& s) { return embed_psi_chart(psi_step(s), psi_chart); },
          [&](const SchlesingerState& s) { return eval_word(psi_word(), embed_psi_chart(s, psi_chart)); },
          draw_schlesinger, trials, seed));
}

CheckResult check_conjugation(int trials, std::uint64_t seed) {
  Word conj = conjugator_word();
  conj.insert(conj.end(), psi_word().begin(), psi_word().end());
  const Word inv = invert_word(conjugator_word());
  conj.insert(conj.end(), inv.begin(), inv.end());
  return to_check("phi = (w5 w3) psi (w5 w3)^-1",
                  maps_equal<SurfaceState>(phi_step, [conj](const SurfaceState& s) { return eval_word(conj, s); },
                                           draw_surface, trials, seed));
}

CheckResult check_change_of_variables(int trials, std::uint64_t seed, const Dictionary& psi_chart,
                                      const Dictionary& phi_chart) {
  return to_check("change of variables = w5 w3",
                  maps_equal<SchlesingerState, SurfaceState>(
                      [&](const SchlesingerState& s) { return transport(s, phi_chart); },
                      [&](const SchlesingerState& s) {
                        return eval_word(conjugator_word(), embed_psi_chart(s, psi_chart));
                      },
                      draw_schlesinger, trials, seed));
}

CheckResult check_transported_dynamics(int trials, std::uint64_t seed, const Dictionary& phi_chart) {
  return to_check("change of variables carries psi to phi",
                  maps_equal<SchlesingerState, SurfaceState>(
                      [&](const SchlesingerState& s) { return transport(psi_step(s), phi_chart); },
                      [&](const SchlesingerState& s) { return phi_step(transport(s, phi_chart)); },
                      draw_schlesinger, trials, seed));
}

CheckResult check_parameter_evolution(int trials, std::uint64_t seed, const Dictionary& psi_chart,
                                      const Dictionary& phi_chart) {
  // Compared state: b = phi_chart(psi(t)) - phi_chart(t), f = sum of psi_chart(t).
  const auto observed = [&](const SchlesingerState& s) {
    return SurfaceState{phi_chart(psi_params(s.t)) - phi_chart(s.t), {psi_chart(s.t).sum(), 0}};
  };
  const auto expected = [](const SchlesingerState&) {
    ParamVector shift;
    shift << 0, 0, 0, 0, -1, -1, 1, 1;
    return SurfaceState{shift, {-1, 0}};
  };
  return to_check("parameter dictionaries",
                  maps_equal<SchlesingerState, SurfaceState>(observed, expected, draw_schlesinger,
                                                             trials, seed));
}

bool EquivalenceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

bool EquivalenceReport::no_samples() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.verdict == Verdict::NoSamples; });
}

EquivalenceReport verify_equivalence(const EquivalenceOptions& opts) {
  EquivalenceReport r;
  r.checks.push_back(check_phi_formula_vs_word(opts.trials, opts.seed));
  r.checks.push_back(check_psi_formula_vs_word(opts.trials, opts.seed, opts.psi_chart));
  r.checks.push_back(check_conjugation(opts.trials, opts.seed));
  r.checks.push_back(check_change_of_variables(opts.trials, opts.seed, opts.psi_chart, opts.phi_chart));
  r.checks.push_back(check_transported_dynamics(opts.trials, opts.seed, opts.phi_chart));
  r.checks.push_back(check_parameter_evolution(opts.trials, opts.seed, opts.psi_chart, opts.phi_chart));
  return r;
}

// ---------------------------------------------------------------------------
// Orbits

namespace {

template <typename State, typename Step>
OrbitTrace<State> run_orbit(const State& initial, int steps, Step step) {
  if (steps < 0) throw std::invalid_argument("orbit length must be non-negative");
  OrbitTrace<State> trace;
  trace.states.push_back(initial);
  for (int k = 0; k < steps; ++k) {
    try {
      trace.states.push_back(step(trace.states.back()));
    } catch (const Indeterminate& e) {
      trace.error = e.what();
      trace.failed_step = static_cast<std::size_t>(k);
      break;
    }
  }
  return trace;
}

}  // namespace

OrbitTrace<SurfaceState> orbit_phi(const SurfaceState& initial, int steps) {
  return run_orbit(initial, steps, phi_step);
}

OrbitTrace<SchlesingerState> orbit_psi(const SchlesingerState& initial, int steps) {
  return run_orbit(initial, steps, psi_step);
}

}  // namespace dpsym
