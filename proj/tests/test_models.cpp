#include <doctest.h>

#include "dpsym/models.hpp"
#include "oracles.hpp"

using namespace dpsym;

namespace {

std::array<Rational, 8> as_array(const ParamVector& b) {
  std::array<Rational, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = b(i);
  return out;
}

SchlesingerState draw_schlesinger(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = sample_rng(seed, index);
  return random_schlesinger_state(rng);
}

ParamVector shift(std::initializer_list<int> v) {
  ParamVector out;
  int i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_CASE("phi agrees with an independent transcription") {
  int compared = 0;
  for (std::uint64_t k = 0; compared < 100 && k < 1000; ++k) {
    std::mt19937_64 rng = sample_rng(77, k);
    const SurfaceState s = random_surface_state(rng);
    const auto want = oracle::phi(as_array(s.b), s.p.f.value(), s.p.g.value());
    if (!want) continue;
    SurfaceState got;
    try {
      got = phi_step(s);
    } catch (const Indeterminate&) {
      continue;
    }
    ++compared;
    CHECK(got.p.f == ProjectiveCoord(want->f));
    CHECK(got.p.g == ProjectiveCoord(want->g));
    CHECK(as_array(got.b) == want->b);
  }
  CHECK(compared == 100);
}

TEST_CASE("psi agrees with an independent transcription") {
  int compared = 0;
  for (std::uint64_t k = 0; compared < 100 && k < 1000; ++k) {
    const SchlesingerState s = draw_schlesinger(78, k);
    const auto want = oracle::psi(s.t, s.x.value(), s.y.value());
    if (!want) continue;
    SchlesingerState got;
    try {
      got = psi_step(s);
    } catch (const Indeterminate&) {
      continue;
    }
    ++compared;
    CHECK(got.x == ProjectiveCoord(want->x));
    CHECK(got.y == ProjectiveCoord(want->y));
    CHECK(got.t == want->t);
  }
  CHECK(compared == 100);
}

TEST_CASE("phi with vanishing chi(delta) keeps its parameters") {
  std::mt19937_64 rng = sample_rng(3, 0);
  SurfaceState s = random_surface_state(rng);
  s.b(7) -= s.b.sum();
  REQUIRE(s.b.sum() == 0);
  CHECK(phi_step(s).b == s.b);
}

TEST_CASE("Picard actions of phi and psi equal their words") {
  CHECK(word_to_picmap(phi_word()) == phi_pushforward());
  CHECK(word_to_picmap(psi_word()) == psi_pushforward());
  CHECK(phi_step_map().picmap == phi_pushforward());
  CHECK(is_cremona_isometry(phi_pushforward()));
  CHECK(is_cremona_isometry(psi_pushforward()));
  CHECK(phi_word().size() == 17);
  CHECK(psi_word().size() == 17);
}

TEST_CASE("psi keeps the Fuchs relation") {
  for (std::uint64_t k = 0; k < 25; ++k) {
    const SchlesingerState s = draw_schlesinger(4, k);
    REQUIRE(s.t.fuchs_sum() == 0);
    CHECK(psi_params(s.t).fuchs_sum() == 0);
  }
}

TEST_CASE("parameter dictionaries") {
  for (std::uint64_t k = 0; k < 25; ++k) {
    const SchlesingerParams t = draw_schlesinger(5, k).t;
    const ParamVector bc = b_from_schlesinger_psi_chart(t);
    const ParamVector bp = b_from_schlesinger_phi_chart(t);
    CHECK(bc.sum() == -1);
    CHECK(bc(3) == 0);
    CHECK(bp(3) == 0);
    CHECK(bc(7) == -t.theta02 - 1);
    CHECK(bp(7) == t.kappa1 + t.theta11 - 1);
    CHECK(b_from_schlesinger_phi_chart(psi_params(t)) - bp == shift({0, 0, 0, 0, -1, -1, 1, 1}));

    ParamVector via_words = bc;
    for (auto it = conjugator_word().rbegin(); it != conjugator_word().rend(); ++it)
      via_words = generator_step(*it).map_params(via_words);
    CHECK(via_words == bp);

    // phi on the transported parameters moves them the same way psi does.
    CHECK(phi_step_map().map_params(bp) == b_from_schlesinger_phi_chart(psi_params(t)));
  }
  SchlesingerParams t{};
  t.theta02 = 3;
  t.kappa1 = -3;
  CHECK(b_from_schlesinger_psi_chart(t)(0) == 0);
}

TEST_CASE("psi moves root variables by d") {
  for (std::uint64_t k = 0; k < 25; ++k) {
    const SchlesingerParams t = draw_schlesinger(6, k).t;
    const auto a = root_variables(b_from_schlesinger_psi_chart(t));
    const auto e = root_variables(b_from_schlesinger_psi_chart(psi_params(t)));
    const Rational d = -1;
    CHECK(e(3) == a(3) + d);
    CHECK(e(4) == a(4) - d);
    CHECK(e(5) == a(5) - d);
    CHECK(e(6) == a(6) + d);
    for (int i : {0, 1, 2}) CHECK(e(i) == a(i));
    CHECK(root_variable_evolution<Rational>(psi_word(), a) == e);
  }
}

TEST_CASE("change of variables") {
  int checked = 0;
  for (std::uint64_t k = 0; checked < 25 && k < 250; ++k) {
    const SchlesingerState s = draw_schlesinger(7, k);
    try {
      const SurfacePoint p = change_of_variables(s.t, s.x, s.y);
      const auto [x, y] = change_of_variables_inverse(s.t, p.f, p.g);
      if (!is_finite(SurfaceState{{}, p})) continue;
      CHECK(x == s.x);
      CHECK(y == s.y);

      // Barred version: same formulas at the shifted parameters.
      const SchlesingerParams tb = psi_params(s.t);
      const ProjectiveCoord k1 = tb.kappa1 + tb.theta02;
      const ProjectiveCoord fb = (s.x * (s.y - tb.theta11) - (k1 + tb.theta11) * s.y) / (s.y + k1);
      CHECK(change_of_variables(tb, s.x, s.y).f == fb);
      ++checked;
    } catch (const Indeterminate&) {
    }
  }
  CHECK(checked == 25);
}

TEST_CASE("equivalence checks pass") {
  const EquivalenceReport r = verify_equivalence();
  CHECK(r.checks.size() == 6);
  for (const CheckResult& c : r.checks) {
    INFO(c.name);
    CHECK(c.verdict == Verdict::Equal);
    CHECK(c.accepted == 25);
  }
  CHECK(r.passed());
  CHECK_FALSE(r.no_samples());
}

TEST_CASE("a perturbed dictionary is caught") {
  EquivalenceOptions opts;
  opts.phi_chart = [](const SchlesingerParams& t) {
    ParamVector b = b_from_schlesinger_phi_chart(t);
    b(5) += Rational(1, 1000);
    return b;
  };
  const EquivalenceReport r = verify_equivalence(opts);
  CHECK_FALSE(r.passed());
  const auto bad = std::find_if(r.checks.begin(), r.checks.end(),
                                [](const CheckResult& c) { return c.verdict == Verdict::Counterexample; });
  REQUIRE(bad != r.checks.end());
  CHECK(bad->counterexample.has_value());

  EquivalenceOptions perturbed_chart;
  perturbed_chart.psi_chart = [](const SchlesingerParams& t) {
    ParamVector b = b_from_schlesinger_psi_chart(t);
    b(0) += 1;
    return b;
  };
  CHECK_FALSE(verify_equivalence(perturbed_chart).passed());
}

TEST_CASE("zero trials is a flagged vacuous pass") {
  EquivalenceOptions opts;
  opts.trials = 0;
  const EquivalenceReport r = verify_equivalence(opts);
  CHECK(r.passed());
  CHECK(r.no_samples());
}

TEST_CASE("orbits") {
  const SchlesingerState s = draw_schlesinger(8, 0);
  CHECK(orbit_psi(s, 0).states.size() == 1);

  const auto trace = orbit_psi(s, 5);
  REQUIRE_FALSE(trace.error);
  REQUIRE(trace.states.size() == 6);
  const Rational a3 = root_variables(b_from_schlesinger_psi_chart(s.t))(3);
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    CHECK(trace.states[k].t.fuchs_sum() == 0);
    CHECK(root_variables(b_from_schlesinger_psi_chart(trace.states[k].t))(3) == a3 - Rational(k));
    if (k > 0) CHECK(trace.states[k] == psi_step(trace.states[k - 1]));
  }

  std::mt19937_64 rng = sample_rng(8, 1);
  const SurfaceState p = random_surface_state(rng);
  const auto ptrace = orbit_phi(p, 4);
  REQUIRE(ptrace.states.size() == 5);
  for (const SurfaceState& st : ptrace.states) CHECK(st.b.sum() == p.b.sum());

  SurfaceState bad = p;
  bad.p = {-p.p.g, p.p.g};
  bad.b(4) = p.p.g.value() + 1;
  bad.b(5) = p.p.g.value() + 2;
  bad.b(0) = -p.p.g.value();
  const auto stuck = orbit_phi(bad, 3);
  CHECK(stuck.error.has_value());
  CHECK(stuck.failed_step == std::size_t{0});
  CHECK(stuck.states.size() == 1);

  CHECK_THROWS_AS(orbit_phi(p, -1), std::invalid_argument);
}
