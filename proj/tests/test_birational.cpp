#include <doctest.h>

#include "dpsym/birational.hpp"

using namespace dpsym;

namespace {

SurfaceState state(std::initializer_list<int> b, ProjectiveCoord f, ProjectiveCoord g) {
  SurfaceState s;
  int i = 0;
  for (int v : b) s.b(i++) = v;
  s.p = {std::move(f), std::move(g)};
  return s;
}

SurfaceState generic(std::uint64_t index) {
  std::mt19937_64 rng = sample_rng(42, index);
  return random_surface_state(rng);
}

}  // namespace

TEST_CASE("projective arithmetic") {
  const ProjectiveCoord inf = ProjectiveCoord::infinity();
  const ProjectiveCoord two = 2;
  CHECK((ProjectiveCoord(1) / ProjectiveCoord(0)).is_infinite());
  CHECK(inf + two == inf);
  CHECK(two / inf == ProjectiveCoord(0));
  CHECK(-inf == inf);
  CHECK(ProjectiveCoord(Rational(3, 4)) * ProjectiveCoord(4) == ProjectiveCoord(3));
  CHECK_THROWS_AS(ProjectiveCoord(0) / ProjectiveCoord(0), Indeterminate);
  CHECK_THROWS_AS(inf - inf, Indeterminate);
  CHECK_THROWS_AS(inf * ProjectiveCoord(0), Indeterminate);
  CHECK_THROWS_AS(inf / inf, Indeterminate);
  CHECK_THROWS_AS(inf.value(), std::domain_error);
  CHECK(to_string(inf) == "inf");
  CHECK(to_string(ProjectiveCoord(Rational(-1, 2))) == "-1/2");
}

TEST_CASE("homogeneous rescaling does not change a coordinate") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const Rational n = random_rational(rng), d = random_rational(rng), l = random_rational(rng) + Rational(1, 7);
    if (l == 0) continue;
    CHECK(ProjectiveCoord::from_pair(l * n, l * d) == ProjectiveCoord::from_pair(n, d));
    CHECK(ProjectiveCoord::from_pair(l * n, 0) == ProjectiveCoord::infinity());
  }
}

TEST_CASE("expressions") {
  const Expr e = (var_f() + 1) / (var_g() - var_b(1));
  std::vector<ProjectiveCoord> env(kCanonicalSlots, ProjectiveCoord(0));
  env[kSlotF] = 3;
  env[kSlotG] = 2;
  env[kSlotB1] = 1;
  CHECK(e.eval(env) == ProjectiveCoord(4));
  env[kSlotB1] = 2;
  CHECK(e.eval(env).is_infinite());
  env[kSlotF] = -1;
  CHECK_THROWS_AS(e.eval(env), Indeterminate);
  CHECK_THROWS_AS(var_b(9), std::out_of_range);
  CHECK_THROWS_AS(e.eval(std::span<const ProjectiveCoord>(env.data(), 1)), std::out_of_range);
  CHECK(to_expr(LinearForm(lin_b(4) - lin_b(3))).to_string() == "(-b3 + b4)");
  CHECK(to_expr(LinearForm::Zero()).to_string() == "0");
}

TEST_CASE("w3 at a hand-computed point") {
  SurfaceState s = state({1, 0, 0, 0, 5, 6, 2, 0}, 2, 3);
  const SurfaceState out = eval_step(generator_step(Generator::w3), s);
  CHECK(out.p.f == ProjectiveCoord(2));
  CHECK(out.p.g == ProjectiveCoord(18));
  CHECK(out.b(0) == -2);
  CHECK(out.b(6) == -1);
  CHECK(out.b(4) == 5 + 1 + 2);
  CHECK(out.b(5) == 6 + 1 + 2);
}

TEST_CASE("w1 swaps b2 and b3 only") {
  const SurfaceState s = generic(0);
  const SurfaceState out = eval_word(Word{Generator::w1}, s);
  CHECK(out.p == s.p);
  CHECK(out.b(1) == s.b(2));
  CHECK(out.b(2) == s.b(1));
  CHECK(out.b(0) == s.b(0));
}

TEST_CASE("w3 is indeterminate at its base point") {
  SurfaceState s = generic(1);
  s.p = {s.b(0), -s.b(0)};
  CHECK_THROWS_AS(eval_step(generator_step(Generator::w3), s), Indeterminate);
  try {
    eval_word(Word{Generator::w1, Generator::w3}, s);
    FAIL("expected Indeterminate");
  } catch (const Indeterminate& e) {
    CHECK(e.step() == std::size_t{1});
  }
}

TEST_CASE("involutions and orders pointwise") {
  for (Generator g : kAllGenerators) {
    const Word twice{g, g};
    if (g == Generator::r || g == Generator::r2) {
      CHECK(words_equal(Word{g, g, g}, Word{}).verdict == Verdict::Equal);
    } else {
      CHECK(words_equal(twice, Word{}).verdict == Verdict::Equal);
    }
  }
  CHECK(words_equal(Word{Generator::r, Generator::r}, Word{Generator::r2}).verdict == Verdict::Equal);
  const SurfaceState s = generic(3);
  CHECK(eval_word(Word{Generator::w3, Generator::w3}, s) == s);
}

TEST_CASE("braid and commutation relations pointwise") {
  for (int i = 0; i < kNumSimpleRoots; ++i)
    for (int j = i + 1; j < kNumSimpleRoots; ++j) {
      const Generator a = reflection(i), b = reflection(j);
      const auto r = adjacent(i, j) ? words_equal(Word{a, b, a}, Word{b, a, b}) : words_equal(Word{a, b}, Word{b, a});
      CHECK(r.verdict == Verdict::Equal);
    }
}

TEST_CASE("m1 w0 m1 = w4 pointwise") {
  CHECK(words_equal(Word{Generator::m1, Generator::w0, Generator::m1}, Word{Generator::w4}).verdict ==
        Verdict::Equal);
}

TEST_CASE("generators fix b4 and chi(delta)") {
  for (int k = 0; k < 25; ++k) {
    const SurfaceState s = generic(static_cast<std::uint64_t>(k));
    for (Generator g : kAllGenerators) {
      const ParamVector bb = generator_step(g).map_params(s.b);
      CHECK(bb(3) == s.b(3));
      CHECK(chi_delta(bb) == chi_delta(s.b));
    }
  }
}

TEST_CASE("maps_equal verdicts") {
  const auto step = [](Generator g) {
    return [g](const SurfaceState& s) { return eval_step(generator_step(g), s); };
  };
  CHECK(maps_equal(step(Generator::w3), step(Generator::w3)).verdict == Verdict::Equal);
  CHECK(words_equal(Word{Generator::w5, Generator::w3}, Word{Generator::w3, Generator::w5}).verdict ==
        Verdict::Equal);

  const auto diff = maps_equal(step(Generator::w3), step(Generator::w5), 25, 9);
  CHECK(diff.verdict == Verdict::Counterexample);
  CHECK(diff.accepted == 1);
  REQUIRE(diff.counterexample);
  std::mt19937_64 rng = sample_rng(9, diff.rejected);
  CHECK(*diff.counterexample == random_surface_state(rng));

  CHECK(maps_equal(step(Generator::w3), step(Generator::w5), 0).verdict == Verdict::NoSamples);

  const auto always_bad = [](const SurfaceState&) -> SurfaceState { throw Indeterminate("base point"); };
  CHECK_THROWS_AS(maps_equal(always_bad, always_bad, 5), TooManyDegenerateSamples);

  const auto to_infinity = [](const SurfaceState& s) {
    SurfaceState o = s;
    o.p.f = ProjectiveCoord::infinity();
    return o;
  };
  CHECK_THROWS_AS(maps_equal(to_infinity, to_infinity, 5), TooManyDegenerateSamples);
}

TEST_CASE("sampling is seeded per index") {
  std::mt19937_64 a = sample_rng(5, 3), b = sample_rng(5, 3), c = sample_rng(5, 4), d = sample_rng(6, 3);
  const SurfaceState sa = random_surface_state(a);
  CHECK(sa == random_surface_state(b));
  CHECK_FALSE(sa == random_surface_state(c));
  CHECK_FALSE(sa == random_surface_state(d));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Rational r = random_rational(rng);
    CHECK(abs(numerator(r)) <= 10000);
    CHECK(denominator(r) <= 10000);
  }
}
