// Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "dpsym/suites.hpp"
#include "oracles.hpp"

using namespace dpsym;

namespace {

// Pinned budgets and sample counts.
constexpr double kCoxeterBudgetSeconds = 1.0;
constexpr double kDecomposeBudgetSeconds = 5.0;
constexpr double kConjugacyBudgetSeconds = 10.0;
constexpr int kIdentitySamples = 25;
constexpr int kRandomWords = 200;
constexpr int kMaxWordLength = 12;
constexpr int kPeriodSamples = 10;
constexpr int kOracleSamples = 100;
constexpr std::uint64_t kSeed = 20180601;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && secs >= budget) o.require(false, "over time budget");
  if (!o.ok) ++failures;
  char limit[32] = "";
  if (budget > 0) std::snprintf(limit, sizeof limit, ", budget %.1fs", budget);
  std::printf("%s %d %s (%.3fs%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, limit,
              o.note.empty() ? "" : ": ", o.note.c_str());
}

ParamVector random_params(std::mt19937_64& rng) {
  ParamVector b;
  for (int i = 0; i < kNumParams; ++i) b(i) = random_rational(rng);
  return b;
}

}  // namespace

int main() {
  criterion(1, "lattice and Coxeter relations", kCoxeterBudgetSeconds, [] {
    Outcome o;
    const PicMap id = PicMap::Identity();
    for (Generator g : kAllGenerators) o.require(is_cremona_isometry(generator_picmap(g)), "isometry");
    for (int i = 0; i < kNumSimpleRoots; ++i)
      for (int j = 0; j < kNumSimpleRoots; ++j) {
        const int m = i == j ? 1 : adjacent(i, j) ? 3 : 2;
        const PicMap p = generator_picmap(reflection(i)) * generator_picmap(reflection(j));
        PicMap q = id;
        for (int k = 0; k < m; ++k) q = q * p;
        o.require(q == id, "Coxeter relation");
      }
    using G = Generator;
    o.require(word_to_picmap(Word{G::r, G::r, G::r}) == id, "r^3");
    o.require(word_to_picmap(Word{G::r, G::r2}) == id, "r r2");
    for (G m : {G::m0, G::m1, G::m2}) o.require(word_to_picmap(Word{m, m}) == id, "m^2");
    for (Generator s : kAutomorphisms) {
      const auto perm = alpha_permutation(s);
      for (int i = 0; i < kNumSimpleRoots; ++i)
        o.require(word_to_picmap(Word{s, reflection(i), inverse(s)}) == generator_picmap(reflection(perm[i])),
                  "semidirect relation");
    }
    o.require(word_to_picmap(Word{G::m1, G::w0, G::m1}) == generator_picmap(G::w4), "m1 w0 m1 = w4");
    return o;
  });

  criterion(2, "Picard actions of phi and psi", 0, [] {
    Outcome o;
    o.require(word_to_picmap(phi_word()) == phi_pushforward(), "phi");
    o.require(word_to_picmap(psi_word()) == psi_pushforward(), "psi");
    return o;
  });

  criterion(3, "decomposition", kDecomposeBudgetSeconds, [] {
    Outcome o;
    for (const PicMap* t : {&phi_pushforward(), &psi_pushforward()})
      o.require(word_to_picmap(decompose(*t).word) == *t, "named element");
    for (int k = 0; k < kRandomWords; ++k) {
      std::mt19937_64 rng = sample_rng(kSeed, static_cast<std::uint64_t>(k));
      const PicMap m = word_to_picmap(random_word(rng, kMaxWordLength));
      o.require(word_to_picmap(decompose(m).word) == m, "random word");
    }
    return o;
  });

  criterion(4, "translation vectors, norms and surface-root permutation", 0, [] {
    Outcome o;
    RootVector nphi, npsi;
    nphi << 0, 0, 0, 1, 0, -1, 0;
    npsi << 0, 0, 0, -1, 1, 1, -1;
    o.require(translation_delta_vector(phi_pushforward()) == nphi, "phi delta vector");
    o.require(translation_delta_vector(psi_pushforward()) == npsi, "psi delta vector");
    o.require(translation_norm(phi_pushforward()) == Rational(4, 3), "phi norm");
    o.require(translation_norm(psi_pushforward()) == Rational(4, 3), "psi norm");
    o.require(surface_root_permutation(phi_pushforward()) == std::array<int, 3>{1, 2, 0}, "phi permutation");
    return o;
  });

  criterion(5, "conjugacy of phi and psi", kConjugacyBudgetSeconds, [] {
    Outcome o;
    const RationalRootVector src = kac_vector(psi_pushforward());
    const RationalRootVector dst = kac_vector(phi_pushforward());
    ConjugatorOptions opts;
    opts.max_len = 2;
    const auto w = find_conjugator(src, dst, opts);
    o.require(w.has_value() && !w->empty(), "conjugator found");
    if (w) {
      for (Generator g : *w) o.require(g == Generator::w3 || g == Generator::w5, "word in w3, w5");
      o.require(canonical_mod_delta(apply_word<Rational>(*w, src)) == dst, "maps Kac vector");
    }
    const CheckResult c = check_conjugation(kIdentitySamples, kSeed);
    o.require(c.verdict == Verdict::Equal && c.accepted >= static_cast<std::size_t>(kIdentitySamples),
              "pointwise conjugation");
    return o;
  });

  criterion(6, "change of variables and parameter dictionaries", 0, [] {
    Outcome o;
    const CheckResult t = check_transported_dynamics(kIdentitySamples, kSeed);
    o.require(t.verdict == Verdict::Equal && t.accepted == static_cast<std::size_t>(kIdentitySamples),
              "transported dynamics");
    const CheckResult cv = check_change_of_variables(kIdentitySamples, kSeed);
    o.require(cv.verdict == Verdict::Equal, "change of variables is w5 w3");
    ParamVector shift;
    shift << 0, 0, 0, 0, -1, -1, 1, 1;
    for (int k = 0; k < kIdentitySamples; ++k) {
      std::mt19937_64 rng = sample_rng(kSeed, static_cast<std::uint64_t>(k));
      const SchlesingerParams p = random_schlesinger_params(rng);
      o.require(b_from_schlesinger_phi_chart(psi_params(p)) - b_from_schlesinger_phi_chart(p) == shift,
                "parameter shift");
      o.require(b_from_schlesinger_psi_chart(p).sum() == -1, "chi(delta) = -1");
    }
    return o;
  });

  criterion(7, "period map consistency", 0, [] {
    Outcome o;
    for (Generator g : kAllGenerators)
      for (int k = 0; k < kPeriodSamples; ++k) {
        std::mt19937_64 rng = sample_rng(kSeed + static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(k));
        const ParamVector b = random_params(rng);
        o.require(root_variables(generator_step(g).map_params(b)) ==
                      root_variable_evolution<Rational>(Word{g}, root_variables(b)),
                  std::string("generator ") + std::string(to_string(g)));
      }
    for (int k = 0; k < kPeriodSamples; ++k) {
      std::mt19937_64 rng = sample_rng(kSeed, static_cast<std::uint64_t>(k));
      const auto a = root_variables(random_params(rng));
      const Rational d = chi_of_null_root(a);
      RootVariables<Rational> want = a;
      want(3) -= d;
      want(5) += d;
      o.require(root_variable_evolution<Rational>(phi_word(), a) == want, "phi evolution");
    }
    return o;
  });

  criterion(8, "library and oracle transcriptions agree", 0, [] {
    Outcome o;
    int phi_done = 0, psi_done = 0;
    for (std::uint64_t k = 0; phi_done < kOracleSamples && k < 10 * kOracleSamples; ++k) {
      std::mt19937_64 rng = sample_rng(kSeed, k);
      const SurfaceState s = random_surface_state(rng);
      std::array<Rational, 8> b;
      for (int i = 0; i < 8; ++i) b[i] = s.b(i);
      const auto want = oracle::phi(b, s.p.f.value(), s.p.g.value());
      if (!want) continue;
      SurfaceState got;
      try {
        got = phi_step(s);
      } catch (const Indeterminate&) {
        continue;
      }
      ++phi_done;
      bool same = got.p.f == ProjectiveCoord(want->f) && got.p.g == ProjectiveCoord(want->g);
      for (int i = 0; i < 8; ++i) same = same && got.b(i) == want->b[i];
      o.require(same, "phi sample " + std::to_string(k));
    }
    for (std::uint64_t k = 0; psi_done < kOracleSamples && k < 10 * kOracleSamples; ++k) {
      std::mt19937_64 rng = sample_rng(kSeed, k);
      const SchlesingerState s = random_schlesinger_state(rng);
      const auto want = oracle::psi(s.t, s.x.value(), s.y.value());
      if (!want) continue;
      SchlesingerState got;
      try {
        got = psi_step(s);
      } catch (const Indeterminate&) {
        continue;
      }
      ++psi_done;
      o.require(got.x == ProjectiveCoord(want->x) && got.y == ProjectiveCoord(want->y) && got.t == want->t,
                "psi sample " + std::to_string(k));
    }
    o.require(phi_done == kOracleSamples && psi_done == kOracleSamples, "sample count");
    return o;
  });

  return failures == 0 ? 0 : 1;
}
